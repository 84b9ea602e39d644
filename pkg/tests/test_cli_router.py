import json

import pytest

from app.batch.check_batch import run_check_suite_once
from cli.adapter.input.cli.command_router import build_config, main, run
from cli.adapter.input.cli.request.run_config import principal_form

CURVE_11 = "0,-1,1,-10,-20"


def invoke(capsys, *argv: str) -> tuple[int, dict]:
    status = main(list(argv))
    return status, json.loads(capsys.readouterr().out)


@pytest.mark.parametrize("discriminant, form", [(-67, (1, 1, 17)), (-8, (1, 0, 2)), (8, (1, 0, -2)), (5, (1, 1, -1))])
def test_principal_form(discriminant, form):
    assert principal_form(discriminant) == form


def test_tate_q_document(capsys):
    status, document = invoke(capsys, "tate-q", "--curve", CURVE_11, "--p", "11", "--prec", "20", "--no-cache")
    assert status == 0
    assert document["schema_version"] == "1.0"
    assert document["command"] == "tate-q"
    assert document["ord"] == 5
    assert document["j_agreement"] >= 20
    assert document["q"]["valuation"] == 5
    assert "threads" not in document["config"]
    assert document["conventions"]["t_bound"] == 10


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out" / "tate.json"
    status = main(["tate-q", "--curve", CURVE_11, "--p", "11", "--no-cache", "--out", str(target)])
    assert status == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["ord"] == 5


def test_output_does_not_depend_on_threads(tmp_path):
    base = ["lp", "--curve", CURVE_11, "--p", "11", "--depth", "2", "--prec", "10", "--cache-dir", str(tmp_path)]
    single = run(build_config(base + ["--threads", "1"]))
    pooled = run(build_config(base + ["--threads", "4"]))
    again = run(build_config(base + ["--threads", "1"]))
    assert single == pooled == again
    assert single[0] == 0


@pytest.mark.parametrize(
    "argv, code",
    [
        (["tate-q", "--curve", "0,-1,1", "--p", "11"], "E_CURVE"),
        (["tate-q", "--curve", "0,-1,1,x,-20", "--p", "11"], "E_CURVE"),
        (["tate-q", "--curve", CURVE_11, "--p", "13"], "E_CURVE"),
        (["tate-q", "--curve", CURVE_11, "--p", "11", "--bogus"], "E_INPUT"),
        (["tate-q", "--curve", CURVE_11, "--p", "11", "--prec", "2"], "E_INPUT"),
        (["sh-point", "--curve", CURVE_11, "--p", "11"], "E_INPUT"),
        (["sh-point", "--curve", CURVE_11, "--p", "11", "--disc", "8", "--form", "1,0,-3"], "E_INPUT"),
        (["lp", "--curve", CURVE_11, "--p", "11", "--twist", "1,11", "--depth", "2"], "E_INPUT"),
        (["sh-point", "--curve", CURVE_11, "--p", "11", "--disc", "5"], "E_PRIME"),
        (["cm-invariant", "--curve", CURVE_11, "--p", "11", "--disc", "-7"], "E_PRIME"),
    ],
)
def test_error_documents(capsys, argv, code):
    status, document = invoke(capsys, *argv, "--no-cache")
    assert status == 2
    assert document["error"]["code"] == code
    assert document["error"]["message"]


def test_mtt_command(capsys):
    status, document = invoke(capsys, "mtt", "--curve", CURVE_11, "--p", "11", "--depth", "2", "--no-cache")
    assert status == 0
    assert document["passed"]
    assert document["ord_part"] == document["expected_ord"]


def test_check_suite(capsys):
    status, document = invoke(capsys, "check", "--curve", CURVE_11, "--p", "11", "--radius", "1", "--no-cache")
    assert status == 0
    assert document["passed"]
    names = {item["name"] for item in document["items"]}
    assert {"hecke", "harmonicity", "mtt"} <= names


def test_check_batch_reads_environment(monkeypatch):
    monkeypatch.setenv("PLECTIC_CHECK_CURVE", CURVE_11)
    monkeypatch.setenv("PLECTIC_CHECK_PRIME", "13")
    result = run_check_suite_once(radius=1, use_cache=False)
    assert result["status"] == 2
    assert result["document"]["error"]["code"] == "E_CURVE"


@pytest.mark.parametrize("extra, height", [([], None), (["--recognize"], 10_000), (["--recognize", "100"], 100)])
def test_recognize_height_option(extra, height):
    config = build_config(["sh-point", "--curve", CURVE_11, "--p", "11", "--disc", "8", *extra, "--no-cache"])
    assert config.recognize == height


def test_recognize_height_must_be_positive(capsys):
    status, document = invoke(
        capsys, "sh-point", "--curve", CURVE_11, "--p", "11", "--disc", "8", "--recognize", "0", "--no-cache"
    )
    assert status == 2
    assert document["error"]["code"] == "E_INPUT"


def test_sh_point_with_recognition_height(capsys):
    status, document = invoke(
        capsys, "sh-point", "--curve", CURVE_11, "--p", "11", "--disc", "8", "--depth", "2", "--recognize", "100", "--no-cache"
    )
    if status == 0:
        assert document["recognition"]["bound"] <= 100
    else:
        assert status == 3
        assert document["error"]["code"] == "E_RECOGNITION"
