"""Merel 집합으로 Manin 기호 위의 Hecke 연산자를 만듭니다."""
from functools import lru_cache

from modsym.domain.projective_line import ProjectiveLine


@lru_cache(maxsize=None)
def merel(n: int) -> tuple[tuple[int, int, int, int], ...]:
    """X_n = {[[a,b],[c,d]] : a > b ≥ 0, d > c ≥ 0, ad − bc = n}."""
    out = []
    for a in range(1, n + 1):
        for d in range((n + a - 1) // a, n + 2 - a):
            bc = a * d - n
            if bc == 0:
                out.extend((a, b, 0, d) for b in range(a))
                out.extend((a, 0, c, d) for c in range(1, d))
            else:
                out.extend((a, b, bc // b, d) for b in range((bc - 1) // (d - 1) + 1, a) if bc % b == 0)
    return tuple(out)


def hecke_rows(line: ProjectiveLine, n: int) -> list[dict[int, int]]:
    """
    행 x 는 Σ_{M ∈ X_n} [x·M]. (c, d)·M 이 (0:0) 이 되는 항은 버립니다 (n = p 일 때 U_p).
    """
    rows = []
    for c, d in line:
        row: dict[int, int] = {}
        for a, b, cc, dd in merel(n):
            c1, d1 = c * a + d * cc, c * b + d * dd
            if not line.contains(c1, d1):
                continue
            k = line.index(c1, d1)
            row[k] = row.get(k, 0) + 1
        rows.append(row)
    return rows
