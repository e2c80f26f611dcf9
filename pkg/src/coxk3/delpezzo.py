"""(-1)-curves and conic classes on del Pezzo surfaces, numerically.

Classes are written in the basis (h, e_1, ..., e_n) of the blow-up of the
plane in n = k - 1 points, with intersection form diag(1, -1, ..., -1) and
K = -3h + e_1 + ... + e_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator

Vector = tuple[int, ...]

LINE = (-1, -1)  # (D^2, D.K)
CONIC = (0, -2)


def form(k: int) -> list[list[int]]:
    return [[(1 if i == 0 else -1) if i == j else 0 for j in range(k)] for i in range(k)]


def canonical(k: int) -> Vector:
    return (-3,) + (1,) * (k - 1)


def pair(u: Vector, v: Vector) -> int:
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def _check(k: int) -> None:
    if not 5 <= k <= 9:
        raise ValueError("Picard number must lie in 5..9 (degree 5 down to 1)")


@dataclass(frozen=True)
class CurveSearch:
    k: int
    kind: str
    classes: tuple[Vector, ...]
    degree_range: tuple[int, int]

    @property
    def bound(self) -> str:
        lo, hi = self.degree_range
        return f"{lo} <= coefficient of h <= {hi} (Cauchy-Schwarz on the e-part)"


def _h_range(n: int, square: int, dot_k: int) -> tuple[int, int]:
    # D = a h - sum m_i e_i with sum m_i = 3a + dot_k and sum m_i^2 = a^2 - square;
    # Cauchy-Schwarz: (3a + dot_k)^2 <= n (a^2 - square)
    A, B, C = 9 - n, 6 * dot_k, dot_k * dot_k + n * square
    assert A > 0
    disc = B * B - 4 * A * C
    if disc < 0:
        return (1, 0)
    r = isqrt(disc)
    lo = (-B - r) // (2 * A) - 1
    hi = (-B + r) // (2 * A) + 1
    ok = [a for a in range(lo, hi + 1) if A * a * a + B * a + C <= 0]
    return (min(ok), max(ok)) if ok else (1, 0)


def _nonincreasing(n: int, total: int, squares: int, top: int) -> Iterator[list[int]]:
    if n == 0:
        if total == 0 and squares == 0:
            yield []
        return
    if squares < 0 or total * total > n * squares:
        return
    hi = min(top, isqrt(squares))
    lo = -isqrt(squares)
    for m in range(hi, lo - 1, -1):
        # remaining entries are <= m, so their sum is at most (n - 1) m
        if total - m > (n - 1) * m:
            break
        for rest in _nonincreasing(n - 1, total - m, squares - m * m, m):
            yield [m] + rest


def _distinct_permutations(seq: list[int]) -> Iterator[tuple[int, ...]]:
    items = sorted(seq)
    n = len(items)
    while True:
        yield tuple(items)
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])


def search_classes(k: int, square: int, dot_k: int) -> CurveSearch:
    """All D with D^2 = square and D.K = dot_k, by exhaustive bounded search."""
    n = k - 1
    lo, hi = _h_range(n, square, dot_k)
    found = set()
    for a in range(lo, hi + 1):
        # D.K = -3a + sum m_i  (with D = a h - sum m_i e_i)
        total = dot_k + 3 * a
        squares = a * a - square
        if squares < 0:
            continue
        for ms in _nonincreasing(n, total, squares, isqrt(squares)):
            for perm in _distinct_permutations(ms):
                found.add((a,) + tuple(-m for m in perm))
    classes = tuple(sorted(found))
    kind = {LINE: "lines", CONIC: "conics"}.get((square, dot_k), f"D^2={square}, D.K={dot_k}")
    return CurveSearch(k, kind, classes, (lo, hi))


def delpezzo_curves(k: int, kind: str = "lines") -> list[Vector]:
    """Line classes (E^2 = E.K = -1) or conic classes (D^2 = 0, D.K = -2)."""
    _check(k)
    if kind not in ("lines", "conics"):
        raise ValueError("kind must be 'lines' or 'conics'")
    sq, dk = LINE if kind == "lines" else CONIC
    return list(search_classes(k, sq, dk).classes)


def weyl_orbit(k: int, start: Vector) -> set[Vector]:
    """Orbit of a class under the reflections in the simple roots.

    The roots are e_i - e_{i+1} and h - e_1 - e_2 - e_3, each of square -2.
    """
    n = k - 1
    roots = []
    for i in range(1, n):
        r = [0] * k
        r[i], r[i + 1] = 1, -1
        roots.append(tuple(r))
    if n >= 3:
        roots.append((1, -1, -1, -1) + (0,) * (n - 3))
    seen = {tuple(start)}
    todo = [tuple(start)]
    while todo:
        x = todo.pop()
        for r in roots:
            c = pair(x, r)
            if c:
                y = tuple(a + c * b for a, b in zip(x, r))
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
    return seen
