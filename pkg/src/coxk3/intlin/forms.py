"""Integral symmetric bilinear forms: inertia, 2-elementary invariants, named lattices."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrix import IntMatrix, as_matrix, determinant, smith_normal_form


class DegenerateFormError(ValueError):
    pass


@dataclass(frozen=True)
class GramForm:
    """A lattice given by its Gram matrix."""

    gram: tuple[tuple[int, ...], ...]

    def __init__(self, gram):
        g = tuple(tuple(int(x) for x in row) for row in gram)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    @property
    def det(self) -> int:
        return determinant(self.gram)

    def matrix(self) -> IntMatrix:
        return [list(r) for r in self.gram]

    def pair(self, u: Sequence[int], v: Sequence[int]):
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def square(self, u: Sequence[int]):
        return self.pair(u, u)

    def twist(self, k: int) -> "GramForm":
        """The lattice L(k): every entry multiplied by ``k``."""
        return GramForm([[k * x for x in row] for row in self.gram])

    def __add__(self, other: "GramForm") -> "GramForm":
        return direct_sum(self, other)


def direct_sum(*forms: GramForm) -> GramForm:
    n = sum(f.rank for f in forms)
    g = [[0] * n for _ in range(n)]
    off = 0
    for f in forms:
        for i in range(f.rank):
            for j in range(f.rank):
                g[off + i][off + j] = f.gram[i][j]
        off += f.rank
    return GramForm(g)


def diagonalize(G: GramForm | Sequence[Sequence[int]]) -> list[Fraction]:
    """Rational congruence diagonalization; returns the diagonal.

    Zero pivots are handled by replacing e_i with e_i + e_j, which has square
    2 b_ij when both diagonal entries vanish.
    """
    A = [[Fraction(x) for x in row] for row in (G.gram if isinstance(G, GramForm) else G)]
    n = len(A)
    diag: list[Fraction] = []
    for i in range(n):
        if A[i][i] == 0:
            j = next((j for j in range(i + 1, n) if A[j][j] != 0), None)
            if j is not None:
                A[i], A[j] = A[j], A[i]
                for row in A:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if A[i][j] != 0), None)
                if j is None:
                    if any(A[i][k] for k in range(n)):
                        raise AssertionError("unreachable")
                    diag.append(Fraction(0))
                    continue
                # e_i <- e_i + e_j
                A[i] = [a + b for a, b in zip(A[i], A[j])]
                for row in A:
                    row[i] += row[j]
        p = A[i][i]
        for k in range(i + 1, n):
            if A[k][i] != 0:
                f = A[k][i] / p
                A[k] = [a - f * b for a, b in zip(A[k], A[i])]
                for r in range(n):
                    A[r][k] -= f * A[r][i]
        diag.append(p)
    return diag


def signature(G: GramForm | Sequence[Sequence[int]]) -> tuple[int, int]:
    """(positives, negatives) of a nondegenerate form."""
    d = diagonalize(G)
    if any(x == 0 for x in d):
        raise DegenerateFormError("form is degenerate")
    return sum(1 for x in d if x > 0), sum(1 for x in d if x < 0)


@dataclass(frozen=True)
class TwoElementaryInvariants:
    rank: int
    a: int
    delta: int


def discriminant_generators(G: GramForm) -> list[tuple[list[Fraction], int]]:
    """Generators of the discriminant group L*/L with their orders.

    With ``U G V = D`` the dual lattice is ``V D^{-1} Z^n``, so the columns of
    ``V`` divided by the nontrivial invariant factors generate L*/L.
    """
    snf = smith_normal_form(G.matrix())
    n = G.rank
    if snf.rank < n:
        raise DegenerateFormError("form is degenerate")
    gens = []
    for i, d in enumerate(snf.invariant_factors):
        if d != 1:
            gens.append(([Fraction(snf.V[r][i], d) for r in range(n)], d))
    return gens


def two_elementary(G: GramForm) -> TwoElementaryInvariants | None:
    """Nikulin's invariants (rank, a, delta), or None if L*/L is not 2-elementary.

    ``delta == 0`` iff every element of L*/L has integral square; testing the
    generators is enough because cross terms ``2 b(x, y)`` are integers when
    ``2x, 2y`` lie in L.
    """
    gens = discriminant_generators(G)
    if any(d != 2 for _, d in gens):
        return None
    delta = 0
    for x, _ in gens:
        q = sum(x[i] * G.gram[i][j] * x[j] for i in range(G.rank) for j in range(G.rank))
        if q.denominator != 1:
            delta = 1
    return TwoElementaryInvariants(rank=G.rank, a=len(gens), delta=delta)


# --- named lattices -------------------------------------------------------

_ATOMS = {
    "U": [[0, 1], [1, 0]],
    "A1": [[-2]],
    "A2": [[-2, 1], [1, -2]],
    "E8": None,  # filled below
}


def _e8() -> IntMatrix:
    # negative definite E8 from its Dynkin diagram (branch at node 3)
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]
    g = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in edges:
        g[i][j] = g[j][i] = 1
    return g


_ATOMS["E8"] = _e8()

_TERM = re.compile(
    r"""\s*(?:(?P<name>U|A1|A2|E8)|\((?P<val>[+-]?\d+)\))   # atom
        (?:\((?P<tw>[+-]?\d+)\))?                            # twist L(k)
        (?:\^(?P<pow>\d+))?\s*$""",
    re.VERBOSE,
)


def parse_form(expr: str) -> GramForm:
    """Parse expressions such as ``"U(2)+A1^3"`` or ``"(2)+A1"``.

    Grammar: ``term ('+' term)*`` with ``term := atom ['(' k ')'] ['^' n]`` and
    ``atom := U | A1 | A2 | E8 | '(' m ')'``.  ``(m)`` is the rank-one lattice
    with Gram matrix [m]; ``A1`` is the root lattice with square -2, the
    convention of hyperbolic Picard lattices.
    """
    text = expr.replace("⊕", "+").replace(" ", "")
    if not text:
        raise ValueError("empty form expression")
    parts = _split_terms(text)
    blocks: list[GramForm] = []
    for part in parts:
        m = _TERM.match(part)
        if not m:
            raise ValueError(f"cannot parse lattice term {part!r}")
        if m.group("name"):
            base = GramForm(_ATOMS[m.group("name")])
        else:
            base = GramForm([[int(m.group("val"))]])
        if m.group("tw"):
            base = base.twist(int(m.group("tw")))
        count = int(m.group("pow") or 1)
        blocks.extend([base] * count)
    return direct_sum(*blocks)


def _split_terms(text: str) -> list[str]:
    # '+' inside parentheses belongs to a number like (+2)
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    if any(not p for p in parts):
        raise ValueError(f"malformed form expression {text!r}")
    return parts


def gram_from_any(spec) -> GramForm:
    """Accept a GramForm, a matrix, a ``"0 3; 3 0"`` string or a form expression."""
    if isinstance(spec, GramForm):
        return spec
    if isinstance(spec, str):
        if re.fullmatch(r"[\s\d;,+-]+", spec) and ";" in spec or re.fullmatch(r"\s*-?\d+\s*", spec):
            from .matrix import parse_matrix

            return GramForm(parse_matrix(spec))
        return parse_form(spec)
    return GramForm(as_matrix(spec))


__all__ = [
    "DegenerateFormError",
    "GramForm",
    "TwoElementaryInvariants",
    "diagonalize",
    "direct_sum",
    "discriminant_generators",
    "gram_from_any",
    "parse_form",
    "signature",
    "two_elementary",
]
