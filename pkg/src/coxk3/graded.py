"""Multigraded presentations: monomial counts, homogeneity, CI Hilbert functions."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cones import positive_hull, dual_cone
from .intlin.matrix import columns, determinant, rational_rank
from .poly import LaurentPolynomial, parse_polynomial

Vector = tuple[int, ...]


class NonPointedGradingError(ValueError):
    """No linear form is positive on every generator degree."""


class NotCompleteIntersectionError(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    """An explicit polynomial, or a placeholder 'generic of degree d'."""

    poly: LaurentPolynomial | None = None
    generic_degree: Vector | None = None
    label: str = ""

    def __post_init__(self):
        if (self.poly is None) == (self.generic_degree is None):
            raise ValueError("a relation is either explicit or generic")

    @property
    def generic(self) -> bool:
        return self.poly is None

    def degree(self, Q: Sequence[Sequence[int]]) -> Vector | None:
        """The degree, or None for an inhomogeneous explicit relation."""
        if self.generic:
            return tuple(self.generic_degree)
        degs = set(self.poly.term_degrees(Q))
        return degs.pop() if len(degs) == 1 else None

    def to_json(self):
        if self.generic:
            return {"generic_degree": list(self.generic_degree), "label": self.label}
        return {"poly": str(self.poly)}


@dataclass(frozen=True)
class GradedPresentation:
    """Generators with degrees (columns of Q) modulo relations."""

    Q: tuple[tuple[int, ...], ...]
    relations: tuple[Relation, ...] = ()
    name: str = ""

    def __init__(self, Q, relations=(), name: str = ""):
        Qt = tuple(tuple(int(x) for x in row) for row in Q)
        if Qt and any(len(r) != len(Qt[0]) for r in Qt):
            raise ValueError("ragged degree matrix")
        rels = []
        for r in relations:
            if isinstance(r, Relation):
                rels.append(r)
            elif isinstance(r, str):
                rels.append(Relation(poly=parse_polynomial(r)))
            else:
                raise TypeError(f"cannot interpret relation {r!r}")
        n = len(Qt[0]) if Qt else 0
        fixed = []
        for r in rels:
            if r.poly is not None:
                if r.poly.nvars > n:
                    raise ValueError("relation uses more variables than there are generators")
                r = Relation(poly=r.poly.extend(n), label=r.label)
            fixed.append(r)
        object.__setattr__(self, "Q", Qt)
        object.__setattr__(self, "relations", tuple(fixed))
        object.__setattr__(self, "name", name)

    @property
    def grading_rank(self) -> int:
        return len(self.Q)

    @property
    def ngens(self) -> int:
        return len(self.Q[0]) if self.Q else 0

    @property
    def degrees(self) -> list[Vector]:
        return columns(self.Q)

    def relation_degrees(self) -> list[Vector | None]:
        return [r.degree(self.Q) for r in self.relations]

    def matrix(self) -> list[list[int]]:
        return [list(r) for r in self.Q]

    def to_json(self):
        return {"Q": self.matrix(), "relations": [r.to_json() for r in self.relations]}

    @classmethod
    def from_json(cls, data, name: str = "") -> "GradedPresentation":
        rels = []
        for r in data.get("relations", []):
            if "poly" in r:
                rels.append(Relation(poly=parse_polynomial(r["poly"])))
            elif "generic_degree" in r:
                rels.append(Relation(generic_degree=tuple(int(x) for x in r["generic_degree"]), label=r.get("label", "")))
            else:
                raise ValueError(f"relation needs 'poly' or 'generic_degree': {r}")
        return cls([[int(x) for x in row] for row in data["Q"]], rels, name or data.get("name", ""))


# --- monomial counting -----------------------------------------------------


def pointedness_certificate(Q: Sequence[Sequence[int]]) -> Vector:
    """An integral c with c . q > 0 for every column q of Q.

    Taken as the sum of the rays of the dual cone of the degree cone; it lies
    in the interior of the dual exactly when the degree cone is pointed.
    """
    cols = columns(Q)
    d = len(Q)
    if any(not any(q) for q in cols):
        raise NonPointedGradingError("a generator has degree zero")
    cone = positive_hull(cols, d)
    if not cone.pointed:
        raise NonPointedGradingError("the generator degrees span a cone containing a line")
    dual = dual_cone(cone)
    c = [0] * d
    for r in dual.rays:
        c = [a + b for a, b in zip(c, r)]
    c = tuple(c)
    if not all(sum(a * b for a, b in zip(c, q)) > 0 for q in cols):
        raise NonPointedGradingError("no strictly positive functional on the degrees")
    return c


def count_monomials(Q: Sequence[Sequence[int]], w: Sequence[int]) -> int:
    """Number of x in Z_{>=0}^r with Q x = w.

    >>> count_monomials([[1, 0, 1, 0], [0, 1, 0, 1]], (2, 2))
    9
    """
    Q = [list(r) for r in Q]
    w = tuple(int(x) for x in w)
    if len(w) != len(Q):
        raise ValueError("degree has the wrong length")
    c = pointedness_certificate(Q)
    cols = columns(Q)
    weights = [sum(a * b for a, b in zip(c, q)) for q in cols]
    r = len(cols)

    @lru_cache(maxsize=None)
    def count(j: int, rest: Vector) -> int:
        budget = sum(a * b for a, b in zip(c, rest))
        if budget < 0:
            return 0
        if j == r:
            return int(not any(rest))
        total = 0
        q = cols[j]
        cur = rest
        k = 0
        while k * weights[j] <= budget:
            total += count(j + 1, cur)
            cur = tuple(a - b for a, b in zip(cur, q))
            k += 1
        return total

    return count(0, w)


def monomials_of_degree(Q: Sequence[Sequence[int]], w: Sequence[int], cap: int | None = None) -> list[Vector]:
    """All exponent vectors of degree w (lexicographic order)."""
    c = pointedness_certificate(Q)
    cols = columns(Q)
    weights = [sum(a * b for a, b in zip(c, q)) for q in cols]
    r = len(cols)
    out: list[Vector] = []

    def rec(j, rest, prefix):
        budget = sum(a * b for a, b in zip(c, rest))
        if budget < 0:
            return
        if j == r:
            if not any(rest):
                out.append(tuple(prefix))
                if cap is not None and len(out) > cap:
                    raise OverflowError(f"more than {cap} monomials")
            return
        k = 0
        cur = rest
        while k * weights[j] <= budget:
            rec(j + 1, cur, prefix + [k])
            cur = tuple(a - b for a, b in zip(cur, cols[j]))
            k += 1

    rec(0, tuple(w), [])
    return out


# --- validation ------------------------------------------------------------


@dataclass(frozen=True)
class RelationCheck:
    index: int
    relation: str
    term_degrees: tuple[Vector, ...]
    homogeneous: bool


@dataclass(frozen=True)
class HomogeneityReport:
    ok: bool
    checks: tuple[RelationCheck, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self):
        return {
            "status": "pass" if self.ok else "fail",
            "relations": [
                {
                    "index": c.index,
                    "relation": c.relation,
                    "term_degrees": [list(d) for d in c.term_degrees],
                    "homogeneous": c.homogeneous,
                }
                for c in self.checks
            ],
        }


def homogeneity_check(pres: GradedPresentation) -> HomogeneityReport:
    checks = []
    for i, rel in enumerate(pres.relations):
        if rel.generic:
            continue
        degs = tuple(rel.poly.term_degrees(pres.Q))
        checks.append(RelationCheck(i, str(rel.poly), degs, len(set(degs)) <= 1))
    return HomogeneityReport(all(c.homogeneous for c in checks), tuple(checks))


def codimension(pres: GradedPresentation, dim: int = 2) -> int:
    """Codimension of the total coordinate space of a ``dim``-dimensional variety."""
    return pres.ngens - (dim + pres.grading_rank)


def is_complete_intersection(pres: GradedPresentation, dim: int = 2) -> bool:
    return len(pres.relations) == codimension(pres, dim)


def ci_hilbert(pres: GradedPresentation, w: Sequence[int], dim: int = 2) -> int:
    """dim R_w for a complete intersection, by inclusion-exclusion over relations."""
    if not pres.relations:
        return count_monomials(pres.Q, w)
    if not is_complete_intersection(pres, dim):
        raise NotCompleteIntersectionError(
            f"{len(pres.relations)} relations but codimension {codimension(pres, dim)}"
        )
    rdegs = pres.relation_degrees()
    if any(d is None for d in rdegs):
        raise ValueError("a relation is not homogeneous")
    total = 0
    for k in range(len(rdegs) + 1):
        for S in itertools.combinations(range(len(rdegs)), k):
            shift = [sum(rdegs[s][i] for s in S) for i in range(pres.grading_rank)]
            total += (-1) ** k * count_monomials(pres.Q, [a - b for a, b in zip(w, shift)])
    return total


def canonical_class(pres: GradedPresentation, dim: int = 2) -> Vector:
    """Sum of relation degrees minus sum of generator degrees.

    Valid for polynomial rings (toric case) and complete intersections.
    """
    if pres.relations and not is_complete_intersection(pres, dim):
        raise NotCompleteIntersectionError("canonical class identity needs a complete intersection")
    rdegs = pres.relation_degrees()
    if any(d is None for d in rdegs):
        raise ValueError("a relation is not homogeneous, so it has no degree")
    out = [0] * pres.grading_rank
    for d in rdegs:
        out = [a + b for a, b in zip(out, d)]
    for q in pres.degrees:
        out = [a - b for a, b in zip(out, q)]
    return tuple(out)


def standard_monomial_count(pres: GradedPresentation, w: Sequence[int], cap: int | None = None) -> int:
    """dim R_w via a degree-truncated Groebner basis (explicit relations only)."""
    from .groebner import groebner_basis, spair_cap

    if any(r.generic for r in pres.relations):
        raise ValueError("generic relations cannot enter a Groebner computation")
    cap = spair_cap() if cap is None else cap
    mons = monomials_of_degree(pres.Q, w, cap=cap)
    if not pres.relations:
        return len(mons)
    c = pointedness_certificate(pres.Q)
    weights = [sum(a * b for a, b in zip(c, q)) for q in pres.degrees]
    bound = sum(a * b for a, b in zip(c, w))
    gb = groebner_basis([r.poly for r in pres.relations], weights, bound, cap=cap)
    leads = [g.lead for g in gb]
    return sum(1 for m in mons if not any(all(a >= b for a, b in zip(m, l)) for l in leads))


# --- equivalence -----------------------------------------------------------


def _rational_inverse(B: list[list[int]]) -> list[list[Fraction]] | None:
    n = len(B)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(B)]
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return None
        A[c], A[p] = A[p], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [row[n:] for row in A]


def find_identification(p1: GradedPresentation, p2: GradedPresentation):
    """A unimodular U and column permutation matching p1 to p2, or None.

    Returns ``(U, perm)`` with ``U @ deg1[perm[j]] == deg2[j]`` for every j
    and relation degrees of p1 mapped by U onto those of p2 (as multisets).
    """
    if (p1.ngens, p1.grading_rank, len(p1.relations)) != (p2.ngens, p2.grading_rank, len(p2.relations)):
        return None
    r = p1.grading_rank
    d1, d2 = p1.degrees, p2.degrees
    rd1, rd2 = p1.relation_degrees(), p2.relation_degrees()
    if any(d is None for d in rd1 + rd2):
        return None
    if rational_rank([list(x) for x in d2]) != r or rational_rank([list(x) for x in d1]) != r:
        return None
    # r independent columns of Q2, chosen greedily
    J: list[int] = []
    for j in range(len(d2)):
        if rational_rank([list(d2[i]) for i in J + [j]]) == len(J) + 1:
            J.append(j)
        if len(J) == r:
            break
    B2 = [[d2[j][i] for j in J] for i in range(r)]
    target_cols = Counter(d2)
    target_rels = Counter(rd2)
    for assign in itertools.permutations(range(len(d1)), r):
        B1 = [[d1[j][i] for j in assign] for i in range(r)]
        inv = _rational_inverse(B1)
        if inv is None:
            continue
        U = [[sum(Fraction(B2[i][k]) * inv[k][j] for k in range(r)) for j in range(r)] for i in range(r)]
        if any(x.denominator != 1 for row in U for x in row):
            continue
        Ui = [[int(x) for x in row] for row in U]
        if abs(determinant(Ui)) != 1:
            continue

        def img(v):
            return tuple(sum(Ui[i][k] * v[k] for k in range(r)) for i in range(r))

        if Counter(img(v) for v in d1) != target_cols:
            continue
        if Counter(img(v) for v in rd1) != target_rels:
            continue
        # recover a full permutation matching columns
        pool: dict[Vector, list[int]] = {}
        for i, v in enumerate(d1):
            pool.setdefault(img(v), []).append(i)
        perm = [pool[d2[j]].pop(0) for j in range(len(d2))]
        return Ui, perm
    return None


def presentation_equivalent(p1: GradedPresentation, p2: GradedPresentation) -> bool:
    """Same presentation up to a basis change of the grading group and relabeling."""
    return find_identification(p1, p2) is not None
