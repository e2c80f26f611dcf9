"""K3-specific predictors and oracles.

Rank-two Picard lattices (section counts, cones, generator predictions),
presentations of double covers of rational surfaces, the lattice
classification table for small Picard number, and del Pezzo covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from . import delpezzo, printed
from .cones import Cone, dual_cone_under_form, positive_hull
from .graded import (
    GradedPresentation,
    Relation,
    canonical_class,
    count_monomials,
)
from .intlin import GramForm, gram_from_any, parse_form, represents, signature, two_elementary
from .intlin.binary import Representation
from .intlin.matrix import content, matmul, matvec, unimodular_completion
from .poly import LaurentPolynomial

Vector = tuple[int, ...]

REDUCTION_CAP = 10_000


# --- rank two ----------------------------------------------------------------


@dataclass(frozen=True)
class RankTwoScenario:
    """Cl(X) = Z w1 + Z w2 with the given intersection form."""

    G: GramForm

    def __init__(self, G):
        g = gram_from_any(G)
        if g.rank != 2:
            raise ValueError("a rank-two scenario needs a 2x2 form")
        if not g.even:
            raise ValueError("the Picard lattice of a K3 surface is even")
        if signature(g) != (1, 1):
            raise ValueError("the form must be hyperbolic, signature (1, 1)")
        object.__setattr__(self, "G", g)

    @classmethod
    def standard(cls, a: int, b: int, k: int) -> "RankTwoScenario":
        return cls([[a, k], [k, b]])

    @property
    def invariants(self) -> tuple[int, int, int]:
        """(w1^2, w2^2, w1.w2)."""
        m = self.G.matrix()
        return (m[0][0], m[1][1], m[0][1])

    def square(self, w: Sequence[int]) -> int:
        return self.G.square(w)

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        return self.G.pair(u, v)


class UnsupportedScenarioError(ValueError):
    pass


def eff_cone_rank2(sc: RankTwoScenario) -> Cone:
    """Effective cone for the lattices where its generators are known."""
    a, b, k = sc.invariants
    if a in (0, -2) and b in (0, -2) and k >= 2:
        return positive_hull([(1, 0), (0, 1)])
    if (a, b, k) == (4, -4, 0):
        return positive_hull([(1, 1), (1, -1)])
    raise UnsupportedScenarioError(f"no effective cone description for w1^2={a}, w2^2={b}, w1.w2={k}")


def nef_cone_rank2(sc: RankTwoScenario) -> Cone:
    return dual_cone_under_form(eff_cone_rank2(sc), sc.G.matrix())


def h0_rank2(sc: RankTwoScenario, w: Sequence[int]) -> int:
    """Number of independent sections of an effective class.

    Fixed components along negative extremal rays are stripped first; the
    remaining nef class is counted by Riemann-Roch (big) or as a multiple
    of an elliptic pencil (square zero).
    """
    w = tuple(int(x) for x in w)
    if w == (0, 0):
        return 1
    eff = eff_cone_rank2(sc)
    if not eff.contains(w):
        raise ValueError(f"{w} is not effective")
    negative = [e for e in eff.rays if sc.square(e) < 0]
    for _ in range(REDUCTION_CAP):
        e = next((e for e in negative if sc.pair(w, e) < 0), None)
        if e is None:
            break
        w = tuple(x - y for x, y in zip(w, e))
    else:
        raise RuntimeError("fixed-part reduction did not terminate; scenario is inconsistent")
    if w == (0, 0):
        return 1
    sq = sc.square(w)
    if sq > 0:
        return sq // 2 + 2
    if sq == 0:
        return content(w) + 1
    raise RuntimeError(f"reduced class {w} has negative square")


@dataclass(frozen=True)
class PolyhedralityResult:
    polyhedral: bool
    witness: Vector | None
    target: int | None
    checks: tuple[Representation, ...]

    def to_json(self):
        return {
            "polyhedral": self.polyhedral,
            "witness": list(self.witness) if self.witness else None,
            "square": self.target,
        }


def polyhedral_rank2(G) -> PolyhedralityResult:
    """Eff is polyhedral iff some class has square 0 or -2."""
    sc = RankTwoScenario(G)
    checks = []
    for target in (0, -2):
        rep = represents(sc.G, target)
        checks.append(rep)
        if rep.found:
            return PolyhedralityResult(True, rep.witness, target, tuple(checks))
    return PolyhedralityResult(False, None, None, tuple(checks))


@dataclass(frozen=True)
class PredictionResult:
    generator_degrees: tuple[Vector, ...]
    relation_degrees: tuple[Vector, ...]
    completeness: str
    provenance: str
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.generator_degrees:
            raise ValueError("a prediction needs generators")
        if self.completeness not in ("exact", "lower-bound"):
            raise ValueError(f"bad completeness flag {self.completeness!r}")

    @property
    def Q(self) -> list[list[int]]:
        """Degree matrix with one column per predicted generator."""
        return [list(r) for r in zip(*self.generator_degrees)]

    def to_json(self):
        return {
            "generator_degrees": [list(d) for d in self.generator_degrees],
            "relation_degrees": [list(d) for d in self.relation_degrees],
            "completeness": self.completeness,
            "provenance": self.provenance,
            "notes": list(self.notes),
        }


def predict_rank2(sc: RankTwoScenario) -> PredictionResult:
    a, b, k = sc.invariants
    u = (1, 1)
    if (a, b) == (0, 0) and k >= 3:
        gens = [(1, 0)] * 2 + [(0, 1)] * 2 + [u] * (k - 2)
        rels = [(3, 3)] if k == 3 else [(2, 2)] * (k * (k - 3) // 2)
        return PredictionResult(tuple(gens), tuple(rels), "exact", "gen-2")
    if {a, b} == {-2, 0} and k >= 2:
        gens = [(1, 0)] + [(i, 1) for i in range(k // 2 + 1)]
        if k % 2 == 1:
            gens.append((k, 2))
        if a == 0:
            gens = [(y, x) for x, y in gens]
        return PredictionResult(tuple(gens), (), "lower-bound", "gens-0-2")
    if (a, b) == (-2, -2) and k >= 3:
        gens = []
        for i in range(k // 2 + 1):
            for g in ((i, 1), (1, i)):
                if g not in gens:
                    gens.append(g)
        if k % 2 == 1:
            gens += [(k, 2), (2, k)]
        return PredictionResult(tuple(gens), (), "lower-bound", "gens-2-2")
    if (a, b, k) == (4, -4, 0):
        gens = [(1, 1)] * 2 + [(1, -1)] * 2 + [(1, 0)] * 4
        return PredictionResult(tuple(gens), ((2, 0),) * 4, "exact", "pic-eff")
    raise UnsupportedScenarioError(f"no generator prediction for w1^2={a}, w2^2={b}, w1.w2={k}")


@dataclass(frozen=True)
class DegreeCount:
    """Monomials in the predicted generators against the section count."""

    degree: Vector
    monomials: int
    h0: int

    @property
    def relations(self) -> int:
        return self.monomials - self.h0


def relation_count(sc: RankTwoScenario, pred: PredictionResult, w: Sequence[int]) -> DegreeCount:
    w = tuple(w)
    return DegreeCount(w, count_monomials(pred.Q, w), h0_rank2(sc, w))


def symmetric_power_dim(dim: int, m: int) -> int:
    return comb(dim + m - 1, m) if dim > 0 else int(m == 0)


def example_candidates(m: int) -> dict:
    """Candidate products at m(w1 + w2) for w1^2 = w2^2 = -2, w1.w2 = 3.

    The families are built from a basis of R_u (u = w1 + w2): Sym^3 plus two
    mixed products at 3u, and Sym^5 plus f23*f32 plus f23*f10*Sym^2 at 5u.
    The full count of monomials in the six generators is reported as well.
    """
    sc = RankTwoScenario.standard(-2, -2, 3)
    # f10, f01, f11, g11, f23, f32
    gens = [(1, 0), (0, 1), (1, 1), (1, 1), (2, 3), (3, 2)]
    r_u = h0_rank2(sc, (1, 1))
    if m == 3:
        family = symmetric_power_dim(r_u, 3) + 2
    elif m == 5:
        family = symmetric_power_dim(r_u, 5) + 1 + symmetric_power_dim(r_u, 2)
    else:
        raise ValueError("only 3u and 5u are worked out")
    w = (m, m)
    return {
        "degree": list(w),
        "h0": h0_rank2(sc, w),
        "candidates": family,
        "all_monomials": count_monomials([list(r) for r in zip(*gens)], w),
        "dim_R_u": r_u,
    }


# --- double covers -------------------------------------------------------------


@dataclass(frozen=True)
class CoverSpec:
    base_presentation: GradedPresentation
    base_canonical: Vector | None = None
    branch_components: int = 1
    rational_component_class: Vector | None = None

    def __post_init__(self):
        if self.branch_components not in (1, 2):
            raise ValueError("the branch divisor has one or two components here")
        if self.base_canonical is None:
            object.__setattr__(self, "base_canonical", canonical_class(self.base_presentation))
        K = tuple(self.base_canonical)
        object.__setattr__(self, "base_canonical", K)
        if len(K) != self.base_presentation.grading_rank:
            raise ValueError("canonical class has the wrong length")
        if self.branch_components == 2:
            w1 = self.rational_component_class
            if w1 is None:
                raise ValueError("two components need the class of the rational component")
            w1 = tuple(w1)
            object.__setattr__(self, "rational_component_class", w1)
            if w1 not in self.base_presentation.degrees:
                raise ValueError(f"{w1} is not a generator degree of the base")
        branch = tuple(-2 * x for x in K)
        if not positive_hull(self.base_presentation.degrees).contains(branch):
            raise ValueError(f"branch class {branch} is not effective on the base")

    @property
    def rational_index(self) -> int:
        return self.base_presentation.degrees.index(self.rational_component_class)


def _double_variable(p: LaurentPolynomial, j: int) -> LaurentPolynomial:
    terms = {}
    for e, c in p.terms:
        e = list(e)
        e[j] *= 2
        terms[tuple(e)] = c
    return LaurentPolynomial(p.nvars, terms)


def adjoin_cover(spec: CoverSpec) -> GradedPresentation:
    """Cox ring presentation of the double cover branched along -2K.

    One component: the class groups agree via pull-back; a square root T of
    the branch section is adjoined in degree -K with the relation T^2 = f.
    Two components B = C1 + C_B: after a basis change making [C1] the first
    basis vector, pull-back is diag(2, 1, ..., 1), the section of C1 gets
    degree e1, and the root of the C_B section has degree -(2K + [C1])/2.
    """
    base = spec.base_presentation
    K = spec.base_canonical
    n = base.ngens
    new = f"T{n + 1}"
    if spec.branch_components == 1:
        newdeg = tuple(-x for x in K)
        Q = [list(row) + [d] for row, d in zip(base.Q, newdeg)]
        rels = list(base.relations)
        rels.append(Relation(generic_degree=tuple(2 * x for x in newdeg), label=f"{new}^2 - f"))
        return GradedPresentation(Q, rels, name=f"cover of {base.name}".strip())

    c = spec.rational_index
    U = unimodular_completion(spec.rational_component_class)

    def pull(v):
        v = matvec(U, v)
        return (2 * v[0],) + tuple(v[1:])

    UQ = matmul(U, [list(r) for r in base.Q])
    cols = []
    for j in range(n):
        col = [r[j] for r in UQ]
        if j == c:
            cols.append(tuple(1 if i == 0 else 0 for i in range(len(col))))
        else:
            cols.append((2 * col[0],) + tuple(col[1:]))
    Kp = matvec(U, K)
    newdeg = (-(2 * Kp[0] + 1),) + tuple(-x for x in Kp[1:])
    cols.append(newdeg)
    Q = [list(r) for r in zip(*cols)]
    rels = []
    for r in base.relations:
        if r.generic:
            rels.append(Relation(generic_degree=pull(r.generic_degree), label=r.label))
        else:
            rels.append(Relation(poly=_double_variable(r.poly, c).extend(n + 1), label=r.label))
    others = ", ".join([f"T{c + 1}^2"] + [f"T{j + 1}" for j in range(n) if j != c])
    rels.append(Relation(generic_degree=tuple(2 * x for x in newdeg), label=f"{new}^2 - f, f in C[{others}]"))
    return GradedPresentation(Q, rels, name=f"cover of {base.name}".strip())


# --- classification ------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    rho: int
    lattice: str
    form: GramForm
    quotient: str
    branch: str
    genus: int
    components: int

    def to_json(self):
        inv = two_elementary(self.form)
        return {
            "rho": self.rho,
            "lattice": self.lattice,
            "gram": self.form.matrix(),
            "two_elementary": [inv.rank, inv.a, inv.delta],
            "quotient": self.quotient,
            "branch": self.branch,
            "branch_genus": self.genus,
        }


def branch_genus(K_squared: int, components: int, c1_data: tuple[int, int] | None = None) -> int:
    """Genus of the non-rational branch component, by adjunction.

    With two components, C_B = -2K - C1 where C1 is a smooth rational
    curve; ``c1_data`` is (C1^2, C1.K) and defaults to (-4, 2).
    """
    if components == 1:
        # C = -2K: g = 1 + (4K^2 - 2K^2) / 2
        return K_squared + 1
    if components != 2:
        raise ValueError("one or two components")
    c1sq, c1k = c1_data if c1_data is not None else (-4, 2)
    if c1sq + c1k != -2:
        raise ValueError("a smooth rational curve has C^2 + C.K = -2")
    cb_sq = 4 * K_squared + 4 * c1k + c1sq
    cb_k = -2 * K_squared - c1k
    twice = 2 + cb_sq + cb_k
    if twice % 2:
        raise ValueError("non-integral genus; inconsistent input")
    return twice // 2


def _row(rho, lattice, quotient, K2, components) -> TableRow:
    g = branch_genus(K2, components)
    branch = f"P1 + C{g}" if components == 2 else f"C{g}"
    return TableRow(rho, lattice, parse_form(lattice), quotient, branch, g, components)


def classification_table(rho: int) -> list[TableRow]:
    """Picard lattices, quotient surfaces and branch curves for 2 <= rho <= 5."""
    if rho == 2:
        rows = [_row(2, "U", "F4", 8, 2), _row(2, "U(2)", "F0", 8, 1), _row(2, "(2)+A1", "Bl1(P2)", 8, 1)]
    elif 3 <= rho <= 5:
        m = rho - 2
        K2 = 8 - m
        a1 = "A1" if m == 1 else f"A1^{m}"
        rows = [_row(rho, f"U+{a1}", f"Bl{m}(F4)", K2, 2), _row(rho, f"U(2)+{a1}", f"Bl{m}(F0)", K2, 1)]
    else:
        raise ValueError("the table covers 2 <= rho <= 5")
    invs = [two_elementary(r.form) for r in rows]
    if any(i is None for i in invs) or len(set(invs)) != len(invs):
        raise AssertionError("table lattices must be 2-elementary and pairwise distinct")
    return rows


# generators of Eff(X) by Picard number, when Eff(X) is polyhedral
EFF_GENERATOR_TYPES = (
    ((1, 1), "Q+[H]", "ample divisor"),
    ((2, 2), "Q+[E1] + Q+[E2]", "(-2) or (0)-curves"),
    ((3, 19), "sum of Q+[Ei]", "(-2)-curves"),
)


def eff_generator_type(rho: int) -> str:
    for (lo, hi), _, kind in EFF_GENERATOR_TYPES:
        if lo <= rho <= hi:
            return kind
    raise ValueError("Picard number of a K3 surface lies in 1..20 (polyhedral cases up to 19)")


def nikulin_counts(rho: int) -> int:
    """Number of Picard lattices of rank rho with polyhedral effective cone."""
    for (lo, hi), n in printed.NIKULIN_TABLE.items():
        if lo <= rho <= hi:
            return n
    raise ValueError("rho must lie in 3..20")


# --- del Pezzo covers ------------------------------------------------------------


def predict_delpezzo_cover(k: int) -> PredictionResult:
    """Generators and relations of the double cover of a del Pezzo surface
    of Picard number k branched along a smooth member of |-2K|."""
    lines = delpezzo.delpezzo_curves(k, "lines")
    conics = delpezzo.delpezzo_curves(k, "conics")
    antik = tuple(-x for x in delpezzo.canonical(k))
    gens = list(lines) + [antik]
    notes = ["T: section of the ramification curve, degree -K"]
    if k == 9:
        gens.append(antik)
        notes.append("degree 1: an extra generator pulled back from H0(-K)")
    rels = list(conics) + [tuple(2 * x for x in antik)]
    return PredictionResult(tuple(gens), tuple(rels), "exact", "doubledelp", tuple(notes))


def quadratic_realization(pred: PredictionResult) -> dict[Vector, tuple[int, int] | None]:
    """For each relation degree, a pair of generators whose degrees sum to it."""
    index: dict[Vector, int] = {}
    for i, g in enumerate(pred.generator_degrees):
        index.setdefault(g, i)
    out = {}
    for r in pred.relation_degrees:
        hit = None
        for i, g in enumerate(pred.generator_degrees):
            j = index.get(tuple(x - y for x, y in zip(r, g)))
            if j is not None:
                hit = (min(i, j), max(i, j))
                break
        out[r] = hit
    return out
