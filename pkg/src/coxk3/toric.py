"""Fans, toric Cox rings, stellar subdivisions and the proper-transform recipe."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from math import gcd
from typing import Iterable, Sequence

from .intlin.matrix import (
    IntMatrix,
    columns,
    content,
    from_columns,
    gale_dual,
    is_surjective,
    kernel_rows,
    rational_rank,
)
from .poly import LaurentPolynomial

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    """A simplicial fan given by its rays and maximal cones (0-based indices)."""

    lattice_rank: int
    rays: tuple[Vector, ...]
    max_cones: tuple[tuple[int, ...], ...]

    def __init__(self, rays: Iterable[Sequence[int]], max_cones: Iterable[Iterable[int]], lattice_rank: int | None = None):
        rays = tuple(tuple(int(x) for x in v) for v in rays)
        cones = tuple(tuple(sorted(int(i) for i in c)) for c in max_cones)
        n = lattice_rank if lattice_rank is not None else (len(rays[0]) if rays else 0)
        object.__setattr__(self, "lattice_rank", n)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", cones)
        self._validate()

    def _validate(self) -> None:
        if any(len(v) != self.lattice_rank for v in self.rays):
            raise ValueError("ray of wrong length")
        if len(set(self.rays)) != len(self.rays):
            raise ValueError("rays must be pairwise distinct")
        for v in self.rays:
            if content(v) != 1:
                raise ValueError(f"ray {v} is not primitive")
        for c in self.max_cones:
            if any(i < 0 or i >= len(self.rays) for i in c):
                raise ValueError(f"cone {c} refers to a missing ray")
            if rational_rank([list(self.rays[i]) for i in c]) != len(c):
                raise ValueError(f"cone {c} is not simplicial")

    @property
    def P(self) -> IntMatrix:
        return from_columns(self.rays, self.lattice_rank)

    def is_face(self, indices: Iterable[int]) -> bool:
        s = set(indices)
        return any(s <= set(c) for c in self.max_cones)

    def reorder(self, order: Sequence[int]) -> "Fan":
        """Fan with rays listed as ``[rays[i] for i in order]``."""
        if sorted(order) != list(range(len(self.rays))):
            raise ValueError("order must be a permutation of the ray indices")
        pos = {old: new for new, old in enumerate(order)}
        return Fan([self.rays[i] for i in order], [[pos[i] for i in c] for c in self.max_cones], self.lattice_rank)

    def to_json(self):
        return {"rays": [list(r) for r in self.rays], "max_cones": [list(c) for c in self.max_cones]}

    @classmethod
    def from_json(cls, data) -> "Fan":
        return cls(data["rays"], data["max_cones"])


def _angle_cmp(u: Vector, v: Vector) -> int:
    # exact counterclockwise order starting at the positive x-axis
    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def complete_surface_fan(rays: Sequence[Sequence[int]]) -> Fan:
    """The complete 2-dimensional fan whose maximal cones join angular neighbours."""
    rays = [tuple(r) for r in rays]
    order = sorted(range(len(rays)), key=cmp_to_key(lambda i, j: _angle_cmp(rays[i], rays[j])))
    cones = [(order[k], order[(k + 1) % len(order)]) for k in range(len(order))]
    for i, j in cones:
        u, v = rays[i], rays[j]
        if u[0] * v[1] - u[1] * v[0] <= 0:
            raise ValueError("rays do not form a complete fan (an angular gap of at least pi)")
    return Fan(rays, cones, 2)


def hirzebruch(a: int) -> Fan:
    """F_a with rays (1,0), (0,1), (-1,a), (0,-1)."""
    return Fan([(1, 0), (0, 1), (-1, a), (0, -1)], [(0, 1), (1, 2), (2, 3), (3, 0)], 2)


def p1xp1() -> Fan:
    return hirzebruch(0)


def p2() -> Fan:
    return Fan([(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (2, 0)], 2)


def surface_is_complete(fan: Fan) -> bool:
    """Angular sweep: consecutive rays are joined by a cone and every gap is < pi."""
    if fan.lattice_rank != 2 or len(fan.rays) < 3:
        return False
    try:
        ref = complete_surface_fan(fan.rays)
    except ValueError:
        return False
    return set(ref.max_cones) == set(fan.max_cones)


def surface_self_intersections(fan: Fan) -> list[int]:
    """D_i^2 for a smooth complete surface fan, from v_{i-1} + v_{i+1} = -D_i^2 v_i."""
    if not surface_is_complete(fan):
        raise ValueError("need a complete surface fan")
    n = len(fan.rays)
    order = sorted(range(n), key=cmp_to_key(lambda i, j: _angle_cmp(fan.rays[i], fan.rays[j])))
    out = [0] * n
    for k, i in enumerate(order):
        prev, nxt = fan.rays[order[k - 1]], fan.rays[order[(k + 1) % n]]
        s = (prev[0] + nxt[0], prev[1] + nxt[1])
        v = fan.rays[i]
        j = 0 if v[0] else 1
        if s[j] % v[j] or any(s[t] * v[j] != s[j] * v[t] for t in range(2)):
            raise ValueError("fan is not smooth")
        out[i] = -(s[j] // v[j])
    return out


@dataclass(frozen=True)
class ToricCoxPresentation:
    """Cox ring of a toric variety: polynomial ring graded by the Gale dual Q."""

    P: IntMatrix
    Q: IntMatrix
    variables: tuple[str, ...] = field(default=())

    @property
    def degrees(self) -> list[Vector]:
        return columns(self.Q)

    def to_json(self):
        return {"P": self.P, "Q": self.Q, "variables": list(self.variables)}


def cox_construction(fan: Fan) -> ToricCoxPresentation:
    """Degree matrix of the Cox ring of the toric variety of ``fan``.

    Raises ValueError when the rays do not span the lattice.
    """
    P = fan.P
    if not is_surjective(P):
        raise ValueError("rays do not span the lattice N")
    Q = gale_dual(P)
    return ToricCoxPresentation(P, Q, tuple(f"T{i + 1}" for i in range(len(fan.rays))))


def stellar_subdivide(fan: Fan, cone_indices: Iterable[int]) -> Fan:
    """Insert the ray through the sum of the selected rays and star-subdivide.

    The new ray is appended as the last ray.  It must be primitive already.
    """
    tau = sorted(set(cone_indices))
    if not tau:
        raise ValueError("empty cone")
    if not fan.is_face(tau):
        raise ValueError(f"{[i + 1 for i in tau]} is not a cone of the fan")
    v = tuple(sum(fan.rays[i][k] for i in tau) for k in range(fan.lattice_rank))
    if content(v) != 1:
        raise ValueError(f"v_inf = {v} is not primitive")
    new = len(fan.rays)
    cones = []
    for c in fan.max_cones:
        if set(tau) <= set(c):
            for i in tau:
                cones.append(tuple(sorted([j for j in c if j != i] + [new])))
        else:
            cones.append(c)
    return Fan(list(fan.rays) + [v], cones, fan.lattice_rank)


def proper_transform(f0: LaurentPolynomial, blown: Iterable[int], new_var: int | None = None) -> LaurentPolynomial:
    """f0(T_i * T_inf for i in blown, other T_j) / T_inf^d with d maximal.

    ``blown`` holds 0-based variable indices; T_inf becomes variable ``new_var``
    (by default the next unused index).
    """
    idx = sorted(set(blown))
    if idx and idx[-1] >= f0.nvars:
        f0 = f0.extend(idx[-1] + 1)
    n = f0.nvars if new_var is None else max(f0.nvars, new_var)
    new_var = n if new_var is None else new_var
    total = max(n + 1, new_var + 1)
    terms = {}
    for e, c in f0.terms:
        if any(x < 0 for x in e):
            raise ValueError("proper_transform expects a polynomial")
        e2 = list(e) + [0] * (total - len(e))
        e2[new_var] += sum(e[i] for i in idx)
        terms[tuple(e2)] = c
    f = LaurentPolynomial(total, terms)
    if f.is_zero():
        return f
    d = min(e[new_var] for e, _ in f.terms)
    m = [0] * total
    m[new_var] = d
    return f.divide_monomial(m)


# --- admissibility ---------------------------------------------------------


@dataclass(frozen=True)
class AdmissibilityResult:
    status: str  # "pass" | "fail" | "unknown"
    reason: str
    g_k0: LaurentPolynomial
    k0: int
    irreducible: bool | None
    meets_orbit: bool


def lowest_part(f0: LaurentPolynomial, blown: Iterable[int]) -> tuple[int, LaurentPolynomial]:
    """Lowest homogeneous part for the grading deg T_i = 1 (i blown), else 0."""
    idx = set(blown)
    if f0.is_zero():
        return 0, f0
    degs = {e: sum(e[i] for i in idx) for e, _ in f0.terms}
    k0 = min(degs.values())
    return k0, LaurentPolynomial(f0.nvars, {e: c for e, c in f0.terms if degs[e] == k0})


def irreducibility(g: LaurentPolynomial) -> tuple[bool | None, str]:
    """Exact irreducibility over C for polynomials with at most three terms."""
    if g.is_zero():
        return False, "zero polynomial"
    m = g.monomial_content()
    n_terms = len(g)
    if n_terms == 1:
        e = g.terms[0][0]
        if sum(e) == 1:
            return True, "a single variable"
        return False, "monomial of degree %d" % sum(e)
    if any(m):
        return False, "common monomial factor"
    exps = [e for e, _ in g.terms]
    if n_terms == 2:
        # disjoint supports after removing the common monomial
        gg = 0
        for e in exps:
            for x in e:
                gg = gcd(gg, x)
        if gg == 1:
            return True, "binomial with coprime exponents"
        return False, "binomial is a polynomial in T^(1/%d)-powers; it splits" % gg
    if n_terms == 3:
        supports = [{i for i, x in enumerate(e) if x} for e in exps]
        if all(not (supports[i] & supports[j]) for i in range(3) for j in range(i + 1, 3)):
            # Eisenstein in a variable of a non-constant term at a prime
            # factor of the remaining (squarefree) binomial
            return True, "trinomial with pairwise disjoint supports"
        return None, "trinomial with overlapping supports"
    return None, f"{n_terms} terms: outside the exactly decided fragment"


def meets_orbit(f0: LaurentPolynomial, blown: Iterable[int]) -> tuple[bool, str]:
    """Does V(f0) meet the orbit where the blown coordinates vanish and the rest do not?"""
    h = f0.substitute_zero(blown)
    if h.is_zero():
        return True, "f0 vanishes on the whole orbit"
    if len(h) == 1:
        return False, "restriction to the orbit is a monomial"
    return True, "restriction has at least two terms, hence a zero in the torus"


def admissibility_check(f0: LaurentPolynomial, blown: Iterable[int]) -> AdmissibilityResult:
    idx = sorted(set(blown))
    if idx and idx[-1] >= f0.nvars:
        f0 = f0.extend(idx[-1] + 1)
    k0, g = lowest_part(f0, idx)
    irr, why = irreducibility(g)
    orbit, owhy = meets_orbit(f0, idx)
    if len(g.variables()) < 2:
        return AdmissibilityResult("fail", f"g_k0 involves fewer than two variables ({why})", g, k0, irr, orbit)
    if irr is False:
        return AdmissibilityResult("fail", f"g_k0 is reducible: {why}", g, k0, irr, orbit)
    if not orbit:
        return AdmissibilityResult("fail", owhy, g, k0, irr, orbit)
    if irr is None:
        return AdmissibilityResult("unknown", f"irreducibility undecided: {why}", g, k0, irr, orbit)
    return AdmissibilityResult("pass", f"{why}; {owhy}", g, k0, irr, orbit)


# --- hypersurface embedding ------------------------------------------------


def embed_hypersurface(pres, g: LaurentPolynomial | None = None):
    """Embed Spec of a graded ring as a hypersurface via a new variable T_new = g.

    With ``g`` given, ``pres`` must be a polynomial ring (no relations) and
    ``g`` the image of the new variable.  Without ``g``, ``pres`` must carry
    exactly one explicit relation, which plays the role of ``g``.

    Returns ``(ambient, f0)``: a ToricCoxPresentation for the ambient ring
    (Q with one extra column, P its Gale dual back) and ``f0 = T_new - g``.
    """
    from .graded import homogeneity_check

    if g is None:
        if len(pres.relations) != 1:
            raise ValueError("a hypersurface embedding needs exactly one relation")
        rel = pres.relations[0]
        if rel.poly is None:
            raise ValueError("the relation must be explicit")
        g = rel.poly
    elif pres.relations:
        raise ValueError("pass either a polynomial ring with g, or a one-relation presentation")
    r = len(pres.Q[0])
    g = g.extend(r)
    if g.is_zero() or g.nvars > r:
        raise ValueError("not a hypersurface: g must be a nonzero polynomial in the existing variables")
    degs = set(g.term_degrees(pres.Q))
    if len(degs) != 1:
        raise ValueError(f"g is not homogeneous: term degrees {sorted(degs)}")
    (w,) = degs
    Q0 = [list(row) + [w[i]] for i, row in enumerate(pres.Q)]
    t_new = LaurentPolynomial.variable(r, r + 1)
    f0 = t_new - g.extend(r + 1)
    P0 = kernel_rows(Q0)
    return ToricCoxPresentation(P0, Q0, tuple(f"T{i + 1}" for i in range(r + 1))), f0
