"""Rational polyhedral cones of small dimension, in exact arithmetic.

A cone is kept in a canonical form: a lattice basis of its lineality space
plus the primitive extremal rays of its pointed part, where the pointed part
is taken inside the orthogonal complement of the lineality space.  Two cones
are equal iff their canonical forms are equal.

Facets are found by brute force over subsets of generators (a generator
subset of size dim-1 spans each facet), which is plenty below dimension 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .intlin.forms import GramForm, DegenerateFormError
from .intlin.matrix import (
    clear_denominators,
    hermite_normal_form,
    primitive,
    rational_kernel,
    rational_rank,
)

MAX_DIM = 5

Vector = tuple[int, ...]


def _dot(u, v) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def _int_basis(vectors: Sequence[Sequence[Fraction]], dim: int) -> tuple[Vector, ...]:
    """Canonical integral basis of the rational span, saturated in Z^dim."""
    from .intlin.matrix import kernel_rows

    if not vectors:
        return ()
    # span = kernel of its orthogonal complement; saturating makes it canonical
    perp = rational_kernel([list(v) for v in vectors], dim)
    perp_int = [list(clear_denominators(v)) for v in perp]
    rows = kernel_rows(perp_int, dim) if perp_int else hermite_normal_form([[int(i == j) for j in range(dim)] for i in range(dim)])
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class Cone:
    """A polyhedral cone in Q^ambient_dim.

    ``rays`` are the extremal rays of the pointed part and ``lineality`` a
    basis of the largest linear subspace contained in the cone.
    """

    ambient_dim: int
    rays: tuple[Vector, ...]
    lineality: tuple[Vector, ...] = ()

    @property
    def pointed(self) -> bool:
        return not self.lineality

    @property
    def generators(self) -> tuple[Vector, ...]:
        """A generating set: the rays together with +- the lineality basis."""
        gens = set(self.rays)
        for v in self.lineality:
            gens.add(tuple(v))
            gens.add(tuple(-x for x in v))
        return tuple(sorted(gens))

    @property
    def is_zero(self) -> bool:
        return not self.rays and not self.lineality

    @property
    def dim(self) -> int:
        gens = self.generators
        return rational_rank([list(g) for g in gens]) if gens else 0

    def inequalities(self) -> tuple[list[Vector], list[Vector]]:
        """(equations, inequalities): x in C iff e.x = 0 and n.x >= 0 for all."""
        gens = self.generators
        d = self.ambient_dim
        if not gens:
            return [tuple(int(i == j) for j in range(d)) for i in range(d)], []
        perp = [clear_denominators(v) for v in rational_kernel([list(g) for g in gens], d)]
        return perp, _facet_normals(gens, perp, d)

    def contains(self, x: Sequence[int | Fraction]) -> bool:
        eqs, ineqs = self.inequalities()
        return all(_dot(e, x) == 0 for e in eqs) and all(_dot(n, x) >= 0 for n in ineqs)

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators)

    def interior_vector(self) -> Vector:
        """Sum of the generators; lies in the relative interior."""
        s = [0] * self.ambient_dim
        for g in self.rays:
            s = [a + b for a, b in zip(s, g)]
        return tuple(s)

    def to_json(self):
        return {
            "ambient_dim": self.ambient_dim,
            "rays": [list(r) for r in self.rays],
            "lineality": [list(v) for v in self.lineality],
            "pointed": self.pointed,
        }


def _facet_normals(gens: Sequence[Vector], perp: Sequence[Vector], d: int) -> list[Vector]:
    span_dim = d - len(perp)
    normals: set[Vector] = set()
    for subset in combinations(gens, span_dim - 1):
        rows = [list(g) for g in subset] + [list(p) for p in perp]
        ker = rational_kernel(rows, d)
        if len(ker) != 1:
            continue
        n = clear_denominators(ker[0])
        vals = [_dot(n, g) for g in gens]
        if all(v >= 0 for v in vals):
            pass
        elif all(v <= 0 for v in vals):
            n = tuple(-x for x in n)
        else:
            continue
        if any(v != 0 for v in vals):
            normals.add(n)
    return sorted(normals)


def _check_dim(d: int) -> None:
    if d > MAX_DIM:
        raise ValueError(f"cones are supported up to dimension {MAX_DIM}, got {d}")
    if d < 0:
        raise ValueError("negative dimension")


def positive_hull(vectors: Iterable[Sequence[int]], ambient_dim: int | None = None) -> Cone:
    """The cone generated by ``vectors``, in canonical form.

    >>> positive_hull([(1, 0), (0, 1), (1, 1)]).rays
    ((0, 1), (1, 0))
    """
    vecs = [tuple(int(x) for x in v) for v in vectors]
    if ambient_dim is None:
        if not vecs:
            raise ValueError("ambient dimension needed for an empty generator list")
        ambient_dim = len(vecs[0])
    d = ambient_dim
    _check_dim(d)
    if any(len(v) != d for v in vecs):
        raise ValueError("generators of different lengths")
    gens = sorted({primitive(v) for v in vecs if any(v)})
    if not gens:
        return Cone(d, ())
    perp = [clear_denominators(v) for v in rational_kernel([list(g) for g in gens], d)]
    normals = _facet_normals(gens, perp, d)
    return _canonical(gens, perp, normals, d)


def _canonical(gens, perp, normals, d) -> Cone:
    span_dim = d - len(perp)
    # lineality: span intersected with all facet hyperplanes
    lin_rows = [list(p) for p in perp] + [list(n) for n in normals]
    lin = rational_kernel(lin_rows, d) if lin_rows else [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    lin_basis = _int_basis(lin, d)
    ell = len(lin_basis)
    if ell == span_dim:
        return Cone(d, (), lin_basis)
    rays: set[Vector] = set()
    for g in gens:
        p = _project_away(g, lin_basis)
        if not any(p):
            continue
        tight = [list(n) for n in normals if _dot(n, p) == 0]
        # a ray of the pointed part is tight on facets cutting out a line
        if rational_rank(tight + [list(q) for q in perp] + [list(v) for v in lin_basis]) == d - 1:
            rays.add(clear_denominators(p))
    return Cone(d, tuple(sorted(rays)), lin_basis)


def _project_away(v: Sequence[int], basis: Sequence[Vector]) -> list[Fraction]:
    """Orthogonal projection of ``v`` onto the complement of span(basis)."""
    if not basis:
        return [Fraction(x) for x in v]
    # Gram-Schmidt over Q
    ortho: list[list[Fraction]] = []
    for b in basis:
        w = [Fraction(x) for x in b]
        for o in ortho:
            c = _dot(w, o) / _dot(o, o)
            w = [a - c * b_ for a, b_ in zip(w, o)]
        ortho.append(w)
    p = [Fraction(x) for x in v]
    for o in ortho:
        c = _dot(p, o) / _dot(o, o)
        p = [a - c * b for a, b in zip(p, o)]
    return p


def from_inequalities(d: int, equations: Sequence[Sequence[int]], inequalities: Sequence[Sequence[int]]) -> Cone:
    """H- to V-representation: {x : e.x = 0, n.x >= 0}."""
    _check_dim(d)
    eqs = [list(e) for e in equations if any(e)]
    ineqs = [list(n) for n in inequalities if any(n)]
    W = rational_kernel(eqs, d) if eqs else [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    s = len(W)
    if s == 0:
        return Cone(d, ())
    lin = rational_kernel(eqs + ineqs, d) if eqs + ineqs else W
    lin_basis = _int_basis(lin, d)
    ell = len(lin_basis)
    if ell == s:
        return Cone(d, (), lin_basis)
    base = eqs + [list(v) for v in lin_basis]
    gens: set[Vector] = set()
    for subset in combinations(ineqs, s - ell - 1):
        ker = rational_kernel(base + [list(n) for n in subset], d)
        if len(ker) != 1:
            continue
        x = clear_denominators(ker[0])
        vals = [_dot(n, x) for n in ineqs]
        if all(v >= 0 for v in vals):
            gens.add(x)
        elif all(v <= 0 for v in vals):
            gens.add(tuple(-c for c in x))
    for v in lin_basis:
        gens.add(tuple(v))
        gens.add(tuple(-c for c in v))
    return positive_hull(gens, d)


def intersect(c1: Cone, c2: Cone) -> Cone:
    if c1.ambient_dim != c2.ambient_dim:
        raise ValueError("dimension mismatch")
    e1, n1 = c1.inequalities()
    e2, n2 = c2.inequalities()
    return from_inequalities(c1.ambient_dim, list(e1) + list(e2), list(n1) + list(n2))


def moving_cone(degrees: Sequence[Sequence[int]]) -> Cone:
    """Intersection of the cones spanned by all-but-one of the degrees."""
    degs = [tuple(d) for d in degrees]
    if not degs:
        raise ValueError("empty degree list")
    d = len(degs[0])
    result: Cone | None = None
    for i in range(len(degs)):
        c = positive_hull(degs[:i] + degs[i + 1:], d)
        result = c if result is None else intersect(result, c)
    return result


def dual_cone_under_form(c: Cone, G: GramForm | Sequence[Sequence[int]]) -> Cone:
    """{x : x^T G g >= 0 for every generator g of c}."""
    if not isinstance(G, GramForm):
        G = GramForm(G)
    if G.rank != c.ambient_dim:
        raise ValueError("form and cone dimensions differ")
    if G.det == 0:
        raise DegenerateFormError("form is degenerate")
    normals = [tuple(sum(G.gram[i][j] * g[j] for j in range(G.rank)) for i in range(G.rank)) for g in c.generators]
    return from_inequalities(c.ambient_dim, [], normals)


def dual_cone(c: Cone) -> Cone:
    """Dual under the standard pairing."""
    d = c.ambient_dim
    return from_inequalities(d, [], [tuple(g) for g in c.generators])


def zero_cone(d: int) -> Cone:
    return Cone(d, ())
