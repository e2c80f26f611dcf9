"""A small Buchberger procedure, truncated by a positive grading.

Only used to count standard monomials of homogeneous ideals at one degree,
so the basis is computed up to that degree and no further.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import LaurentPolynomial

DEFAULT_SPAIR_CAP = 100_000

Mono = tuple[int, ...]


def spair_cap() -> int:
    raw = os.environ.get("COXK3_SPAIR_CAP")
    if raw is None:
        return DEFAULT_SPAIR_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"COXK3_SPAIR_CAP must be an integer, got {raw!r}") from exc
    if cap <= 0:
        raise ValueError("COXK3_SPAIR_CAP must be positive")
    return cap


class SPairCapExceeded(RuntimeError):
    pass


def grevlex_key(m: Mono):
    return (sum(m), tuple(-x for x in reversed(m)))


@dataclass
class Poly:
    """Dict polynomial with its leading monomial cached."""

    terms: dict[Mono, Fraction]

    @property
    def lead(self) -> Mono:
        return max(self.terms, key=grevlex_key)

    def monic(self) -> "Poly":
        c = self.terms[self.lead]
        return Poly({m: v / c for m, v in self.terms.items()})


def _divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def _shift(p: Poly, m: Mono, c: Fraction = Fraction(1)) -> dict[Mono, Fraction]:
    return {tuple(x + y for x, y in zip(k, m)): v * c for k, v in p.terms.items()}


def reduce(f: dict[Mono, Fraction], basis: list[Poly]) -> dict[Mono, Fraction]:
    """Full reduction of f modulo basis (remainder has no divisible term)."""
    f = dict(f)
    rem: dict[Mono, Fraction] = {}
    while f:
        m = max(f, key=grevlex_key)
        c = f[m]
        for g in basis:
            lg = g.lead
            if _divides(lg, m):
                q = tuple(x - y for x, y in zip(m, lg))
                coef = c / g.terms[lg]
                for k, v in _shift(g, q, -coef).items():
                    nv = f.get(k, Fraction(0)) + v
                    if nv:
                        f[k] = nv
                    else:
                        f.pop(k, None)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def groebner_basis(
    polys: Sequence[LaurentPolynomial],
    weights: Sequence[int],
    max_degree: int,
    cap: int = DEFAULT_SPAIR_CAP,
) -> list[Poly]:
    """Groebner basis (grevlex) valid for every element of weighted degree <= max_degree.

    ``weights`` is a positive grading for which every input is homogeneous;
    S-pairs whose lcm exceeds ``max_degree`` are skipped.
    """

    def wdeg(m: Mono) -> int:
        return sum(a * b for a, b in zip(weights, m))

    basis: list[Poly] = []
    for p in polys:
        if not p.is_zero():
            basis.append(Poly({tuple(e): Fraction(c) for e, c in p.terms}).monic())
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    processed = 0
    while pairs:
        # deterministic: smallest lcm degree first, then by indices
        pairs.sort(key=lambda ij: (wdeg(_lcm(basis[ij[0]].lead, basis[ij[1]].lead)), ij))
        i, j = pairs.pop(0)
        processed += 1
        if processed > cap:
            raise SPairCapExceeded(f"more than {cap} S-pairs")
        li, lj = basis[i].lead, basis[j].lead
        L = _lcm(li, lj)
        if wdeg(L) > max_degree:
            continue
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials reduce to zero
        s = _shift(basis[i], tuple(x - y for x, y in zip(L, li)))
        for k, v in _shift(basis[j], tuple(x - y for x, y in zip(L, lj)), Fraction(-1)).items():
            nv = s.get(k, Fraction(0)) + v
            if nv:
                s[k] = nv
            else:
                s.pop(k, None)
        r = reduce(s, basis)
        if r:
            basis.append(Poly(r).monic())
            n = len(basis) - 1
            pairs.extend((k, n) for k in range(n))
    return basis
