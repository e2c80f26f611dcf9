"""The non-toric blow-up Bl3(F4): embed, subdivide, transform.

Bl2(F4) is toric.  Embedding its Cox ring as the hypersurface
T7 = T2*T4 - T3*T6 of a seven-variable polynomial ring puts it inside a
three-dimensional toric ambient space; blowing up that space along the
orbit of the cone (v5, v7) and taking the proper transform yields a
presentation of the Cox ring of the third blow-up.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fixtures, printed
from .graded import GradedPresentation, Relation
from .intlin.matrix import unimodular_row_equivalent
from .poly import LaurentPolynomial, parse_polynomial
from .toric import (
    AdmissibilityResult,
    Fan,
    ToricCoxPresentation,
    admissibility_check,
    cox_construction,
    embed_hypersurface,
    proper_transform,
    stellar_subdivide,
)


@dataclass(frozen=True)
class BlowupPipeline:
    base: GradedPresentation
    ambient: ToricCoxPresentation
    f0: LaurentPolynomial
    sigma0: Fan
    blown: tuple[int, ...]
    sigma1: Fan
    relation: LaurentPolynomial
    admissibility: AdmissibilityResult
    presentation: GradedPresentation

    @property
    def v_inf(self):
        return self.sigma1.rays[-1]

    @property
    def ambient_matches_fan(self) -> bool:
        """The embedded ambient's rays agree with the fixture fan up to GL(N)."""
        return unimodular_row_equivalent(self.ambient.P, self.sigma0.P)


def bl3f4_pipeline() -> BlowupPipeline:
    base_toric = cox_construction(fixtures.fan_Bl2F4())
    base = GradedPresentation(base_toric.Q, name="Bl2(F4)")
    ambient, f0 = embed_hypersurface(base, parse_polynomial(printed.EMBEDDING_IMAGE, 6))
    sigma0 = fixtures.fan_Sigma0()
    blown = tuple(i - 1 for i in printed.SIGMA0_BLOWN)
    sigma1 = stellar_subdivide(sigma0, blown)
    adm = admissibility_check(f0, blown)
    rel = proper_transform(f0, blown).normalized()
    Q1 = cox_construction(sigma1).Q
    pres = GradedPresentation(Q1, [Relation(poly=rel)], name="Bl3(F4)")
    return BlowupPipeline(base, ambient, f0, sigma0, blown, sigma1, rel, adm, pres)
