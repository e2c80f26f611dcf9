"""Reproduction harness: every printed matrix and count, checked.

Each case returns a Report.  Status is "pass", "fail", or "deviation"; the
last is reserved for registered cases where the printed data is internally
inconsistent and the computed replacement passes every check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import delpezzo, fixtures, printed as pd
from .graded import (
    GradedPresentation,
    Relation,
    canonical_class,
    find_identification,
    homogeneity_check,
)
from .intlin import GramForm, brute_force_represents, unimodular_row_equivalent
from .intlin.matrix import primitive
from .k3 import (
    CoverSpec,
    RankTwoScenario,
    adjoin_cover,
    classification_table,
    example_candidates,
    h0_rank2,
    nef_cone_rank2,
    nikulin_counts,
    polyhedral_rank2,
    predict_delpezzo_cover,
    predict_rank2,
    quadratic_realization,
    relation_count,
)
from .pipeline import bl3f4_pipeline
from .poly import parse_polynomial
from .toric import cox_construction

DEVIATION_REGISTRY = frozenset({"rhoX5ii"})


@dataclass
class Report:
    case: str
    status: str
    expected: object
    actual: object
    citation: str
    notes: list[str] = field(default_factory=list)

    def to_json(self):
        return {
            "case": self.case,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
            "citation": self.citation,
            "notes": self.notes,
        }


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _gale(case, fan, printed, citation) -> Report:
    Q = cox_construction(fan).Q
    return Report(case, _status(unimodular_row_equivalent(Q, printed)), printed, Q, citation)


def case_gale_F0():
    return _gale("gale-F0", fixtures.fan_F0(), pd.F0_DEGREES, "rhoX2 (proof): degrees of the Cox ring of F0")


def case_gale_F4():
    return _gale("gale-F4", fixtures.fan_F4(), pd.F4_DEGREES, "rhoX2 (proof): degrees of the Cox ring of F4")


def case_gale_Bl2F4():
    return _gale("gale-Bl2F4", fixtures.fan_Bl2F4(), pd.BL2F4_Q, "prop:f4bl3: degree matrix of Bl2(F4)")


def case_f4bl3():
    p = bl3f4_pipeline()
    printed = parse_polynomial(pd.F4BL3_RELATION_RECIPE, 8)
    ours = p.relation
    # the same polynomial up to sign
    scale_ok = (ours - printed).is_zero() or (ours + printed).is_zero()
    q_ok = unimodular_row_equivalent(p.presentation.Q, pd.F4BL3_Q)
    notes = []
    if tuple(p.v_inf) != pd.PRINTED_V_INF:
        notes.append(f"new ray v5 + v7 = {p.v_inf}; printed as {pd.PRINTED_V_INF}")
    notes.append(f"admissibility: {p.admissibility.status} ({p.admissibility.reason})")
    return Report(
        "f4bl3",
        _status(scale_ok and q_ok and p.ambient_matches_fan and p.admissibility.status == "pass"),
        {"relation": pd.F4BL3_RELATION_RECIPE, "Q": pd.F4BL3_Q},
        {"relation": str(ours), "Q": p.presentation.matrix(), "canonical_class": list(canonical_class(p.presentation))},
        "prop:f4bl3: Cox ring of Bl3(F4) by proper transform",
        notes,
    )


def _printed_cover(M, extra_relations=()) -> GradedPresentation:
    rels = list(extra_relations) + [Relation(generic_degree=tuple(2 * r[-1] for r in M), label="T^2 - f")]
    return GradedPresentation(M, rels)


def _cover_case(case, fan, components, printed, citation) -> Report:
    base = GradedPresentation(cox_construction(fan).Q, name=case)
    w1 = base.degrees[0] if components == 2 else None
    out = adjoin_cover(CoverSpec(base, None, components, w1))
    target = _printed_cover(printed)
    ident = find_identification(out, target)
    K = canonical_class(out)
    ok = ident is not None and all(x == 0 for x in K) and bool(homogeneity_check(out))
    notes = ["matches the printed matrix column by column" if out.matrix() == printed else "equal after a basis change and relabeling"]
    if ident is not None and out.matrix() != printed:
        U, perm = ident
        notes.append(f"basis change {U}, columns {[i + 1 for i in perm]}")
    return Report(
        case,
        _status(ok),
        printed,
        {"Q": out.matrix(), "relations": [r.to_json() for r in out.relations], "canonical_class": list(K)},
        citation,
        notes,
    )


def case_rhoX2i():
    return _cover_case("rhoX2i", fixtures.fan_F0(), 1, pd.RHO2_I, "rhoX2 (i): double cover of F0")


def case_rhoX2ii():
    return _cover_case("rhoX2ii", fixtures.fan_F4(), 2, pd.RHO2_II, "rhoX2 (ii): double cover of F4, f in C[T1^2, T2, T3, T4]")


def case_rhoX2iii():
    return _cover_case("rhoX2iii", fixtures.fan_Bl1P2(), 1, pd.RHO2_III, "rhoX2 (iii): double cover of Bl1(P2)")


def case_rhoX3i():
    return _cover_case("rhoX3i", fixtures.fan_Bl1F0(), 1, pd.RHO3_I, "rhoX3 (i): double cover of Bl1(F0)")


def case_rhoX3ii():
    return _cover_case("rhoX3ii", fixtures.fan_Bl1F4(), 2, pd.RHO3_II, "rhoX3 (ii): double cover of Bl1(F4)")


def case_rhoX4i():
    return _cover_case("rhoX4i", fixtures.fan_Bl2F0(), 1, pd.RHO4_I, "rhoX4 (i): double cover of Bl2(F0)")


def case_rhoX4ii():
    return _cover_case("rhoX4ii", fixtures.fan_Bl2F4(), 2, pd.RHO4_II, "rhoX4 (ii): double cover of Bl2(F4)")


def rho5i_presentations():
    """(computed, printed) presentations of the cover of the degree-5 del Pezzo surface."""
    base = GradedPresentation([r[:10] for r in pd.RHO5_I], pd.PLUECKER, name="dP5")
    computed = adjoin_cover(CoverSpec(base, delpezzo.canonical(5), 1))
    printed = _printed_cover(pd.RHO5_I, [Relation(poly=parse_polynomial(f, 11)) for f in pd.PLUECKER])
    return computed, printed


def case_rhoX5i():
    computed, printed = rho5i_presentations()
    t11 = tuple(r[-1] for r in computed.Q)
    printed_t11 = tuple(r[-1] for r in pd.RHO5_I)
    plucker_ok = bool(homogeneity_check(printed))
    rel_ok = computed.relation_degrees()[-1] == tuple(2 * x for x in t11)
    same_lines = [list(r[:10]) for r in computed.Q] == [r[:10] for r in pd.RHO5_I]
    notes = [f"Pluecker relations homogeneous under the printed degrees: {plucker_ok}"]
    if t11 != printed_t11:
        notes.append(f"T11 must have degree -K = {t11} (half the sum of the ten line classes); printed {printed_t11} is K")
    return Report(
        "rhoX5i",
        _status(plucker_ok and rel_ok and same_lines and t11 == printed_t11),
        {"T11": list(printed_t11), "relation": [2 * x for x in printed_t11]},
        {"T11": list(t11), "relation": list(computed.relation_degrees()[-1])},
        "rhoX5 (i): double cover of Bl3(F0)",
        notes,
    )


def rho5ii_presentations():
    p = bl3f4_pipeline()
    w1 = p.presentation.degrees[0]
    computed = adjoin_cover(CoverSpec(p.presentation, None, 2, w1))
    printed = _printed_cover(pd.RHO5_II, [pd.RHO5_II_RELATION])
    return computed, printed


def case_rhoX5ii():
    computed, printed = rho5ii_presentations()
    hp = homogeneity_check(printed)
    hc = homogeneity_check(computed)
    Kc = canonical_class(computed)
    try:
        Kp = list(canonical_class(printed))
    except ValueError as exc:
        Kp = f"undefined: {exc}"
    # the printed Q with the homogeneous relation of the base, for comparison
    alt = _printed_cover(pd.RHO5_II, [pd.F4BL3_RELATION_STATEMENT])
    K_alt = list(canonical_class(alt))
    printed_ok = bool(hp) and Kp == [0] * 5
    computed_ok = bool(hc) and all(x == 0 for x in Kc)
    if printed_ok:
        status = "pass"
    elif computed_ok:
        status = "deviation"
    else:
        status = "fail"
    notes = [
        "printed term degrees: " + ", ".join(str(d) for c in hp.checks for d in c.term_degrees),
        f"computed T9 degree {tuple(r[-1] for r in computed.Q)}",
        f"printed Q with relation {pd.F4BL3_RELATION_STATEMENT} has canonical class {K_alt}",
    ]
    return Report(
        "rhoX5ii",
        status,
        {"Q": pd.RHO5_II, "relation": pd.RHO5_II_RELATION, "homogeneous": bool(hp), "canonical_class": Kp},
        {"Q": computed.matrix(), "relation": str(computed.relations[0].poly), "homogeneous": bool(hc), "canonical_class": list(Kc)},
        "rhoX5 (ii): double cover of Bl3(F4)",
        notes,
    )


def gen2_dimensions(k: int) -> dict:
    sc = RankTwoScenario.standard(0, 0, k)
    pred = predict_rank2(sc)
    out = {
        "k": k,
        "h0_w1": h0_rank2(sc, (1, 0)),
        "h0_w2": h0_rank2(sc, (0, 1)),
        "h0_u": h0_rank2(sc, (1, 1)),
        "h0_2u": h0_rank2(sc, (2, 2)),
        "relations_2u": relation_count(sc, pred, (2, 2)).relations,
    }
    if k == 3:
        out["relations_3u"] = relation_count(sc, pred, (3, 3)).relations
    return out


def case_gen2_dims():
    actual, ok = [], True
    for k in range(3, 13):
        d = gen2_dimensions(k)
        actual.append(d)
        ok &= (d["h0_w1"], d["h0_w2"], d["h0_u"], d["h0_2u"]) == (2, 2, k + 2, 4 * k + 2)
        ok &= d["relations_2u"] == (k * (k - 3) // 2)
        if k == 3:
            ok &= d["relations_3u"] == 1
    return Report(
        "gen2-dims", _status(ok),
        "dim R_wi = 2, dim R_u = k+2, dim R_2u = 4k+2, dim I_2u = k(k-3)/2, one relation at 3u for k=3",
        actual, "gen-2 (ii)-(iv)",
    )


def case_example_3u_5u():
    e3, e5 = example_candidates(3), example_candidates(5)
    ok = (e3["h0"], e3["candidates"], e5["h0"], e5["candidates"]) == (11, 12, 27, 28)
    notes = [
        "the two extra products at 3u are f23*f10 and f32*f01 (degree 3u); f23*f01 has degree (2,4)",
        f"all monomials in the six generators: {e3['all_monomials']} at 3u, {e5['all_monomials']} at 5u",
    ]
    return Report("example-3u-5u", _status(ok), {"3u": [11, 12], "5u": [27, 28]}, {"3u": e3, "5u": e5},
                  "example after gens-2-2 (w1^2 = w2^2 = -2, w1.w2 = 3)", notes)


def case_pic_eff():
    sc = RankTwoScenario([[4, 0], [0, -4]])
    pred = predict_rank2(sc)
    c = relation_count(sc, pred, (2, 0))
    ok = (c.h0, c.monomials, c.relations) == (10, 14, 4) and len(pred.relation_degrees) == 4
    return Report("pic-eff", _status(ok), {"h0": 10, "monomials": 14, "relations": 4},
                  {"h0": c.h0, "monomials": c.monomials, "relations": c.relations}, "pic-eff (ii)-(iii)")


def case_nef_cones():
    actual, ok = {}, True
    for k in range(3, 9):
        for a, b, want, label in (
            (-2, 0, {(k, 2), (0, 1)}, "gens-0-2"),
            (-2, -2, {(k, 2), (2, k)}, "gens-2-2"),
        ):
            rays = nef_cone_rank2(RankTwoScenario.standard(a, b, k)).rays
            ok &= set(rays) == {tuple(primitive(v)) for v in want}
            actual[f"{label} k={k}"] = [list(r) for r in rays]
    return Report("nef-cones", _status(ok), "rays {k w1 + 2 w2, w2} and {k w1 + 2 w2, 2 w1 + k w2} (primitive)",
                  actual, "gens-0-2 (i), gens-2-2 (i)")


def case_quot_table():
    rows, ok = [], True
    expected_rho2 = pd.QUOT_TABLE_RHO2
    for rho in range(2, 6):
        table = classification_table(rho)
        rows += [r.to_json() for r in table]
        if rho == 2:
            ok &= [(r.lattice, r.quotient, r.branch) for r in table] == [tuple(x) for x in expected_rho2]
        else:
            ok &= [r.genus for r in table] == [12 - rho, 11 - rho]
    return Report("quot-table", _status(ok), "rho=2: P1 + C10, C9, C9; rho=k: P1 + C(12-k), C(11-k)", rows, "quot")


def random_even_hyperbolic(rng: random.Random, size: int = 12) -> list[list[int]]:
    while True:
        a, b, c = (rng.randint(-size, size) for _ in range(3))
        if b * b - 4 * a * c > 0:
            return [[2 * a, b], [b, 2 * c]]


def polyhedrality_agreement(G, bound: int = 50) -> tuple[bool, str]:
    """Our decision against a box search: sound, and complete inside the box."""
    res = polyhedral_rank2(G)
    g = GramForm(G)
    for target in (0, -2):
        box = brute_force_represents(g, target, bound)
        rep = next((c for c in res.checks if c.target == target), None)
        if rep is None:
            # only reached when target 0 already succeeded
            continue
        if rep.found and g.square(rep.witness) != target:
            return False, f"bad witness {rep.witness} for {target}"
        if box is not None and not rep.found:
            return False, f"missed {box} of square {target}"
        if rep.found and box is None and max(abs(x) for x in rep.witness) <= bound:
            return False, f"box search disagrees on {rep.witness}"
    if res.polyhedral and g.square(res.witness) != res.target:
        return False, "witness does not evaluate to its target"
    return True, "ok"


def case_polyhedral_rank2(n: int = 200, seed: int = 20240):
    rng = random.Random(seed)
    bad = []
    for _ in range(n):
        G = random_even_hyperbolic(rng)
        ok, why = polyhedrality_agreement(G)
        if not ok:
            bad.append({"G": G, "why": why})
    diag = polyhedral_rank2([[2, 0], [0, -6]]).polyhedral
    return Report("polyhedral-rank2", _status(not bad and diag is False),
                  {"disagreements": 0, "diag(2,-6)": False},
                  {"disagreements": len(bad), "examples": bad[:3], "diag(2,-6)": diag, "forms": n},
                  "ne (i): polyhedral iff a class of square 0 or -2")


def case_delpezzo():
    classical = {5: 10, 6: 16, 7: 27, 8: 56, 9: 240}
    actual, ok = {}, True
    for k in range(5, 10):
        lines = delpezzo.delpezzo_curves(k, "lines")
        conics = delpezzo.delpezzo_curves(k, "conics")
        e = (0,) * (k - 1) + (1,)
        orbit_ok = set(lines) == delpezzo.weyl_orbit(k, e)
        pred = predict_delpezzo_cover(k)
        gens_ok = len(pred.generator_degrees) == len(lines) + (2 if k == 9 else 1)
        antik = tuple(-x for x in delpezzo.canonical(k))
        rels_ok = sorted(pred.relation_degrees) == sorted(conics + [tuple(2 * x for x in antik)])
        quad_ok = all(v is not None for v in quadratic_realization(pred).values())
        ok &= len(lines) == classical[k] and orbit_ok and gens_ok and rels_ok and quad_ok
        actual[str(k)] = {"lines": len(lines), "conics": len(conics), "generators": len(pred.generator_degrees),
                          "relations": len(pred.relation_degrees), "weyl_orbit_agrees": orbit_ok,
                          "quadratic": quad_ok}
    return Report("delpezzo", _status(ok), {"lines": classical}, actual, "doubledelp (i)-(ii)")


def case_nikulin():
    expected = {}
    for (lo, hi), n in pd.NIKULIN_TABLE.items():
        for r in range(lo, hi + 1):
            expected[str(r)] = n
    actual = {str(r): nikulin_counts(r) for r in range(3, 21)}
    return Report("nikulin", _status(actual == expected), expected, actual, "ne (ii): number of lattices")


CASES: dict[str, Callable[[], Report]] = {
    "gale-F0": case_gale_F0,
    "gale-F4": case_gale_F4,
    "gale-Bl2F4": case_gale_Bl2F4,
    "f4bl3": case_f4bl3,
    "rhoX2i": case_rhoX2i,
    "rhoX2ii": case_rhoX2ii,
    "rhoX2iii": case_rhoX2iii,
    "rhoX3i": case_rhoX3i,
    "rhoX3ii": case_rhoX3ii,
    "rhoX4i": case_rhoX4i,
    "rhoX4ii": case_rhoX4ii,
    "rhoX5i": case_rhoX5i,
    "rhoX5ii": case_rhoX5ii,
    "gen2-dims": case_gen2_dims,
    "example-3u-5u": case_example_3u_5u,
    "pic-eff": case_pic_eff,
    "nef-cones": case_nef_cones,
    "quot-table": case_quot_table,
    "polyhedral-rank2": case_polyhedral_rank2,
    "delpezzo": case_delpezzo,
    "nikulin": case_nikulin,
}


def run_case(case: str) -> Report:
    if case not in CASES:
        raise KeyError(case)
    try:
        rep = CASES[case]()
    except Exception as exc:  # a crash is a failure of that case only
        return Report(case, "fail", None, None, "", [f"{type(exc).__name__}: {exc}"])
    if rep.status == "deviation" and case not in DEVIATION_REGISTRY:
        rep.status = "fail"
        rep.notes.append("deviation status is only allowed for registered cases")
    return rep


def run_all(cases=None) -> list[Report]:
    ids = sorted(cases if cases is not None else CASES)
    return [run_case(c) for c in ids]
