"""Command line entry point: ``coxk3 <verb> ...``.

stdout carries JSON only; diagnostics go to stderr.  Exit status is 0 on
success, 1 when a validation fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import delpezzo, serialize
from .fixtures import builtin_fan
from .graded import (
    GradedPresentation,
    NotCompleteIntersectionError,
    canonical_class,
    ci_hilbert,
    count_monomials,
    homogeneity_check,
    is_complete_intersection,
    standard_monomial_count,
)
from .groebner import SPairCapExceeded
from .intlin import gale_dual, parse_matrix
from .k3 import (
    CoverSpec,
    RankTwoScenario,
    UnsupportedScenarioError,
    adjoin_cover,
    classification_table,
    eff_cone_rank2,
    h0_rank2,
    nef_cone_rank2,
    nikulin_counts,
    polyhedral_rank2,
    predict_delpezzo_cover,
    predict_rank2,
)
from .poly import parse_polynomial
from .toric import admissibility_check, cox_construction, proper_transform, stellar_subdivide
from .verify import CASES, DEVIATION_REGISTRY, run_all


class InputError(ValueError):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as exc:
        raise InputError(f"expected comma separated integers, got {text!r}") from exc


def _load_json(path: str):
    try:
        return serialize.load(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _fan(spec: str):
    if spec.startswith("builtin:") or not spec.endswith(".json"):
        try:
            return builtin_fan(spec)
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from exc
    return serialize.fan_in(_load_json(spec))


def _presentation(args) -> GradedPresentation:
    if args.input:
        return serialize.presentation_in(_load_json(args.input))
    if getattr(args, "fan", None):
        return GradedPresentation(cox_construction(_fan(args.fan)).Q, name=args.fan)
    raise InputError("a presentation is needed: -i file.json or --fan")


def _emit(obj) -> None:
    sys.stdout.write(serialize.dumps(obj) + "\n")


# --- verbs -------------------------------------------------------------------


def cmd_verify_paper(args) -> int:
    if args.case and args.case not in CASES:
        raise InputError(f"unknown case {args.case!r}; known: {', '.join(sorted(CASES))}")
    reports = run_all([args.case] if args.case else None)
    bad = 0
    for rep in reports:
        line = serialize.dumps(rep.to_json())
        sys.stdout.write(line + "\n")
        expected_dev = rep.status == "deviation" and rep.case in DEVIATION_REGISTRY
        if rep.status != "pass" and not expected_dev:
            bad += 1
        print(f"{rep.case:18s} {rep.status}", file=sys.stderr)
    return 1 if bad else 0


def cmd_gale(args) -> int:
    if args.matrix:
        P = parse_matrix(args.matrix)
    elif args.input:
        data = _load_json(args.input)
        P = serialize.matrix_in(data["P"] if isinstance(data, dict) else data)
    else:
        raise InputError("gale needs --matrix or -i")
    Q = gale_dual(P)
    _emit({"P": serialize.matrix_out(P), "Q": serialize.matrix_out(Q)})
    return 0


def cmd_cox(args) -> int:
    if not args.fan:
        raise InputError("cox needs --fan")
    fan = _fan(args.fan)
    pres = cox_construction(fan)
    _emit({
        "fan": fan.to_json(),
        "P": serialize.matrix_out(pres.P),
        "Q": serialize.matrix_out(pres.Q),
        "variables": list(pres.variables),
        "canonical_class": [-sum(r) for r in pres.Q],
    })
    return 0


def cmd_blowup(args) -> int:
    if not args.fan or not args.cone:
        raise InputError("blowup needs --fan and --cone")
    fan = _fan(args.fan)
    cone = [i - 1 for i in _ints(args.cone)]
    new = stellar_subdivide(fan, cone)
    out = {
        "fan": new.to_json(),
        "v_inf": list(new.rays[-1]),
        "Q": serialize.matrix_out(cox_construction(new).Q),
    }
    if args.poly:
        f0 = parse_polynomial(args.poly, len(fan.rays))
        adm = admissibility_check(f0, cone)
        out["proper_transform"] = str(proper_transform(f0, cone))
        out["admissibility"] = {"status": adm.status, "reason": adm.reason}
    _emit(out)
    return 0


def cmd_hilbert(args) -> int:
    pres = _presentation(args)
    if not args.weight:
        raise InputError("hilbert needs -w")
    w = _ints(args.weight)
    if len(w) != pres.grading_rank:
        raise InputError(f"degree has {len(w)} entries, grading rank is {pres.grading_rank}")
    out = {"degree": list(w), "monomials": count_monomials(pres.Q, w)}
    if is_complete_intersection(pres) or not pres.relations:
        out["ci_hilbert"] = ci_hilbert(pres, w)
    if pres.relations and all(not r.generic for r in pres.relations):
        out["standard_monomials"] = standard_monomial_count(pres, w)
    _emit(out)
    return 0


def cmd_rank2(args) -> int:
    if not args.gram:
        raise InputError("rank2 needs --gram")
    sc = RankTwoScenario(parse_matrix(args.gram))
    out = {"gram": serialize.matrix_out(sc.G.matrix()), "polyhedral": polyhedral_rank2(sc.G).to_json(),
           "provenance": "ne"}
    try:
        out["effective_cone"] = [list(r) for r in eff_cone_rank2(sc).rays]
        out["nef_cone"] = [list(r) for r in nef_cone_rank2(sc).rays]
    except UnsupportedScenarioError as exc:
        out["effective_cone"] = None
        print(f"note: {exc}", file=sys.stderr)
    if args.weight:
        out["h0"] = {"degree": list(_ints(args.weight)), "value": h0_rank2(sc, _ints(args.weight))}
    if args.predict:
        pred = predict_rank2(sc)
        out["prediction"] = pred.to_json()
        out["provenance"] = pred.provenance
    _emit(out)
    return 0


def cmd_cover(args) -> int:
    base = _presentation(args)
    K = _ints(args.canonical) if args.canonical else None
    c1 = None
    if args.components == 2:
        c1 = _ints(args.c1) if args.c1 else base.degrees[0]
    out = adjoin_cover(CoverSpec(base, K, args.components, c1))
    res = serialize.presentation_out(out)
    res["provenance"] = "genk3double, f4double" if args.components == 2 else "genk3double"
    try:
        res["canonical_class"] = list(canonical_class(out))
    except NotCompleteIntersectionError:
        res["canonical_class"] = None
    _emit(res)
    return 0


def cmd_dp(args) -> int:
    k = args.k
    if k is None:
        raise InputError("dp needs --k")
    delpezzo.delpezzo_curves(k, args.kind)  # validates k
    if args.predict:
        res = predict_delpezzo_cover(k).to_json()
    else:
        search = delpezzo.search_classes(k, *(delpezzo.LINE if args.kind == "lines" else delpezzo.CONIC))
        res = {"k": k, "kind": args.kind, "count": len(search.classes),
               "classes": [list(c) for c in search.classes], "bound": search.bound}
    res["provenance"] = "doubledelp"
    _emit(res)
    return 0


def cmd_table(args) -> int:
    rows = [r.to_json() for r in classification_table(args.rho)]
    for r in rows:
        r["gram"] = serialize.matrix_out(r["gram"])
    _emit({"rho": args.rho, "rows": rows, "provenance": "quot"})
    return 0


def cmd_nikulin(args) -> int:
    _emit({"rho": args.rho, "count": nikulin_counts(args.rho), "provenance": "ne"})
    return 0


def cmd_validate(args) -> int:
    pres = _presentation(args)
    rep = homogeneity_check(pres)
    out = rep.to_json()
    try:
        out["canonical_class"] = list(canonical_class(pres)) if rep else None
    except NotCompleteIntersectionError:
        out["canonical_class"] = None
    _emit(out)
    return 0 if rep else 1


VERBS = {
    "verify-paper": cmd_verify_paper,
    "gale": cmd_gale,
    "cox": cmd_cox,
    "blowup": cmd_blowup,
    "hilbert": cmd_hilbert,
    "rank2": cmd_rank2,
    "cover": cmd_cover,
    "dp": cmd_dp,
    "table": cmd_table,
    "nikulin": cmd_nikulin,
    "validate": cmd_validate,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxk3", description="Cox rings of K3 surfaces and their quotients")
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, help_, *flags):
        sp = sub.add_parser(name, help=help_)
        for f in flags:
            f(sp)
        sp.add_argument("--json", action="store_true", help="JSON output (always on; accepted for symmetry)")
        return sp

    inp = lambda sp: sp.add_argument("-i", "--input", help="JSON input file")  # noqa: E731
    fan = lambda sp: sp.add_argument("--fan", help="builtin:<name> or a fan JSON file")  # noqa: E731
    wt = lambda sp: sp.add_argument("-w", "--weight", help="degree as comma separated integers")  # noqa: E731
    gram = lambda sp: sp.add_argument("--gram", help='Gram matrix, rows separated by ";"')  # noqa: E731

    add("verify-paper", "check every printed matrix and count").add_argument("--case", help="run one case")
    add("gale", "Gale dual of a ray matrix", inp).add_argument("--matrix", help='P, rows separated by ";"')
    add("cox", "degree matrix of a toric surface", fan)
    sp = add("blowup", "stellar subdivision and proper transform", fan)
    sp.add_argument("--cone", help="1-based ray indices of the cone to subdivide")
    sp.add_argument("--poly", help="polynomial f0 whose proper transform is wanted")
    add("hilbert", "monomial and Hilbert function counts", inp, fan, wt)
    add("rank2", "rank-two Picard lattice analysis", gram, wt).add_argument(
        "--predict", action="store_true", help="predict generator and relation degrees")
    sp = add("cover", "presentation of a double cover", inp, fan)
    sp.add_argument("--components", type=int, choices=(1, 2), default=1)
    sp.add_argument("--c1", help="class of the rational branch component (default: first generator)")
    sp.add_argument("--canonical", help="canonical class of the base (default: computed)")
    sp = add("dp", "lines and conics on del Pezzo surfaces")
    sp.add_argument("--k", type=int, help="Picard number 5..9")
    sp.add_argument("--kind", choices=("lines", "conics"), default="lines")
    sp.add_argument("--predict", action="store_true", help="predict the cover's generators and relations")
    add("table", "lattice classification for small Picard number").add_argument("--rho", type=int, required=True)
    add("nikulin", "number of lattices with polyhedral effective cone").add_argument("--rho", type=int, required=True)
    add("validate", "homogeneity and canonical class of a presentation", inp, fan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return VERBS[args.verb](args)
    except (InputError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SPairCapExceeded as exc:
        print(f"error: {exc} (raise COXK3_SPAIR_CAP to allow more)", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
