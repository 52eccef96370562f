"""Command-line front end.

Subcommands: classify, cones, table, check. Exit codes: 0 success,
1 self-check failure, 2 usage/validation error. All numeric output is
exact integers; --format json emits a machine-readable report.
"""

import argparse
import json
import sys

from . import blowup, flag, selfcheck
from .errors import EngineError
from .rootsys import TypeSpec, build_root_system
from .weyl import ParabolicSubset


def _parse_parabolic(text, rank):
    text = (text or "").strip()
    if not text:
        return ParabolicSubset.of(())
    try:
        indices = sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise EngineError("parabolic list must be comma-separated integers: %r" % text)
    for i in indices:
        if not (1 <= i <= rank):
            raise EngineError("parabolic index %d outside 1..%d" % (i, rank))
    return ParabolicSubset.of(indices)


def _flag_variety(args):
    rs = build_root_system(TypeSpec(args.type, args.rank))
    par = _parse_parabolic(args.parabolic, rs.rank)
    return flag.FlagVariety(rs, par)


def _dump_json(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _classify_payload(fv, c):
    rep = blowup.classify(fv, c)
    dc, basis2 = blowup.anticanonical_class(fv, c)
    basis = flag.picard_basis(fv)
    return rep, {
        "input": {
            "type": str(fv.rs.spec),
            "parabolic": sorted(fv.par.members),
            "picard_basis": list(basis),
            "codim": c,
        },
        "betas": {str(a): rep.betas[a] for a in basis},
        "margins": {str(a): rep.margins[a] for a in basis},
        "verdict": rep.verdict.value,
        "anticanonical": {
            "basis1": {
                "pullback": list(dc.pullback_coeffs),
                "exceptional": dc.exceptional_coeff,
            },
            "basis2": {
                "pullback": list(basis2[:-1]),
                "h_minus_e": basis2[-1],
            },
        },
        "facts": {"gg_equals_nef": True, "h_minus_e_big": True},
        "anticanonical_big": rep.anticanonical_big.value,
    }


def cmd_classify(args):
    fv = _flag_variety(args)
    rep, payload = _classify_payload(fv, args.codim)
    if args.format == "json":
        _dump_json(payload)
        return 0
    basis = flag.picard_basis(fv)
    print("type        : %s" % payload["input"]["type"])
    print("S_P         : %s" % (sorted(fv.par.members) or "{}"))
    print("S \\ S_P     : %s" % list(basis))
    print("dim X       : %d" % flag.dimension(fv))
    print("codim c     : %d" % args.codim)
    for a in basis:
        print("beta_%-2d     : %d   margin beta-c+2 = %d" % (a, rep.betas[a], rep.margins[a]))
    b1 = payload["anticanonical"]["basis1"]
    b2 = payload["anticanonical"]["basis2"]
    print("-K (Bl*D, E): %s, E coeff %d" % (b1["pullback"], b1["exceptional"]))
    print("-K (Bl*D, H-E): %s, H-E coeff %d" % (b2["pullback"], b2["h_minus_e"]))
    print("-K big      : %s" % payload["anticanonical_big"])
    print("verdict     : %s" % rep.verdict.value)
    return 0


def cmd_cones(args):
    fv = _flag_variety(args)
    nef = blowup.nef_generators(fv, args.codim)
    mori = blowup.mori_generators(fv, args.codim)
    matrix = [[blowup.intersect(d, k) for k in mori] for d in nef]
    n = len(nef)
    assert all(
        matrix[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n)
    ), "cone duality violated"
    basis = flag.picard_basis(fv)
    if args.format == "json":
        _dump_json({
            "input": {
                "type": str(fv.rs.spec),
                "parabolic": sorted(fv.par.members),
                "picard_basis": list(basis),
                "codim": args.codim,
            },
            "nef_generators": [
                {"pullback": list(d.pullback_coeffs), "exceptional": d.exceptional_coeff}
                for d in nef
            ],
            "mori_generators": [
                {"tilde": list(k.tilde_coeffs), "e": k.e_coeff} for k in mori
            ],
            "intersection_matrix": matrix,
        })
        return 0
    labels = ["Bl*D_%d" % a for a in basis] + ["H-E_Z"]
    clabels = ["C~_%d" % a for a in basis] + ["e"]
    print("type %s, S_P %s, codim %d" % (fv.rs.spec, sorted(fv.par.members) or "{}", args.codim))
    print("nef generators : " + ", ".join(labels))
    print("Mori generators: " + ", ".join(clabels))
    print("intersection matrix:")
    for lab, row in zip(labels, matrix):
        print("  %-10s %s" % (lab, " ".join("%2d" % v for v in row)))
    return 0


def _table_rows(families, max_rank, policy):
    rows = []
    for fam in families:
        lo, hi = selfcheck.RANK_BOUNDS[fam]
        for rank in range(lo, min(hi, max_rank) + 1):
            rs = build_root_system(TypeSpec(fam, rank))
            if policy == "full-flag":
                pars = [((), ParabolicSubset.of(()))]
            else:
                pars = [
                    (
                        (node,),
                        ParabolicSubset.of(set(range(1, rank + 1)) - {node}),
                    )
                    for node in range(1, rank + 1)
                ]
            for marked, par in pars:
                fv = flag.FlagVariety(rs, par)
                betas = flag.beta_values(fv)
                basis = flag.picard_basis(fv)
                bmin = min(betas[a] for a in basis)
                rows.append({
                    "type": str(rs.spec),
                    "crossed_nodes": list(marked) if marked else list(basis),
                    "dim": flag.dimension(fv),
                    "betas": {str(a): betas[a] for a in basis},
                    "fano_max_c": bmin + 1,
                    "weak_fano_boundary_c": bmin + 2,
                })
    return rows


def cmd_table(args):
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    if not families:
        raise EngineError("empty family list")
    for f in families:
        if f not in selfcheck.RANK_BOUNDS:
            raise EngineError("unknown family %r" % f)
    if args.max_rank > 8:
        raise EngineError("max rank capped at 8 for sweeps")
    policy = "full-flag" if args.full_flag else "maximal-parabolics"
    rows = _table_rows(families, args.max_rank, policy)
    if args.format == "json":
        _dump_json({"policy": policy, "rows": rows})
        return 0
    print("%-5s %-14s %5s %-20s %-28s" % ("type", "crossed", "dimX", "betas", "Fano range"))
    for r in rows:
        betas = ",".join("%s:%d" % kv for kv in sorted(r["betas"].items(), key=lambda kv: int(kv[0])))
        print("%-5s %-14s %5d %-20s Fano for 2<=c<=%d, boundary c=%d" % (
            r["type"], ",".join(map(str, r["crossed_nodes"])), r["dim"], betas,
            r["fano_max_c"], r["weak_fano_boundary_c"],
        ))
    return 0


def cmd_check(args):
    results = selfcheck.run_all()
    failed = 0
    for name, ok in results:
        print("%s %s" % ("PASS" if ok else "FAIL", name))
        failed += 0 if ok else 1
    print("%d/%d checks passed" % (len(results) - failed, len(results)))
    return 1 if failed else 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="schubert-blowup",
        description="Fano / weak-Fano classification of blow-ups of flag "
                    "varieties along smooth Schubert varieties",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--type", required=True, choices=list("ABCDEFG"))
        sp.add_argument("--rank", required=True, type=int)
        sp.add_argument("--parabolic", default="",
                        help="comma-separated S_P node indices (what P contains)")
        sp.add_argument("--codim", required=True, type=int)
        sp.add_argument("--format", default="text", choices=["text", "json"])

    sp = sub.add_parser("classify", help="Fano report for Bl_Z(G/P)")
    common(sp)
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("cones", help="nef/Mori cone generators and pairing")
    common(sp)
    sp.set_defaults(fn=cmd_cones)

    sp = sub.add_parser("table", help="sweep table of beta values and boundaries")
    sp.add_argument("--families", required=True, help="comma-separated, e.g. A,B,G")
    sp.add_argument("--max-rank", type=int, default=4)
    pol = sp.add_mutually_exclusive_group()
    pol.add_argument("--maximal-parabolics", action="store_true", default=True)
    pol.add_argument("--full-flag", action="store_true")
    sp.add_argument("--format", default="text", choices=["text", "json"])
    sp.set_defaults(fn=cmd_table)

    sp = sub.add_parser("check", help="run the invariant self-check suites")
    sp.set_defaults(fn=cmd_check)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except EngineError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
