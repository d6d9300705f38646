"""Batch command-line front end.

Commands: homology, local, check-cm, duality, naturality, sections,
identities.  Every command reads text inputs (complex, subcomplex, map,
filtration files), runs the corresponding verification pipeline, and emits a
deterministic JSON report.  Exit code 0 means every mathematical verdict in
the report is true, 1 means some verdict is false (including refusals on
failed hypotheses), 2 means a usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .complexes import parse_complex, parse_subcomplex
from .homology import HomologyPresentation
from .identities import full_identity_report
from .io import parse_filtration, parse_map
from .localhomology import (cm_check, link_crosscheck, local_cohomology,
                            local_homology, uct_report)
from .matrices import Matrix
from .mv import DUALITY_ITEMS, verify_duality
from .rings import ring_from_name
from .sectionsduality import (build_restriction_system,
                              compactly_determined_dual, lf_h0_check,
                              semistability_check)
from .sheaves import (cosheaf_chain_complex, region_sub,
                      sheaf_cochain_complex, simplicial_chain_complex)
from .simplicialmaps import verify_naturality

SCHEMA_VERSION = 1


def _jsonable(obj):
    if isinstance(obj, Matrix):
        return {"rows": [_jsonable(r) for r in obj.row_labels],
                "cols": [_jsonable(c) for c in obj.col_labels],
                "dense": [[_jsonable(v) for v in row]
                          for row in obj.to_dense()]}
    if isinstance(obj, HomologyPresentation):
        return {"rank": obj.free_rank,
                "torsion": [_jsonable(t) for t in obj.torsion],
                "generators": [_jsonable(g) for g in obj.gens]}
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {_key(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in obj]
        if isinstance(obj, (set, frozenset)):
            items = sorted(items, key=repr)
        return items
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    return repr(obj)


def _key(k):
    if isinstance(k, str):
        return k
    if isinstance(k, (int, bool)):
        return str(k)
    if isinstance(k, tuple):
        return " ".join(str(p) if not isinstance(p, tuple)
                        else ",".join(map(str, p)) for p in k)
    return repr(k)


def _emit(report, out_path):
    text = json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_complex(args):
    with open(args.complex, encoding="utf-8") as fh:
        return parse_complex(fh.read())


def _load_subcomplex(args, X):
    if not args.subcomplex:
        return None
    with open(args.subcomplex, encoding="utf-8") as fh:
        return parse_subcomplex(fh.read(), X)


def _pres_summary(pres):
    return {"rank": pres.free_rank,
            "torsion": [_jsonable(t) for t in pres.torsion],
            "generators": [_jsonable(g) for g in pres.gens]}


def cmd_homology(args):
    ring = ring_from_name(args.ring)
    X = _load_complex(args)
    L = _load_subcomplex(args, X)
    n = args.dim if args.dim is not None else X.dim
    region = region_sub(L) if L is not None else None
    report = {"schema": SCHEMA_VERSION, "command": "homology",
              "ring": ring.name, "order": list(X.order), "n": n}
    cx = (simplicial_chain_complex(X, ring, region) if region
          else simplicial_chain_complex(X, ring))
    degrees = ([args.degree] if args.degree is not None
               else list(range(X.dim + 1)))
    report["simplicial"] = {k: _pres_summary(cx.homology(k)) for k in degrees}
    from .localhomology import build_h_cosheaf, build_h_sheaf
    cm = cm_check(X, L, n, ring)
    report["locally_cm_at_region"] = cm["locally_cm_at_L"]
    if cm["locally_cm_at_L"]:
        F = build_h_sheaf(X, ring, n)
        G = build_h_cosheaf(X, ring, n)
        sc = (sheaf_cochain_complex(F, region) if region
              else sheaf_cochain_complex(F))
        cc = (cosheaf_chain_complex(G, region) if region
              else cosheaf_chain_complex(G))
        report["sheaf_cochain"] = {k: _pres_summary(sc.homology(k))
                                   for k in degrees}
        report["cosheaf_chain"] = {k: _pres_summary(cc.homology(k))
                                   for k in degrees}
    return report, True


def cmd_local(args):
    ring = ring_from_name(args.ring)
    X = _load_complex(args)
    report = {"schema": SCHEMA_VERSION, "command": "local",
              "ring": ring.name, "order": list(X.order)}
    stalks = {}
    all_ok = True
    for s in X.all_simplices():
        entry = {"local_homology": {}, "local_cohomology": {}}
        for k in range(X.dim + 1):
            entry["local_homology"][k] = _jsonable(
                local_homology(X, ring, s, k).rank_summary)
            entry["local_cohomology"][k] = _jsonable(
                local_cohomology(X, ring, s, k).rank_summary)
        entry["link_crosscheck"] = link_crosscheck(X, ring, s)
        if args.dim is not None:
            entry["uct"] = {kk: _jsonable(vv) for kk, vv in
                            uct_report(X, ring, s, args.dim).items()}
            all_ok = all_ok and entry["uct"]["ok"]
        all_ok = all_ok and entry["link_crosscheck"]
        stalks[s] = entry
    report["simplices"] = stalks
    report["ok"] = all_ok
    return report, all_ok


def cmd_check_cm(args):
    ring = ring_from_name(args.ring)
    X = _load_complex(args)
    L = _load_subcomplex(args, X)
    n = args.dim if args.dim is not None else X.dim
    cm = cm_check(X, L, n, ring)
    report = {"schema": SCHEMA_VERSION, "command": "check-cm",
              "ring": ring.name, "order": list(X.order), "n": n}
    report.update({k: _jsonable(v) for k, v in cm.items()})
    report["verdict"] = cm["locally_cm_at_L"] if L is not None \
        else cm["locally_cm"]
    return report, report["verdict"]


def cmd_duality(args):
    ring = ring_from_name(args.ring)
    X = _load_complex(args)
    L = _load_subcomplex(args, X)
    if args.item not in DUALITY_ITEMS:
        raise SystemExit(2)
    rep = verify_duality(X, L, args.item, ring)
    report = {"schema": SCHEMA_VERSION, "command": "duality",
              "order": list(X.order)}
    report.update(rep)
    return report, bool(rep.get("verdict"))


def cmd_naturality(args):
    ring = ring_from_name(args.ring)
    X = _load_complex(args)
    if not args.target:
        sys.stderr.write("naturality needs --target (codomain complex)\n")
        raise SystemExit(2)
    with open(args.target, encoding="utf-8") as fh:
        Y = parse_complex(fh.read())
    if not args.map:
        sys.stderr.write("naturality needs --map\n")
        raise SystemExit(2)
    with open(args.map, encoding="utf-8") as fh:
        f = parse_map(fh.read(), X, Y)
    rep = verify_naturality(f, ring)
    report = {"schema": SCHEMA_VERSION, "command": "naturality",
              "source_order": list(X.order), "target_order": list(Y.order)}
    report.update(rep)
    return report, bool(rep.get("ok"))


def cmd_sections(args):
    ring = ring_from_name(args.ring)
    X = _load_complex(args)
    L = _load_subcomplex(args, X)
    n = args.dim if args.dim is not None else X.dim
    report = {"schema": SCHEMA_VERSION, "command": "sections",
              "ring": ring.name, "order": list(X.order), "n": n}
    lf = lf_h0_check(X, L, n, ring)
    report["lf_h0"] = lf
    ok = lf["verdict"]
    if args.filtration:
        with open(args.filtration, encoding="utf-8") as fh:
            stages = parse_filtration(fh.read())
        cdd = compactly_determined_dual(X, L, n, ring, stages)
        report["compactly_determined_dual"] = cdd
        system, _, _ = build_restriction_system(X, L, n, ring, stages)
        if len(system) > 1:
            report["semistability"] = semistability_check(system)
        ok = ok and cdd["verdict"]
    report["ok"] = ok
    return report, ok


def cmd_identities(args):
    ring = ring_from_name(args.ring)
    X = _load_complex(args)
    L = _load_subcomplex(args, X)
    rep = full_identity_report(X, L, ring)
    report = {"schema": SCHEMA_VERSION, "command": "identities",
              "ring": ring.name, "order": list(X.order)}
    report.update(rep)
    return report, rep["ok"]


COMMANDS = {
    "homology": cmd_homology,
    "local": cmd_local,
    "check-cm": cmd_check_cm,
    "duality": cmd_duality,
    "naturality": cmd_naturality,
    "sections": cmd_sections,
    "identities": cmd_identities,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lochom",
        description="Exact verification of local-homology duality on finite "
                    "oriented simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--ring", default="z",
                       help="coefficient ring: z, q, or fp:<prime>")
        p.add_argument("--complex", required=True,
                       help="complex file (order/simplex lines)")
        p.add_argument("--subcomplex", help="subcomplex file (vertices line)")
        p.add_argument("--map", help="simplicial-map file (map: v -> w lines)")
        p.add_argument("--target",
                       help="codomain complex file (naturality command)")
        p.add_argument("--item", choices=sorted(DUALITY_ITEMS),
                       help="duality item selector")
        p.add_argument("--dim", type=int, help="coefficient degree n")
        p.add_argument("--degree", type=int, help="restrict report degree")
        p.add_argument("--filtration",
                       help="filtration file (stage: lines)")
        p.add_argument("--out", help="write the JSON report to this path")
        p.add_argument("--threads", type=int, default=1,
                       help="accepted for interface stability; "
                            "the computation is single-threaded")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "duality" and not args.item:
        parser.error("duality requires --item")
    try:
        report, ok = COMMANDS[args.command](args)
    except (FileNotFoundError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    _emit(report, args.out)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
