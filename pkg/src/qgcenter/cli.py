"""Command-line surface: exact computations emitted as JSON or CSV.

Every number in the output is an exact string (integers, "p/q" rationals, or
Laurent-fraction objects); repeated runs with identical inputs produce
byte-identical documents.  Exit status: 0 success, 1 mathematical-consistency
failure (with a machine-readable record), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cache import CacheCorruption, ResultCache, default_cache_dir
from .errors import ConsistencyError
from .euler import EulerData, build_euler
from .field import FieldElem, rat_to_str
from .hc import (
    expand_in_orbit_sums,
    grothendieck_product,
    hc_image,
    orbit_sum,
    poly_evaluate,
    poly_express,
    poly_to_json,
    poly_to_str,
)
from .modules import (
    build_z,
    check_s2_twist,
    default_probes,
    hc_matches_z,
    relation_report,
    simple_quotient,
    verify_central,
    verify_trace_identity,
)
from .mults import dominant_box, freudenthal, kostant_mult, kostant_partition_count, weyl_dim
from .pairing import PairingEngine
from .roots import VALID_RANKS, build_root_system
from .torus import invariance_witness

DET_TABLE = {
    ("A", 1): 0, ("A", 2): 1, ("A", 3): 0, ("A", 4): 1, ("A", 5): 0,
    ("A", 6): 1, ("A", 7): 0, ("A", 8): 1,
    ("B", 2): 4, ("B", 3): 0, ("B", 4): 16, ("B", 5): 0, ("B", 6): 64,
    ("B", 7): 0, ("B", 8): 256,
    ("C", 2): 4, ("C", 3): 0, ("C", 4): 4, ("C", 5): 0, ("C", 6): 4,
    ("C", 7): 0, ("C", 8): 4,
    ("D", 4): 4, ("D", 5): 0, ("D", 6): 4, ("D", 7): 0, ("D", 8): 4,
    ("E", 6): 1, ("E", 7): 0, ("E", 8): 1,
    ("F", 4): 4,
    ("G", 2): 9,
}


class UsageError(RuntimeError):
    pass


def parse_weight(rs, text: str, alpha: bool = False):
    try:
        coords = [Fraction(part) for part in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed weight {text!r}") from exc
    if len(coords) != rs.rank:
        raise UsageError(f"weight {text!r} has {len(coords)} coordinates, rank is {rs.rank}")
    return rs.weight_from_alpha(coords) if alpha else rs.weight_from_omega(coords)


def emit(doc, fmt: str):
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        for row in flatten_csv(doc):
            sys.stdout.write(",".join(str(x) for x in row) + "\n")


def flatten_csv(doc, prefix=""):
    """Deterministic key,value rows for nested JSON-like documents."""
    rows = []
    if isinstance(doc, dict):
        for k in sorted(doc):
            rows.extend(flatten_csv(doc[k], f"{prefix}{k}." if prefix else f"{k}."))
    elif isinstance(doc, list):
        for i, item in enumerate(doc):
            rows.extend(flatten_csv(item, f"{prefix}{i}."))
    else:
        rows.append([prefix.rstrip("."), doc])
    return rows


def _weight_strs(w):
    return [rat_to_str(c) for c in w.omega]


def cmd_matrices(args) -> dict:
    ed = build_euler(args.type, args.rank)
    doc = ed.to_json()
    doc["structure_constants"] = [
        [x.to_json() for x in row] for row in ed.structure_matrix()
    ]
    expected = DET_TABLE.get((args.type, args.rank))
    if expected is not None and doc["detRplusS"] != expected:
        raise ConsistencyError(
            f"det(R+S) = {doc['detRplusS']} but the table says {expected}"
        )
    return doc


def cmd_mults(args) -> dict:
    rs = build_root_system(args.type, args.rank)
    lam = parse_weight(rs, args.weight, args.alpha)
    cache = ResultCache(args.cache_dir) if args.cache_dir else None
    key = {
        "kind": "mults",
        "type": args.type,
        "rank": args.rank,
        "lambda": [rat_to_str(c) for c in lam.omega],
    }
    if cache is not None:
        payload = cache.get(key)
        if payload is not None:
            return payload
    table = freudenthal(rs, lam)
    payload = table.to_json()
    payload["dimension"] = table.dimension()
    payload["weyl_dim"] = weyl_dim(rs, lam)
    if payload["dimension"] != payload["weyl_dim"]:
        raise ConsistencyError("dimension sum disagrees with the Weyl product")
    if cache is not None:
        cache.put(key, payload)
    return payload


def cmd_hc_image(args) -> dict:
    rs = build_root_system(args.type, args.rank)
    lam = parse_weight(rs, args.weight, args.alpha)
    img = hc_image(rs, lam, form=args.form)
    return {
        "type": args.type,
        "rank": args.rank,
        "lambda": _weight_strs(lam),
        "form": args.form,
        "flat": img.flat.to_json(),
    }


def cmd_product(args) -> dict:
    rs = build_root_system(args.type, args.rank)
    lam = parse_weight(rs, args.weight, args.alpha)
    mu = parse_weight(rs, args.weight2, args.alpha)
    decomp = grothendieck_product(rs, lam, mu)
    return {
        "type": args.type,
        "rank": args.rank,
        "lhs": _weight_strs(lam),
        "rhs": _weight_strs(mu),
        "decomposition": [
            {"nu": [rat_to_str(c) for c in key], "c": val}
            for key, val in sorted(decomp.items())
        ],
    }


def cmd_poly_express(args) -> dict:
    rs = build_root_system(args.type, args.rank)
    lam = parse_weight(rs, args.weight, args.alpha)
    poly = poly_express(rs, lam)
    if poly_evaluate(rs, poly) != hc_image(rs, lam).flat:
        raise ConsistencyError("polynomial substitution failed to reproduce the image")
    return {
        "type": args.type,
        "rank": args.rank,
        "lambda": _weight_strs(lam),
        "polynomial": poly_to_json(poly),
        "rendered": poly_to_str(poly),
    }


def cmd_pairing_gram(args) -> dict:
    ed = build_euler(args.type, args.rank)
    rs = ed.rs
    beta = parse_weight(rs, args.beta, alpha=True)
    height = int(beta.height())
    cutoff = max(args.height_cutoff, height) if args.exact_only else args.height_cutoff
    engine = PairingEngine(ed, height_cutoff=cutoff)
    cache = ResultCache(args.cache_dir) if args.cache_dir else None
    key = {
        "kind": "gram",
        "type": args.type,
        "rank": args.rank,
        "beta": [str(int(c)) for c in beta.alpha],
        "convention": engine.convention,
    }
    if cache is not None:
        payload = cache.get(key)
        if payload is not None:
            return payload
    data = engine.gram(beta)
    expected = kostant_partition_count(rs, beta)
    if data.rank != expected:
        raise ConsistencyError(
            f"Gram rank {data.rank} differs from the partition count {expected}"
        )
    payload = {"type": args.type, "rank": args.rank, **data.to_json()}
    if cache is not None:
        cache.put(key, payload)
    return payload


def cmd_central_element(args) -> dict:
    ed = build_euler(args.type, args.rank)
    rs = ed.rs
    lam = parse_weight(rs, args.weight, args.alpha)
    engine = PairingEngine(ed)
    z = build_z(ed, lam, engine=engine, form=args.form)
    L = simple_quotient(ed, lam, engine=engine)
    report = verify_central(ed, z, L)
    doc = {
        "type": args.type,
        "rank": args.rank,
        "lambda": _weight_strs(lam),
        "form": args.form,
        "element": z.to_json(),
        "hc_image_matches": hc_matches_z(ed, lam, z),
        "central_on_L_lambda": {
            "commutes": report["commutes"],
            "is_scalar": report["is_scalar"],
            "scalar_matches_prediction": report["matches"],
            "scalar": report["scalar"].to_json() if report["scalar"] is not None else None,
        },
    }
    if not (report["commutes"] and report["is_scalar"] and report["matches"]):
        raise ConsistencyError("central element failed verification on L(lambda)")
    return doc


def cmd_cache_check(args) -> dict:
    if not args.cache_dir:
        raise UsageError("cache-check requires --cache-dir or QGCENTER_CACHE")
    report = ResultCache(args.cache_dir).roundtrip_report()
    if not report["ok"]:
        raise CacheCorruption(f"corrupt cache entries: {report['corrupt']}")
    return report


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------

def _suite_dets(_args) -> list:
    checks = []
    for (tag, rank), expected in sorted(DET_TABLE.items()):
        ed = build_euler(tag, rank)
        det, kernel = ed.det_and_kernel("R_plus_S")
        checks.append(
            {
                "name": f"det(R+S) {tag}{rank}",
                "pass": det == expected and bool(kernel) == (expected == 0),
            }
        )
    return checks


def _suite_serre(args) -> list:
    ed = build_euler(args.type, args.rank)
    engine = PairingEngine(ed, height_cutoff=max(args.height_cutoff, 5))
    checks = []
    for i in range(1, args.rank + 1):
        for j in range(1, args.rank + 1):
            if i == j:
                continue
            height = (1 - ed.rs.cartan[i - 1][j - 1]) + 1
            if height > engine.height_cutoff:
                engine.height_cutoff = height
            checks.append(
                {
                    "name": f"serre {args.type}{args.rank} ({i},{j})",
                    "pass": engine.serre_in_radical(i, j),
                }
            )
    return checks


def _suite_gram(args) -> list:
    ed = build_euler(args.type, args.rank)
    engine = PairingEngine(ed, height_cutoff=args.height_cutoff)
    rs = ed.rs
    checks = []

    def betas(limit):
        coords = [0] * rs.rank
        out = []

        def rec(i, remaining):
            if i == rs.rank:
                if any(coords):
                    out.append(tuple(coords))
                return
            for c in range(remaining + 1):
                coords[i] = c
                rec(i + 1, remaining - c)
            coords[i] = 0

        rec(0, limit)
        return sorted(out)

    for alpha in betas(min(args.height_cutoff, 4)):
        beta = rs.weight_from_alpha(alpha)
        data = engine.gram(beta)
        checks.append(
            {
                "name": f"gram rank {args.type}{args.rank} beta={list(alpha)}",
                "pass": data.rank == kostant_partition_count(rs, beta),
            }
        )
    return checks


def _suite_hc(args) -> list:
    rs = build_root_system(args.type, args.rank)
    checks = []
    box = dominant_box(rs, Fraction(3))
    for lam in box:
        flat = hc_image(rs, lam).flat
        ok = invariance_witness(rs, flat) is None
        expansion = expand_in_orbit_sums(rs, flat)
        total = None
        for key, c in expansion.items():
            part = orbit_sum(rs, rs.weight_from_omega(key)).scale(c)
            total = part if total is None else total + part
        ok = ok and total == flat
        poly = poly_express(rs, lam)
        ok = ok and poly_evaluate(rs, poly) == flat
        checks.append(
            {"name": f"hc round-trips lambda={_weight_strs(lam)}", "pass": ok}
        )
    return checks


def _suite_central(args) -> list:
    ed = build_euler(args.type, args.rank)
    engine = PairingEngine(ed)
    rs = ed.rs
    lam = (
        parse_weight(rs, args.weight, args.alpha)
        if args.weight
        else rs.weight_from_omega([1] * rs.rank)
    )
    z = build_z(ed, lam, engine=engine, form=args.form)
    checks = [{"name": "torus part is the HC image", "pass": hc_matches_z(ed, lam, z)}]
    L = simple_quotient(ed, lam, engine=engine)
    rep = verify_central(ed, z, L)
    checks.append(
        {
            "name": "central and scalar on L(lambda)",
            "pass": rep["commutes"] and rep["is_scalar"] and rep["matches"],
        }
    )
    probes = default_probes(ed, z)
    out = verify_trace_identity(ed, z, probes, module=L, engine=engine)
    checks.append(
        {"name": f"trace identity on {len(probes)} probes", "pass": out["all_match"]}
    )
    checks.append({"name": "s2 twist on L(lambda)", "pass": check_s2_twist(L)})
    rel = relation_report(L)
    checks.append(
        {"name": "relations on L(lambda)", "pass": rel["x1"] and rel["x2"] and rel["x3"]}
    )
    return checks


SUITES = {
    "dets": _suite_dets,
    "serre": _suite_serre,
    "gram": _suite_gram,
    "hc": _suite_hc,
    "central": _suite_central,
}


def cmd_verify(args) -> dict:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    checks = []
    for name in names:
        checks.extend(SUITES[name](args))
    doc = {
        "suite": args.suite,
        "type": args.type,
        "rank": args.rank,
        "checks": checks,
        "status": "ok" if all(c["pass"] for c in checks) else "fail",
    }
    if doc["status"] != "ok":
        raise ConsistencyError(json.dumps(doc, sort_keys=True))
    return doc


COMMANDS = {
    "matrices": cmd_matrices,
    "mults": cmd_mults,
    "hc-image": cmd_hc_image,
    "product": cmd_product,
    "poly-express": cmd_poly_express,
    "pairing-gram": cmd_pairing_gram,
    "central-element": cmd_central_element,
    "verify": cmd_verify,
    "cache-check": cmd_cache_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgcenter",
        description="Exact computations around centres of two-parameter quantum groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_type=True):
        if needs_type:
            p.add_argument("--type", required=True, choices=sorted(VALID_RANKS))
            p.add_argument("--rank", required=True, type=int)
        p.add_argument("--format", default="json", choices=("json", "csv"))
        p.add_argument("--cache-dir", default=default_cache_dir())
        p.add_argument("--height-cutoff", type=int, default=5)
        p.add_argument("--alpha", action="store_true",
                       help="read weights in simple-root coordinates")
        p.add_argument("--exact-only", action="store_true",
                       help="force full exact elimination everywhere")
        p.add_argument("--form", default="weight", choices=("root", "weight"))

    p = sub.add_parser("matrices", help="structure matrices, determinants, kernels")
    common(p)
    p = sub.add_parser("mults", help="weight multiplicity table")
    common(p)
    p.add_argument("--weight", required=True)
    p = sub.add_parser("hc-image", help="Harish-Chandra image of the canonical central element")
    common(p)
    p.add_argument("--weight", required=True)
    p = sub.add_parser("product", help="Grothendieck-ring product decomposition")
    common(p)
    p.add_argument("--weight", required=True)
    p.add_argument("--weight2", required=True)
    p = sub.add_parser("poly-express", help="polynomial in the fundamental images")
    common(p)
    p.add_argument("--weight", required=True)
    p = sub.add_parser("pairing-gram", help="Gram data of the skew pairing on one degree")
    common(p)
    p.add_argument("--beta", required=True, help="degree in simple-root coordinates")
    p = sub.add_parser("central-element", help="build and verify a central element")
    common(p)
    p.add_argument("--weight", required=True)
    p.set_defaults(form="root")
    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    p.add_argument("--weight", default=None)
    p = sub.add_parser("cache-check", help="verify cache integrity")
    common(p, needs_type=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CacheCorruption as exc:
        print(f"cache corruption: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        record = {"status": "consistency-failure", "error": str(exc)}
        sys.stdout.write(json.dumps(record, sort_keys=True, indent=2) + "\n")
        return 1
    emit(doc, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
