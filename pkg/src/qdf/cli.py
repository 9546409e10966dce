"""Command-line front end: construction, verification, certification, GDD
pipeline and format conversion.

Exit codes: 0 all requested checks passed; 1 a verification failed;
2 precondition violation (even degree, reducible modulus, bad residue,
missing --force, ...), reported as a one-line JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .design import develop, check_qanalog, check_simple, verify_2design
from .errors import QdfError
from .family import build_family, equation_certificate, multiplicity_profile
from .gdd import build_relative_family, desarguesian_spread, develop_and_verify_gdd, verify_relative
from .gf2n import GF2n
from .serialize import (
    certificate_to_dict,
    design_to_dict,
    family_from_dict,
    family_to_dict,
    gdd_to_dict,
    profile_to_csv,
    report_to_dict,
    to_json_bytes,
)

DEFAULT_N_CEILING = 13
HARD_N_CEILING = 25


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("QDF_THREADS", "1")))
    except ValueError:
        return 1


def _add_common(p: argparse.ArgumentParser, with_n: bool = True) -> None:
    if with_n:
        p.add_argument("--n", type=int, required=True, help="extension degree (odd)")
        p.add_argument(
            "--modulus",
            type=lambda s: int(s, 0),
            default=None,
            help="irreducible modulus bitmask (default: lexicographically smallest)",
        )
        p.add_argument(
            "--force",
            action="store_true",
            help=f"allow n > {DEFAULT_N_CEILING} (hard ceiling {HARD_N_CEILING})",
        )
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument(
        "--threads",
        type=int,
        default=_default_threads(),
        help="worker threads for pair counting (env QDF_THREADS)",
    )
    p.add_argument(
        "--seed-system",
        choices=["min", "max"],
        default="min",
        help="hexagon representative choice (developments are identical)",
    )


def _make_ctx(args) -> GF2n:
    n = args.n
    if n > HARD_N_CEILING:
        raise QdfError(f"n={n} exceeds the supported ceiling {HARD_N_CEILING}")
    if n > DEFAULT_N_CEILING and not args.force:
        raise QdfError(
            f"n={n} exceeds the default ceiling {DEFAULT_N_CEILING}; pass --force"
        )
    if n > DEFAULT_N_CEILING:
        table_mb = (3 * 4 * (1 << n)) / 2**20
        pairs_mb = (4 * ((1 << n) - 1) * ((1 << n) - 2) / 2) / 2**20
        print(
            f"warning: n={n} is desk-scale-plus; expect ~{table_mb:.0f} MiB of "
            f"field tables and ~{pairs_mb:.0f} MiB for exhaustive pair counts",
            file=sys.stderr,
        )
    return GF2n(n, args.modulus)


def _emit(args, data: bytes) -> None:
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode("ascii"))


def _cmd_construct(args) -> int:
    ctx = _make_ctx(args)
    fam = build_family(ctx, system=args.seed_system)
    ok = multiplicity_profile(fam).is_constant(fam.lambda_claim)
    _emit(args, to_json_bytes(family_to_dict(fam)))
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    ctx = _make_ctx(args)
    fam = build_family(ctx, system=args.seed_system)
    profile_ok = multiplicity_profile(fam).is_constant(fam.lambda_claim)
    design = develop(fam)
    report = verify_2design(design, threads=args.threads)
    out = {
        "n": ctx.n,
        "modulus": ctx.modulus,
        "v": design.v,
        "k": design.k,
        "lambda": design.lambda_claim,
        "blocks_counted": design.block_count(),
        "profile_ok": profile_ok,
        "qanalog": check_qanalog(design),
        "simple": check_simple(design),
    }
    out.update(report_to_dict(report, ctx.n))
    _emit(args, to_json_bytes(out))
    print(f"verify n={ctx.n}: {report.timing:.2f}s", file=sys.stderr)
    return 0 if (report.passed and profile_ok and out["qanalog"]) else 1


def _cmd_certify(args) -> int:
    ctx = _make_ctx(args)
    certs = [equation_certificate(ctx, t) for t in ctx.seeds()]
    ok = all(c.r == 9 and c.matching_ok for c in certs)
    out = {
        "n": ctx.n,
        "modulus": ctx.modulus,
        "r_min": min(c.r for c in certs),
        "r_max": max(c.r for c in certs),
        "all_matched": all(c.matching_ok for c in certs),
        "certificates": [certificate_to_dict(c, ctx.n) for c in certs],
    }
    _emit(args, to_json_bytes(out))
    return 0 if ok else 1


def _cmd_gdd(args) -> int:
    ctx = _make_ctx(args)
    fam = build_family(ctx, system=args.seed_system)
    relative = build_relative_family(fam)
    rel_report = verify_relative(relative)
    gdd_report = develop_and_verify_gdd(relative, threads=args.threads)
    spread = desarguesian_spread(ctx)
    design = develop(relative)
    out = gdd_to_dict(spread, design)
    out["relative_profile"] = report_to_dict(rel_report, ctx.n)
    out["report"] = report_to_dict(gdd_report, ctx.n)
    _emit(args, to_json_bytes(out))
    print(f"gdd n={ctx.n}: {gdd_report.timing:.2f}s", file=sys.stderr)
    return 0 if (rel_report.passed and gdd_report.passed) else 1


def _cmd_export(args) -> int:
    with open(args.input, "r", encoding="ascii") as fh:
        data = json.load(fh)
    if "blocks" in data:
        fam = family_from_dict(data)
        if args.format == "csv":
            _emit(args, profile_to_csv(multiplicity_profile(fam), fam.ctx.n).encode("ascii"))
        else:
            _emit(args, to_json_bytes(family_to_dict(fam)))
        return 0
    if "orbits" in data:
        if args.format == "csv":
            raise QdfError("designs have no CSV form; use --format json")
        _emit(args, to_json_bytes(data))
        return 0
    raise QdfError("unrecognized input file: expected a family or design JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdf",
        description="Build and exhaustively verify difference families, cyclic "
        "2-designs and group divisible designs over GF(2^n), n odd.",
    )
    parser.add_argument("--version", action="version", version=f"qdf {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build the index-7 family and write it as JSON")
    _add_common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="develop the family and exhaustively pair-count")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("certify", help="per-t solvability certificates for all t")
    _add_common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("gdd", help="relative family, spread and GDD checks (n = 3 mod 6)")
    _add_common(p)
    p.set_defaults(func=_cmd_gdd)

    p = sub.add_parser("export", help="convert stored families/designs between formats")
    p.add_argument("input", help="family or design JSON file")
    _add_common(p, with_n=False)
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QdfError as exc:
        err = {"error": type(exc).__name__.removesuffix("Error"), "message": str(exc)}
        print(json.dumps(err), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
