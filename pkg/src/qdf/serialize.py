"""JSON/CSV formats for families, designs, spreads, reports and profiles.

All formats are byte-deterministic: fixed key order, lowercase hex
zero-padded to ceil(n/4) digits, two-space indentation, trailing newline.
Wall-clock timings are deliberately left out of serialized reports so
identical inputs always produce identical artifacts.
"""

from __future__ import annotations

import json

from .blocks import Block, block_of
from .design import Design, Orbit, VerificationReport
from .family import DifferenceFamily, EquationCertificate, MultiplicityProfile
from .gdd import Spread
from .gf2n import GF2n


def hex_width(n: int) -> int:
    return (n + 3) // 4


def element_hex(v: int, n: int) -> str:
    return format(int(v), f"0{hex_width(n)}x")


def _block_hex(elements, n: int) -> list[str]:
    return [element_hex(e, n) for e in elements]


def to_json_bytes(obj) -> bytes:
    return (json.dumps(obj, indent=2) + "\n").encode("ascii")


# -- blocks and hexagons --------------------------------------------------------

def block_to_dict(b: Block, n: int) -> dict:
    return {"elements": _block_hex(b.elements, n), "seed": element_hex(b.seed, n)}


def hexagon_to_list(h, n: int) -> list[str]:
    return _block_hex(h.vertices, n)


# -- difference families ------------------------------------------------------

def family_to_dict(fam: DifferenceFamily) -> dict:
    n = fam.ctx.n
    return {
        "n": n,
        "modulus": fam.ctx.modulus,
        "lambda": fam.lambda_claim,
        "blocks": [_block_hex(b.elements, n) for b in fam.base_blocks],
    }


def family_from_dict(d: dict) -> DifferenceFamily:
    ctx = GF2n(int(d["n"]), int(d["modulus"]))
    blocks = []
    for row in d["blocks"]:
        elements = tuple(int(s, 16) for s in row)
        if len(elements) != 7:
            raise ValueError("block rows must have exactly 7 elements")
        b = block_of(ctx, elements[1])  # slot 1 is the seed by construction
        if b.elements != elements:
            raise ValueError(f"block row {row} is not in canonical slot order")
        blocks.append(b)
    return DifferenceFamily(ctx, tuple(blocks), lambda_claim=int(d["lambda"]))


# -- designs and spreads --------------------------------------------------------

def _orbit_dict(o: Orbit, n: int) -> dict:
    return {
        "rep": _block_hex(o.rep.elements, n),
        "length": o.length,
        "replication": o.replication,
    }


def design_to_dict(d: Design) -> dict:
    n = d.ctx.n
    return {
        "n": n,
        "modulus": d.ctx.modulus,
        "v": d.v,
        "k": d.k,
        "lambda": d.lambda_claim,
        "orbits": [_orbit_dict(o, n) for o in d.orbits],
    }


def gdd_to_dict(spread: Spread, design: Design) -> dict:
    n = spread.ctx.n
    return {
        "n": n,
        "modulus": spread.ctx.modulus,
        "g": 3,
        "lambda": design.lambda_claim,
        "spread": [_block_hex(g, n) for g in spread.groops],
        "orbits": [_orbit_dict(o, n) for o in design.orbits],
    }


# -- reports, certificates, profiles --------------------------------------------

def report_to_dict(r: VerificationReport, n: int) -> dict:
    out = {
        "pass": r.passed,
        "pair_coverage_min": r.pair_coverage_min,
        "pair_coverage_max": r.pair_coverage_max,
        "offending_pairs": [
            {"pair": [element_hex(u, n), element_hex(v, n)], "count": c}
            for (u, v), c in r.offending_pairs
        ]
        if r.offending_pairs and isinstance(r.offending_pairs[0][0], tuple)
        else [
            {"t": element_hex(t, n), "count": c} for t, c in r.offending_pairs
        ],
    }
    if r.checks is not None:
        out["checks"] = r.checks
    if r.notes:
        out["notes"] = r.notes
    return out


def certificate_to_dict(cert: EquationCertificate, n: int) -> dict:
    return {
        "t": element_hex(cert.t, n),
        "r": cert.r,
        "matching_ok": cert.matching_ok,
        "solvable": [[e.i, e.j] for e in cert.equations if e.count == 2],
    }


def profile_to_csv(p: MultiplicityProfile, n: int) -> str:
    lines = ["t_hex,count"]
    for t in range(2, p.order):
        lines.append(f"{element_hex(t, n)},{p.count_of(t)}")
    return "\n".join(lines) + "\n"
