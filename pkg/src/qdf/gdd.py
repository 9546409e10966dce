"""Group divisible designs from relative difference families, for n = 3 (mod 6).

When 3 | n the field contains the order-8 subfield K, and exactly one
base block of the index-7 family equals K*.  Removing it leaves a family
whose quotient list avoids K* entirely and covers everything else exactly
7 times; its development, together with the spread of multiplicative
cosets of K*, is a cyclic simple group divisible design with block size
7, groop size 7 and index 7.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .blocks import Block, canonical_orbit_label
from .design import (
    Design,
    VerificationReport,
    develop,
    pair_coverage_counts,
)
from .errors import WrongResidueError
from .family import DifferenceFamily, delta
from .gf2n import GF2n


@dataclass(frozen=True)
class Spread:
    """Partition of F* into cosets of K*; with 0 added each coset is a
    3-dimensional subspace (the Desarguesian spread)."""

    ctx: GF2n
    groops: tuple[tuple[int, ...], ...]
    point_groop: np.ndarray  # element encoding -> groop index (, -1 for 0)

    def groop_of(self, point: int) -> int:
        return int(self.point_groop[point])


@dataclass(frozen=True)
class RelativeFamily:
    """Base blocks whose quotient list avoids the subgroup `forbidden`."""

    ctx: GF2n
    base_blocks: tuple[Block, ...]
    forbidden: frozenset[int]
    lambda_claim: int = 7


def _require_subfield(ctx: GF2n) -> list[int]:
    if ctx.n % 3 != 0:
        raise WrongResidueError(
            f"no order-8 subfield in GF(2^{ctx.n}); need n = 3 (mod 6)"
        )
    return [t for t in ctx.subfield(3) if t]


def desarguesian_spread(ctx: GF2n) -> Spread:
    """The (2^n - 1)/7 multiplicative cosets of K*, ordered by smallest
    member; membership lookups go through a point -> groop index table
    rather than any discrete-log computation."""
    kstar = _require_subfield(ctx)
    point_groop = np.full(ctx.order, -1, dtype=np.int32)
    groops = []
    mul = ctx.mul
    for e in range(1, ctx.order):
        if point_groop[e] >= 0:
            continue
        coset = tuple(sorted(mul(e, k) for k in kstar))
        idx = len(groops)
        for p in coset:
            point_groop[p] = idx
        groops.append(coset)
    return Spread(ctx=ctx, groops=tuple(groops), point_groop=point_groop)


def build_relative_family(fam: DifferenceFamily) -> RelativeFamily:
    """Drop the unique base block equal to K* from an index-7 family.

    Degenerate n = 3: the only base block is K* itself, leaving an empty
    relative family over a single groop; that is reported, not rejected.
    """
    ctx = fam.ctx
    if ctx.n % 6 != 3:
        raise WrongResidueError(
            f"relative family needs n = 3 (mod 6), got n={ctx.n}"
        )
    kstar = frozenset(_require_subfield(ctx))
    keep = tuple(b for b in fam.base_blocks if b.as_set() != kstar)
    if len(keep) != len(fam.base_blocks) - 1:
        raise ValueError("family does not contain exactly one subfield block")
    return RelativeFamily(ctx=ctx, base_blocks=keep, forbidden=kstar)


def verify_relative(fam: RelativeFamily) -> VerificationReport:
    """Brute-force quotient profile check: multiplicity 0 on G minus {1}
    and lambda everywhere outside G."""
    t0 = time.perf_counter()
    ctx, lam = fam.ctx, fam.lambda_claim
    counts = [0] * ctx.order
    for b in fam.base_blocks:
        for q in delta(ctx, b):
            counts[q] += 1
    offenders = []
    outside = []
    for t in range(2, ctx.order):
        if t in fam.forbidden:
            if counts[t] != 0:
                offenders.append((t, counts[t]))
        else:
            outside.append(counts[t])
            if counts[t] != lam:
                offenders.append((t, counts[t]))
    notes = ""
    if outside:
        mn, mx = min(outside), max(outside)
    else:
        mn = mx = lam
        notes = "degenerate: no points outside the forbidden subgroup"
    passed = not offenders and mn == lam and mx == lam
    return VerificationReport(
        passed=passed,
        pair_coverage_min=mn,
        pair_coverage_max=mx,
        offending_pairs=tuple(offenders[:10]),
        timing=time.perf_counter() - t0,
        notes=notes,
    )


def develop_and_verify_gdd(fam: RelativeFamily, threads: int = 1) -> VerificationReport:
    """Develop the relative family and exhaustively check the four GDD
    properties:

      a. every developed block meets every groop in at most one point --
         checked once per orbit representative, since scaling permutes
         the groops;
      b. every cross-groop point pair lies in exactly lambda blocks;
      c. every within-groop point pair lies in no block at all;
      d. simplicity: trivial stabilizers and pairwise distinct orbits.
    """
    t0 = time.perf_counter()
    ctx, lam = fam.ctx, fam.lambda_claim
    spread = desarguesian_spread(ctx)
    design: Design = develop(fam)
    npts = ctx.order - 1

    gid = spread.point_groop
    meet_ok = all(
        len({int(gid[e]) for e in o.rep.elements}) == 7 for o in design.orbits
    )

    counts = pair_coverage_counts(ctx, design.orbits, threads=threads)
    g_arr = gid[1:]  # groop index by 0-based point
    cross_min, cross_max = None, None
    within_bad = 0
    offenders = []
    off = 0
    for a in range(npts - 1):
        row = counts[off : off + npts - a - 1]
        off += npts - a - 1
        within = g_arr[a + 1 :] == g_arr[a]
        cross = row[~within]
        if cross.size:
            lo, hi = int(cross.min()), int(cross.max())
            cross_min = lo if cross_min is None else min(cross_min, lo)
            cross_max = hi if cross_max is None else max(cross_max, hi)
        bad_within = np.flatnonzero(within & (row != 0))
        within_bad += len(bad_within)
        if len(offenders) < 10:
            for b in bad_within[:10]:
                offenders.append(((a + 1, a + 2 + int(b)), int(row[b])))
            for b in np.flatnonzero(~within & (row != lam))[:10]:
                offenders.append(((a + 1, a + 2 + int(b)), int(row[b])))
                if len(offenders) >= 10:
                    break

    notes = ""
    if cross_min is None:
        cross_min = cross_max = lam
        notes = "degenerate: single groop, no cross-groop pairs"
    cross_ok = cross_min == lam and cross_max == lam
    within_ok = within_bad == 0

    if any(o.replication != 1 for o in design.orbits):
        simple_ok = False
    else:
        labels = {canonical_orbit_label(ctx, o.rep) for o in design.orbits}
        simple_ok = len(labels) == len(design.orbits)

    checks = {
        "block_groop_meet": meet_ok,
        "cross_pair_coverage": cross_ok,
        "within_pair_coverage": within_ok,
        "simple": simple_ok,
    }
    return VerificationReport(
        passed=all(checks.values()),
        pair_coverage_min=cross_min,
        pair_coverage_max=cross_max,
        offending_pairs=tuple(offenders[:10]),
        timing=time.perf_counter() - t0,
        checks=checks,
        notes=notes,
    )
