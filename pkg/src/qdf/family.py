"""Difference families of blocks and their quotient multiplicity structure.

The quotient list of a block B is the multiset of the 42 values b_i/b_j
over ordered pairs of distinct positions.  A family is a difference
family of index lambda when every unit except 1 occurs exactly lambda
times in the union of the quotient lists of its base blocks.

Two independent routes compute the multiplicity m(t):

  * multiplicity_profile: brute-force accumulation over every base block
    (the production verifier and the oracle);
  * equation_certificate: per-t solution counting of the 18 genuinely
    quadratic quotient equations plus the 24 degenerate ones, which
    predicts m(t) = 24 + 2*r(t) for the all-seeds family.

Keeping both routes alive catches transcription slips in either one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .blocks import SLOT_MASKS, Block, block_of, hexagon_partition
from .errors import DegenerateTError
from .gf2n import GF2n, QuadraticOutcome, poly_divmod, poly_gcd


@dataclass(frozen=True)
class DifferenceFamily:
    """Base blocks plus the claimed index; forbidden is empty for ordinary
    families and holds the avoided subgroup for relative ones."""

    ctx: GF2n
    base_blocks: tuple[Block, ...]
    lambda_claim: int
    forbidden: frozenset[int] = frozenset()


@dataclass(frozen=True)
class MultiplicityProfile:
    """Exact quotient multiplicities indexed by element encoding."""

    counts: np.ndarray
    order: int

    def count_of(self, t: int) -> int:
        return int(self.counts[t])

    def extremes(self) -> tuple[int, int]:
        """(min, max) of m(t) over the valid range t not in {0, 1}."""
        live = self.counts[2:]
        return int(live.min()), int(live.max())

    def is_constant(self, value: int) -> bool:
        mn, mx = self.extremes()
        return mn == value and mx == value

    def total(self) -> int:
        return int(self.counts.sum())


def delta(ctx: GF2n, b: Block) -> list[int]:
    """The 42 ordered-pair quotients b_i/b_j, i != j, as a multiset."""
    els = b.elements
    div = ctx.div
    out = []
    for i in range(7):
        ei = els[i]
        for j in range(7):
            if i != j:
                out.append(div(ei, els[j]))
    return out


def delta_table(ctx: GF2n, x: int):
    """7x7 quotient table of B_x in block order; diagonal entries are None.

    Entry (i, j) is b_i/b_j, e.g. (2, 1) = x, (2, 4) = x/(x+1) and
    (6, 1) = x^2 + x.  Flattening off-diagonal entries reproduces delta.
    """
    els = block_of(ctx, x).elements
    return [
        [ctx.div(els[i], els[j]) if i != j else None for j in range(7)]
        for i in range(7)
    ]


def multiplicity_profile(fam: DifferenceFamily) -> MultiplicityProfile:
    """Exact m(t) for every t, by direct accumulation over base blocks."""
    counts = [0] * fam.ctx.order
    for b in fam.base_blocks:
        for q in delta(fam.ctx, b):
            counts[q] += 1
    return MultiplicityProfile(np.asarray(counts, dtype=np.int64), fam.ctx.order)


# -- quotient equations -------------------------------------------------------

def _reduced_fraction(i: int, j: int) -> tuple[int, int]:
    """Slot quotient b_i/b_j as a reduced fraction of GF(2)[z] masks."""
    num, den = SLOT_MASKS[i - 1], SLOT_MASKS[j - 1]
    g = poly_gcd(num, den)
    return poly_divmod(num, g)[0], poly_divmod(den, g)[0]


def pair_equation(ctx: GF2n, i: int, j: int, t: int) -> tuple[int, int, int]:
    """Coefficients (a, b, c) of the cleared equation b_i(x) = t * b_j(x).

    Derived mechanically from the slot polynomials with common factors
    cancelled, so no hand-copied coefficient can go stale.  Each
    coefficient is num_bit XOR t*den_bit with bits in {0, 1}.
    """
    num, den = _reduced_fraction(i, j)

    def coeff(k: int) -> int:
        v = (num >> k) & 1
        if (den >> k) & 1:
            v ^= t
        return v

    return coeff(2), coeff(1), coeff(0)


def pair_solution_count(ctx: GF2n, i: int, j: int, t: int) -> int:
    """Number of x in the field with b_i(x)/b_j(x) = t (t not in {0, 1})."""
    a, b, c = pair_equation(ctx, i, j, t)
    if a == 0 and b == 0:
        # reduced slots are never equal for i != j, so c = 1 ^ t != 0
        return 0
    return ctx.solve_quadratic(a, b, c).count


# The 18 ordered pairs whose quotient equation is genuinely quadratic
# (nonzero x and x^2 coefficients), grouped so that within each match
# exactly one equation is solvable for every t.  Coefficient tags give
# the verbatim closed forms; 't1' stands for t+1.
_FORMS = {"1": lambda t: 1, "t": lambda t: t, "t1": lambda t: t ^ 1}

EQUATION_FORMS: dict[tuple[int, int], tuple[str, str, str]] = {
    (6, 1): ("1", "1", "t"),
    (7, 1): ("1", "1", "t1"),
    (1, 6): ("t", "t", "1"),
    (1, 7): ("t", "t", "t1"),
    (5, 2): ("1", "t", "1"),
    (3, 7): ("t1", "t", "t"),
    (7, 2): ("1", "t1", "1"),
    (2, 7): ("t", "t1", "t"),
    (4, 3): ("t", "1", "1"),
    (7, 3): ("t1", "1", "1"),
    (7, 4): ("1", "t1", "t1"),
    (4, 7): ("t", "t1", "t1"),
    (7, 5): ("t1", "1", "t1"),
    (2, 5): ("t", "1", "t"),
    (7, 6): ("t1", "t1", "1"),
    (6, 7): ("t1", "t1", "t"),
    (3, 4): ("1", "t", "t"),
    (5, 7): ("t1", "t", "t1"),
}

QUADRATIC_PAIRS = frozenset(EQUATION_FORMS)

MATCHED_PAIRS: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (
    ((6, 1), (7, 1)),
    ((1, 6), (1, 7)),
    ((5, 2), (3, 7)),
    ((7, 2), (2, 7)),
    ((4, 3), (7, 3)),
    ((7, 4), (4, 7)),
    ((7, 5), (2, 5)),
    ((7, 6), (6, 7)),
    ((3, 4), (5, 7)),
)

ALL_ORDERED_PAIRS = tuple((i, j) for i in range(1, 8) for j in range(1, 8) if i != j)

SINGLE_SOLUTION_PAIRS = tuple(p for p in ALL_ORDERED_PAIRS if p not in QUADRATIC_PAIRS)


@dataclass(frozen=True)
class EquationEntry:
    i: int
    j: int
    a: int
    b: int
    c: int
    count: int


@dataclass(frozen=True)
class EquationCertificate:
    """Solvability record of the 18 quadratic quotient equations at one t."""

    t: int
    equations: tuple[EquationEntry, ...]
    r: int = field(init=False)
    matching_ok: bool = field(init=False)

    def __post_init__(self) -> None:
        counts = {(e.i, e.j): e.count for e in self.equations}
        r = sum(1 for c in counts.values() if c == 2)
        ok = all(
            (counts[p] == 2) != (counts[q] == 2) for p, q in MATCHED_PAIRS
        )
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "matching_ok", ok)


def equation_certificate(ctx: GF2n, t: int) -> EquationCertificate:
    """Solve the 18 verbatim quadratic forms at t and record the outcome.

    Every equation here has a nonzero linear coefficient, so each count is
    0 or 2; r is the number of solvable ones and matching_ok says whether
    each of the 9 matches contains exactly one solvable equation.
    """
    if t in (0, 1):
        raise DegenerateTError(f"certificate requires t outside {{0, 1}}, got {t}")
    entries = []
    for (i, j), (fa, fb, fc) in EQUATION_FORMS.items():
        a, b, c = _FORMS[fa](t), _FORMS[fb](t), _FORMS[fc](t)
        out: QuadraticOutcome = ctx.solve_quadratic(a, b, c)
        entries.append(EquationEntry(i, j, a, b, c, out.count))
    return EquationCertificate(t, tuple(entries))


def predicted_multiplicity(ctx: GF2n, t: int) -> int:
    """m(t) for the all-seeds family via the certificate: 24 + 2*r(t)."""
    return 24 + 2 * equation_certificate(ctx, t).r


# -- family constructors ------------------------------------------------------

def build_family(ctx: GF2n, system: str = "min") -> DifferenceFamily:
    """One block per hexagon: a difference family of index 7.

    `system` picks the representative seed of each hexagon: "min" takes
    the canonical (smallest-encoding) vertex, "max" the largest.  The
    developed design does not depend on this choice.
    """
    if system == "min":
        seeds = (h.canonical_rep for h in hexagon_partition(ctx))
    elif system == "max":
        seeds = (max(h.vertices) for h in hexagon_partition(ctx))
    else:
        raise ValueError(f"unknown representative system {system!r}")
    blocks = tuple(block_of(ctx, x) for x in seeds)
    return DifferenceFamily(ctx, blocks, lambda_claim=7)


def full_family(ctx: GF2n) -> DifferenceFamily:
    """Every seed's block: a difference family of index 42."""
    blocks = tuple(block_of(ctx, x) for x in ctx.seeds())
    return DifferenceFamily(ctx, blocks, lambda_claim=42)
