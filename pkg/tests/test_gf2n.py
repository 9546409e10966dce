"""Field arithmetic tests against independent schoolbook oracles."""

import random

import numpy as np
import pytest

from qdf import (
    AllZeroCoefficientsError,
    EvenDegreeError,
    GF2n,
    NotADivisorError,
    QdfError,
    ReduciblePolynomialError,
    ZeroInverseError,
    is_irreducible,
    make_field,
    smallest_irreducible,
)
from oracles import (
    brute_inverse,
    cached_field,
    schoolbook_mul,
    smallest_irreducible_by_products,
    trace_by_power_sum,
)

# Frozen via the product-enumeration oracle below (cross-checked for
# n <= 13) and an external factorization table.
FROZEN_MODULI = {
    3: 0b1011,
    5: 0b100101,
    7: 0b10000011,
    9: 0b1000000011,
    11: 0b100000000101,
    13: 0b10000000011011,
    15: 0b1000000000000011,
}


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13, 15])
def test_default_modulus_is_frozen_value(n):
    assert cached_field(n).modulus == FROZEN_MODULI[n]


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13])
def test_default_modulus_matches_product_oracle(n):
    assert smallest_irreducible(n) == smallest_irreducible_by_products(n)


def test_even_degree_rejected():
    with pytest.raises(EvenDegreeError):
        make_field(2)
    with pytest.raises(EvenDegreeError):
        make_field(4)
    with pytest.raises(QdfError):
        make_field(1)


def test_supplied_modulus_validated():
    # z^3 + z^2 + z + 1 has the root 1
    with pytest.raises(ReduciblePolynomialError):
        make_field(3, 0b1111)
    with pytest.raises(QdfError):
        make_field(3, 0b10011)  # degree 4
    assert make_field(3, 0b1011).modulus == 0b1011
    # z^5 + z^3 + 1, a non-default irreducible choice
    f = make_field(5, 0b101001)
    assert f.modulus == 0b101001
    assert all(f.mul(a, f.inv(a)) == 1 for a in range(1, 32))


def test_is_irreducible_small_cases():
    assert is_irreducible(0b10)  # z
    assert is_irreducible(0b11)  # z + 1
    assert is_irreducible(0b111)  # z^2 + z + 1
    assert not is_irreducible(0b110)
    assert not is_irreducible(0b1111)
    assert not is_irreducible(1)
    assert not is_irreducible(0)


def test_add_is_xor():
    f = cached_field(3)
    assert f.add(0b010, 0b011) == 0b001
    for a in range(8):
        assert f.add(a, a) == 0
        assert f.add(a, 0) == a


def test_mul_examples():
    f = cached_field(3)
    assert f.mul(0b010, 0b100) == 0b011  # alpha * alpha^2 = alpha + 1
    for a in range(8):
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0


@pytest.mark.parametrize("n", [3, 5, 7])
def test_mul_matches_schoolbook_exhaustive(n):
    f = cached_field(n)
    for a in range(f.order):
        for b in range(f.order):
            assert f.mul(a, b) == schoolbook_mul(a, b, n, f.modulus)


def test_inv_examples():
    f = cached_field(3)
    assert f.inv(1) == 1
    assert f.inv(0b010) == 0b101 == brute_inverse(0b010, 3, f.modulus)
    with pytest.raises(ZeroInverseError):
        f.inv(0)
    with pytest.raises(ZeroInverseError):
        f.div(3, 0)


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_inv_exhaustive(n):
    f = cached_field(n)
    for a in range(1, f.order):
        assert f.mul(a, f.inv(a)) == 1
        assert f.div(f.mul(a, 5), a) == 5


@pytest.mark.parametrize("n", [3, 5, 7])
def test_field_axioms_exhaustive(n):
    f = cached_field(n)
    q = f.order
    table = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            table[a, b] = f.mul(a, b)
    assert np.array_equal(table, table.T)  # commutativity
    idx = np.arange(q)
    # associativity over all triples
    ab = table[idx[:, None, None], idx[None, :, None]]
    bc = table[idx[None, :, None], idx[None, None, :]]
    assert np.array_equal(table[ab, idx[None, None, :]], table[idx[:, None, None], bc])
    # distributivity over all triples: a*(b+c) == a*b + a*c
    bxc = idx[None, :, None] ^ idx[None, None, :]
    assert np.array_equal(
        table[idx[:, None, None], bxc],
        table[idx[:, None, None], idx[None, :, None]]
        ^ table[idx[:, None, None], idx[None, None, :]],
    )
    # inverses exist and are unique
    for a in range(1, q):
        assert sorted(table[a, 1:]) == list(range(1, q))  # a* permutes units
        assert table[a, f.inv(a)] == 1


def test_trace_examples():
    for n in (3, 5, 7, 9, 11, 13):
        assert cached_field(n).trace(1) == 1
        assert cached_field(n).trace(0) == 0
    assert cached_field(3).trace(0b010) == 0  # alpha + alpha^2 + alpha^4 = 0


@pytest.mark.parametrize("n", [3, 5, 9])
def test_trace_matches_power_sum_oracle(n):
    f = cached_field(n)
    for x in range(f.order):
        assert f.trace(x) == trace_by_power_sum(x, n, f.modulus)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13])
def test_trace_identities_exhaustive(n):
    f = cached_field(n)
    q = f.order
    tr = np.asarray([f.trace(x) for x in range(q)], dtype=np.uint8)
    xs = np.arange(q)
    # additivity over all pairs, in row chunks
    for lo in range(0, q, 1024):
        rows = xs[lo : lo + 1024, None]
        assert np.array_equal(tr[rows ^ xs[None, :]], tr[rows] ^ tr[xs[None, :]])
    # Frobenius invariance
    sq = np.asarray([f.sqr(x) for x in range(q)])
    assert np.array_equal(tr[sq], tr)
    assert int(tr[1]) == 1


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13])
def test_half_trace_identity_exhaustive(n):
    f = cached_field(n)
    for u in range(f.order):
        if f.trace(u) == 0:
            h = f.half_trace(u)
            assert f.sqr(h) ^ h == u


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13])
def test_sqrt_roundtrip_exhaustive(n):
    f = cached_field(n)
    for x in range(f.order):
        assert f.sqr(f.sqrt(x)) == x
        assert f.sqrt(f.sqr(x)) == x


def test_solve_quadratic_examples():
    f = cached_field(5)
    out = f.solve_quadratic(1, 1, 0)
    assert out.count == 2 and out.roots == (0, 1)
    for n in (3, 5, 7, 9, 11, 13):
        assert cached_field(n).solve_quadratic(1, 1, 1).count == 0
    # b = 0: unique square root
    for c in range(f.order):
        out = f.solve_quadratic(1, 0, c)
        assert out.count == 1 and f.sqr(out.roots[0]) == c
    # degenerate linear case
    out = f.solve_quadratic(0, 7, 12)
    assert out.count == 1 and out.roots == (f.div(12, 7),)
    with pytest.raises(AllZeroCoefficientsError):
        f.solve_quadratic(0, 0, 0)
    assert f.solve_quadratic(0, 0, 9).count == 0


def _check_solution(f, a, b, c, out):
    for x in out.roots:
        assert f.mul(a, f.sqr(x)) ^ f.mul(b, x) ^ c == 0
    assert len(set(out.roots)) == out.count


@pytest.mark.parametrize("n", [3, 5])
def test_solve_quadratic_exhaustive(n):
    f = cached_field(n)
    q = f.order
    for a in range(1, q):
        for b in range(1, q):
            for c in range(q):
                out = f.solve_quadratic(a, b, c)
                want = 0 if f.trace(f.div(f.mul(a, c), f.sqr(b))) else 2
                assert out.count == want
                _check_solution(f, a, b, c, out)


@pytest.mark.parametrize("n", [11, 13])
def test_solve_quadratic_randomized(n):
    f = cached_field(n)
    rng = random.Random(20_250_811 + n)
    q = f.order
    for _ in range(20_000):
        a, b, c = rng.randrange(1, q), rng.randrange(1, q), rng.randrange(q)
        out = f.solve_quadratic(a, b, c)
        assert out.count == (0 if f.trace(f.div(f.mul(a, c), f.sqr(b))) else 2)
        _check_solution(f, a, b, c, out)


def test_subfield_prime_field():
    assert cached_field(9).subfield(1) == [0, 1]


def test_subfield_order_8_inside_n9():
    f = cached_field(9)
    sub = f.subfield(3)
    assert len(sub) == 8
    # independent check: fixed points of three schoolbook squarings
    for x in range(f.order):
        cur = x
        for _ in range(3):
            cur = schoolbook_mul(cur, cur, 9, f.modulus)
        assert (cur == x) == (x in sub)
    subset = set(sub)
    assert all(a ^ b in subset for a in sub for b in sub)
    assert all(f.mul(a, b) in subset for a in sub for b in sub)


def test_subfield_rejects_non_divisor():
    with pytest.raises(NotADivisorError):
        cached_field(5).subfield(3)
    with pytest.raises(NotADivisorError):
        cached_field(9).subfield(0)


def test_subfield_sizes_n15():
    f = cached_field(15)
    assert [len(f.subfield(d)) for d in (1, 3, 5, 15)] == [2, 8, 32, 1 << 15]


def test_element_ranges():
    f = cached_field(3)
    assert list(f.elements()) == list(range(8))
    assert list(f.nonzero_elements()) == list(range(1, 8))
    assert list(f.seeds()) == list(range(2, 8))


def test_field_equality_and_repr():
    assert cached_field(5) == GF2n(5) and hash(cached_field(5)) == hash(GF2n(5))
    assert cached_field(5) != GF2n(5, 0b101001)
    assert "GF2n" in repr(cached_field(5))
