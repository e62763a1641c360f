import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pffcert import arith
from pffcert.arith import Factorization, c_bound, check_primorial_bound, factor


def test_factor_known_values():
    assert factor(2**21 - 1).factors == ((7, 2), (127, 1), (337, 1))
    assert factor(1).factors == ()
    assert factor(2).factors == ((2, 1),)


def test_factor_13_12_roundtrip():
    n = 13**12 - 1
    f = factor(n)
    assert math.prod(p**e for p, e in f.factors) == n
    assert all(arith.is_prime(p) for p, _ in f.factors)


def test_factorization_invariant_enforced():
    with pytest.raises(AssertionError):
        Factorization(12, ((2, 1), (3, 1)))  # product is 6, not 12
    with pytest.raises(AssertionError):
        Factorization(12, ((3, 1), (2, 2)))  # primes not increasing


def test_multiplicative_functions():
    assert arith.radical(624) == 78
    assert arith.omega(624) == 3
    assert arith.W(624) == 8
    assert arith.W(1) == 1
    assert arith.phi(1) == 1
    assert arith.moebius(1) == 1
    assert arith.moebius(30) == -1
    assert arith.moebius(12) == 0
    assert arith.phi(624) == 192


def test_q_prime_set_for_9_16():
    # the reduced modulus of (9, 16) has W = 64
    val = (9**16 - 1) // ((9 - 1) * math.gcd(16, 8))
    f = factor(val)
    assert set(f.primes) == {2, 5, 17, 41, 193, 21523361}
    assert f.W == 64


@given(st.integers(min_value=1, max_value=10**6))
@settings(max_examples=120, deadline=None)
def test_radical_properties(n):
    r = arith.radical(n)
    assert n % r == 0
    assert arith.radical(r) == r
    assert arith.W(n) == arith.W(r)
    assert arith.omega(n) == arith.omega(r)


@given(st.integers(min_value=0, max_value=150), st.integers(min_value=0, max_value=150))
@settings(max_examples=60, deadline=None)
def test_factor_prime_product_roundtrip(i, j):
    ps = arith.primes_first(151)
    p, q = ps[i], ps[j]
    f = factor(p * q)
    assert set(f.primes) == {p, q}
    assert f.value == p * q


def test_mult_order():
    assert arith.mult_order(2, 7) == 3
    assert arith.mult_order(3, 7) == 6
    assert arith.mult_order(4, 45) == 6
    with pytest.raises(ValueError):
        arith.mult_order(6, 9)


def test_c_bound_examples():
    assert float(c_bound(1)) == 1.0
    # odd m: c_m < 2.9; in general c_m < 4.9 (exact comparisons)
    worst_odd = c_bound(3 * 5 * 7 * 11 * 13)
    worst_any = c_bound(2 * 3 * 5 * 7 * 11 * 13)
    assert worst_odd.less_than(Fraction(29, 10))
    assert worst_any.less_than(Fraction(49, 10))
    assert not worst_any.less_than(Fraction(48, 10))


@given(st.integers(min_value=1, max_value=10**6))
@settings(max_examples=200, deadline=None)
def test_w_bound_holds(m):
    assert c_bound(m).bound_holds(m)


def test_primorial_bounds():
    # the three numeric growth lemmas, plus the stated boundary fact
    assert check_primorial_bound(49, 1, 6)
    assert arith.primes_first(50)[49] == 229 > 2**6
    assert check_primorial_bound(52, 4, 25, exclude=3)
    assert check_primorial_bound(175, 3, 25, exclude=2)
    assert not check_primorial_bound(1, 1, 6)
    with pytest.raises(ValueError):
        check_primorial_bound(10, 7, 6)
