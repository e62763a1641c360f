"""Cross-checks against an independent computer-algebra implementation."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor, gf_irreducible_p

from pffcert import arith, fpoly
from pffcert.fpoly import FPoly
from pffcert.gf import field_for_order


@given(st.integers(min_value=1, max_value=10**9))
@settings(max_examples=80, deadline=None)
def test_factor_matches_sympy(n):
    ours = dict(arith.factor(n).factors)
    assert ours == dict(factorint(n))


@given(st.integers(min_value=0, max_value=3**9 - 1), st.sampled_from([2, 3, 5, 7]))
@settings(max_examples=150, deadline=None)
def test_irreducibility_matches_sympy(code, p):
    coeffs = []
    c = code
    while c:
        coeffs.append(c % p)
        c //= p
    coeffs.append(1)  # monic
    if len(coeffs) < 2:
        return
    f = FPoly.make(field_for_order(p), coeffs)
    sym = list(reversed(coeffs))  # sympy wants high coefficients first
    assert fpoly.is_irreducible(f) == bool(gf_irreducible_p(sym, p, ZZ))


def test_xn_minus_1_factorizations_match_sympy():
    rng = random.Random(12)
    for p, n in [(2, 21), (3, 16), (5, 12), (7, 9), (13, 6), (11, 10)]:
        F = field_for_order(p)
        prof = fpoly.factor_xn_minus_1(F, n)
        sym_poly = [1] + [0] * (prof.n_star - 1) + [p - 1]
        _, sym_factors = gf_factor(sym_poly, p, ZZ)
        ours = sorted(tuple(reversed(f.coeffs)) for f in prof.all_factors)
        theirs = sorted(tuple(int(c) % p for c in f) for f, _ in sym_factors)
        assert ours == theirs


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_poly_divmod_roundtrip(data):
    q = data.draw(st.sampled_from([2, 3, 4, 5, 9]))
    F = field_for_order(q)
    a = FPoly.make(F, [data.draw(st.integers(0, q - 1)) for _ in range(8)])
    b = FPoly.make(F, [data.draw(st.integers(0, q - 1)) for _ in range(4)])
    if b.is_zero():
        return
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree
