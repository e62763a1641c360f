"""Exact characters, Gauss and Kloosterman sums, and the character-sum count.

Everything runs on the small-field engine (discrete logs plus trace tables)
and carries values as double-precision complex numbers; sums have at most a
few thousand unit-magnitude terms, so the 1e-9 relative tolerance of
ComplexVal is comfortable.  This module is the independent oracle for the
counting function N(m, g, h): it never consults element orders directly.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import arith
from .errors import NotADivisor
from .fpoly import FPoly
from .gf import Element
from .smallfield import SmallFieldEngine, engine_for

TOL = 1e-9


@dataclass(frozen=True)
class ComplexVal:
    re: float
    im: float
    tol: float = TOL

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def abs(self) -> float:
        return abs(self.value)

    def as_integer(self) -> int:
        scale = max(1.0, abs(self.re))
        if abs(self.im) > self.tol * scale:
            raise ValueError(f"imaginary part {self.im} too large")
        r = round(self.re)
        if abs(self.re - r) > self.tol * scale:
            raise ValueError(f"real part {self.re} is not near an integer")
        return int(r)

    @staticmethod
    def of(z: complex) -> "ComplexVal":
        return ComplexVal(z.real, z.imag)


@dataclass(frozen=True)
class MulChar:
    """Multiplicative character eta(gamma^j) = exp(2 pi i k j / (q^n - 1))."""

    engine: SmallFieldEngine
    k: int

    @property
    def order(self) -> int:
        N = self.engine.N
        return N // math.gcd(self.k, N)

    @property
    def is_trivial(self) -> bool:
        return self.k % self.engine.N == 0

    def conj(self) -> "MulChar":
        return MulChar(self.engine, (-self.k) % self.engine.N)

    def __call__(self, x: Element | int) -> complex:
        idx = x if isinstance(x, int) else self.engine.index_of(x)
        if idx == 0:
            raise ValueError("multiplicative characters are undefined at 0")
        j = int(self.engine.log[idx])
        return cmath.exp(2j * cmath.pi * self.k * j / self.engine.N)

    def values(self) -> np.ndarray:
        """eta on all of E, with 0 placed at index 0 (so sums over E* work)."""
        N = self.engine.N
        out = np.zeros(self.engine.size, dtype=complex)
        logs = self.engine.log[1:]
        out[1:] = np.exp(2j * np.pi * self.k * (logs % N) / N)
        return out


def characters_of_order(engine: SmallFieldEngine, d: int) -> list[MulChar]:
    """All phi(d) characters of exact order d (d must divide q^n - 1)."""
    N = engine.N
    if d < 1 or N % d:
        raise NotADivisor(f"{d} does not divide q^n - 1 = {N}")
    step = N // d
    return [MulChar(engine, step * a) for a in range(d) if math.gcd(a, d) == 1]


def all_characters(engine: SmallFieldEngine) -> list[MulChar]:
    return [MulChar(engine, k) for k in range(engine.N)]


# ---------------------------------------------------------------------------
# additive characters
# ---------------------------------------------------------------------------


def _proot_powers(p: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(p) / p)


def canonical_add_char(w: Element) -> ComplexVal:
    """chi(w) = exp(2 pi i AbsTrace(w) / p)."""
    p = w.tower.p
    return ComplexVal.of(cmath.exp(2j * cmath.pi * w.abs_trace() / p))


def _chi_values(engine: SmallFieldEngine) -> np.ndarray:
    return _proot_powers(engine.p)[engine.abs_trace % engine.p]


def _all_monic_divisors(engine: SmallFieldEngine) -> list[FPoly]:
    """Monic divisors of x^n - 1, sorted by (degree, coefficients)."""
    tower = engine.tower
    profile = tower.xn_profile()
    pb = tower.n // profile.n_star
    divs = [FPoly.one(tower.F)]
    for f in profile.all_factors:
        divs = [d * _pow_poly(f, e) for d in divs for e in range(pb + 1)]
    return sorted(divs, key=FPoly.sort_key)


def _pow_poly(f: FPoly, e: int) -> FPoly:
    out = FPoly.one(f.field)
    for _ in range(e):
        out = out * f
    return out


@functools.lru_cache(maxsize=32)
def _f_order_table(q: int, n: int) -> tuple[tuple[FPoly, ...], np.ndarray]:
    """For each delta index, the index into the sorted divisor list of the
    F-order of chi_delta (minimal monic D | x^n - 1 with chi(delta D^sigma(.))
    trivial)."""
    engine = engine_for(q, n)
    tower = engine.tower
    divisors = tuple(_all_monic_divisors(engine))
    size = engine.size
    order_of = np.full(size, -1, dtype=np.int64)
    # triviality of w -> AbsTr(delta D^sigma(w)) is only GF(p)-linear in w,
    # so it must be checked on a full GF(p)-basis of E
    basis = [
        tower.element([0] * i + [tower.p**j])
        for i in range(tower.n)
        for j in range(tower.a)
    ]
    from .fpoly import sigma_eval

    for di, D in enumerate(divisors):
        # delta qualifies iff AbsTr(delta * D^sigma(e_i)) = 0 for every basis e_i
        mask = np.ones(size, dtype=bool)
        for b in basis:
            v = sigma_eval(D, b)
            vi = engine.index_of(v)
            if vi == 0:
                continue
            # AbsTr(delta * v) over all delta
            tr = np.zeros(size, dtype=np.int64)
            logs = engine.log[1:]
            prod_idx = engine.exp[(logs + int(engine.log[vi])) % engine.N]
            tr[1:] = engine.abs_trace[prod_idx]
            mask &= tr % engine.p == 0
        newly = mask & (order_of < 0)
        order_of[newly] = di
    assert (order_of >= 0).all()
    return divisors, order_of


def add_char_f_order(delta: Element) -> FPoly:
    """F-order of chi_delta; D = 1 exactly for delta = 0."""
    tower = delta.tower
    engine = engine_for(tower.q, tower.n)
    divisors, order_of = _f_order_table(tower.q, tower.n)
    return divisors[int(order_of[engine.index_of(delta)])]


def delta_set(engine: SmallFieldEngine, D: FPoly) -> np.ndarray:
    """Indices of Delta_D = {delta : chi_delta has F-order D}."""
    divisors, order_of = _f_order_table(engine.q, engine.n)
    di = divisors.index(D.monic())
    return np.nonzero(order_of == di)[0]


def poly_phi(engine: SmallFieldEngine, D: FPoly) -> int:
    """Euler function on F[x]: Phi(D) = |D| prod over P | D of (1 - |P|^-1)."""
    q = engine.q
    out = 1
    rest = D.monic()
    for P in engine.tower.xn_profile().all_factors:
        e = 0
        while P.divides(rest):
            rest = rest // P
            e += 1
        if e:
            d = P.degree
            out *= q ** (e * d) - q ** ((e - 1) * d)
    assert rest.is_one(), "D must divide x^n - 1"
    return out


def poly_moebius(engine: SmallFieldEngine, D: FPoly) -> int:
    cnt = 0
    rest = D.monic()
    for P in engine.tower.xn_profile().all_factors:
        e = 0
        while P.divides(rest):
            rest = rest // P
            e += 1
        if e > 1:
            return 0
        cnt += e
    assert rest.is_one()
    return -1 if cnt % 2 else 1


def squarefree_poly_divisors(engine: SmallFieldEngine, g: FPoly) -> list[FPoly]:
    divs = [FPoly.one(engine.tower.F)]
    for P in engine.tower.xn_profile().all_factors:
        if P.divides(g):
            divs = divs + [d * P for d in divs]
    return sorted(divs, key=FPoly.sort_key)


# ---------------------------------------------------------------------------
# Gauss and Kloosterman sums
# ---------------------------------------------------------------------------


def gauss(eta: MulChar) -> ComplexVal:
    engine = eta.engine
    chi = _chi_values(engine)
    vals = eta.values()
    return ComplexVal.of(complex((chi * vals).sum()))


def kloosterman(alpha: Element | int, beta: Element | int, eta: MulChar) -> ComplexVal:
    """K(alpha, beta; eta) = sum over zeta in E* of chi(alpha zeta + beta/zeta) eta(zeta)."""
    engine = eta.engine
    ai = alpha if isinstance(alpha, int) else engine.index_of(alpha)
    bi = beta if isinstance(beta, int) else engine.index_of(beta)
    N = engine.N
    logs = engine.log[1:]
    tr = np.zeros(engine.size - 1, dtype=np.int64)
    if ai:
        tr += engine.abs_trace[engine.exp[(logs + int(engine.log[ai])) % N]]
    if bi:
        tr += engine.abs_trace[engine.exp[((-logs) % N + int(engine.log[bi])) % N]]
    chi = _proot_powers(engine.p)[tr % engine.p]
    vals = eta.values()[1:]
    return ComplexVal.of(complex((chi * vals).sum()))


# ---------------------------------------------------------------------------
# the character-sum expression for N(m, g, h)
# ---------------------------------------------------------------------------


def _theta(m: int) -> Fraction:
    return Fraction(arith.phi(arith.radical(m)), arith.radical(m))


def _Theta(engine: SmallFieldEngine, g: FPoly) -> Fraction:
    rad = FPoly.one(engine.tower.F)
    for P in engine.tower.xn_profile().all_factors:
        if P.divides(g):
            rad = rad * P
    return Fraction(poly_phi(engine, rad), engine.q**rad.degree)


def _ramanujan(d: int, j: int) -> int:
    """Sum of e^(2 pi i a j / d) over a coprime to d, exactly."""
    g = math.gcd(j % d if d > 1 else 0, d) if d > 1 else 1
    if d == 1:
        return 1
    dg = d // g
    mu = arith.moebius(dg)
    if mu == 0:
        return 0
    return mu * arith.phi(d) // arith.phi(dg)


def _mult_indicator_values(engine: SmallFieldEngine, m: int) -> np.ndarray:
    """theta(m) * integral over d | m of eta_d(w), exactly, for all w in E*."""
    m0 = arith.radical(math.gcd(m, engine.N)) if m > 1 else 1
    if engine.N % m:
        raise NotADivisor(f"{m} does not divide q^n - 1")
    logs = engine.log[1:]
    theta = _theta(m) if m > 1 else Fraction(1)
    vals = np.zeros(engine.size - 1, dtype=np.float64)
    for d in arith.squarefree_divisors(m0):
        w = Fraction(arith.moebius(d), arith.phi(d))
        cd = np.array([_ramanujan(d, int(j) % d) for j in range(d)], dtype=np.float64)
        vals += float(w) * cd[logs % d]
    return float(theta) * vals


def _add_indicator_values(engine: SmallFieldEngine, g: FPoly) -> np.ndarray:
    """Theta(g) * integral over D | g of chi_{delta_D}(w), for all w (complex)."""
    chi = _chi_values(engine)
    N = engine.N
    logs = engine.log[1:]
    out = np.zeros(engine.size, dtype=complex)
    Theta = _Theta(engine, g)
    for D in squarefree_poly_divisors(engine, g):
        w = Fraction(poly_moebius(engine, D), poly_phi(engine, D))
        S = np.zeros(engine.size, dtype=complex)
        for di in delta_set(engine, D):
            if di == 0:
                S += 1.0
                continue
            prod = engine.exp[(logs + int(engine.log[di])) % N]
            S[1:] += chi[prod]
            S[0] += 1.0  # chi(delta * 0) = 1
        out += float(w) * S
    return float(Theta) * out


def N_formula(q: int, n: int, m: int, g: FPoly, h: FPoly, method: str = "grouped") -> ComplexVal:
    """Character-sum evaluation of N(m, g, h).

    `grouped` multiplies the three characteristic functions pointwise over
    E* (the defining expansion); `triple` assembles the same value from
    explicit generalized Kloosterman sums, one per character triple, and is
    only meant for very small inputs.
    """
    engine = engine_for(q, n)
    xn1 = FPoly.x_pow_n_minus_1(engine.tower.F, n)
    for e in (g, h):
        if e.is_zero() or not (xn1 % e).is_zero():
            raise NotADivisor(f"{e} does not divide x^{n} - 1")
    if method == "triple":
        return _N_formula_triple(engine, m, g, h)
    mult = _mult_indicator_values(engine, m)
    vg = _add_indicator_values(engine, g)[1:]
    vh = _add_indicator_values(engine, h)[engine.inv_idx[1:]]
    return ComplexVal.of(complex((mult * vg * vh).sum()))


def _N_formula_triple(engine: SmallFieldEngine, m: int, g: FPoly, h: FPoly) -> ComplexVal:
    m0 = arith.radical(math.gcd(m, engine.N)) if m > 1 else 1
    theta = _theta(m) if m > 1 else Fraction(1)
    total = 0j
    for d in arith.squarefree_divisors(m0):
        wd = Fraction(arith.moebius(d), arith.phi(d))
        for eta in characters_of_order(engine, d):
            for D1 in squarefree_poly_divisors(engine, g):
                w1 = Fraction(poly_moebius(engine, D1), poly_phi(engine, D1))
                for d1 in delta_set(engine, D1):
                    for D2 in squarefree_poly_divisors(engine, h):
                        w2 = Fraction(poly_moebius(engine, D2), poly_phi(engine, D2))
                        for d2 in delta_set(engine, D2):
                            K = kloosterman(int(d1), int(d2), eta)
                            total += float(wd * w1 * w2) * K.value
    scale = float(theta * _Theta(engine, g) * _Theta(engine, h))
    return ComplexVal.of(scale * total)


def N_formula_expanded(q: int, n: int, m: int, g: FPoly, h: FPoly) -> ComplexVal:
    """The rearranged form with the explicit epsilon term.

    N = theta Theta Theta ( q^n + eps + S_dg + S_dh + S_gh + S_dgh ) where
    the S blocks exclude the trivial character in the marked coordinates and
    eps is -1 for g = h = 1, +1 for g != 1 != h, 0 otherwise.
    """
    engine = engine_for(q, n)
    m0 = arith.radical(math.gcd(m, engine.N)) if m > 1 else 1
    g_one = _is_trivial_poly(engine, g)
    h_one = _is_trivial_poly(engine, h)
    eps = -1 if (g_one and h_one) else (1 if (not g_one and not h_one) else 0)

    def mult_weights(nontrivial):
        for d in arith.squarefree_divisors(m0):
            if nontrivial and d == 1:
                continue
            wd = Fraction(arith.moebius(d), arith.phi(d))
            for eta in characters_of_order(engine, d):
                yield wd, eta

    def add_weights(e: FPoly, nontrivial):
        for D in squarefree_poly_divisors(engine, e):
            if nontrivial and D.is_one():
                continue
            w = Fraction(poly_moebius(engine, D), poly_phi(engine, D))
            for di in delta_set(engine, D):
                yield w, int(di)

    total = complex(engine.q**engine.n + eps)
    # d != 1, D1 != 1 (Gauss block on g)
    for wd, eta in mult_weights(True):
        Gv = gauss(eta).value
        s = sum(float(w1) * eta.conj()(d1) for w1, d1 in add_weights(g, True))
        total += float(wd) * s * Gv
    # d != 1, D2 != 1 (conjugate Gauss block on h)
    for wd, eta in mult_weights(True):
        Gv = gauss(eta.conj()).value
        s = sum(float(w2) * eta(d2) for w2, d2 in add_weights(h, True))
        total += float(wd) * s * Gv
    # d = 1, D1 != 1, D2 != 1 (plain Kloosterman block)
    eta1 = MulChar(engine, 0)
    for w1, d1 in add_weights(g, True):
        for w2, d2 in add_weights(h, True):
            total += float(w1 * w2) * kloosterman(d1, d2, eta1).value
    # d != 1, D1 != 1, D2 != 1
    for wd, eta in mult_weights(True):
        for w1, d1 in add_weights(g, True):
            for w2, d2 in add_weights(h, True):
                total += float(wd * w1 * w2) * kloosterman(d1, d2, eta).value
    theta = _theta(m) if m > 1 else Fraction(1)
    scale = float(theta * _Theta(engine, g) * _Theta(engine, h))
    return ComplexVal.of(scale * total)


def _is_trivial_poly(engine: SmallFieldEngine, g: FPoly) -> bool:
    return all(not P.divides(g) for P in engine.tower.xn_profile().all_factors)
