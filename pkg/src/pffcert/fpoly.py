"""Polynomials over a finite field F, and the sigma-module structure of E.

Polynomials are immutable coefficient tuples, least significant first, with
coefficients in the int encoding of their field (see gf.py).  The module
also hosts the additive-order machinery for extension elements: evaluation
of h^sigma (x^i replaced by the i-th Frobenius power), F-orders, freeness
tests and minimal polynomials.  Extension elements are duck-typed here to
keep the import graph acyclic; gf.py provides the concrete Element.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable

from . import arith
from .errors import NotADivisor

if TYPE_CHECKING:  # pragma: no cover
    from .gf import Element


@dataclass(frozen=True)
class FPoly:
    """Dense univariate polynomial over `field` (zero polynomial = empty coeffs)."""

    field: object
    coeffs: tuple[int, ...]

    @staticmethod
    def make(field, coeffs: Iterable[int]) -> "FPoly":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return FPoly(field, tuple(cs))

    @staticmethod
    def zero(field) -> "FPoly":
        return FPoly(field, ())

    @staticmethod
    def one(field) -> "FPoly":
        return FPoly(field, (1,))

    @staticmethod
    def x(field) -> "FPoly":
        return FPoly(field, (0, 1))

    @staticmethod
    def x_pow_n_minus_1(field, n: int) -> "FPoly":
        cs = [0] * (n + 1)
        cs[0] = field.neg(1)
        cs[n] = 1
        return FPoly(field, tuple(cs))

    # -- basic structure ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "FPoly") -> "FPoly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return FPoly.make(F, out)

    def __sub__(self, other: "FPoly") -> "FPoly":
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return FPoly.make(F, [F.sub(self[i], other[i]) for i in range(n)])

    def __neg__(self) -> "FPoly":
        F = self.field
        return FPoly(F, tuple(F.neg(c) for c in self.coeffs))

    def __mul__(self, other: "FPoly") -> "FPoly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FPoly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = F.add(out[i + j], F.mul(ca, cb))
        return FPoly.make(F, out)

    def scale(self, c: int) -> "FPoly":
        F = self.field
        return FPoly.make(F, [F.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other: "FPoly") -> tuple["FPoly", "FPoly"]:
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead_inv = F.inv(other.coeffs[-1])
        quo = [0] * max(0, len(rem) - d)
        for i in range(len(rem) - d - 1, -1, -1):
            c = F.mul(rem[i + d], lead_inv)
            if c == 0:
                continue
            quo[i] = c
            for j, oc in enumerate(other.coeffs):
                rem[i + j] = F.sub(rem[i + j], F.mul(c, oc))
        return FPoly.make(F, quo), FPoly.make(F, rem)

    def __floordiv__(self, other: "FPoly") -> "FPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FPoly") -> "FPoly":
        return divmod(self, other)[1]

    def divides(self, other: "FPoly") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "FPoly":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def gcd(self, other: "FPoly") -> "FPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def pow_mod(self, e: int, mod: "FPoly") -> "FPoly":
        result = FPoly.one(self.field)
        base = self % mod
        while e:
            if e & 1:
                result = result * base % mod
            base = base * base % mod
            e >>= 1
        return result

    def evaluate(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def serialize(self) -> list[list[int]]:
        """Nested coefficient lists, least significant first, prime digits inner."""
        F = self.field
        return [list(F.prime_digits(c)) for c in self.coeffs]

    # -- total order used for deterministic choices ----------------------

    def sort_key(self) -> tuple:
        return (self.degree, tuple(reversed(self.coeffs)))

    def __str__(self) -> str:
        return format_poly(self)


# ---------------------------------------------------------------------------
# irreducibility and factorization
# ---------------------------------------------------------------------------


def is_irreducible(f: FPoly) -> bool:
    """Rabin's test over GF(q)."""
    F = f.field
    q = F.order
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    x = FPoly.x(F)
    xq = x.pow_mod(q**n, f)
    if xq != x % f:
        return False
    for t in arith.factor(n).primes:
        h = x.pow_mod(q ** (n // t), f) - x
        if not f.gcd(h).is_one():
            return False
    return True


def _distinct_degree(f: FPoly) -> list[tuple[int, FPoly]]:
    """Distinct-degree split of a squarefree monic f: [(d, product of deg-d factors)]."""
    F = f.field
    q = F.order
    out = []
    x = FPoly.x(F)
    h = x % f
    rest = f
    d = 0
    while rest.degree > 0:
        d += 1
        if 2 * d > rest.degree:
            out.append((rest.degree, rest))
            break
        h = h.pow_mod(q, rest)
        g = rest.gcd(h - x % rest)
        if not g.is_one():
            out.append((d, g))
            rest = rest // g
            h = h % rest
    return out


def _equal_degree_split(f: FPoly, d: int, rng: random.Random) -> list[FPoly]:
    """Cantor-Zassenhaus split of squarefree monic f into its degree-d factors."""
    F = f.field
    q = F.order
    if f.degree == d:
        return [f]
    while True:
        h = FPoly.make(F, [rng.randrange(q) for _ in range(f.degree)])
        if h.degree < 1:
            continue
        g = f.gcd(h)
        if not g.is_one():
            break
        if q % 2 == 1:
            t = h.pow_mod((q**d - 1) // 2, f) - FPoly.one(F)
        else:
            # char 2: absolute-trace map h + h^2 + ... + h^(2^(ad-1))
            a = F.a if hasattr(F, "a") else 1
            t = FPoly.zero(F)
            acc = h % f
            for _ in range(a * d):
                t = t + acc
                acc = acc.pow_mod(2, f)
        g = f.gcd(t)
        if not g.is_one() and g != f.monic():
            break
    return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def factor_squarefree(f: FPoly, seed: int = 2024) -> list[FPoly]:
    """Irreducible factors of a squarefree monic polynomial, sorted deterministically."""
    rng = random.Random(seed)
    out: list[FPoly] = []
    for d, block in _distinct_degree(f.monic()):
        out.extend(_equal_degree_split(block, d, rng))
    return sorted(out, key=FPoly.sort_key)


# ---------------------------------------------------------------------------
# x^n - 1 structure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FOrderProfile:
    """Shape of x^(n*) - 1 = g(x) G(x) over GF(q).

    G collects the irreducible factors of degree exactly s = ord_{n*}(q),
    g those of smaller degree; m = deg g, omega_g = number of factors of g,
    rho = omega_g / n.
    """

    q: int
    n: int
    n_star: int
    s: int
    g_factors: tuple[FPoly, ...]
    G_factors: tuple[FPoly, ...]
    seed: int

    @property
    def m(self) -> int:
        return sum(f.degree for f in self.g_factors)

    @property
    def omega_g(self) -> int:
        return len(self.g_factors)

    @property
    def rho(self) -> Fraction:
        return Fraction(self.omega_g, self.n)

    @property
    def all_factors(self) -> tuple[FPoly, ...]:
        return tuple(sorted(self.g_factors + self.G_factors, key=FPoly.sort_key))

    @property
    def r(self) -> int:
        return len(self.G_factors)


def n_star_of(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def factor_xn_minus_1(F, n: int, seed: int = 2024) -> FOrderProfile:
    """Factor x^(n*) - 1 over F and classify factors by degree against s.

    Freeness over x^n - 1 only ever depends on this radical, so the profile
    carries the n* factorization; x^n - 1 itself is its p^b-th power.
    """
    q = F.order
    nstar = n_star_of(n, F.char)
    if nstar == 1:
        xm1 = FPoly.make(F, (F.neg(1), 1))
        return FOrderProfile(q, n, 1, 1, (), (xm1,), seed)
    s = arith.mult_order(q, nstar)
    factors = factor_squarefree(FPoly.x_pow_n_minus_1(F, nstar), seed)
    g = tuple(f for f in factors if f.degree < s)
    G = tuple(f for f in factors if f.degree == s)
    assert len(g) + len(G) == len(factors)
    assert sum(f.degree for f in factors) == nstar
    return FOrderProfile(q, n, nstar, s, g, G, seed)


# ---------------------------------------------------------------------------
# sigma evaluation, F-order, freeness, minimal polynomial
# ---------------------------------------------------------------------------


def sigma_eval(h: FPoly, x: "Element") -> "Element":
    """h^sigma(x) = sum h_i * x^(q^i): the linearized action of h on x."""
    tower = x.tower
    acc = tower.zero_element()
    conj = x
    for i, c in enumerate(h.coeffs):
        if i:
            conj = conj.frobenius(1)
        if c:
            acc = acc + conj.scale(c)
    return acc


def f_order(x: "Element") -> FPoly:
    """Minimal monic divisor g of x^n - 1 with g^sigma(x) = 0."""
    tower = x.tower
    F = tower.F
    profile = tower.xn_profile()
    pb = tower.n // profile.n_star
    exps = {f: pb for f in profile.all_factors}
    current = FPoly.x_pow_n_minus_1(F, tower.n)
    for f in profile.all_factors:
        while exps[f] > 0:
            cand = current // f
            if not sigma_eval(cand, x).is_zero():
                break
            current = cand
            exps[f] -= 1
    return current


def is_e_free(x: "Element", e: FPoly) -> bool:
    """True iff x = h^sigma(v) with h | e forces h = 1.

    Equivalently: for every irreducible P dividing e, the cofactor
    ((x^n - 1)/P)^sigma does not annihilate x.  Raises NotADivisor unless
    e divides x^n - 1.
    """
    tower = x.tower
    F = tower.F
    xn1 = FPoly.x_pow_n_minus_1(F, tower.n)
    if e.is_zero() or not (xn1 % e).is_zero():
        raise NotADivisor(f"{e} does not divide x^{tower.n} - 1")
    for P in tower.xn_profile().all_factors:
        if P.divides(e) and sigma_eval(xn1 // P, x).is_zero():
            return False
    return True


def is_free(x: "Element") -> bool:
    """Free (normal) over F: every irreducible factor survives."""
    return is_e_free(x, FPoly.x_pow_n_minus_1(x.tower.F, x.tower.n))


def min_poly(x: "Element") -> FPoly:
    """Minimal polynomial of x over F, from the product of distinct conjugates."""
    tower = x.tower
    conjs = [x]
    c = x.frobenius(1)
    while c != x:
        conjs.append(c)
        c = c.frobenius(1)
    # multiply (X - c) in E[X], then read coefficients back in F
    E_one = tower.one_element()
    poly = [E_one]
    for c in conjs:
        nc = -c
        new = [tower.zero_element()] * (len(poly) + 1)
        for i, a in enumerate(poly):
            new[i + 1] = new[i + 1] + a
            new[i] = new[i] + a * nc
        poly = new
    coeffs = [a.as_base_field() for a in poly]
    return FPoly.make(tower.F, coeffs)


def reciprocal(f: FPoly) -> FPoly:
    """Monic reciprocal x^deg * f(1/x) / f(0); needs f(0) != 0."""
    if not f.coeffs or f.coeffs[0] == 0:
        raise ValueError("reciprocal needs a nonzero constant term")
    return FPoly.make(f.field, tuple(reversed(f.coeffs))).monic()


# ---------------------------------------------------------------------------
# printing in the signed convention
# ---------------------------------------------------------------------------


def _coeff_str(F, c: int, power: int) -> tuple[str, str]:
    """(sign, body) for coefficient c on x^power."""
    p = getattr(F, "p", F.char)
    if getattr(F, "a", 1) == 1:
        # prime field: render p - k as -k when k <= p/2
        if c > p // 2:
            sign, mag = "-", p - c
        else:
            sign, mag = "+", c
        if power == 0:
            return sign, str(mag)
        if mag == 1:
            body = ""
        else:
            body = str(mag)
    else:
        sign = "+"
        body = F.format_element(c)
        if power > 0 and body == "1":
            body = ""
        elif power > 0 and ("+" in body or "-" in body):
            body = f"({body})"
        if power == 0:
            return sign, body
    xpart = "x" if power == 1 else f"x^{power}"
    return sign, f"{body}{xpart}" if body else xpart


def format_poly(f: FPoly) -> str:
    """Human form, highest power first, signed coefficients over prime fields."""
    if f.is_zero():
        return "0"
    parts: list[str] = []
    for i in range(f.degree, -1, -1):
        c = f[i]
        if c == 0:
            continue
        sign, body = _coeff_str(f.field, c, i)
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
