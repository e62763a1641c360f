"""Finite field towers GF(p) < F = GF(p^a) < E = GF(q^n).

Base-field elements are encoded as ints: residues for GF(p), packed
base-p digit vectors for GF(p^a) (so 0 and 1 always encode the additive
and multiplicative identities).  Extension elements over F are coefficient
tuples of length n, reduced modulo the tower's extension modulus.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import fpoly
from .arith import is_prime
from .errors import DivisionByZero, NotIrreducible, NotPrime
from .fpoly import FPoly

_TABLE_LIMIT = 1024  # build full mul/inv tables for base fields up to this order


class PrimeField:
    """GF(p) with int elements 0..p-1."""

    def __init__(self, p: int):
        self.p = p
        self.char = p
        self.a = 1
        self.order = p

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def neg(self, x: int) -> int:
        return -x % self.p

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero")
        return pow(x, -1, self.p)

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(x), -e, self.p)
        return pow(x, e, self.p)

    def trace_to_prime(self, x: int) -> int:
        return x

    def prime_digits(self, x: int) -> list[int]:
        return [x]

    def format_element(self, x: int) -> str:
        return str(x)

    def __repr__(self) -> str:
        return f"GF({self.p})"


class PolyExtField:
    """GF(p^a) as GF(p)[u]/(modulus); elements are base-p packed ints."""

    def __init__(self, base: PrimeField, modulus: FPoly):
        assert modulus.is_monic() and modulus.field is base
        self.base = base
        self.p = base.p
        self.char = base.p
        self.a = modulus.degree
        self.order = base.p**modulus.degree
        self.modulus = modulus
        self._mul_table: list[int] | None = None
        self._inv_table: list[int] | None = None
        if self.order <= _TABLE_LIMIT:
            self._build_tables()

    # packing helpers
    def digits(self, x: int) -> list[int]:
        p = self.p
        return [(x // p**i) % p for i in range(self.a)]

    prime_digits = digits

    def pack(self, digits) -> int:
        return sum(int(d) % self.p * self.p**i for i, d in enumerate(digits))

    def add(self, x: int, y: int) -> int:
        p = self.p
        if p == 2:
            return x ^ y
        dx, dy = self.digits(x), self.digits(y)
        return self.pack((a + b) % p for a, b in zip(dx, dy))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        return self.pack(-d % self.p for d in self.digits(x))

    def _mul_raw(self, x: int, y: int) -> int:
        p = self.p
        dx, dy = self.digits(x), self.digits(y)
        prod = [0] * (2 * self.a - 1)
        for i, cx in enumerate(dx):
            if cx:
                for j, cy in enumerate(dy):
                    prod[i + j] = (prod[i + j] + cx * cy) % p
        # reduce modulo the defining polynomial
        mod = self.modulus.coeffs
        for i in range(len(prod) - 1, self.a - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.a):
                    prod[i - self.a + j] = (prod[i - self.a + j] - c * mod[j]) % p
        return self.pack(prod[: self.a])

    def _build_tables(self) -> None:
        q = self.order
        self._mul_table = [0] * (q * q)
        for x in range(q):
            for y in range(x, q):
                v = self._mul_raw(x, y)
                self._mul_table[x * q + y] = v
                self._mul_table[y * q + x] = v
        inv = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if self._mul_table[x * q + y] == 1:
                    inv[x] = y
                    break
            else:
                raise NotIrreducible(f"{self.modulus} is not irreducible over GF({self.p})")
        self._inv_table = inv

    def mul(self, x: int, y: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[x * self.order + y]
        return self._mul_raw(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero")
        if self._inv_table is not None:
            return self._inv_table[x]
        return self.pow(x, self.order - 2)

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            return self.inv(self.pow(x, -e))
        r = 1
        b = x
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def trace_to_prime(self, x: int) -> int:
        acc = 0
        y = x
        for _ in range(self.a):
            acc = self.add(acc, y)
            y = self.pow(y, self.p)
        assert acc < self.p
        return acc

    def format_element(self, x: int) -> str:
        terms = []
        for i in reversed(range(self.a)):
            d = self.digits(x)[i]
            if not d:
                continue
            u = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            if i == 0:
                terms.append(str(d))
            elif d == 1:
                terms.append(u)
            else:
                terms.append(f"{d}{u}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"GF({self.order})"


# the defining polynomials used throughout for GF(4), GF(8), GF(9);
# everything else takes the lexicographically least monic irreducible
_PREFERRED_BASE_MODULI = {
    (2, 2): (1, 1, 1),  # u^2 + u + 1
    (2, 3): (1, 1, 0, 1),  # u^3 + u + 1
    (3, 2): (2, 2, 1),  # u^2 - u - 1
}


def lex_least_irreducible(field, degree: int) -> FPoly:
    """Smallest monic irreducible of given degree, counting coefficient vectors."""
    q = field.order
    for k in range(q**degree):
        coeffs = [(k // q**i) % q for i in range(degree)] + [1]
        f = FPoly(field, tuple(coeffs))
        if fpoly.is_irreducible(f):
            return f
    raise NotIrreducible(f"no irreducible of degree {degree}?")


def base_field(p: int, a: int = 1, modulus_coeffs: tuple[int, ...] | None = None):
    """GF(p^a), table-backed when small."""
    if modulus_coeffs is not None:
        modulus_coeffs = tuple(modulus_coeffs)
    return _base_field_cached(p, a, modulus_coeffs)


@functools.lru_cache(maxsize=None)
def _base_field_cached(p: int, a: int, modulus_coeffs: tuple[int, ...] | None):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    gfp = PrimeField(p)
    if a == 1:
        return gfp
    if modulus_coeffs is None:
        modulus_coeffs = _PREFERRED_BASE_MODULI.get((p, a))
    if modulus_coeffs is None:
        mod = lex_least_irreducible(gfp, a)
    else:
        mod = FPoly(gfp, tuple(modulus_coeffs))
        if mod.degree != a or not mod.is_monic():
            raise NotIrreducible("base modulus must be monic of degree a")
        if not fpoly.is_irreducible(mod):
            raise NotIrreducible(f"{mod} is not irreducible over GF({p})")
    return PolyExtField(gfp, mod)


def field_for_order(q: int):
    """GF(q) for a prime power q, with the package's default modulus."""
    from .arith import factor

    f = factor(q)
    if f.omega != 1:
        raise NotPrime(f"{q} is not a prime power")
    (p, a), = f.factors
    return base_field(p, a)


@dataclass(frozen=True)
class Element:
    """Element of E in the polynomial basis over F: coeffs, length n."""

    tower: "FieldTower"
    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "Element") -> "Element":
        F = self.tower.F
        return Element(self.tower, tuple(F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Element") -> "Element":
        F = self.tower.F
        return Element(self.tower, tuple(F.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Element":
        F = self.tower.F
        return Element(self.tower, tuple(F.neg(a) for a in self.coeffs))

    def scale(self, c: int) -> "Element":
        F = self.tower.F
        return Element(self.tower, tuple(F.mul(c, a) for a in self.coeffs))

    def __mul__(self, other: "Element") -> "Element":
        return self.tower.multiply(self, other)

    def inverse(self) -> "Element":
        return self.tower.inverse(self)

    def __pow__(self, e: int) -> "Element":
        return self.tower.power(self, e)

    def frobenius(self, i: int = 1) -> "Element":
        return self.tower.frobenius(self, i)

    def trace_to_base(self) -> int:
        return self.tower.trace_to_base(self)

    def abs_trace(self) -> int:
        return self.tower.F.trace_to_prime(self.trace_to_base())

    def as_base_field(self) -> int:
        """Coerce an element of F < E back to its F encoding."""
        if any(c != 0 for c in self.coeffs[1:]):
            raise ValueError("element does not lie in the base field")
        return self.coeffs[0]

    def serialize(self) -> list[list[int]]:
        """Nested coefficient lists, least significant first."""
        F = self.tower.F
        return [list(F.prime_digits(c)) for c in self.coeffs]

    def __str__(self) -> str:
        F = self.tower.F
        return "[" + ", ".join(F.format_element(c) for c in self.coeffs) + "]"


class FieldTower:
    """Descriptor and arithmetic engine for GF(p) < GF(q) < GF(q^n)."""

    def __init__(self, F, n: int, ext_modulus: FPoly):
        assert ext_modulus.field is F and ext_modulus.is_monic() and ext_modulus.degree == n
        self.F = F
        self.p = F.char
        self.a = getattr(F, "a", 1)
        self.q = F.order
        self.n = n
        self.order = self.q**n
        self.base_modulus = getattr(F, "modulus", None)
        self.ext_modulus = ext_modulus
        # reduction rows: x^(n+i) mod modulus, i = 0..n-2
        self._red_rows: list[tuple[int, ...]] = []
        row = [F.neg(c) for c in ext_modulus.coeffs[:-1]]
        for _ in range(max(0, n - 1)):
            self._red_rows.append(tuple(row))
            # multiply row by x modulo modulus
            carry = row[-1]
            row = [0] + row[:-1]
            if carry:
                for j in range(n):
                    row[j] = F.add(row[j], F.mul(carry, self._red_rows[0][j]))
        self._frob_rows: list[tuple[int, ...]] | None = None
        self._profile: fpoly.FOrderProfile | None = None

    # -- construction of elements ----------------------------------------

    def element(self, coeffs) -> Element:
        cs = list(coeffs)[: self.n]
        cs += [0] * (self.n - len(cs))
        return Element(self, tuple(int(c) for c in cs))

    def zero_element(self) -> Element:
        return Element(self, (0,) * self.n)

    def one_element(self) -> Element:
        return self.element([1])

    def embed_base(self, c: int) -> Element:
        return self.element([c])

    def gen_x(self) -> Element:
        """The class of x, a root of the extension modulus."""
        if self.n == 1:
            return self.element([self.F.neg(self.ext_modulus.coeffs[0])])
        return self.element([0, 1])

    def elements(self):
        """All q^n elements, ordered by packed index (small towers only)."""
        q, n = self.q, self.n
        for k in range(self.order):
            yield self.element([(k // q**i) % q for i in range(n)])

    # -- arithmetic --------------------------------------------------------

    def multiply(self, x: Element, y: Element) -> Element:
        F = self.F
        n = self.n
        prod = [0] * (2 * n - 1)
        for i, cx in enumerate(x.coeffs):
            if cx:
                for j, cy in enumerate(y.coeffs):
                    if cy:
                        prod[i + j] = F.add(prod[i + j], F.mul(cx, cy))
        out = prod[:n]
        for i in range(n, 2 * n - 1):
            c = prod[i]
            if c:
                row = self._red_rows[i - n]
                for j in range(n):
                    out[j] = F.add(out[j], F.mul(c, row[j]))
        return Element(self, tuple(out))

    def inverse(self, x: Element) -> Element:
        if x.is_zero():
            raise DivisionByZero("inverse of zero element")
        F = self.F
        a = FPoly.make(F, x.coeffs)
        b = self.ext_modulus
        # extended Euclid: s*a + t*b = g
        s0, s1 = FPoly.one(F), FPoly.zero(F)
        r0, r1 = a, b
        while not r1.is_zero():
            qq, rr = divmod(r0, r1)
            r0, r1 = r1, rr
            s0, s1 = s1, s0 - qq * s1
        assert r0.degree == 0
        s0 = s0.scale(F.inv(r0.coeffs[0]))
        return self.element(list(s0.coeffs))

    def power(self, x: Element, e: int) -> Element:
        if e < 0:
            return self.power(self.inverse(x), -e)
        r = self.one_element()
        b = x
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def frobenius(self, x: Element, i: int = 1) -> Element:
        """x^(q^i), via the precomputed q-power matrix."""
        if self._frob_rows is None:
            xq = self.power(self.gen_x(), self.q)
            rows = [self.one_element().coeffs, xq.coeffs]
            for _ in range(self.n - 2):
                rows.append((self.element(list(rows[-1])) * xq).coeffs)
            self._frob_rows = rows
        F = self.F
        out = x
        for _ in range(i % self.n):
            # coefficients are fixed by the map (c^q = c for c in F)
            acc = [0] * self.n
            for j, c in enumerate(out.coeffs):
                if c:
                    row = self._frob_rows[j]
                    for k in range(self.n):
                        acc[k] = F.add(acc[k], F.mul(c, row[k]))
            out = Element(self, tuple(acc))
        return out

    def trace_to_base(self, x: Element) -> int:
        acc = self.zero_element()
        y = x
        for _ in range(self.n):
            acc = acc + y
            y = y.frobenius(1)
        return acc.as_base_field()

    def xn_profile(self) -> fpoly.FOrderProfile:
        if self._profile is None:
            self._profile = fpoly.factor_xn_minus_1(self.F, self.n)
        return self._profile

    def __repr__(self) -> str:
        return f"GF({self.q}^{self.n})/GF({self.q})"


@functools.lru_cache(maxsize=None)
def _cached_tower(p: int, a: int, n: int, base_coeffs, ext_coeffs) -> FieldTower:
    F = base_field(p, a, base_coeffs)
    if ext_coeffs is None:
        ext = lex_least_irreducible(F, n)
    else:
        ext = FPoly(F, ext_coeffs)
        if ext.degree != n or not ext.is_monic():
            raise NotIrreducible("extension modulus must be monic of degree n")
        if not fpoly.is_irreducible(ext):
            raise NotIrreducible(f"{ext} is not irreducible over GF({F.order})")
    return FieldTower(F, n, ext)


def construct_tower(p: int, a: int, n: int, base_modulus=None, ext_modulus=None) -> FieldTower:
    """Build GF(p) < GF(p^a) < GF(p^(a n)); moduli default deterministically."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    bc = tuple(base_modulus) if base_modulus is not None else None
    ec = tuple(ext_modulus) if ext_modulus is not None else None
    return _cached_tower(p, a, n, bc, ec)


def tower_for(q: int, n: int, ext_modulus=None) -> FieldTower:
    """Tower over GF(q) for a prime power q, default moduli."""
    from .arith import factor

    (p, a), = factor(q).factors
    return construct_tower(p, a, n, ext_modulus=ext_modulus)
