"""Primitivity, freeness, PFF verdicts, search, and brute-force counting.

A PFF element is primitive and free over F with a free inverse; inverse
primitivity comes along automatically, so verdicts track three flags.
Single-element checks run on plain tower arithmetic (they stay cheap even
for GF(13^12)); exhaustive work goes through the small-field engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import arith, fpoly
from .errors import BudgetExceeded, NotADivisor, NotIrreducible, WrongDegree, ZeroElement
from .fpoly import FPoly
from .gf import Element, tower_for
from .smallfield import ENGINE_LIMIT, engine_for

SEARCH_BUDGET_FIRST = 10**7
SEARCH_BUDGET_ALL = 10**5


@dataclass(frozen=True)
class PffVerdict:
    """Outcome of the three PFF conditions with least failing witnesses."""

    subject: object  # Element or FPoly
    is_primitive: bool
    is_free: bool
    inverse_free: bool
    witnesses: dict

    @property
    def is_pff(self) -> bool:
        return self.is_primitive and self.is_free and self.inverse_free


def is_m_free(x: Element, m: int) -> bool:
    """Not an l-th power for any prime l | m; m must divide q^n - 1."""
    if x.is_zero():
        raise ZeroElement("freeness is only defined on E*")
    N = x.tower.order - 1
    if m < 1 or N % m:
        raise NotADivisor(f"{m} does not divide q^n - 1 = {N}")
    return _least_failing_prime(x, m) is None


def _least_failing_prime(x: Element, m: int) -> int | None:
    N = x.tower.order - 1
    one = x.tower.one_element()
    for l in arith.factor(m).primes:
        if x ** (N // l) == one:
            return l
    return None


def is_primitive(x: Element) -> bool:
    return is_m_free(x, x.tower.order - 1)


def _least_failing_factor(x: Element) -> FPoly | None:
    """Least irreducible P | x^n - 1 whose cofactor annihilates x."""
    tower = x.tower
    xn1 = FPoly.x_pow_n_minus_1(tower.F, tower.n)
    for P in tower.xn_profile().all_factors:
        if fpoly.sigma_eval(xn1 // P, x).is_zero():
            return P
    return None


def pff_verdict(x: Element) -> PffVerdict:
    if x.is_zero():
        raise ZeroElement("the zero element is never primitive")
    l = _least_failing_prime(x, x.tower.order - 1)
    P = _least_failing_factor(x)
    Pinv = _least_failing_factor(x.inverse())
    return PffVerdict(
        subject=x,
        is_primitive=l is None,
        is_free=P is None,
        inverse_free=Pinv is None,
        witnesses={"primitivity": l, "freeness": P, "inverse_freeness": Pinv},
    )


def verify_pff_polynomial(f: FPoly) -> PffVerdict:
    """Verdict for a root of monic irreducible f in the tower F[x]/(f)."""
    if not f.is_monic():
        raise NotIrreducible("expected a monic polynomial")
    n = f.degree
    if n < 1:
        raise WrongDegree("expected degree >= 1")
    if not fpoly.is_irreducible(f):
        raise NotIrreducible(f"{f} is not irreducible")
    q = f.field.order
    tower = tower_for(q, n, ext_modulus=f.coeffs)
    v = pff_verdict(tower.gen_x())
    return PffVerdict(f, v.is_primitive, v.is_free, v.inverse_free, v.witnesses)


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def _coprime_exponents(N: int):
    for e in range(1, N + 1):
        if math.gcd(e, N) == 1:
            yield e


def _find_generator(tower) -> Element:
    """Least-index multiplicative generator of E*."""
    N = tower.order - 1
    cof = [N // l for l in arith.factor(N).primes]
    one = tower.one_element()
    for idx in range(1, min(tower.order, 10**6)):
        q = tower.q
        cand = tower.element([(idx // q**i) % q for i in range(tower.n)])
        if all(cand**c != one for c in cof):
            return cand
    raise AssertionError("no generator found")


def search_pff(
    q: int,
    n: int,
    mode: Literal["first", "all", "count"] = "first",
    budget: int | None = None,
) -> list[FPoly]:
    """PFF polynomials for (q, n), by walking primitive elements.

    Enumerates gamma^e over exponents e coprime to q^n - 1 (each primitive
    element once, deterministic order) and keeps those whose element and
    inverse are both free.  Returns minimal polynomials; `first` stops at
    the earliest hit, `all`/`count` deduplicate the complete list.
    """
    if budget is None:
        budget = SEARCH_BUDGET_FIRST if mode == "first" else SEARCH_BUDGET_ALL
    if q**n > budget:
        raise BudgetExceeded(f"q^n = {q ** n} exceeds the search budget {budget}")
    if q**n - 1 <= ENGINE_LIMIT - 1 and mode != "first":
        return _search_all_small(q, n, mode)
    tower = tower_for(q, n)
    N = tower.order - 1
    gamma = _find_generator(tower)
    found: list[FPoly] = []
    seen: set[tuple[int, ...]] = set()
    for e in _coprime_exponents(N):
        alpha = gamma**e
        if _least_failing_factor(alpha) is not None:
            continue
        if _least_failing_factor(alpha.inverse()) is not None:
            continue
        mp = fpoly.min_poly(alpha)
        if mp.coeffs not in seen:
            seen.add(mp.coeffs)
            found.append(mp)
        if mode == "first":
            return found
    return sorted(found, key=FPoly.sort_key)


def _search_all_small(q: int, n: int, mode: str) -> list[FPoly]:
    eng = engine_for(q, n)
    ok = eng.free_mask() & eng.free_mask()[eng.inv_idx] & eng.primitive_mask()
    seen: set[tuple[int, ...]] = set()
    found: list[FPoly] = []
    for idx in np.nonzero(ok)[0]:
        mp = fpoly.min_poly(eng.element_of(int(idx)))
        if mp.coeffs not in seen:
            seen.add(mp.coeffs)
            found.append(mp)
    return sorted(found, key=FPoly.sort_key)


def count_pff_elements(q: int, n: int) -> int:
    """Exact number of PFF elements (engine-sized fields only)."""
    eng = engine_for(q, n)
    ok = eng.free_mask() & eng.free_mask()[eng.inv_idx] & eng.primitive_mask()
    return int(ok.sum())


# ---------------------------------------------------------------------------
# brute-force N(m, g, h)
# ---------------------------------------------------------------------------


def brute_N(q: int, n: int, m: int, g: FPoly, h: FPoly) -> int:
    """Exact count of w in E* that are m-free and g-free with h-free inverse."""
    eng = engine_for(q, n)
    if m < 1 or eng.N % m:
        raise NotADivisor(f"{m} does not divide q^n - 1 = {eng.N}")
    xn1 = FPoly.x_pow_n_minus_1(eng.tower.F, n)
    for e in (g, h):
        if e.is_zero() or not (xn1 % e).is_zero():
            raise NotADivisor(f"{e} does not divide x^{n} - 1")
    bad = eng.mult_fail_mask(m) | eng.add_fail_mask(g) | eng.add_fail_mask(h)[eng.inv_idx]
    bad[0] = True
    return int((~bad).sum())
