"""The certification engine: reduced moduli, sieve decompositions, bounds.

The certifier decides whether a pair (q, n) admits a primitive element
that is free over GF(q) with a free inverse.  Bound verdicts are computed
on exact rationals: a criterion of the shape q^(n/2) > B with rational B
is decided by comparing q^n against B^2, so no verdict ever rests on
floating point.  Floats appear only in reported R values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from . import arith, fpoly, pff, witnesses
from .arith import Factorization, factor, mult_order
from .errors import DenominatorNonPositive, FactorTimeout, NonPositiveDelta
from .fpoly import FOrderProfile, FPoly
from .gf import field_for_order

EXCEPTIONAL_PAIRS = frozenset({(2, 3), (2, 4), (3, 4), (4, 3), (5, 4)})


# ---------------------------------------------------------------------------
# the reduced modulus Q(q, n)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QData:
    """Q(q, n) = radical of (q^n - 1)/((q - 1) gcd(n, q - 1)), plus the
    companion quantities of the reduction identity: R is the greatest
    divisor of q^n - 1 coprime to Q and Q* = (q^n - 1)/R."""

    q: int
    n: int
    quotient: Factorization  # the unreduced quotient, as the tables print it
    radical: Factorization  # Q itself (square-free)
    Q_star: int
    R: int

    @property
    def Q(self) -> int:
        return self.radical.value

    @property
    def primes(self) -> tuple[int, ...]:
        return self.radical.primes


def compute_Q(q: int, n: int, effort: int = 2_000_000) -> QData:
    N = q**n - 1
    den = (q - 1) * math.gcd(n, q - 1)
    quotient = factor(N // den, effort)
    rad = quotient.radical
    Nf = factor(N, effort)
    R = math.prod(p**e for p, e in Nf.factors if rad % p)
    return QData(q, n, quotient, factor(rad, effort), N // R, R)


def reduction_target(q: int, n: int) -> FPoly:
    """The polynomial e with N(Q, x^n-1, x^n-1) = N(Q, e, e).

    x - 1 for n = 3 with q = 2 mod 3; x^2 - 1 for n = 4 with q = 3 mod 4;
    otherwise the radical x^(n*) - 1.
    """
    F = field_for_order(q)
    if n == 3 and q % 3 == 2:
        return FPoly.make(F, (F.neg(1), 1))
    if n == 4 and q % 4 == 3:
        return FPoly.make(F, (F.neg(1), 0, 1))
    nstar = fpoly.n_star_of(n, F.char)
    return FPoly.x_pow_n_minus_1(F, nstar)


def lemma_prime_n(q: int, n: int) -> bool:
    """Prime n >= 5, char not dividing n, q a generator mod n.

    A positive answer certifies the pair via the external trace theorem;
    certificates carry that dependency as a flag.
    """
    if n < 5 or not arith.is_prime(n):
        return False
    if q % n == 0:  # n prime, so char | n iff n = p iff n | q
        return False
    return mult_order(q, n) == n - 1


# ---------------------------------------------------------------------------
# decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SieveAtom:
    """One sieving atom: a prime of Q or an irreducible factor of one of
    the two polynomial copies; weight p for primes, q^deg for polynomials."""

    kind: Literal["prime", "poly-x", "poly-y"]
    value: object
    weight: int

    @staticmethod
    def prime(p: int) -> "SieveAtom":
        return SieveAtom("prime", p, p)

    @staticmethod
    def poly(f: FPoly, side: str, q: int) -> "SieveAtom":
        return SieveAtom(f"poly-{side}", f, q**f.degree)


@dataclass(frozen=True)
class SieveDecomposition:
    """A (k0, r) decomposition: a common core plus r single-atom extensions."""

    core_m0: int
    core_f0: tuple[FPoly, ...]
    core_g0: tuple[FPoly, ...]
    atoms: tuple[SieveAtom, ...]

    @property
    def r(self) -> int:
        return len(self.atoms)

    @property
    def delta(self) -> Fraction:
        return Fraction(1) - sum(Fraction(1, a.weight) for a in self.atoms)

    @property
    def Delta(self) -> Fraction:
        d = self.delta
        if d <= 0:
            raise NonPositiveDelta(f"delta = {d}")
        return Fraction(self.r - 1, 1) / d + 2

    @property
    def W_core(self) -> int:
        return arith.W(self.core_m0) << (len(self.core_f0) + len(self.core_g0))


@dataclass(frozen=True)
class DecompResult:
    lhs: float  # q^(n/2)
    rhs: float  # 2 W(k0) Delta
    passes: bool
    delta: Fraction
    Delta: Fraction
    W_core: int


def eval_decomposition(q: int, n: int, d: SieveDecomposition) -> DecompResult:
    """Exact check of q^(n/2) > 2 W(k0) Delta for a decomposition with delta > 0."""
    delta = d.delta
    if delta <= 0:
        raise NonPositiveDelta(f"delta = {delta} is not positive")
    Delta = d.Delta
    rhs = 2 * d.W_core * Delta
    passes = Fraction(q) ** n > rhs * rhs
    return DecompResult(float(q) ** (n / 2), float(rhs), passes, delta, Delta, d.W_core)


# ---------------------------------------------------------------------------
# the main inequality and its R(n) form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """Split of the primes of Q into a core (product m0) and sieving primes."""

    core: tuple[int, ...]
    sieving: tuple[int, ...]

    @property
    def u(self) -> int:
        return len(self.core)

    @property
    def t(self) -> int:
        return len(self.sieving)

    @property
    def delta(self) -> Fraction:
        return Fraction(1) - sum(Fraction(1, l) for l in self.sieving)


@dataclass(frozen=True)
class BoundResult:
    passes: bool
    R: float  # the equivalent R(n) value: pass iff q > R
    braced: Fraction
    numerics: dict


def _braced_value(
    q: int, n: int, s: int, X: Fraction, w_exponent: int, t: int, delta: Fraction
) -> Fraction:
    """2^w_exponent * ((2X/s + t - 1)/(delta - 2X/(s q^s)) + 2), exactly.

    X is the degree surrogate for the sieved polynomial part (n* - m in the
    exact form, n* - rho n or (1 - rho) n in the relaxed forms).
    """
    num = Fraction(2) * X / s + (t - 1)
    den = delta - Fraction(2) * X / (s * q**s)
    if den <= 0:
        raise DenominatorNonPositive(f"denominator {den} is not positive")
    return Fraction(2) ** w_exponent * (num / den + 2)


def _bound_from_braced(q: int, n: int, braced: Fraction, numerics: dict) -> BoundResult:
    passes = Fraction(q) ** n > braced * braced
    R = float(braced) ** (2.0 / n)
    numerics = dict(numerics, R=R)
    return BoundResult(passes, R, braced, numerics)


def key_ineq(
    q: int,
    n: int,
    profile: FOrderProfile,
    partition: Partition,
    refined: bool = False,
) -> BoundResult:
    """The core-atom inequality for the g/G split of x^(n*) - 1.

    Additive-only when the sieving prime set is empty.  With exact W(Q) and
    W(g); `refined` replaces the true sieved degree n* - m by n* - rho n.
    The partition must cover every prime of Q(q, n); supersets are allowed
    and merely weaken the bound.
    """
    covered = set(partition.core) | set(partition.sieving)
    missing = [l for l in compute_Q(q, n).primes if l not in covered]
    if missing:
        raise ValueError(f"partition misses primes of Q: {missing}")
    nstar, s = profile.n_star, profile.s
    omega_g, m = profile.omega_g, profile.m
    X = Fraction(nstar - omega_g) if refined else Fraction(nstar - m)
    u, t = partition.u, partition.t
    braced = _braced_value(q, n, s, X, 2 * omega_g + u + 1, t, partition.delta)
    numerics = {
        "s": s, "n_star": nstar, "m": m, "omega": omega_g,
        "rho": profile.rho, "u": u, "t": t, "delta": partition.delta,
        "refined": refined,
    }
    return _bound_from_braced(q, n, braced, numerics)


def eval_R(
    q: int,
    n: int,
    s: int,
    rho: Fraction,
    u: int,
    t: int = 0,
    delta: Fraction = Fraction(1),
    refined: bool = True,
    n_star: int | None = None,
) -> BoundResult:
    """R(n; q) such that the pair is certified whenever q > R(n; q).

    The relaxed parametrization of the core-atom inequality: the sieved
    degree is taken as n* - rho n (refined) or (1 - rho) n (basic), and the
    exponent on 2 is 2 rho n + u + 1.
    """
    if n_star is None:
        n_star = n
    rho = Fraction(rho)
    X = n_star - rho * n if refined else (1 - rho) * n
    two_rho_n = 2 * rho * n
    if two_rho_n.denominator == 1:
        braced = _braced_value(q, n, s, X, int(two_rho_n) + u + 1, t, Fraction(delta))
    else:
        # fractional exponent on 2 (only reachable with rho n not an
        # integer): the value is float-accurate, not exact
        num = Fraction(2) * X / s + (t - 1)
        den = Fraction(delta) - Fraction(2) * X / (s * q**s)
        if den <= 0:
            raise DenominatorNonPositive(f"denominator {den} is not positive")
        braced = Fraction(2.0 ** float(two_rho_n + u + 1) * float(num / den + 2))
    numerics = {"s": s, "rho": rho, "u": u, "t": t, "delta": Fraction(delta), "refined": refined}
    return _bound_from_braced(q, n, braced, numerics)


def choose_partition(q: int, n: int, strategy: str = "default", qdata: QData | None = None) -> Partition:
    """Prime partitions: 'default' cores the primes below q; 'all-core'
    disables multiplicative sieving; 'sieve-t' sieves the t largest."""
    qd = qdata or compute_Q(q, n)
    primes = qd.primes
    if strategy == "default":
        core = tuple(p for p in primes if p < q)
        return Partition(core, tuple(p for p in primes if p >= q))
    if strategy == "all-core":
        return Partition(primes, ())
    if strategy.startswith("sieve-"):
        t = int(strategy.split("-")[1])
        if not 0 <= t <= len(primes):
            raise ValueError(f"cannot sieve {t} of {len(primes)} primes")
        return Partition(primes[: len(primes) - t], primes[len(primes) - t :])
    raise ValueError(f"unknown strategy {strategy!r}")


# ---------------------------------------------------------------------------
# the non-sieving corollary bounds
# ---------------------------------------------------------------------------


def nosieve_bound(q: int, n: int, W_Q: int, W_e: int) -> tuple[bool, dict]:
    """Direct positivity from the square-root bound, no sieving.

    Plain form: q^(n/2) > 2 W(Q) W(e)^2.  Sharper epsilon form (g = h = e):
    q^n + eps_e > 2 q^(n/2) (W(Q) W(e) - 1)(W(e) - 1), checked by squaring.
    """
    Wk = W_Q * W_e * W_e
    plain = Fraction(q) ** n > 4 * Wk * Wk
    eps = -1 if W_e == 1 else 1
    B = 2 * (W_Q * W_e - 1) * (W_e - 1)
    lhs = Fraction(q) ** n + eps
    sharp = lhs > 0 and lhs * lhs > Fraction(q) ** n * B * B
    return plain or sharp, {
        "W_Q": W_Q, "W_e": W_e, "W_k": Wk,
        "plain": plain, "sharp": sharp,
        "bound": float(2 * Wk) ** (2.0 / n),
    }


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

Status = Literal["PFF", "NOT_PFF", "UNDECIDED"]

METHODS = (
    "trivial-n<=2",
    "exception-list",
    "lemma-prime-n",
    "nosieve-bound",
    "keyineq-additive",
    "keyineq-full",
    "custom-decomposition",
    "direct-search",
    "polynomial-witness",
)


@dataclass(frozen=True)
class Certificate:
    q: int
    n: int
    status: Status
    method: str | None
    numerics: dict = field(default_factory=dict)
    witness: FPoly | None = None
    external_axiom: bool = False
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return {"decimal": f"{float(v):.12g}", "rational": f"{v.numerator}/{v.denominator}"}
            if isinstance(v, float):
                return {"decimal": f"{v:.12g}", "rational": None}
            if isinstance(v, FPoly):
                return str(v)
            if isinstance(v, dict):
                return {k: enc(x) for k, x in v.items()}
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            return v

        return {
            "q": self.q,
            "n": self.n,
            "status": self.status,
            "method": self.method,
            "numerics": enc(self.numerics),
            "witness": str(self.witness) if self.witness is not None else None,
            "witness_coefficients": self.witness.serialize() if self.witness is not None else None,
            "external_axiom": self.external_axiom,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class CertifyConfig:
    search_budget: int = 10**7
    factor_effort: int = 2_000_000
    engine_budget: int = 5000
    use_witness_table: bool = True
    seed: int = 2024


def _poly_core_decomposition(
    q: int, qdata: QData, factors: tuple[FPoly, ...], core_count: int, partition: Partition
) -> SieveDecomposition:
    """Core = product of primes in partition.core and the first core_count
    polynomial factors on both sides; everything else sieves."""
    core_polys = factors[:core_count]
    sieved = factors[core_count:]
    atoms = [SieveAtom.prime(l) for l in partition.sieving]
    for f in sieved:
        atoms.append(SieveAtom.poly(f, "x", q))
    for f in sieved:
        atoms.append(SieveAtom.poly(f, "y", q))
    m0 = math.prod(partition.core) if partition.core else 1
    return SieveDecomposition(m0, core_polys, core_polys, tuple(atoms))


def _decomposition_sweep(q: int, n: int, qdata: QData, e: FPoly) -> tuple[SieveDecomposition, DecompResult] | None:
    """Deterministic sweep of core/atom splits built from the factors of e."""
    F = e.field
    factors = tuple(sorted(fpoly.factor_squarefree(e.monic()), key=FPoly.sort_key))
    strategies = ["default", "all-core"] + [f"sieve-{t}" for t in range(1, len(qdata.primes) + 1)]
    candidates: list[tuple[int, str]] = []
    if (q, n) == (2, 21):
        # the one pair where the plain g/G split fails: core = the two small
        # factors, sieve the degree-3 and degree-6 ones plus all primes of Q
        candidates.append((2, f"sieve-{len(qdata.primes)}"))
    for k in range(len(factors), -1, -1):
        for strat in strategies:
            candidates.append((k, strat))
    for k, strat in candidates:
        part = choose_partition(q, n, strat, qdata)
        d = _poly_core_decomposition(q, qdata, factors, k, part)
        if d.delta <= 0:
            continue
        res = eval_decomposition(q, n, d)
        if res.passes:
            return d, res
    return None


def certify(q: int, n: int, config: CertifyConfig | None = None) -> Certificate:
    """Decide PFF / NOT_PFF for (q, n), recording the winning criterion.

    Pipeline: trivial n <= 2; exceptional pairs; the prime-n congruence
    criterion; the core-atom inequality (additive, then with multiplicative
    sieving over partition strategies); the non-sieving bounds; a sweep of
    general decompositions; finally a known witness polynomial or direct
    search.  UNDECIDED is only reachable with tiny budgets.
    """
    cfg = config or CertifyConfig()
    qf = factor(q)
    if qf.omega != 1:
        raise ValueError(f"q = {q} is not a prime power")

    if n <= 2:
        return Certificate(q, n, "PFF", "trivial-n<=2",
                           notes=("primitive elements of quadratic or trivial extensions are free both ways",))

    if (q, n) in EXCEPTIONAL_PAIRS:
        notes = ["listed exceptional pair"]
        if q**n <= cfg.engine_budget:
            found = pff.search_pff(q, n, "all", budget=cfg.engine_budget)
            notes.append(f"exhaustive search cross-check: {len(found)} PFF polynomials")
        return Certificate(q, n, "NOT_PFF", "exception-list", notes=tuple(notes))

    if lemma_prime_n(q, n):
        return Certificate(
            q, n, "PFF", "lemma-prime-n",
            numerics={"q_mod_n": q % n, "order": n - 1},
            external_axiom=True,
            notes=("relies on the primitive-element-with-nonzero-trace theorem as an external axiom",),
        )

    try:
        qdata = compute_Q(q, n, cfg.factor_effort)
    except FactorTimeout as exc:
        return Certificate(q, n, "UNDECIDED", None, notes=(f"factoring failed: {exc}",))

    F = field_for_order(q)
    profile = fpoly.factor_xn_minus_1(F, n, cfg.seed)
    W_Q = qdata.radical.W

    # (4) additive-only core-atom inequality, refined then exact
    for refined in (True, False):
        try:
            res = key_ineq(q, n, profile, Partition(qdata.primes, ()), refined=refined)
        except DenominatorNonPositive:
            continue
        if res.passes:
            return Certificate(q, n, "PFF", "keyineq-additive", numerics=res.numerics)

    # (5) non-sieving bounds on the reduced polynomial target
    e = reduction_target(q, n)
    e_factors = fpoly.factor_squarefree(e.monic())
    ok, numerics = nosieve_bound(q, n, W_Q, 1 << len(e_factors))
    if ok:
        return Certificate(q, n, "PFF", "nosieve-bound",
                           numerics=dict(numerics, target=str(e)))

    # (6) multiplicative sieving over partition strategies
    for strat in ["default"] + [f"sieve-{t}" for t in range(1, len(qdata.primes) + 1)]:
        part = choose_partition(q, n, strat, qdata)
        if part.t == 0:
            continue
        for refined in (True, False):
            try:
                res = key_ineq(q, n, profile, part, refined=refined)
            except DenominatorNonPositive:
                continue
            if res.passes:
                return Certificate(q, n, "PFF", "keyineq-full",
                                   numerics=dict(res.numerics, strategy=strat))

    # (7) general decompositions over the reduced target
    hit = _decomposition_sweep(q, n, qdata, e)
    if hit is not None:
        d, res = hit
        return Certificate(
            q, n, "PFF", "custom-decomposition",
            numerics={
                "delta": res.delta, "Delta": res.Delta, "W_core": res.W_core,
                "lhs": res.lhs, "rhs": res.rhs,
                "core_m0": d.core_m0,
                "core_degrees": [f.degree for f in d.core_f0],
                "atoms": [f"{a.kind}:{a.value}" for a in d.atoms],
            },
        )

    # (8) known witness polynomial, then direct search
    if cfg.use_witness_table:
        w = witnesses.lookup(q, n)
        if w is not None:
            verdict = pff.verify_pff_polynomial(w)
            if verdict.is_pff:
                return Certificate(q, n, "PFF", "polynomial-witness", witness=w)

    if q**n <= cfg.search_budget:
        found = pff.search_pff(q, n, "first", budget=cfg.search_budget)
        if found:
            return Certificate(q, n, "PFF", "direct-search", witness=found[0])
        return Certificate(q, n, "NOT_PFF", "direct-search",
                           notes=("exhaustive search over all primitive elements found none",))

    return Certificate(q, n, "UNDECIDED", None,
                       notes=("all bounds failed and the pair exceeds the search budget",))
