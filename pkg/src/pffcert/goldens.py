"""Golden reference values for the R(n) criterion tables and sieve numerics.

Each row records the published values (s, rho, u, R) for one (q, n) pair,
with R truncated to three decimals in the degree tables and rounded up to
two decimals in the q = 5, 7 summary rows.  Rows whose published entries
cannot be reproduced carry a `note` naming the discrepancy and the frozen
recomputed value; the checking code asserts those recomputations instead
and verifies that the published figure really does disagree.

Conventions established by cross-checking every reproducible row:
  * R uses the refined parametrization (sieved degree n* - rho n);
  * u = omega(Q) everywhere except the q = 4 table, which consistently
    counted the primes of the whole q^n - 1 (u_convention = "full");
  * bold rows mark criterion failures (R >= q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RTableRow:
    q: int
    n: int
    s: int
    rho: Fraction
    u: int
    R: float
    bold: bool = False
    t: int = 0
    sieving_primes: tuple[int, ...] = ()
    decimals: int = 3  # 3: truncated; 2: rounded up
    note: str | None = None
    recomputed: float | None = None  # frozen, asserted when note says R is off
    mismatched: tuple[str, ...] = ()  # printed fields that disagree with recomputation
    delta_printed: float | None = None

    @property
    def u_convention(self) -> str:
        return "full" if self.q == 4 else "Q"


F = Fraction

# q = 4 degree table
Q4_ROWS = [
    RTableRow(4, 45, 6, F(11, 45), 11, 3.187),
    RTableRow(4, 36, 3, F(1, 12), 12, 2.277),
    RTableRow(4, 35, 6, F(1, 7), 9, 2.532),
    RTableRow(4, 33, 5, F(1, 11), 8, 2.195),
    RTableRow(4, 30, 2, F(1, 10), 11, 2.965),
    RTableRow(4, 27, 9, F(5, 27), 6, 2.729),
    RTableRow(4, 25, 10, F(1, 5), 4, 3.238,
              note="row repeats the (4,11) figures; true shape is rho=3/25, u=6/7",
              recomputed=2.487397, mismatched=("rho", "u", "R")),
    RTableRow(4, 21, 3, F(1, 7), 6, 3.063),
    RTableRow(4, 20, 2, F(1, 20), 7, 2.392),
    RTableRow(4, 18, 3, F(1, 6), 8, 3.815),
    RTableRow(4, 15, 2, F(1, 5), 6, 5.539, bold=True),
    RTableRow(4, 14, 3, F(1, 14), 6, 3.085),
    RTableRow(4, 11, 5, F(1, 11), 4, 3.238),
    RTableRow(4, 10, 2, F(1, 10), 5, 4.337, bold=True),
]

# q = 3 degree table
Q3_ROWS = [
    RTableRow(3, 52, 6, F(11, 52), 6, 2.390,
              note="published value matches sieved degree n*-m+omega, not n*-rho n",
              recomputed=2.403790, mismatched=("R",)),
    RTableRow(3, 44, 10, F(7, 44), 8, 2.245,
              note="published value matches sieved degree n*-m+omega, not n*-rho n",
              recomputed=2.273672, mismatched=("R",)),
    RTableRow(3, 32, 8, F(7, 32), 6, 2.811),
    RTableRow(3, 28, 6, F(3, 28), 6, 2.234),
    RTableRow(3, 22, 5, F(1, 11), 5, 2.298),
    RTableRow(3, 20, 4, F(3, 20), 5, 2.903),
    RTableRow(3, 16, 4, F(5, 16), 4, 5.085, bold=True,
              note="u printed as 4; omega(Q) = 5, which reproduces the printed R",
              mismatched=("u",)),
    RTableRow(3, 14, 6, F(1, 7), 3, 2.780),
    RTableRow(3, 13, 3, F(1, 13), 1, 2.243),
    RTableRow(3, 11, 5, F(1, 11), 2, 2.520),
    RTableRow(3, 10, 4, F(1, 5), 3, 4.208, bold=True),
    RTableRow(3, 8, 2, F(1, 4), 3, 8.122, bold=True),
    RTableRow(3, 7, 6, F(1, 7), 1, 3.023, bold=True),
    RTableRow(3, 5, 4, F(1, 5), 1, 4.720, bold=True),
]

# q = 2 degree table
Q2_ROWS = [
    RTableRow(2, 45, 12, F(2, 15), 6, 1.963),
    RTableRow(2, 42, 6, F(2, 21), 6, 1.801),
    RTableRow(2, 36, 6, F(1, 12), 8, 1.895,
              note="rho printed as 1/12 and R computed from it; true rho = 1/18",
              recomputed=1.765313, mismatched=("rho", "R")),
    RTableRow(2, 35, 12, F(4, 35), 4, 1.856),
    RTableRow(2, 30, 4, F(1, 15), 6, 1.953),
    RTableRow(2, 28, 3, F(1, 28), 6, 1.811),
    RTableRow(2, 27, 3, F(1, 9), 3, 1.839,
              note="s printed as 3; ord_27(2) = 18, which reproduces the printed R",
              mismatched=("s",)),
    RTableRow(2, 25, 20, F(2, 25), 3, 1.714),
    RTableRow(2, 24, 2, F(1, 24), 6, 1.887),
    RTableRow(2, 22, 10, F(1, 22), 4, 1.717),
    RTableRow(2, 21, 6, F(4, 21), 3, 2.662, bold=True),
    RTableRow(2, 20, 4, F(1, 21), 5, 1.941,
              note="rho printed as 1/21 and R computed from it; true rho = 1/20",
              recomputed=1.952345, mismatched=("rho", "R")),
    RTableRow(2, 18, 6, F(1, 9), 4, 2.290, bold=True),
    RTableRow(2, 15, 4, F(2, 15), 3, 2.892, bold=True),
    RTableRow(2, 14, 3, F(1, 14), 3, 2.438, bold=True),
    RTableRow(2, 13, 12, F(1, 13), 1, 1.814),
]

# q = 5 and q = 7 summary rows (R rounded up to two decimals)
CASE2_ROWS = [
    RTableRow(5, 9, 6, F(2, 9), 3, 4.49, decimals=2),
    RTableRow(5, 18, 6, F(2, 9), 4, 3.85, decimals=2,
              note="u printed as 4; omega(Q) = 6, which reproduces the printed R",
              mismatched=("u",)),
    RTableRow(5, 24, 2, F(1, 6), 8, 3.91, decimals=2),
    RTableRow(7, 9, 3, F(1, 3), 1, 4.82, decimals=2, t=3,
              sieving_primes=(19, 37, 1063),
              note="published 4.82 is not reproducible under any parametrization; "
                   "the inequality value for this partition is 5.5327 (same verdict)",
              recomputed=5.532750, mismatched=("R",), delta_printed=0.919),
]

ALL_R_ROWS = Q4_ROWS + Q3_ROWS + Q2_ROWS + CASE2_ROWS


@dataclass(frozen=True)
class DecompositionGolden:
    """Worked sieve decompositions quoted with explicit numerics."""

    q: int
    n: int
    core_primes: tuple[int, ...]
    sieving_primes: tuple[int, ...]
    core_poly_count: int  # factors of the reduced target kept in the core
    delta_published: float  # truncated as printed
    Delta_frozen: float  # recomputed, full precision to 4 decimals
    W_core: int
    criterion_frozen: float  # (2 W(k0) Delta)^(2/n), recomputed
    bound_published: float  # quoted upper bound on the criterion value


DECOMPOSITION_GOLDENS = [
    # m0 = 15; 10 linear factors in the core and 6 sieving per side,
    # together with the four large primes
    DecompositionGolden(17, 16, (3, 5), (29, 18913, 41761, 184417), 10,
                        delta_published=0.2595, Delta_frozen=59.7917, W_core=1 << 22,
                        criterion_frozen=12.2332, bound_published=12.24),
    # all five primes sieve against the full x^3 - 1 core on both sides
    DecompositionGolden(4, 12, (), (5, 7, 13, 17, 241), 3,
                        delta_published=0.5172, Delta_frozen=9.7332, W_core=1 << 6,
                        criterion_frozen=3.2803, bound_published=3.29),
    # degree-1/2 core, degree-3 and degree-6 factors sieve with the primes
    DecompositionGolden(2, 21, (), (7, 127, 337), 2,
                        delta_published=0.2838, Delta_frozen=37.2359, W_core=16,
                        criterion_frozen=1.9632, bound_published=2.0),
]

# multiplicative-sieving R values quoted in the text: (q, n, core, sieving, R bound)
SIEVED_R_GOLDENS = [
    (9, 16, (2, 5), (17, 41, 193, 21523361), 7.4),
    (13, 8, (2,), (5, 7, 17, 14281), 11.0),
    (5, 16, (2, 3), (13, 17, 313, 11489), 5.0),
    (4, 7, (3,), (43, 127), 3.93),
    (4, 10, (3,), (5, 11, 31, 41), 3.73),
    (2, 11, (), (23, 89), 2.0),
    (2, 18, (), (3, 7, 19, 73), 2.0),
    (13, 6, (7,), (61, 157), 13.0),
    (16, 3, (7,), (13,), 16.0),
]
