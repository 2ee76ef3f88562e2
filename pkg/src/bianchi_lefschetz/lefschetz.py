"""Lefschetz numbers of the conjugation involutions.

Three formula families live here:

* the principal-level formula
  L(sigma, Gamma(N), E_{k,k}) = (A + 2B) * (-N^3/12) * prod_{p|N}(1 - p^-2) * (k+1),
  where A and B count translates of the two kinds of fixed surfaces and
  come from a table indexed by d mod 4 and the 2-exponent of the level;

* its specialization to odd unramified prime powers,
  -2^(t-1) resp. -2^t times (p^{3n} - p^{3n-2})/12 * (k+1);

* the level-one four-term formula for both involutions, whose two factors
  written ((k+1)/4) and ((k+1)/3) admit several readings.  The readings
  are pluggable (BracketVariant) and an adjudication harness decides which
  one survives the integrality, parity and weight-zero anchor checks; the
  shipped default is the one the harness selects.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import prod

from .exactmath import (ConformanceError, InputError, as_integer, factorize,
                        hilbert2, kronecker, legendre, sym_power_trace)
from .quadfield import RAMIFIED, QuadField, splitting_type, two_torsion_count

SIGMA, TAU = "sigma", "tau"

RATIONAL = "rational"
KRONECKER = "kronecker"
TORSION_CHAR = "torsion-char"
BRACKET_VARIANTS = (RATIONAL, KRONECKER, TORSION_CHAR)

# Selected by adjudicate_brackets over d in {-2,-5,-7,-11}, k <= 24: the
# only reading that keeps every even-weight integrality and parity check.
DEFAULT_BRACKET = TORSION_CHAR

S_ODD_PRIMES = "odd-primes-of-level"   # count all odd rational primes dividing N
S_LITERAL = "odd-ramified-of-level"    # count only the odd ramified ones


def bracket_factor(variant: str, modulus: int, k: int) -> Fraction:
    """One bracket factor ((k+1)/modulus), modulus in {3, 4}.

    Every registered reading is pinned to 1 at weight zero; that common
    anchor is what makes the weight-zero cross-identities variant-free.
    For k >= 1 the readings diverge: plain rational division, the
    Kronecker symbol (k+1 | modulus), or the symmetric-power character of
    an element of order 4 (trace 0) resp. 3 (trace -1).
    """
    if modulus not in (3, 4):
        raise InputError(f"bracket modulus must be 3 or 4, got {modulus}")
    if k == 0:
        return Fraction(1)
    if variant == RATIONAL:
        return Fraction(k + 1, modulus)
    if variant == KRONECKER:
        return Fraction(kronecker(k + 1, modulus))
    if variant == TORSION_CHAR:
        return Fraction(sym_power_trace(0 if modulus == 4 else -1, k))
    raise InputError(f"unknown bracket variant {variant!r}")


# ---------------------------------------------------------------------------
# Principal congruence levels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Level:
    field: QuadField
    N: int
    factors: tuple[tuple[int, int, str], ...]  # (p, exponent, splitting)
    j2: int          # exponent of a prime over 2 in the level ideal
    s: int           # table exponent parameter, see make_level
    s_mode: str
    A: Fraction
    B: Fraction
    ab_warning: bool  # set when A or B alone is fractional

    @property
    def a_plus_2b(self) -> Fraction:
        return self.A + 2 * self.B


def _table_ab(d_mod4: int, j2: int, ts: int) -> tuple[Fraction, Fraction]:
    """Fixed-surface translate counts by (d mod 4, j2), exponents in ts = t - s."""
    two = Fraction(2)
    if d_mod4 == 1:
        return two**ts, Fraction(0)
    if d_mod4 == 2:
        if j2 in (0, 1):
            return two**ts, two ** (ts - 1)
        if j2 == 2:
            return 8 * two**ts, Fraction(0)
        return 8 * two ** (ts - 1), Fraction(0)
    # d = 3 mod 4
    if j2 == 0:
        return two**ts, two ** (ts - 1)
    if j2 == 1:
        return two**ts, Fraction(0)
    if j2 == 2:
        return 8 * two**ts, Fraction(0)
    if j2 % 2:
        return two ** (ts - 1), Fraction(0)
    return 8 * two ** (ts - 1), Fraction(0)


def make_level(field: QuadField, N: int, s_mode: str = S_ODD_PRIMES) -> Level:
    if N <= 2:
        raise InputError(f"principal levels require N > 2, got {N}")
    if s_mode not in (S_ODD_PRIMES, S_LITERAL):
        raise InputError(f"unknown s_mode {s_mode!r}")
    factors = tuple((p, e, splitting_type(field, p)) for p, e in factorize(N))
    v2 = next((e for p, e, _ in factors if p == 2), 0)
    j2 = 2 * v2 if 2 in field.ramified_primes else v2
    if s_mode == S_ODD_PRIMES:
        s = sum(1 for p, _, _ in factors if p != 2)
    else:
        s = sum(1 for p, _, spl in factors if p != 2 and spl == RAMIFIED)
    A, B = _table_ab(field.d % 4, j2, field.t - s)
    assert A >= 0 and B >= 0 and A + 2 * B > 0
    warning = A.denominator != 1 or B.denominator != 1
    return Level(field=field, N=N, factors=factors, j2=j2, s=s, s_mode=s_mode,
                 A=A, B=B, ab_warning=warning)


def rohlfs_ab(field: QuadField, level: Level | int) -> tuple[Fraction, Fraction]:
    """The translate counts (A, B) of the two fixed-surface families.

    Only A + 2B feeds the Lefschetz formula; A or B alone can be a half
    power of 2 (the level carries a warning flag when that happens).
    """
    if isinstance(level, int):
        level = make_level(field, level)
    return level.A, level.B


def lefschetz_sigma_principal(field: QuadField, level: Level | int, k: int) -> int:
    """L(sigma, Gamma(N), E_{k,k}) for N > 2, as an exact integer."""
    if isinstance(level, int):
        level = make_level(field, level)
    if k < 0:
        raise InputError(f"weight must be >= 0, got {k}")
    core = level.a_plus_2b * Fraction(-level.N**3, 12) * (k + 1)
    for p, _, _ in level.factors:
        core *= 1 - Fraction(1, p * p)
    return as_integer(core, f"L(sigma, Gamma({level.N}), k={k})")


def lefschetz_sigma_prime_power(field: QuadField, p: int, n: int, k: int) -> int:
    """The prime-power specialization, for odd unramified p and p^n > 2.

    -2^(t-1) * (p^{3n} - p^{3n-2})/12 * (k+1) when d = 1 mod 4, and with
    2^t in place of 2^(t-1) otherwise.  An independent code path from the
    table-driven principal formula; the two must agree on their common
    domain.
    """
    if p == 2:
        raise InputError("prime-power Lefschetz formula requires an odd prime")
    spl = splitting_type(field, p)
    if spl == RAMIFIED:
        raise InputError(f"prime {p} ramifies in {field}; formula does not apply")
    if n < 1 or k < 0:
        raise InputError("need n >= 1 and k >= 0")
    e = field.t - 1 if field.d % 4 == 1 else field.t
    val = -(2**e) * Fraction(p ** (3 * n) - p ** (3 * n - 2), 12) * (k + 1)
    return as_integer(val, f"L(sigma, Gamma({p}^{n}), k={k})")


def classical_gamma_invariants(N: int) -> tuple[int, Fraction, Fraction]:
    """Cusp count and Euler characteristics of the classical level-N curve.

    Returns (cusps, chi of the compactified surface, chi of the group):
    cusps = N^2/2 * prod(1 - p^-2), chi_X = -N^2 (N-6)/12 * prod(...),
    chi_Gamma = -N^3/12 * prod(...); the identity
    chi_Gamma = chi_X - cusps holds on the nose.
    """
    if N < 3:
        raise InputError(f"classical invariants need N >= 3, got {N}")
    prod_sq = prod((1 - Fraction(1, p * p) for p, _ in factorize(N)), start=Fraction(1))
    cusps = as_integer(Fraction(N * N, 2) * prod_sq, "cusp count")
    chi_x = Fraction(-1, 12) * N * N * (N - 6) * prod_sq
    chi_gamma = Fraction(-1, 12) * N**3 * prod_sq
    if chi_gamma != chi_x - cusps:
        raise ConformanceError("chi(Gamma_N) != chi(X_N) - cusps")
    return cusps, chi_x, chi_gamma


# ---------------------------------------------------------------------------
# Level one: the four-term formula for sigma and tau
# ---------------------------------------------------------------------------


def hilbert_at(field: QuadField, a: int, p: int) -> int:
    """Local norm symbol (a | p) of K/Q at a ramified prime p.

    At odd p this is the Legendre symbol (a/p); at p = 2 it is the 2-adic
    Hilbert symbol (a, d)_2.
    """
    return hilbert2(a, field.d) if p == 2 else legendre(a, p)


@dataclass(frozen=True)
class LevelOneLefschetz:
    d: int
    involution: str
    k: int
    variant: str
    value: Fraction

    @property
    def integral(self) -> bool:
        return self.value.denominator == 1


def lefschetz_level_one(field: QuadField, involution: str, k: int,
                        variant: str = DEFAULT_BRACKET) -> LevelOneLefschetz:
    """L(rho, SL2(O), E_{k,k}) for rho in {sigma, tau}.

    Four exact-rational terms; non-integral totals are reported through
    the result rather than raised, because integrality is exactly what
    adjudicates the bracket readings.
    """
    if involution not in (SIGMA, TAU):
        raise InputError(f"unknown involution {involution!r}")
    if k < 0:
        raise InputError(f"weight must be >= 0, got {k}")
    q = 1 if involution == TAU else -1
    odd_ram = [p for p in field.ramified_primes if p != 2]
    two_ram = 2 in field.ramified_primes
    sgn = (-1) ** k

    t1 = Fraction(-q, 12) * (k + 1)
    t1 *= prod((p + legendre(q, p) for p in odd_ram), start=1)
    if two_ram:
        t1 *= field.D2 + hilbert_at(field, q, 2)

    t2 = Fraction(q, 12) * sgn * (k + 1)
    t2 *= prod((1 + legendre(-q, p) for p in odd_ram), start=1)
    if two_ram:
        t2 *= 4 + hilbert_at(field, -q, 2)

    t3 = Fraction(1, 2) * bracket_factor(variant, 4, k)
    t3 *= prod((1 + legendre(-2 * q, p) for p in odd_ram), start=1)

    first = prod((1 + hilbert_at(field, -3 * q, p)
                  for p in field.ramified_primes if p != 3), start=1)
    second = prod((1 + hilbert_at(field, -q, p)
                   for p in field.ramified_primes), start=1)
    t4 = Fraction(1, 3) * (first + sgn * second) * bracket_factor(variant, 3, k)

    value = sgn * (t1 + t2 + t3 + t4)
    return LevelOneLefschetz(d=field.d, involution=involution, k=k,
                             variant=variant, value=Fraction(value))


# ---------------------------------------------------------------------------
# Bracket adjudication
# ---------------------------------------------------------------------------


@dataclass
class VariantRecord:
    variant: str
    integrality_failures: list[tuple[int, str, int, str]] = dc_field(default_factory=list)
    parity_failures_even: list[tuple[int, int]] = dc_field(default_factory=list)
    parity_failures_odd: list[tuple[int, int]] = dc_field(default_factory=list)
    anchor_failures: list[tuple[int, str, str]] = dc_field(default_factory=list)

    @property
    def even_ok(self) -> bool:
        """All even-weight checks pass: integrality, parity and anchors."""
        return (not self.anchor_failures
                and not self.parity_failures_even
                and not any(k % 2 == 0 for _, _, k, _ in self.integrality_failures))

    @property
    def strict_ok(self) -> bool:
        return self.even_ok and not self.parity_failures_odd \
            and not self.integrality_failures


@dataclass
class AdjudicationReport:
    k_max: int
    d_values: tuple[int, ...]
    records: dict[str, VariantRecord]

    @property
    def passing_even(self) -> list[str]:
        return [v for v in BRACKET_VARIANTS if self.records[v].even_ok]

    @property
    def passing_strict(self) -> list[str]:
        return [v for v in BRACKET_VARIANTS if self.records[v].strict_ok]

    def summary_lines(self) -> list[str]:
        lines = []
        for v in BRACKET_VARIANTS:
            r = self.records[v]
            lines.append(
                f"variant {v}: integrality failures {len(r.integrality_failures)}, "
                f"even-k parity failures {len(r.parity_failures_even)}, "
                f"odd-k parity failures {len(r.parity_failures_odd)}, "
                f"anchor failures {len(r.anchor_failures)}, "
                f"even-k clean: {r.even_ok}")
        lines.append(f"variants passing all even-k checks: {self.passing_even}")
        return lines


def adjudicate_brackets(fields: list[QuadField], k_max: int) -> AdjudicationReport:
    """Run every bracket reading over the grid and record what breaks.

    Three checks per (variant, d, k): integrality of both Lefschetz
    numbers; for k > 0 the parity constraint
    L(sigma) + L(tau) = -2^t (mod 4) needed for the GL2 trace to be an
    integer; and at k = 0 the anchor identities
    L(sigma) = 2 + h - 2^(t-1), L(tau) = 2 - h - 2^(t-1), valid on grids
    where weight-zero level-one cuspidal cohomology vanishes (the caller
    picks such a grid).  Odd-k parity is recorded separately: it is an
    open diagnostic, not an acceptance gate.
    """
    records = {v: VariantRecord(variant=v) for v in BRACKET_VARIANTS}
    for variant in BRACKET_VARIANTS:
        rec = records[variant]
        for f in fields:
            anchor_sigma = 2 + f.h - two_torsion_count(f)
            anchor_tau = 2 - f.h - two_torsion_count(f)
            for k in range(k_max + 1):
                ls = lefschetz_level_one(f, SIGMA, k, variant)
                lt = lefschetz_level_one(f, TAU, k, variant)
                for r in (ls, lt):
                    if not r.integral:
                        rec.integrality_failures.append(
                            (f.d, r.involution, k, str(r.value)))
                if k == 0:
                    if ls.value != anchor_sigma:
                        rec.anchor_failures.append((f.d, SIGMA, str(ls.value)))
                    if lt.value != anchor_tau:
                        rec.anchor_failures.append((f.d, TAU, str(lt.value)))
                    continue
                total = ls.value + lt.value
                parity_ok = total.denominator == 1 and (total + 2**f.t) % 4 == 0
                if not parity_ok:
                    if k % 2 == 0:
                        rec.parity_failures_even.append((f.d, k))
                    else:
                        rec.parity_failures_odd.append((f.d, k))
    return AdjudicationReport(k_max=k_max, d_values=tuple(f.d for f in fields),
                              records=records)
