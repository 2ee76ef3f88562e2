"""Brute-force layer: arithmetic and censuses in R = O/(N).

Elements of R are coefficient pairs (a, b) with 0 <= a, b < N meaning
a + b*omega.  The conjugation sigma sends omega to T - omega (T the trace
of omega), so it acts directly on pairs; split and inert levels share one
code path and no CRT decomposition is ever needed here (the tests build
the CRT isomorphism independently to cross-check).

The censuses in this module are the exhaustive side of dual-route checks:
SL2 orders, projective lines, unipotent-coset fixed-point counts under
the two involutions, and cusp counts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import (ConformanceError, InputError, as_integer, cache_fetch,
                        cache_store, factorize)
from .quadfield import INERT, RAMIFIED, SPLIT, QuadField, splitting_type

Elem = tuple[int, int]
Mat = tuple[Elem, Elem, Elem, Elem]  # (a, b, c, d) row-major

SIGMA, TAU = "sigma", "tau"


class FiniteRing:
    """The quotient ring O/(N) with its conjugation involution."""

    def __init__(self, field: QuadField, N: int):
        if N < 2:
            raise InputError(f"FiniteRing requires N >= 2, got {N}")
        self.field = field
        self.N = N
        self.T = field.omega_trace
        self.Nm = field.omega_norm
        # For each rational prime p | N: (p, splitting, roots of the minimal
        # polynomial of omega mod p).  The roots describe the maximal ideals
        # over p and drive the unit / unimodularity tests below.
        self.primes = []
        for p, e in factorize(N):
            spl = splitting_type(field, p)
            roots = [r for r in range(p) if (r * r - self.T * r + self.Nm) % p == 0]
            expected = {SPLIT: 2, RAMIFIED: 1, INERT: 0}[spl]
            if len(roots) != expected:
                raise ConformanceError(
                    f"root count {len(roots)} mod {p} contradicts splitting {spl}")
            self.primes.append((p, e, spl, tuple(roots)))
        self._elements: list[Elem] | None = None
        self._units: list[Elem] | None = None
        self._inverse: dict[Elem, Elem] | None = None

    # -- ring operations ----------------------------------------------------

    @property
    def zero(self) -> Elem:
        return (0, 0)

    @property
    def one(self) -> Elem:
        return (1, 0)

    def add(self, x: Elem, y: Elem) -> Elem:
        return ((x[0] + y[0]) % self.N, (x[1] + y[1]) % self.N)

    def sub(self, x: Elem, y: Elem) -> Elem:
        return ((x[0] - y[0]) % self.N, (x[1] - y[1]) % self.N)

    def neg(self, x: Elem) -> Elem:
        return ((-x[0]) % self.N, (-x[1]) % self.N)

    def mul(self, x: Elem, y: Elem) -> Elem:
        # (a + b w)(c + e w) with w^2 = T w - Nm
        a, b = x
        c, e = y
        return ((a * c - self.Nm * b * e) % self.N,
                (a * e + b * c + self.T * b * e) % self.N)

    def sigma(self, x: Elem) -> Elem:
        # conj(a + b w) = a + b (T - w)
        return ((x[0] + self.T * x[1]) % self.N, (-x[1]) % self.N)

    def elements(self) -> list[Elem]:
        if self._elements is None:
            self._elements = [(a, b) for a in range(self.N) for b in range(self.N)]
        return self._elements

    # -- units and unimodular pairs ------------------------------------------

    def _in_maximal_ideal(self, x: Elem, p: int, spl: str, root: int | None) -> bool:
        if spl == INERT:
            return x[0] % p == 0 and x[1] % p == 0
        return (x[0] + x[1] * root) % p == 0

    def is_unit(self, x: Elem) -> bool:
        for p, _, spl, roots in self.primes:
            if spl == INERT:
                if self._in_maximal_ideal(x, p, spl, None):
                    return False
            else:
                for r in roots:
                    if self._in_maximal_ideal(x, p, spl, r):
                        return False
        return True

    def is_unimodular(self, x: Elem, y: Elem) -> bool:
        """True when the pair (x, y) generates the unit ideal of R.

        Checked maximal ideal by maximal ideal: the pair fails exactly
        when both coordinates fall into a common maximal ideal.
        """
        for p, _, spl, roots in self.primes:
            if spl == INERT:
                if self._in_maximal_ideal(x, p, spl, None) and \
                   self._in_maximal_ideal(y, p, spl, None):
                    return False
            else:
                for r in roots:
                    if self._in_maximal_ideal(x, p, spl, r) and \
                       self._in_maximal_ideal(y, p, spl, r):
                        return False
        return True

    def units(self) -> list[Elem]:
        if self._units is None:
            self._units = [x for x in self.elements() if self.is_unit(x)]
        return self._units

    def inverse(self, x: Elem) -> Elem:
        if self._inverse is None:
            inv: dict[Elem, Elem] = {}
            units = self.units()
            for u in units:
                if u in inv:
                    continue
                for v in units:
                    if self.mul(u, v) == self.one:
                        inv[u] = v
                        inv[v] = u
                        break
            self._inverse = inv
        return self._inverse[x]


# -- 2x2 matrices -------------------------------------------------------------


def mat_identity(ring: FiniteRing) -> Mat:
    return (ring.one, ring.zero, ring.zero, ring.one)


def mat_mul(ring: FiniteRing, m1: Mat, m2: Mat) -> Mat:
    a1, b1, c1, d1 = m1
    a2, b2, c2, d2 = m2
    return (
        ring.add(ring.mul(a1, a2), ring.mul(b1, c2)),
        ring.add(ring.mul(a1, b2), ring.mul(b1, d2)),
        ring.add(ring.mul(c1, a2), ring.mul(d1, c2)),
        ring.add(ring.mul(c1, b2), ring.mul(d1, d2)),
    )


def mat_det(ring: FiniteRing, m: Mat) -> Elem:
    a, b, c, d = m
    return ring.sub(ring.mul(a, d), ring.mul(b, c))


def sigma_mat(ring: FiniteRing, m: Mat) -> Mat:
    """Entry-wise conjugation."""
    return tuple(ring.sigma(e) for e in m)  # type: ignore[return-value]


def tau_mat(ring: FiniteRing, m: Mat) -> Mat:
    """Twisted conjugation: entry-wise sigma, then negate the off-diagonal.

    Conjugating by diag(-1, 1) flips the sign of b and c only.
    """
    a, b, c, d = (ring.sigma(e) for e in m)
    return (a, ring.neg(b), ring.neg(c), d)


# -- orders and enumerations ---------------------------------------------------


def sl2_order_formula(field: QuadField, N: int) -> int:
    """#SL2(O/(N)) = N^6 * prod over primes of (N) of (1 - Norm(P)^-2)."""
    total = Fraction(N) ** 6
    for p, _ in factorize(N):
        spl = splitting_type(field, p)
        if spl == SPLIT:
            total *= (1 - Fraction(1, p * p)) ** 2
        elif spl == INERT:
            total *= 1 - Fraction(1, p**4)
        else:
            total *= 1 - Fraction(1, p * p)
    return as_integer(total, "SL2 order")


def _sl2_count_exhaustive(ring: FiniteRing) -> int:
    # Count quadruples with a*d - b*c = 1 through the product-count table:
    # sum over v of #{(b,c): bc = v} * #{(a,d): ad = 1 + v}.
    prod: Counter[Elem] = Counter()
    els = ring.elements()
    for x in els:
        for y in els:
            prod[ring.mul(x, y)] += 1
    return sum(n * prod.get(ring.add(ring.one, v), 0) for v, n in prod.items())


def sl2_order(ring: FiniteRing) -> int:
    """Order of SL2(O/(N)): exhaustive for |R| <= 81, closed formula beyond.

    Wherever both routes run they must agree; a mismatch raises, since it
    would mean either the enumeration or the norm formula is wrong.
    """
    key = f"sl2_d{ring.field.d}_N{ring.N}"
    cached = cache_fetch(key)
    if cached is not None:
        return cached
    formula = sl2_order_formula(ring.field, ring.N)
    if ring.N <= 9:
        exhaustive = _sl2_count_exhaustive(ring)
        if exhaustive != formula:
            raise ConformanceError(
                f"SL2 order mismatch at (d={ring.field.d}, N={ring.N}): "
                f"enumeration {exhaustive} vs formula {formula}")
    cache_store(key, formula)
    return formula


def enumerate_sl2(ring: FiniteRing) -> list[Mat]:
    """All of SL2(R).  Brute filter for small R, column completion for local R."""
    els = ring.elements()
    n4 = len(els) ** 4
    local = len(ring.primes) == 1 and ring.primes[0][2] in (INERT, RAMIFIED)
    if n4 > 200_000 and not local:
        raise InputError(f"SL2 enumeration too large for (d={ring.field.d}, N={ring.N})")
    if n4 <= 200_000 and not local:
        one = ring.one
        return [(a, b, c, d)
                for a in els for b in els for c in els for d in els
                if ring.sub(ring.mul(a, d), ring.mul(b, c)) == one]
    # Local ring: every unimodular column has a unit coordinate.  Complete
    # each column (a, c) to one matrix, then sweep the unipotent fiber.
    out: list[Mat] = []
    for a in els:
        for c in els:
            if not ring.is_unimodular(a, c):
                continue
            if ring.is_unit(a):
                b0, d0 = ring.zero, ring.inverse(a)
            else:
                b0, d0 = ring.neg(ring.inverse(c)), ring.zero
            for x in els:
                out.append((a, ring.add(b0, ring.mul(x, a)), c, ring.add(d0, ring.mul(x, c))))
    return out


def projective_line(ring: FiniteRing) -> list[tuple[Elem, Elem]]:
    """Canonical representatives of P^1(O/(N)) for prime-power N.

    A point is a unimodular pair up to unit scaling; the representative is
    the minimum of the orbit in coefficient encoding.
    """
    if len(ring.primes) != 1:
        raise InputError("projective_line is implemented for prime-power N only")
    units = ring.units()
    reps = set()
    for x in ring.elements():
        for y in ring.elements():
            if ring.is_unimodular(x, y):
                reps.add(min((*ring.mul(u, x), *ring.mul(u, y)) for u in units))
    return sorted(((e[0], e[1]), (e[2], e[3])) for e in reps)


def projective_line_zmod(n: int) -> list[tuple[int, int]]:
    """P^1(Z/n): canonical unimodular pairs up to units of Z/n."""
    from math import gcd

    units = [u for u in range(n) if gcd(u, n) == 1]
    reps = set()
    for x in range(n):
        for y in range(n):
            if gcd(gcd(x, y), n) != 1:
                continue
            reps.add(min(((u * x) % n, (u * y) % n) for u in units))
    return sorted(reps)


def fixed_coset_count(ring: FiniteRing, involution: str) -> int:
    """Unipotent cosets of SL2(R) at infinity fixed by the involution.

    Left cosets of the upper-unitriangular subgroup biject with unimodular
    columns (a, c); the involution fixes a coset exactly when it fixes the
    column: (sigma a, sigma c) = (a, c) for sigma and
    (sigma a, -sigma c) = (a, c) for tau.  Requires N = p^n with p an odd
    unramified prime.
    """
    if involution not in (SIGMA, TAU):
        raise InputError(f"unknown involution {involution!r}")
    if len(ring.primes) != 1:
        raise InputError("fixed_coset_count requires a prime-power level")
    p, _, spl, _ = ring.primes[0]
    if p == 2 or spl == RAMIFIED:
        raise InputError("fixed_coset_count requires an odd unramified prime")
    count = 0
    for a in ring.elements():
        sa = ring.sigma(a)
        if sa != a:
            continue
        for c in ring.elements():
            sc = ring.sigma(c)
            want = sc if involution == SIGMA else ring.neg(sc)
            if want == c and ring.is_unimodular(a, c):
                count += 1
    return count


@dataclass(frozen=True)
class CensusReport:
    """Exhaustive census next to the closed-formula prediction.

    For tau the two numbers are allowed to disagree; the report carries a
    match flag precisely so the disagreement is visible instead of being
    silently resolved either way.
    """
    d: int
    p: int
    n: int
    involution: str
    census: int
    closed_formula: int
    matches: bool


def fixed_coset_report(ring: FiniteRing, involution: str) -> CensusReport:
    census = fixed_coset_count(ring, involution)
    p, n = ring.primes[0][0], ring.primes[0][1]
    if involution == SIGMA:
        formula = p ** (2 * n) - p ** (2 * n - 2)
    else:
        formula = p ** (2 * n - 1) - p ** (2 * n - 2)
    return CensusReport(d=ring.field.d, p=p, n=n, involution=involution,
                        census=census, closed_formula=formula,
                        matches=census == formula)


def cusp_count_bruteforce(field: QuadField, N: int) -> int:
    """Number of cusps of the level-N principal congruence subgroup,
    computed as h * #SL2(O/(N)) / N^2 with the enumerated SL2 order.

    N >= 3 keeps -1 out of the subgroup, which the coset counting assumes.
    """
    if N < 3:
        raise InputError(f"cusp_count_bruteforce requires N >= 3, got {N}")
    order = sl2_order(FiniteRing(field, N))
    total = field.h * order
    if total % (N * N):
        raise ConformanceError(f"SL2 order {order} not divisible by N^2 = {N * N}")
    return total // (N * N)
