"""Boundary (Eisenstein) side: cusp counts, traces in degrees 0/1/2, and
the conjugation operator on the span of Sczech cocycles.

The degree-1 trace at level p^n (p inert, class number one) has two
routes: a closed formula, and the numeric trace of an explicit operator
on the formal span of the cocycles Psi(u, v), (u, v) != (0, 0), indexed
by four residues mod N.  After eliminating Psi(0, 0) the operator's entry
at (row (s,t), column (u,v)) is

    -1/(N^2 (N^2-1))  -  phi(pairing) / N^2,

so its trace is -(N^2+1) whenever phi vanishes on the diagonal pairing.
Which character phi and which pairing argument make this well defined is
not obvious; three readings are registered as CharacterVariant and the
construction-time periodicity check plus the trace / involution tests
pick the survivor rather than assuming one.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactmath import ConformanceError, InputError, as_integer, factorize
from .quadfield import INERT, RAMIFIED, SPLIT, QuadField, splitting_type, two_torsion_count

SIGMA, TAU = "sigma", "tau"

LITERAL_D = "literal-d"
INVERSE_DIFFERENT = "inverse-different"
SYMPLECTIC_INVDIFF = "symplectic-invdiff"
CHARACTER_VARIANTS = (LITERAL_D, INVERSE_DIFFERENT, SYMPLECTIC_INVDIFF)

# Selected by the adjudication grid in verify/sczech: the only variant
# whose pairing vanishes on the diagonal (trace -(N^2+1)) and squares to
# the identity on the span.
DEFAULT_VARIANT = SYMPLECTIC_INVDIFF

SCZECH_SIZE_GUARD = 10**4


class IllDefinedVariantError(ConformanceError):
    """The variant's character is not trivial on O, so it cannot descend
    to classes of torsion points; construction refuses it."""


# ---------------------------------------------------------------------------
# Cusp counts and boundary dimensions
# ---------------------------------------------------------------------------


def cusp_count(field: QuadField, N: int) -> int:
    """c(Gamma(N)) = h * N^4 * prod over primes P of (N) of (1 - Norm(P)^-2)."""
    if N < 3:
        raise InputError(f"cusp_count requires N >= 3, got {N}")
    total = field.h * Fraction(N) ** 4
    for p, _ in factorize(N):
        spl = splitting_type(field, p)
        if spl == SPLIT:
            total *= (1 - Fraction(1, p * p)) ** 2
        elif spl == INERT:
            total *= 1 - Fraction(1, p**4)
        else:
            total *= 1 - Fraction(1, p * p)
    return as_integer(total, "cusp count")


def boundary_dims(field: QuadField, N: int, k: int) -> tuple[int, int, int]:
    """Dimensions of the boundary cohomology in degrees 0, 1, 2: (c, 2c, c)."""
    c = cusp_count(field, N)
    return c, 2 * c, c


def eis_dim(field: QuadField, N: int, k: int) -> int:
    """dim of the Eisenstein part in each degree for k > 0; equals c(Gamma(N)).

    Doubles as the worst-case window for unknown Eisenstein traces.
    """
    if k <= 0:
        raise InputError("eis_dim is defined for k > 0; weight zero goes through "
                         "the degree-split level-one routes")
    return cusp_count(field, N)


# ---------------------------------------------------------------------------
# Degree-2 and degree-0 traces
# ---------------------------------------------------------------------------


def _check_unramified_level(field: QuadField, N: int, what: str) -> list[tuple[int, int]]:
    if N == 1:
        return []
    if N == 2:
        raise InputError(f"{what} requires N >= 3 (or N = 1), got 2")
    if N < 1:
        raise InputError(f"invalid level {N}")
    factors = factorize(N)
    for p, _ in factors:
        if splitting_type(field, p) == RAMIFIED:
            raise InputError(f"{what} requires unramified level; {p} ramifies in {field}")
    return factors


def trace_sigma_h2_eis(field: QuadField, N: int, k: int) -> int:
    """Trace of sigma on degree-2 Eisenstein cohomology at unramified level N.

    -2^(t-1) * prod (p^{2n} - p^{2n-2}) plus 1 at weight zero (the
    compactly-supported correction); level one is the empty product.
    """
    factors = _check_unramified_level(field, N, "trace_sigma_h2_eis")
    val = -two_torsion_count(field)
    for p, n in factors:
        val *= p ** (2 * n) - p ** (2 * n - 2)
    return val + (1 if k == 0 else 0)


def trace_tau_h2_eis(field: QuadField, N: int, k: int) -> int:
    """Same shape for tau, with per-prime factor p^{2n-1} - p^{2n-2}.

    The closed formula is kept authoritative here; the exhaustive coset
    census in finitering reports its own count next to this one, and the
    two are allowed to disagree (see fixed_coset_report).
    """
    factors = _check_unramified_level(field, N, "trace_tau_h2_eis")
    val = -two_torsion_count(field)
    for p, n in factors:
        val *= p ** (2 * n - 1) - p ** (2 * n - 2)
    return val + (1 if k == 0 else 0)


@dataclass(frozen=True)
class LevelOneTraces:
    """Traces of sigma on level-one Eisenstein cohomology in degrees 0/1/2.

    At weight zero all three are exact.  For k > 0 the degree-1 trace is
    not pinned by any closed formula here; it is reported as unknown with
    the window |tr1| <= h and a nonpositivity hint coming from the
    boundary-eigenspace restriction at weight zero.
    """
    k: int
    tr0: int
    tr1: int | None
    tr2: int
    tr1_exact: bool
    tr1_window: int
    tr1_sign_hint: str


def level_one_sigma_traces(field: QuadField, k: int) -> LevelOneTraces:
    if k < 0:
        raise InputError(f"weight must be >= 0, got {k}")
    if k == 0:
        return LevelOneTraces(k=0, tr0=1, tr1=-field.h,
                              tr2=-two_torsion_count(field) + 1,
                              tr1_exact=True, tr1_window=field.h,
                              tr1_sign_hint="exact")
    return LevelOneTraces(k=k, tr0=0, tr1=None, tr2=-two_torsion_count(field),
                          tr1_exact=False, tr1_window=field.h,
                          tr1_sign_hint="nonpositive")


def trace_sigma_h1_eis(field: QuadField, p: int, n: int) -> int:
    """Trace of sigma on degree-1 Eisenstein cohomology of Gamma(p^n),
    trivial coefficients, class number one, p inert.

    -(p^2 + 1) for n = 1 and -(p^{2n} - p^{2n-2}) for n > 1.  The n = 1
    value is exactly the trace of the cocycle-span operator below, because
    at level p the nonzero cocycle classes biject with the cusps.
    """
    if field.h != 1:
        raise InputError(f"degree-1 trace formula requires class number one, h={field.h}")
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    spl = splitting_type(field, p)
    if spl != INERT:
        raise InputError(f"degree-1 trace formula requires an inert prime; {p} is {spl}")
    if n == 1:
        return -(p * p + 1)
    return -(p ** (2 * n) - p ** (2 * n - 2))


# ---------------------------------------------------------------------------
# The conjugation operator on the span of Sczech cocycles
# ---------------------------------------------------------------------------


def _character_on_omega(field: QuadField, variant: str) -> complex:
    """Value of the variant's character at omega (a generator of O over Z).

    The operator only descends to classes of (1/N)O / O when the character
    kills O; since it always kills 1, omega is the whole check.
    phi(z) = exp(2 pi i (z - conj z) / D) has a real exponent at z = omega
    (the D in the denominator is real, the numerator is sqrt(D)), while
    dividing by sqrt(D) instead gives exp(2 pi i) = 1.
    """
    sqrt_d = complex(0.0, abs(field.D) ** 0.5)  # sqrt(D) for D < 0
    if variant == LITERAL_D:
        return cmath.exp(2j * cmath.pi * sqrt_d / field.D)
    if variant in (INVERSE_DIFFERENT, SYMPLECTIC_INVDIFF):
        return cmath.exp(2j * cmath.pi * sqrt_d / sqrt_d)
    raise InputError(f"unknown character variant {variant!r}")


def variant_periodicity_defect(field: QuadField, variant: str) -> float:
    return abs(_character_on_omega(field, variant) - 1.0)


@dataclass
class SczechOperator:
    """Dense complex matrix of the conjugation action on the cocycle span.

    Index set: quadruples (a1, b1, a2, b2) mod N, zero excluded, in
    lexicographic order; the quadruple encodes the pair of torsion points
    u = (a1 + b1 w)/N, v = (a2 + b2 w)/N.
    """
    field: QuadField
    N: int
    variant: str
    indices: list[tuple[int, int, int, int]]
    matrix: np.ndarray

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def involution_defect(self) -> float:
        m = self.matrix
        eye = np.eye(m.shape[0], dtype=complex)
        return float(np.abs(m @ m - eye).max())


def _pairing_exponents(field: QuadField, N: int, variant: str,
                       a1, b1, a2, b2) -> np.ndarray:
    """Exponent table e with character value exp(2 pi i e / N).

    Write y(w) for the omega-coefficient of w in O, which is the perfect
    residue pairing Tr(w / sqrt(D)).  On integral lifts alpha = N*s,
    beta = N*t (row) and gamma = N*u, delta = N*v (column):

      symplectic-invdiff: e = y(alpha*delta - beta*gamma), the
        inverse-different character of the symplectic argument s*v - t*u;
      inverse-different:  e = y(alpha*conj(delta) - beta*conj(gamma)),
        the same character of the conjugated argument s*conj(v) - t*conj(u).

    Both are well defined mod N on residue-encoded classes; only the
    symplectic argument vanishes on the diagonal.
    """
    T = field.omega_trace

    def y_prod(x1, x2, z1, z2):
        # omega-coefficient of (x1 + x2 w)(z1 + z2 w)
        return (np.multiply.outer(x1, z2) + np.multiply.outer(x2, z1)
                + T * np.multiply.outer(x2, z2))

    if variant == SYMPLECTIC_INVDIFF:
        d1, d2 = a2, b2          # delta = column v
        g1, g2 = a1, b1          # gamma = column u
    elif variant == INVERSE_DIFFERENT:
        d1, d2 = (a2 + T * b2) % N, (-b2) % N   # conj(delta)
        g1, g2 = (a1 + T * b1) % N, (-b1) % N   # conj(gamma)
    else:
        raise IllDefinedVariantError(f"variant {variant!r} has no residue pairing")
    e = y_prod(a1, b1, d1, d2) - y_prod(a2, b2, g1, g2)
    return np.mod(e, N)


def sczech_operator(field: QuadField, N: int, variant: str = DEFAULT_VARIANT) -> SczechOperator:
    """Build the (N^4 - 1) x (N^4 - 1) operator matrix for the chosen variant."""
    if N < 2:
        raise InputError(f"sczech_operator requires N >= 2, got {N}")
    size = N**4 - 1
    if size > SCZECH_SIZE_GUARD:
        raise InputError(f"matrix size {size} exceeds the guard {SCZECH_SIZE_GUARD}")
    if variant not in CHARACTER_VARIANTS:
        raise InputError(f"unknown character variant {variant!r}")
    defect = variant_periodicity_defect(field, variant)
    if defect > 1e-12:
        raise IllDefinedVariantError(
            f"variant {variant!r} is not O-periodic (defect {defect:.3e}); "
            "it does not define an operator on classes of torsion points")

    indices = [(x1, y1, x2, y2)
               for x1 in range(N) for y1 in range(N)
               for x2 in range(N) for y2 in range(N)][1:]  # drop (0,0,0,0)
    arr = np.array(indices, dtype=np.int64)
    a1, b1, a2, b2 = arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3]
    e = _pairing_exponents(field, N, variant, a1, b1, a2, b2)
    chi = np.exp(2j * np.pi * e / N)
    n2 = N * N
    matrix = -1.0 / (n2 * (n2 - 1)) - chi / n2
    return SczechOperator(field=field, N=N, variant=variant,
                          indices=indices, matrix=matrix)


@dataclass(frozen=True)
class SczechTrace:
    value: float       # real part of the matrix trace
    imag: float        # diagnostic; must be ~0
    expected: int      # -(N^2 + 1)
    variant: str


def sczech_trace(field: QuadField, N: int, variant: str = DEFAULT_VARIANT) -> SczechTrace:
    op = sczech_operator(field, N, variant)
    tr = op.trace()
    return SczechTrace(value=tr.real, imag=tr.imag,
                       expected=-(N * N + 1), variant=variant)


def write_matrix_dump(op: SczechOperator, path: str) -> None:
    """Plain-text dump: one 'i j re im' row per entry, row-major, 17 digits."""
    with open(path, "w") as fh:
        m = op.matrix
        for i in range(m.shape[0]):
            row = m[i]
            for j in range(m.shape[1]):
                z = row[j]
                fh.write(f"{i} {j} {z.real:.17g} {z.imag:.17g}\n")
