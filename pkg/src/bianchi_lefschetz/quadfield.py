"""Invariants of the imaginary quadratic field K = Q(sqrt(d)).

A field is described by a square-free d < 0 with d not in {-1, -3}; the
two excluded discriminants carry extra units that break the standing
assumptions of every formula downstream, so they are rejected outright.

The ring of integers is Z + Z*omega with omega = sqrt(d) when
d = 2, 3 (mod 4) and omega = (1 + sqrt(d))/2 when d = 1 (mod 4).  All
other modules address elements of O as integer pairs (a, b) meaning
a + b*omega; the uniform multiplication rule is
omega^2 = T*omega - Nm with T = trace(omega), Nm = norm(omega).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmath import InputError, factorize, is_prime, kronecker


@dataclass(frozen=True)
class QuadField:
    d: int                          # square-free, negative, not -1 or -3
    D: int                          # field discriminant: d or 4d
    ramified_primes: tuple[int, ...]
    t: int                          # number of ramified rational primes
    D2: int                         # 2-part of D: 1, 4 or 8
    h: int                          # class number
    omega_trace: int                # T  = omega + conj(omega)
    omega_norm: int                 # Nm = omega * conj(omega)

    def __str__(self) -> str:
        return f"Q(sqrt({self.d}))"


def is_square_free(n: int) -> bool:
    return all(e == 1 for _, e in factorize(abs(n)))


def reduced_forms(D: int) -> list[tuple[int, int, int]]:
    """Primitive reduced positive-definite forms (a, b, c) of discriminant D.

    Reduction means |b| <= a <= c with b >= 0 whenever |b| = a or a = c;
    one form per class, so the length of this list is the class number of
    the (fundamental) discriminant D < 0.
    """
    if D >= 0 or D % 4 not in (0, 1):
        raise InputError(f"not a negative quadratic discriminant: {D}")
    from math import gcd, isqrt

    forms = []
    a_max = isqrt(-D // 3)
    for a in range(1, a_max + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            forms.append((a, b, c))
    return forms


def class_number_from_discriminant(D: int) -> int:
    from .exactmath import cache_fetch, cache_store

    cached = cache_fetch(f"classnum_D{D}")
    if cached is not None:
        return cached
    h = len(reduced_forms(D))
    cache_store(f"classnum_D{D}", h)
    return h


def ambiguous_form_count(D: int) -> int:
    """Number of reduced forms fixed by the class-group inversion.

    A reduced form is ambiguous exactly when b = 0, a = b or a = c; genus
    theory says there are 2^(t-1) of them for a fundamental D with t
    ramified primes, which is what the tests cross-check.
    """
    return sum(1 for (a, b, c) in reduced_forms(D) if b == 0 or a == b or a == c)


def make_field(d: int) -> QuadField:
    """Build the QuadField for a square-free d < 0, d not in {-1, -3}."""
    if d >= 0:
        raise InputError(f"d must be negative, got {d}")
    if d in (-1, -3):
        raise InputError("d must be a square-free negative integer with d != -1, -3 "
                         "(these fields have extra units)")
    if not is_square_free(d):
        raise InputError(f"d must be square-free, got {d}")
    if d % 4 == 1:
        D = d
        omega_trace, omega_norm = 1, (1 - d) // 4
    else:
        D = 4 * d
        omega_trace, omega_norm = 0, -d
    ramified = tuple(p for p, _ in factorize(abs(D)))
    v2 = next((e for p, e in factorize(abs(D)) if p == 2), 0)
    return QuadField(
        d=d,
        D=D,
        ramified_primes=ramified,
        t=len(ramified),
        D2=2**v2,
        h=class_number_from_discriminant(D),
        omega_trace=omega_trace,
        omega_norm=omega_norm,
    )


SPLIT, INERT, RAMIFIED = "split", "inert", "ramified"


def splitting_type(field: QuadField, p: int) -> str:
    """Behavior of the rational prime p in O: split, inert or ramified."""
    if not is_prime(p):
        raise InputError(f"splitting_type requires a prime, got {p}")
    if p in field.ramified_primes:
        return RAMIFIED
    return SPLIT if kronecker(field.D, p) == 1 else INERT


def class_number(field: QuadField) -> int:
    """Class number of K, from the reduced-form enumeration."""
    return field.h


def two_torsion_count(field: QuadField) -> int:
    """Number of ideal classes of order at most 2, i.e. 2^(t-1)."""
    return 2 ** (field.t - 1)
