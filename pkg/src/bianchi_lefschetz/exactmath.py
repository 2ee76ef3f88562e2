"""Exact integer and rational primitives shared by every other module.

All arithmetic here is exact: Python integers, ``fractions.Fraction`` for
rationals, deterministic factorization, quadratic residue symbols, the
2-adic Hilbert symbol and traces of symmetric powers of determinant-one
matrices.  Nothing in this module touches floating point.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

CACHE_ENV = "BIANCHI_LEFSCHETZ_CACHE"


def cache_fetch(name: str) -> int | None:
    """Read a memoized integer from the optional cache directory."""
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    path = os.path.join(root, name + ".json")
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        return int(json.load(fh)["value"])


def cache_store(name: str, value: int) -> None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return
    os.makedirs(root, exist_ok=True)
    with open(os.path.join(root, name + ".json"), "w") as fh:
        json.dump({"value": str(value)}, fh)


class InputError(ValueError):
    """A precondition on an operation's inputs was violated."""


class ConformanceError(RuntimeError):
    """An exactness invariant failed at runtime.

    Raised when a quantity that must come out an integer (or must satisfy
    a parity constraint) turns out fractional.  This is a diagnostic about
    the formulas themselves, not a user error, so it is kept apart from
    InputError.
    """


_TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for desk-scale integers."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Factor n >= 1 into an increasing list of (prime, exponent) pairs.

    factorize(1) == [].  Trial division up to 10**6, then a deterministic
    primality check on the leftover; inputs in this library stay at desk
    scale, so a composite leftover is treated as an input error.
    """
    if n < 1:
        raise InputError(f"factorize requires n >= 1, got {n}")
    out: list[tuple[int, int]] = []
    m = n
    p = 2
    while p * p <= m and p <= _TRIAL_LIMIT:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        if not is_prime(m):
            raise InputError(f"leftover factor {m} of {n} is composite beyond trial range")
        out.append((m, 1))
    return out


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(abs(n))]


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, in {-1, 0, 1}."""
    if p == 2 or not is_prime(p):
        raise InputError(f"legendre requires an odd prime, got p={p}")
    r = pow(a % p, (p - 1) // 2, p)
    if r == p - 1:
        return -1
    return r  # 0 or 1


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), the full multiplicative extension of Legendre."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 and a % 8 in (3, 5):
            sign = -sign
    # Jacobi loop on the remaining odd positive n.
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def _split_two(n: int) -> tuple[int, int]:
    """n = 2**v * u with u odd; returns (v, u)."""
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v, n


def hilbert2(a: int, b: int) -> int:
    """2-adic Hilbert symbol (a, b)_2 in {-1, 1}.

    Equals 1 exactly when z^2 = a*x^2 + b*y^2 has a 2-adic solution with
    some unit coordinate.  Computed by the closed exponent formula
    eps(u)eps(v) + alpha*omega(v) + beta*omega(u) on the odd parts u, v
    and the 2-adic valuations alpha, beta.
    """
    if a == 0 or b == 0:
        raise InputError("hilbert2 requires nonzero arguments")
    alpha, u = _split_two(a)
    beta, v = _split_two(b)
    eps_u = ((u - 1) // 2) % 2
    eps_v = ((v - 1) // 2) % 2
    om_u = ((u * u - 1) // 8) % 2
    om_v = ((v * v - 1) // 8) % 2
    e = eps_u * eps_v + alpha * om_v + beta * om_u
    return -1 if e % 2 else 1


def euler_phi(n: int) -> int:
    """Euler's totient, by the multiplicative formula over factorize(n)."""
    if n < 1:
        raise InputError(f"euler_phi requires n >= 1, got {n}")
    out = 1
    for p, e in factorize(n):
        out *= p ** (e - 1) * (p - 1)
    return out


def sym_power_trace(t: int, k: int) -> int:
    """Trace of the k-th symmetric power of a det-1 matrix of trace t.

    With eigenvalues lam, mu (lam*mu = 1, lam + mu = t) this is
    sum_{j=0}^{k} lam^(k-j) mu^j, computed by the three-term recurrence
    u_0 = 1, u_1 = t, u_j = t*u_{j-1} - u_{j-2}.
    """
    if k < 0:
        raise InputError(f"sym_power_trace requires k >= 0, got {k}")
    if k == 0:
        return 1
    prev, cur = 1, t
    for _ in range(k - 1):
        prev, cur = cur, t * cur - prev
    return cur


def as_integer(x: Rational, what: str = "value") -> int:
    """Assert that an exact rational is an integer and return it.

    Integrality failures raise ConformanceError: every formula in this
    library that promises an integer is expected to deliver one, and a
    fractional result is a conformance signal worth surfacing loudly.
    """
    if isinstance(x, int):
        return x
    fr = Fraction(x)
    if fr.denominator != 1:
        raise ConformanceError(f"{what} is not an integer: {fr}")
    return fr.numerator
