"""Factoring rational integers and Eisenstein integers.

A rational prime p behaves in ℤ[ω] according to its residue mod 3:

* p ≡ 2 (mod 3) stays prime ("inert"),
* p = 3 ramifies: 3 is a unit times (1 − ω)²,
* p ≡ 1 (mod 3) splits into a conjugate pair π·π* of primes of norm p.

Consequently a positive integer is a value of the norm form x² − xy + y²
(equivalently of 3m² + n²) exactly when every prime ≡ 2 (mod 3) divides it
to an even power.  `norm_representability` reports that criterion, and
`factor_eisenstein` turns a rational factorization of N(z) into the exact
unit-and-prime-powers factorization of z itself.

Rational factoring is deterministic: trial division by a fixed table of
small primes, then Miller–Rabin (with witnesses that are exact far beyond
64 bits) driving Brent-cycle Pollard rho.  Desk scale only; inputs past
~10¹⁸ are out of scope.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd as _igcd
from math import prod

from .core import EisensteinInt, canonical_associate, gcd

_TRIAL_BOUND = 1000


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return tuple(i for i, f in enumerate(flags) if f)


_SMALL_PRIMES = _sieve(_TRIAL_BOUND)

# Exact below 3.3·10²⁴ (Sorenson–Webster), far past anything factored here.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller–Rabin primality test."""
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


def _brent_rho(n: int) -> int:
    """Find a nontrivial factor of the odd composite n (Brent's cycle variant).

    The polynomial offset c steps deterministically, so repeated runs
    produce identical factor trees.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = _igcd(q, n)
                k += m
            r *= 2
        if g == n:
            # batching overshot; replay one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = _igcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")  # pragma: no cover


def _factor_rough(n: int, out: list[int]) -> None:
    # n has no prime factor below _TRIAL_BOUND
    if n == 1:
        return
    if is_prime(n):
        out.append(n)
        return
    d = _brent_rho(n)
    _factor_rough(d, out)
    _factor_rough(n // d, out)


@lru_cache(maxsize=1 << 16)
def factor_integer(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n ≥ 1 as ((p, e), ...) with p ascending."""
    if n < 1:
        raise ValueError("factor_integer needs n ≥ 1")
    factors: list[tuple[int, int]] = []
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    if n > 1:
        # cofactor below bound² with no factor below the bound is prime
        if n < _TRIAL_BOUND * _TRIAL_BOUND or is_prime(n):
            factors.append((n, 1))
        else:
            rough: list[int] = []
            _factor_rough(n, rough)
            rough.sort()
            for p in dict.fromkeys(rough):
                factors.append((p, rough.count(p)))
    factors.sort()
    return tuple(factors)


class PrimeClass(enum.Enum):
    """How a rational prime sits inside ℤ[ω]."""

    INERT = "inert"
    RAMIFIED = "ramified"
    SPLIT = "split"


def classify_prime(p: int) -> PrimeClass:
    """Inert for p ≡ 2 (mod 3), ramified for p = 3, split for p ≡ 1 (mod 3)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not a rational prime")
    if p == 3:
        return PrimeClass.RAMIFIED
    return PrimeClass.INERT if p % 3 == 2 else PrimeClass.SPLIT


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a modulo the odd prime p (Tonelli–Shanks).

    Raises ValueError when a is a quadratic non-residue.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


# Canonical associate of 1 − ω, the prime over 3.
RAMIFIED_PRIME = EisensteinInt(2, 1)


@lru_cache(maxsize=None)
def lift_split_prime(p: int) -> EisensteinInt:
    """The canonical prime π of norm p over a split prime p ≡ 1 (mod 3).

    A root r of r² + r + 1 ≡ 0 (mod p) comes from a square root of −3;
    gcd(p, r − ω) is then a prime of norm p.  The canonical sector holds
    both π and its conjugate partner (as (x, y) and (x, x − y)); the
    lexicographically smaller pair is returned, so the choice is stable.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not a rational prime")
    if p % 3 != 1:
        raise ValueError(f"{p} ≢ 1 (mod 3), so it does not split")
    s = sqrt_mod(p - 3, p)
    r = (s - 1) * pow(2, -1, p) % p
    pi = gcd(EisensteinInt(p, 0), EisensteinInt(r, -1))
    if pi.norm() != p:  # pragma: no cover
        raise ArithmeticError(f"lift of {p} produced norm {pi.norm()}")
    if pi.x - pi.y < pi.y:
        pi = EisensteinInt(pi.x, pi.x - pi.y)
    return pi


@dataclass(frozen=True)
class EisensteinFactorization:
    """unit · ∏ primeᵉ, with canonical primes sorted by (norm, x, y)."""

    unit: EisensteinInt
    factors: tuple[tuple[EisensteinInt, int], ...]

    def product(self) -> EisensteinInt:
        """Multiply the factorization back out."""
        return prod(
            (prime**e for prime, e in self.factors), start=self.unit
        )


def _divide_out(z: EisensteinInt, prime: EisensteinInt, count: int) -> EisensteinInt:
    for _ in range(count):
        q, r = divmod(z, prime)
        if r:  # pragma: no cover - norm bookkeeping guarantees exactness
            raise ArithmeticError(f"{prime!r} does not divide {z!r}")
        z = q
    return z


def factor_eisenstein(z: EisensteinInt) -> EisensteinFactorization:
    """Unique factorization of z ≠ 0 into a unit and canonical prime powers.

    Works through the rational factorization of N(z): an inert prime p
    contributes p itself with half its norm exponent, 3 contributes the
    canonical ramified prime, and a split prime contributes π and π* with
    multiplicities found by exact division.
    """
    if not z:
        raise ValueError("zero has no factorization")
    factors: list[tuple[EisensteinInt, int]] = []
    rem = z
    for p, e in factor_integer(z.norm()):
        if p == 3:
            rem = _divide_out(rem, RAMIFIED_PRIME, e)
            factors.append((RAMIFIED_PRIME, e))
        elif p % 3 == 2:
            # norms carry inert primes to even powers
            prime = EisensteinInt(p, 0)
            rem = _divide_out(rem, prime, e // 2)
            factors.append((prime, e // 2))
        else:
            pi = lift_split_prime(p)
            pj = canonical_associate(pi.conjugate())[1]
            a = 0
            while a < e:
                q, r = divmod(rem, pi)
                if r:
                    break
                rem = q
                a += 1
            rem = _divide_out(rem, pj, e - a)
            if a:
                factors.append((pi, a))
            if e - a:
                factors.append((pj, e - a))
    if rem.norm() != 1:  # pragma: no cover
        raise ArithmeticError(f"non-unit quotient {rem!r} left over")
    factors.sort(key=lambda pe: (pe[0].norm(), pe[0].x, pe[0].y))
    return EisensteinFactorization(unit=rem, factors=tuple(factors))


def is_eisenstein_prime(z: EisensteinInt) -> bool:
    """True iff z is a prime element of ℤ[ω].

    Either N(z) is a rational prime, or z is an associate of an inert
    rational prime (so N(z) = p² with p ≡ 2 (mod 3)).
    """
    if not z:
        raise ValueError("zero is not classified")
    n = z.norm()
    if n == 1:
        return False
    if is_prime(n):
        return True
    c = canonical_associate(z)[1]
    return c.y == 0 and c.x % 3 == 2 and is_prime(c.x)


@dataclass(frozen=True)
class NormRepresentability:
    """Verdict on whether an integer is a value of x² − xy + y².

    The input decomposes as r²·t with t squarefree; it is representable
    exactly when no prime ≡ 2 (mod 3) divides t.  `offending` lists the
    violators.
    """

    representable: bool
    r: int
    t: int
    offending: tuple[int, ...]


@lru_cache(maxsize=None)
def norm_representability(n: int) -> NormRepresentability:
    """Split n ≥ 1 as r²·t (t squarefree) and test representability."""
    if n < 1:
        raise ValueError("need n ≥ 1")
    r = t = 1
    offending = []
    for p, e in factor_integer(n):
        r *= p ** (e // 2)
        if e % 2:
            t *= p
            if p % 3 == 2:
                offending.append(p)
    return NormRepresentability(not offending, r, t, tuple(offending))


def form_to_3m2n2(x: int, y: int) -> tuple[int, int]:
    """Rewrite x² − xy + y² as 3m² + n², returning (m, n).

    One of x, y, x + y is always even; the branches are tried in that
    order so the output is deterministic when several apply.
    """
    if x % 2 == 0:
        return x // 2, x // 2 - y
    if y % 2 == 0:
        return y // 2, y // 2 - x
    return (x - y) // 2, (x + y) // 2


def form_from_3m2n2(m: int, n: int) -> tuple[int, int]:
    """Rewrite 3m² + n² as x² − xy + y², returning (x, y) = (2m, m − n)."""
    return 2 * m, m - n
