"""Exact arithmetic in the ring of Eisenstein integers ℤ[ω], ω = e^{2πi/3}.

An element x + y·ω is stored as the coordinate pair (x, y) in the integer
basis (1, ω).  The defining relation ω² = −1 − ω gives the product rule

    (x₁ + y₁ω)·(x₂ + y₂ω) = (x₁x₂ − y₁y₂) + (x₁y₂ + x₂y₁ − y₁y₂)·ω,

the conjugate z* = (x − y) − y·ω, and the multiplicative norm
N(z) = z·z* = x² − xy + y², a positive-definite quadratic form.  The ring
is norm-Euclidean, so division with remainder and gcds work just as in ℤ,
and factorization is unique up to the six units ±1, ±ω, ±(1 + ω).

Coordinates are plain Python integers, so arithmetic is exact at any
magnitude; nothing in this module touches floating point.
"""

from __future__ import annotations


def _round_nearest(a: int, b: int) -> int:
    # nearest integer to a/b for b > 0, ties toward zero
    if a >= 0:
        return (2 * a + b - 1) // (2 * b)
    return -((-2 * a + b - 1) // (2 * b))


class EisensteinInt:
    """The Eisenstein integer x + y·ω, coordinates in the (1, ω) basis."""

    __slots__ = ("x", "y")

    def __init__(self, x: int = 0, y: int = 0) -> None:
        self.x = x
        self.y = y

    @staticmethod
    def _coerce(value) -> EisensteinInt | None:
        if isinstance(value, EisensteinInt):
            return value
        if isinstance(value, int):
            return EisensteinInt(value, 0)
        return None

    def conjugate(self) -> EisensteinInt:
        """Complex conjugate: (x + yω)* = (x − y) − y·ω."""
        return EisensteinInt(self.x - self.y, -self.y)

    def norm(self) -> int:
        """N(z) = z·z* = x² − xy + y²; zero only for z = 0."""
        return self.x * self.x - self.x * self.y + self.y * self.y

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __add__(self, other) -> EisensteinInt:
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return EisensteinInt(self.x + w.x, self.y + w.y)

    __radd__ = __add__

    def __sub__(self, other) -> EisensteinInt:
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return EisensteinInt(self.x - w.x, self.y - w.y)

    def __rsub__(self, other) -> EisensteinInt:
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return EisensteinInt(w.x - self.x, w.y - self.y)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.x, -self.y)

    def __pos__(self) -> EisensteinInt:
        return self

    def __mul__(self, other) -> EisensteinInt:
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        # ω² = −1 − ω
        return EisensteinInt(
            self.x * w.x - self.y * w.y,
            self.x * w.y + w.x * self.y - self.y * w.y,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> EisensteinInt:
        if exponent < 0:
            raise ValueError("negative powers leave the ring")
        result = EisensteinInt(1, 0)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple[EisensteinInt, EisensteinInt]:
        """Euclidean division: z = q·w + r with N(r) < N(w).

        q is z·w*/N(w) with both rational coordinates rounded to the
        nearest integer (ties toward zero).  Nearest rounding keeps the
        fractional part inside the form's covering radius, which bounds
        N(r) by (3/4)·N(w).
        """
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        nw = w.norm()
        if nw == 0:
            raise ZeroDivisionError("division by zero in ℤ[ω]")
        t = self * w.conjugate()
        q = EisensteinInt(_round_nearest(t.x, nw), _round_nearest(t.y, nw))
        return q, self - q * w

    def __floordiv__(self, other) -> EisensteinInt:
        q, _ = divmod(self, other)
        return q

    def __mod__(self, other) -> EisensteinInt:
        _, r = divmod(self, other)
        return r

    def divides(self, other: EisensteinInt) -> bool:
        """True iff self divides other exactly."""
        return not (other % self)

    def __eq__(self, other) -> bool:
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return self.x == w.x and self.y == w.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __bool__(self) -> bool:
        return self.x != 0 or self.y != 0

    def __repr__(self) -> str:
        return f"EisensteinInt({self.x}, {self.y})"

    def __str__(self) -> str:
        if self.y == 0:
            return str(self.x)
        mag = abs(self.y)
        term = "ω" if mag == 1 else f"{mag}ω"
        if self.x == 0:
            return term if self.y > 0 else f"-{term}"
        sign = "+" if self.y > 0 else "-"
        return f"{self.x} {sign} {term}"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)

# The six units, listed as the powers of the primitive sixth root 1 + ω.
UNITS = (
    EisensteinInt(1, 0),
    EisensteinInt(1, 1),
    EisensteinInt(0, 1),
    EisensteinInt(-1, 0),
    EisensteinInt(-1, -1),
    EisensteinInt(0, -1),
)


def canonical_associate(z: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt]:
    """Return (u, c) with c = u·z the unique associate of z in the sector
    x > y ≥ 0 (argument in [0°, 60°)).

    Rational primes are their own canonical form, which keeps gcd and
    factorization output stable.  Raises ValueError for z = 0.
    """
    if not z:
        raise ValueError("zero has no canonical associate")
    for u in UNITS:
        c = u * z
        if c.x > c.y >= 0:
            return u, c
    raise AssertionError("unreachable: one associate per sector")


def gcd(z: EisensteinInt, w: EisensteinInt) -> EisensteinInt:
    """Greatest common divisor via the Euclidean algorithm, returned as
    its canonical associate.  Raises ValueError when both inputs are zero.
    """
    if not z and not w:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = z, w
    while b:
        _, r = divmod(a, b)
        a, b = b, r
    return canonical_associate(a)[1]
