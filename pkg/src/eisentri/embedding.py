"""Deciding and constructing lattice embeddings of Heron-type triangles.

A triangle whose squared side lengths a², b², c² are positive integers is
congruent to one with all three vertices in ℤ[ω] exactly when

* its area is (√3/4)·n for a positive integer n, and
* at least one squared side is a value of the norm form x² − xy + y²
  (every prime ≡ 2 (mod 3) divides it to an even power).

`validate` decides the criterion; `embed` produces explicit vertices by a
fully constructive pipeline:

    area step      16·Area² = 3n², Δ = c² − a² − b²  (law of cosines)
    parity step    Δ = u + v, n = u − v             (Δ, n share parity)
    packing step   z = (1 + ω)(u + vω), so N(z) = u² − uv + v² = a²b²
    factor step    pick f | z with N(f) = a², set g = −z/f, N(g) = b²
    vertex step    C = 0, B = f, and A swaps g's coordinates:
                   g = q + pω  ⇒  A = p + qω

The coordinate swap in the vertex step is deliberate: it is what makes
N(B − A) collapse to c² identically, and `embed` asserts that identity
before the final metric verification.  Everything is exact integer
arithmetic; no step involves floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .core import EisensteinInt, canonical_associate
from .factorization import (
    RAMIFIED_PRIME,
    factor_integer,
    lift_split_prime,
    norm_representability,
)


class DegenerateTriangleError(ValueError):
    """The squared sides (or vertices) do not bound a proper triangle."""


class NonLatticeAreaError(ValueError):
    """The area is not (√3/4)·n for any positive integer n."""


class NotRealizableError(ValueError):
    """No lattice embedding exists; carries the full realizability report."""

    def __init__(self, report: RealizabilityReport):
        super().__init__(report.reason)
        self.report = report


class EmbeddingVerificationError(RuntimeError):
    """A constructed triangle failed its own metric check (internal bug)."""


@dataclass(frozen=True)
class TriangleSpec:
    """Squared side lengths (a², b², c²) of the triangle to embed."""

    a2: int
    b2: int
    c2: int

    def __post_init__(self) -> None:
        for name, value in zip(("a2", "b2", "c2"), self.sides()):
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    def sides(self) -> tuple[int, int, int]:
        return (self.a2, self.b2, self.c2)


@dataclass(frozen=True)
class HeronData:
    """Derived quantities of the pipeline.

    n is the area factor (area = (√3/4)·n), delta = c² − a² − b², and
    (u, v) solve delta = u + v, n = u − v.  They satisfy
    delta² + 3n² = 4a²b² and u² − uv + v² = a²b².
    """

    n: int
    delta: int
    u: int
    v: int


@dataclass(frozen=True)
class LatticeTriangle:
    """Three lattice vertices; side a is BC, side b is AC, side c is AB."""

    A: EisensteinInt
    B: EisensteinInt
    C: EisensteinInt


@dataclass(frozen=True)
class RealizabilityReport:
    """Outcome of `validate`: the criterion, condition by condition."""

    realizable: bool
    n: int | None
    area_ok: bool
    sides_integral: bool
    side_representable: bool
    witness_side: str | None
    reason: str


def heron_n(spec: TriangleSpec) -> tuple[int, int]:
    """Area factor and law-of-cosines surplus (n, delta) for the spec.

    Heron's formula in expanded form gives
    16·Area² = 2(a²b² + b²c² + c²a²) − (a⁴ + b⁴ + c⁴), which must be a
    positive integer of the shape 3n²; delta = c² − a² − b².
    """
    a2, b2, c2 = spec.sides()
    p = 2 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2)
    if p <= 0:
        raise DegenerateTriangleError(
            f"squared sides {spec.sides()} violate the strict triangle inequality"
        )
    if p % 3:
        raise NonLatticeAreaError(
            f"16·Area² = {p} is not 3·n²: area is not (√3/4)·n"
        )
    n = isqrt(p // 3)
    if n * n != p // 3:
        raise NonLatticeAreaError(
            f"16·Area²/3 = {p // 3} is not a perfect square: area is not (√3/4)·n"
        )
    return n, c2 - a2 - b2


def compute_uv(delta: int, n: int) -> tuple[int, int]:
    """Invert delta = u + v, n = u − v; requires delta ≡ n (mod 2)."""
    if (delta - n) % 2:
        raise ValueError(f"delta = {delta} and n = {n} differ in parity")
    return (delta + n) // 2, (delta - n) // 2


def heron_data(spec: TriangleSpec) -> HeronData:
    """Full derived-quantity bundle (n, delta, u, v) for a valid spec."""
    n, delta = heron_n(spec)
    u, v = compute_uv(delta, n)
    return HeronData(n=n, delta=delta, u=u, v=v)


def combine_uv(u: int, v: int) -> EisensteinInt:
    """(1 + ω)·(u + vω) = (u − v) + uω; its norm is u² − uv + v²."""
    return EisensteinInt(u - v, u)


def divisor_of_norm(z: EisensteinInt, n2: int) -> EisensteinInt:
    """A divisor f of z with N(f) = n2, chosen deterministically.

    Requires n2 | N(z) with representable n2.  Per rational prime power
    pᵉ in n2: an inert p contributes p^(e/2), the ramified 3 contributes
    the canonical prime over 3 to the e-th power, and a split p
    contributes πⁱ·(π*)^(e−i) where i caps π's multiplicity in z at e.
    The conjugate always covers the rest because the multiplicities of π
    and π* in z sum to at least e.
    """
    rep = norm_representability(n2)
    if not rep.representable:
        raise ValueError(
            f"{n2} is not a norm: odd exponent at prime(s) {list(rep.offending)} ≡ 2 (mod 3)"
        )
    f = EisensteinInt(1, 0)
    for p, e in factor_integer(n2):
        if p == 3:
            f = f * RAMIFIED_PRIME**e
        elif p % 3 == 2:
            f = f * EisensteinInt(p, 0) ** (e // 2)
        else:
            pi = lift_split_prime(p)
            pj = canonical_associate(pi.conjugate())[1]
            i, w = 0, z
            while i < e:
                q, r = divmod(w, pi)
                if r:
                    break
                w = q
                i += 1
            f = f * pi**i * pj ** (e - i)
    if f.norm() != n2 or z % f:
        raise ArithmeticError(
            f"no divisor of norm {n2} found in {z!r}"
        )  # pragma: no cover - guaranteed by the norm bookkeeping
    return f


def validate(spec: TriangleSpec) -> RealizabilityReport:
    """Decide realizability and report each condition separately.

    The witness side is the first of a, b, c whose square is a norm
    value; the construction factors that side's primes out of z.
    """
    reports = {
        side: norm_representability(value)
        for side, value in zip("abc", spec.sides())
    }
    witness = next((s for s in "abc" if reports[s].representable), None)
    try:
        n, _ = heron_n(spec)
        area_ok, reason = True, ""
    except (DegenerateTriangleError, NonLatticeAreaError) as exc:
        n, area_ok, reason = None, False, str(exc)
    if witness is None and not reason:
        offenders = "; ".join(
            f"{s}² = {v} (odd exponent at {', '.join(map(str, reports[s].offending))})"
            for s, v in zip("abc", spec.sides())
        )
        reason = (
            "no squared side is a value of x² − xy + y²: "
            f"every side has a prime ≡ 2 (mod 3) with odd exponent [{offenders}]"
        )
    realizable = area_ok and witness is not None
    return RealizabilityReport(
        realizable=realizable,
        n=n,
        area_ok=area_ok,
        sides_integral=True,
        side_representable=witness is not None,
        witness_side=witness,
        reason=reason,
    )


def embed(spec: TriangleSpec) -> LatticeTriangle:
    """Construct lattice vertices realizing the spec.

    Raises NotRealizableError when `validate` rejects the spec.  The
    returned triangle always passes `verify_embedding`; a failure there
    raises EmbeddingVerificationError and would indicate a bug, not bad
    input.
    """
    report = validate(spec)
    if not report.realizable:
        raise NotRealizableError(report)
    witness = report.witness_side

    # Run the pipeline with the witness side in the role of a.
    a2, b2, c2 = spec.sides()
    if witness == "b":
        a2, b2 = b2, a2
    elif witness == "c":
        a2, c2 = c2, a2
    n, delta = heron_n(TriangleSpec(a2, b2, c2))
    u, v = compute_uv(delta, n)
    z = combine_uv(u, v)
    f = divisor_of_norm(z, a2)
    quotient, remainder = divmod(z, f)
    if remainder:  # pragma: no cover
        raise EmbeddingVerificationError(f"{f!r} does not divide {z!r}")
    g = -quotient  # z = −f·g

    # Vertex step: B keeps f's coordinates, A swaps g's.
    vertex_a = EisensteinInt(g.y, g.x)
    vertex_b = f
    vertex_c = EisensteinInt(0, 0)

    # The swap makes N(B − A) equal c² identically; check before any
    # metric verification.
    if (vertex_b - vertex_a).norm() != c2:
        raise EmbeddingVerificationError(
            f"norm identity violated: N(B − A) ≠ {c2} for spec {spec.sides()}"
        )

    # Undo the relabeling: permute vertices opposite the permuted sides,
    # then re-anchor C at the origin.
    if witness == "b":
        vertex_a, vertex_b = vertex_b, vertex_a
    elif witness == "c":
        vertex_a, vertex_c = vertex_c, vertex_a
    shift = vertex_c
    tri = LatticeTriangle(
        A=vertex_a - shift, B=vertex_b - shift, C=vertex_c - shift
    )

    if not verify_embedding(tri, spec):  # pragma: no cover
        raise EmbeddingVerificationError(
            f"constructed triangle fails the metric check for {spec.sides()}"
        )
    return tri


def verify_embedding(tri: LatticeTriangle, spec: TriangleSpec) -> bool:
    """Pure metric check: side norms match the spec and |det| equals n.

    Independent of how the triangle was produced.
    """
    try:
        n, _ = heron_n(spec)
    except (DegenerateTriangleError, NonLatticeAreaError):
        return False
    b_rel = tri.B - tri.C
    a_rel = tri.A - tri.C
    det = b_rel.x * a_rel.y - b_rel.y * a_rel.x
    return (
        b_rel.norm() == spec.a2
        and a_rel.norm() == spec.b2
        and (a_rel - b_rel).norm() == spec.c2
        and abs(det) == n
    )


def triangle_properties(
    A: EisensteinInt, B: EisensteinInt, C: EisensteinInt
) -> tuple[int, int, int, int]:
    """Squared sides and area factor (a², b², c², n) of a lattice triangle.

    Translates C to the origin; n is |B.x·A.y − B.y·A.x|, so the area is
    (√3/4)·n.  Raises DegenerateTriangleError for collinear vertices.
    """
    b_rel = B - C
    a_rel = A - C
    det = b_rel.x * a_rel.y - b_rel.y * a_rel.x
    if det == 0:
        raise DegenerateTriangleError(f"vertices {A!r}, {B!r}, {C!r} are collinear")
    return (
        b_rel.norm(),
        a_rel.norm(),
        (a_rel - b_rel).norm(),
        abs(det),
    )
