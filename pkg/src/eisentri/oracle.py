"""Brute-force ground truth for lattice-triangle questions.

Nothing here is clever on purpose: points of a given norm come from a
scan of a checked coordinate box, and embeddings of a spec come from
trying every pair of candidate vertices.  Being obviously correct is the
point; the constructive pipeline in `embedding` is tested against this
module, never the other way around.

Congruent embeddings are deduplicated under the lattice's 12-element
point group: the six unit rotations, each optionally composed with
complex conjugation, acting on (A, B) with C pinned at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .core import EisensteinInt
from .embedding import DegenerateTriangleError, LatticeTriangle, TriangleSpec

_UNIT_COORDS = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))


@lru_cache(maxsize=None)
def _norm_points(k: int) -> tuple[tuple[int, int], ...]:
    # x² − xy + y² ≥ (3/4)·max(x², y²), so |x|, |y| ≤ 2·√(k/3) suffices
    bound = isqrt(4 * k // 3) + 1
    points = []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if x * x - x * y + y * y == k:
                points.append((x, y))
    return tuple(points)


def enumerate_norm_points(k: int) -> list[EisensteinInt]:
    """All lattice points of norm k ≥ 1, in lexicographic (x, y) order."""
    if k < 1:
        raise ValueError("need k ≥ 1")
    return [EisensteinInt(x, y) for x, y in _norm_points(k)]


def _canonical_key(ax: int, ay: int, bx: int, by: int) -> tuple[int, int, int, int]:
    """Least (B.x, B.y, A.x, A.y) over the 12-element orbit of (A, B)."""
    best = None
    for _ in range(2):
        for ux, uy in _UNIT_COORDS:
            key = (
                bx * ux - by * uy,
                bx * uy + ux * by - by * uy,
                ax * ux - ay * uy,
                ax * uy + ux * ay - ay * uy,
            )
            if best is None or key < best:
                best = key
        ax, ay, bx, by = ax - ay, -ay, bx - by, -by  # conjugate both
    return best


@dataclass(frozen=True)
class SymmetryClass:
    """A congruence class of embeddings, held by its least representative.

    The representative has C at the origin and minimizes the tuple
    (B.x, B.y, A.x, A.y) over the point-group orbit, so classes compare
    and sort deterministically.
    """

    representative: LatticeTriangle

    @property
    def key(self) -> tuple[int, int, int, int]:
        rep = self.representative
        return (rep.B.x, rep.B.y, rep.A.x, rep.A.y)


def _class_from_key(key: tuple[int, int, int, int]) -> SymmetryClass:
    bx, by, ax, ay = key
    return SymmetryClass(
        LatticeTriangle(
            A=EisensteinInt(ax, ay),
            B=EisensteinInt(bx, by),
            C=EisensteinInt(0, 0),
        )
    )


def canonical_triangle(tri: LatticeTriangle) -> SymmetryClass:
    """Symmetry class of a triangle; translation puts C at the origin."""
    a = tri.A - tri.C
    b = tri.B - tri.C
    if b.x * a.y - b.y * a.x == 0:
        raise DegenerateTriangleError(f"{tri!r} is collinear")
    return _class_from_key(_canonical_key(a.x, a.y, b.x, b.y))


def brute_force_embeddings(spec: TriangleSpec) -> list[SymmetryClass]:
    """Every embedding of the spec with C at the origin, up to symmetry.

    Exhaustive over B of norm a² and A of norm b² with N(A − B) = c²;
    an empty list means the spec is not realizable.
    """
    b_points = _norm_points(spec.a2)
    a_points = _norm_points(spec.b2)
    c2 = spec.c2
    keys = set()
    for bx, by in b_points:
        for ax, ay in a_points:
            dx = ax - bx
            dy = ay - by
            if dx * dx - dx * dy + dy * dy == c2 and bx * ay - by * ax != 0:
                keys.add(_canonical_key(ax, ay, bx, by))
    return [_class_from_key(key) for key in sorted(keys)]
