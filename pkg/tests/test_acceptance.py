"""Acceptance suite: the package's end-to-end guarantees.

Each test prints one PASS line (visible with `pytest -s`); a failure
anywhere is a failure of the corresponding guarantee.  Everything is
checked exactly — there are no tolerances anywhere, only integer
equality — and the brute-force oracle, not the pipeline, is the source
of ground truth.

Run: pytest tests/test_acceptance.py -v -s
"""

import itertools
import json
import os
import random
import subprocess
import sys
import time
from math import isqrt
from pathlib import Path

import pytest

from eisentri.core import EisensteinInt
from eisentri.embedding import (
    DegenerateTriangleError,
    LatticeTriangle,
    NotRealizableError,
    TriangleSpec,
    combine_uv,
    divisor_of_norm,
    embed,
    heron_data,
    heron_n,
    triangle_properties,
    validate,
    verify_embedding,
)
from eisentri.factorization import (
    factor_eisenstein,
    is_eisenstein_prime,
    lift_split_prime,
    norm_representability,
)
from eisentri.oracle import brute_force_embeddings, canonical_triangle

BOX = 8  # vertex coordinate range for the exhaustive census


def _fmt_elapsed(seconds: float) -> str:
    return f"{seconds:.1f}s"


@pytest.fixture(scope="module")
def box_census():
    """All symmetry classes of triangles with C at the origin and the
    other two vertices in [−BOX, BOX]², keyed by canonical class;
    returns (classes, seconds spent generating them)."""
    started = time.monotonic()
    classes = {}
    coords = range(-BOX, BOX + 1)
    for ax in coords:
        for ay in coords:
            for bx in coords:
                for by in coords:
                    if bx * ay - by * ax == 0:
                        continue
                    tri = LatticeTriangle(
                        A=EisensteinInt(ax, ay),
                        B=EisensteinInt(bx, by),
                        C=EisensteinInt(0, 0),
                    )
                    cls = canonical_triangle(tri)
                    if cls.key not in classes:
                        classes[cls.key] = cls
    return list(classes.values()), time.monotonic() - started


def test_01_exhaustive_box_census(box_census):
    """Every census triangle's spec validates and re-embeds, exactly."""
    classes, generation_seconds = box_census
    started = time.monotonic()
    assert len(classes) > 1000
    for cls in classes:
        rep = cls.representative
        a2, b2, c2, n = triangle_properties(rep.A, rep.B, rep.C)
        spec = TriangleSpec(a2, b2, c2)
        report = validate(spec)
        assert report.realizable, (a2, b2, c2)
        assert report.n == n
        assert verify_embedding(embed(spec), spec), (a2, b2, c2)
    elapsed = generation_seconds + (time.monotonic() - started)
    assert elapsed < 120.0
    print(
        f"\n[acceptance] 1. exhaustive census |coords| ≤ {BOX}: "
        f"{len(classes)} classes re-embedded exactly in {_fmt_elapsed(elapsed)} — PASS"
    )


def test_02_converse_check():
    """For all specs ≤ 200: brute force finds an embedding iff validate
    says realizable (in particular, nothing exists when it says no)."""
    started = time.monotonic()
    specs = 0
    realizable = 0
    for a2, b2, c2 in itertools.combinations_with_replacement(range(1, 201), 3):
        spec = TriangleSpec(a2, b2, c2)
        found = bool(brute_force_embeddings(spec))
        said = validate(spec).realizable
        assert found == said, (a2, b2, c2)
        specs += 1
        realizable += said
    elapsed = time.monotonic() - started
    assert elapsed < 300.0
    print(
        f"\n[acceptance] 2. converse over {specs} specs ≤ 200 "
        f"({realizable} realizable): zero disagreements in {_fmt_elapsed(elapsed)} — PASS"
    )


def test_03_worked_instances():
    """Hand-checked instances embed to the expected congruence classes."""
    cases = {
        (1, 1, 1): LatticeTriangle(
            A=EisensteinInt(0, -1), B=EisensteinInt(1, 0), C=EisensteinInt(0, 0)
        ),
        (9, 3, 12): LatticeTriangle(
            A=EisensteinInt(-2, -1), B=EisensteinInt(0, -3), C=EisensteinInt(0, 0)
        ),
        (4, 4, 4): LatticeTriangle(
            A=EisensteinInt(0, -2), B=EisensteinInt(2, 0), C=EisensteinInt(0, 0)
        ),
    }
    for sides, target in cases.items():
        spec = TriangleSpec(*sides)
        tri = embed(spec)
        assert verify_embedding(tri, spec)
        classes = brute_force_embeddings(spec)
        assert canonical_triangle(tri) == canonical_triangle(target)
        assert canonical_triangle(tri) in classes
        assert canonical_triangle(target) in classes

    with pytest.raises(NotRealizableError) as info:
        embed(TriangleSpec(2, 2, 2))
    assert not info.value.report.side_representable
    assert "2" in info.value.report.reason

    with pytest.raises(NotRealizableError) as info:
        embed(TriangleSpec(1, 1, 2))
    assert not info.value.report.area_ok
    print("\n[acceptance] 3. worked instances match their classes — PASS")


def test_04_equilateral_family():
    """Side² = k² equilateral triangles have n = k² and embed for k ≤ 100."""
    for k in range(1, 101):
        spec = TriangleSpec(k * k, k * k, k * k)
        n, _ = heron_n(spec)
        assert n == k * k
        tri = embed(spec)
        assert verify_embedding(tri, spec)
    print("\n[acceptance] 4. equilateral family k ≤ 100 — PASS")


def test_05_factorization_round_trip():
    """10⁴ random elements of norm ≤ 10¹² factor and multiply back exactly."""
    rng = random.Random(20260810)
    checked = 0
    while checked < 10_000:
        z = EisensteinInt(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6))
        if not z or z.norm() > 10**12:
            continue
        fz = factor_eisenstein(z)
        assert fz.product() == z
        assert fz.unit.norm() == 1
        for prime, e in fz.factors:
            assert e >= 1
            assert prime.x > prime.y >= 0
            assert is_eisenstein_prime(prime)
        checked += 1
    print("\n[acceptance] 5. factorization round-trip, 10⁴ elements ≤ 10¹² — PASS")


def test_06_split_prime_lifting():
    """lift has norm p and canonical sector for every split p < 10⁵;
    below 10⁴ it equals the exhaustive-search representative."""
    sieve = bytearray([1]) * 100_000
    sieve[0] = sieve[1] = 0
    for i in range(2, 317):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    split_primes = [p for p in range(100_000) if sieve[p] and p % 3 == 1]
    assert len(split_primes) > 4000
    for p in split_primes:
        pi = lift_split_prime(p)
        assert pi.norm() == p
        assert pi.x > pi.y >= 0
    for p in split_primes:
        if p >= 10_000:
            break
        bound = isqrt(4 * p // 3) + 2
        solutions = sorted(
            (x, y)
            for x in range(1, bound + 1)
            for y in range(0, x)
            if x * x - x * y + y * y == p
        )
        assert (lift_split_prime(p).x, lift_split_prime(p).y) == solutions[0]
    print(
        f"\n[acceptance] 6. split-prime lifting, {len(split_primes)} primes < 10⁵ — PASS"
    )


def test_07_random_lattice_triangles():
    """10⁵ random non-collinear lattice triangles: squared sides are
    integers with 16·Area² = 3n² exactly, and every squared side is a
    value of the norm form."""
    rng = random.Random(1729)
    checked = 0
    while checked < 100_000:
        ax, ay = rng.randint(-50, 50), rng.randint(-50, 50)
        bx, by = rng.randint(-50, 50), rng.randint(-50, 50)
        cx, cy = rng.randint(-50, 50), rng.randint(-50, 50)
        try:
            a2, b2, c2, n = triangle_properties(
                EisensteinInt(ax, ay), EisensteinInt(bx, by), EisensteinInt(cx, cy)
            )
        except DegenerateTriangleError:
            continue
        checked += 1
        p = 2 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2)
        assert p == 3 * n * n, (ax, ay, bx, by, cx, cy)
        for side in (a2, b2, c2):
            assert norm_representability(side).representable, side
    print("\n[acceptance] 7. necessity on 10⁵ random triangles — PASS")


def test_08_norm_identity_of_the_vertex_step(box_census):
    """With B = m + nω and g = q + pω as the pipeline produces them,
    (m−p)² − (m−p)(n−q) + (n−q)² equals c² exactly, for every spec the
    census, the worked instances, and the equilateral family produce."""
    specs = {(1, 1, 1), (9, 3, 12), (4, 4, 4)}
    specs.update((k * k, k * k, k * k) for k in range(1, 101))
    for cls in box_census[0]:
        rep = cls.representative
        a2, b2, c2, _ = triangle_properties(rep.A, rep.B, rep.C)
        specs.add((a2, b2, c2))
    for sides in sorted(specs):
        spec = TriangleSpec(*sides)
        data = heron_data(spec)
        z = combine_uv(data.u, data.v)
        f = divisor_of_norm(z, spec.a2)
        g = -(z // f)
        m, ncoef = f.x, f.y
        q, p = g.x, g.y
        assert (m - p) ** 2 - (m - p) * (ncoef - q) + (ncoef - q) ** 2 == spec.c2, sides
    print(
        f"\n[acceptance] 8. vertex-step norm identity over {len(specs)} specs — PASS"
    )


GOLDEN_INVOCATIONS = [
    ("check", "9", "3", "12", "--json"),
    ("check", "2", "2", "2", "--json"),
    ("check", "1", "1", "2"),
    ("embed", "1", "1", "1", "--json"),
    ("embed", "9", "3", "12", "--json"),
    ("embed", "4", "4", "4", "--json"),
    ("embed", "19", "21", "13", "--json"),
    ("embed", "4", "4", "4"),
    ("embed", "2", "2", "2"),
    ("factor", "6", "3", "--json"),
    ("factor", "7", "0"),
    ("factor", "-1000000", "999999", "--json"),
    ("classify", "2"),
    ("classify", "3"),
    ("classify", "103"),
    ("lift", "7"),
    ("lift", "99991"),
    ("search", "9", "3", "12", "--json"),
    ("search", "1", "1", "1"),
    ("enumerate", "7", "--json"),
    ("enumerate", "12"),
    ("enumerate", "2", "--json"),
]


def _run_corpus():
    env = dict(os.environ, PYTHONPATH=str(Path(__file__).resolve().parent.parent / "src"))
    outcomes = []
    for argv in GOLDEN_INVOCATIONS:
        proc = subprocess.run(
            [sys.executable, "-m", "eisentri", *argv],
            capture_output=True,
            env=env,
        )
        outcomes.append((argv, proc.returncode, proc.stdout, proc.stderr))
    return outcomes


def test_09_cli_golden():
    """The invocation corpus is byte-identical across runs, and every
    successful embed document re-verifies after re-parsing."""
    first = _run_corpus()
    second = _run_corpus()
    assert first == second
    for argv, code, stdout, _ in first:
        if argv[0] == "embed" and "--json" in argv and code == 0:
            doc = json.loads(stdout)
            tri = LatticeTriangle(
                A=EisensteinInt(*doc["vertices"]["A"]),
                B=EisensteinInt(*doc["vertices"]["B"]),
                C=EisensteinInt(*doc["vertices"]["C"]),
            )
            spec = TriangleSpec(*doc["spec"])
            assert verify_embedding(tri, spec)
            assert doc["sides_squared"] == doc["spec"]
    codes = [code for _, code, _, _ in first]
    assert codes == [0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]
    print(
        f"\n[acceptance] 9. CLI golden corpus, {len(GOLDEN_INVOCATIONS)} invocations "
        f"× 2 runs byte-identical — PASS"
    )


