"""A small census of realizable specs, plus an SVG picture gallery.

Scans all specs with squared sides up to a cap, reports how the two
conditions split the failures, and draws a few embedded triangles to
./out/*.svg.

Run: python3 demos/04_census_and_pictures.py
"""

import itertools
from pathlib import Path

from eisentri import TriangleSpec, embed, validate
from eisentri.svg import render_triangle

CAP = 60

total = realizable = bad_area = bad_sides = degenerate = 0
examples = []
for a2, b2, c2 in itertools.combinations_with_replacement(range(1, CAP + 1), 3):
    report = validate(TriangleSpec(a2, b2, c2))
    total += 1
    if report.realizable:
        realizable += 1
        if len(examples) < 40:
            examples.append((a2, b2, c2))
    elif not report.area_ok:
        if "triangle inequality" in report.reason:
            degenerate += 1
        else:
            bad_area += 1
    else:
        bad_sides += 1

print(f"specs with squared sides ≤ {CAP}: {total}")
print(f"  realizable:                 {realizable}")
print(f"  area not (√3/4)·n:          {bad_area}")
print(f"  degenerate:                 {degenerate}")
print(f"  area fine, sides obstructed:{bad_sides:>6}")
print(f"\nfirst realizable specs: {examples[:10]}")

out = Path("out")
out.mkdir(exist_ok=True)
for sides in [(1, 1, 1), (9, 3, 12), (4, 4, 4), (19, 21, 13), (25, 49, 39)]:
    spec = TriangleSpec(*sides)
    if not validate(spec).realizable:
        print(f"skipping {sides}: not realizable")
        continue
    tri = embed(spec)
    path = out / ("triangle_%d_%d_%d.svg" % sides)
    path.write_text(render_triangle(tri, title=f"spec {sides}"))
    print(f"wrote {path}  (A={tri.A}, B={tri.B}, C={tri.C})")
