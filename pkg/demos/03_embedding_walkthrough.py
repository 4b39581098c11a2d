"""The constructive pipeline, one stage at a time, on the spec (9, 3, 12).

That triangle has sides 3, √3, 2√3 and area (√3/4)·6.  The walkthrough
prints every intermediate quantity that `embed` computes internally, then
checks the result against the brute-force search.

Run: python3 demos/03_embedding_walkthrough.py
"""

from eisentri import (
    EisensteinInt,
    TriangleSpec,
    brute_force_embeddings,
    canonical_triangle,
    combine_uv,
    divisor_of_norm,
    embed,
    heron_data,
    triangle_properties,
    validate,
    verify_embedding,
)

spec = TriangleSpec(9, 3, 12)
print(f"spec: a² = {spec.a2}, b² = {spec.b2}, c² = {spec.c2}")

report = validate(spec)
print(f"\n1. validate: realizable = {report.realizable}, "
      f"witness side = {report.witness_side}")

data = heron_data(spec)
print(f"\n2. area and parity step:")
print(f"   n = {data.n}  (area is (√3/4)·{data.n})")
print(f"   Δ = c² − a² − b² = {data.delta}")
print(f"   (u, v) = ({data.u}, {data.v})  with Δ = u + v, n = u − v")
print(f"   check: u² − uv + v² = {data.u**2 - data.u*data.v + data.v**2} = a²b²")

z = combine_uv(data.u, data.v)
print(f"\n3. packing step: z = (1 + ω)(u + vω) = {z},  N(z) = {z.norm()}")

f = divisor_of_norm(z, spec.a2)
g = -(z // f)
print(f"\n4. factor step: f = {f} with N(f) = {f.norm()} = a²")
print(f"   g = −z/f = {g} with N(g) = {g.norm()} = b²")

print(f"\n5. vertex step: B = f, and A swaps g's coordinates:")
vertex_a = EisensteinInt(g.y, g.x)
print(f"   A = {vertex_a},  B = {f},  C = 0")

tri = embed(spec)
assert (tri.A, tri.B) == (vertex_a, f)
print(f"\n6. embed returns {tri}")
print(f"   verify_embedding: {verify_embedding(tri, spec)}")
print(f"   triangle_properties: {triangle_properties(tri.A, tri.B, tri.C)}")

classes = brute_force_embeddings(spec)
print(f"\n7. brute force finds {len(classes)} congruence class(es); "
      f"the construction lands in one: "
      f"{canonical_triangle(tri) in classes}")

print("\n-- a rejection, for contrast --")
bad = validate(TriangleSpec(2, 2, 2))
print(f"(2, 2, 2): realizable = {bad.realizable}")
print(f"reason: {bad.reason}")
