"""A tour of exact arithmetic in ℤ[ω].

The Eisenstein integers are the complex numbers x + y·ω with x, y ∈ ℤ and
ω = e^{2πi/3}; they form the triangular lattice in the plane.  This script
walks through the ring structure the rest of the package is built on.

Run: python3 demos/01_ring_tour.py
"""

from eisentri import OMEGA, ONE, UNITS, EisensteinInt, canonical_associate, gcd

print("== the six units ==")
for u in UNITS:
    print(f"  {str(u):>8}   norm {u.norm()}")

print("\n== multiplication uses ω² = −1 − ω ==")
z = EisensteinInt(2, 1)
w = EisensteinInt(1, -1)
print(f"  ({z}) · ({w}) = {z * w}")
print(f"  norms multiply: {z.norm()} · {w.norm()} = {(z * w).norm()}")

print("\n== conjugation and the norm ==")
z = EisensteinInt(3, 1)
print(f"  z  = {z}")
print(f"  z* = {z.conjugate()}")
print(f"  z·z* = {z * z.conjugate()}  (that is N(z) = {z.norm()})")

print("\n== Euclidean division: always N(r) < N(w) ==")
z, w = EisensteinInt(5, 0), EisensteinInt(2, 1)
q, r = divmod(z, w)
print(f"  {z} = ({w})·({q}) + ({r})")
print(f"  N(r) = {r.norm()} < N(w) = {w.norm()}")

print("\n== gcd, normalized to the sector x > y ≥ 0 ==")
a = EisensteinInt(6, 3)
b = EisensteinInt(3, 0)
g = gcd(a, b)
print(f"  gcd({a}, {b}) = {g}")
print(f"  both quotients are exact: {a} / ({g}) = {a // g},  {b} / ({g}) = {b // g}")

print("\n== every nonzero element has one associate in the sector ==")
for z in (OMEGA, EisensteinInt(1, -1), EisensteinInt(0, -3), EisensteinInt(-4, -9)):
    unit, cano = canonical_associate(z)
    print(f"  {str(z):>8}  ·  {str(unit):>6}  =  {cano}")

print("\n== coordinates are Python ints: no overflow, ever ==")
huge = EisensteinInt(10**30, -(10**30))
print(f"  N(10³⁰ − 10³⁰ω) = {huge.norm()}")
assert ONE * huge == huge
