"""How rational primes behave in ℤ[ω], and unique factorization at work.

A prime p ≡ 2 (mod 3) stays prime (inert), 3 ramifies as a unit times
(1 − ω)², and p ≡ 1 (mod 3) splits into a conjugate pair π·π* of norm-p
primes.  That trichotomy decides which integers are values of the norm
form x² − xy + y² — the fact the whole embedding criterion rests on.

Run: python3 demos/02_primes_and_factoring.py
"""

from eisentri import (
    EisensteinInt,
    classify_prime,
    factor_eisenstein,
    lift_split_prime,
    norm_representability,
)

print("== the first few primes, classified ==")
for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
    kind = classify_prime(p).value
    extra = ""
    if kind == "split":
        pi = lift_split_prime(p)
        extra = f"  =  N({pi})"
    print(f"  {p:>3}  {kind:<9}{extra}")

print("\n== factoring Eisenstein integers ==")
for coords in ((6, 3), (7, 0), (12, 0), (35, 14), (-9, 24)):
    z = EisensteinInt(*coords)
    fz = factor_eisenstein(z)
    pieces = [f"({fz.unit})"]
    pieces += [f"({p})^{e}" if e > 1 else f"({p})" for p, e in fz.factors]
    print(f"  {str(z):>10} = {' · '.join(pieces)}")
    assert fz.product() == z

print("\n== which integers are norms?  r²·t with t clean of inert primes ==")
for n in (1, 2, 3, 4, 7, 12, 14, 21, 50, 147, 200):
    rep = norm_representability(n)
    verdict = "yes" if rep.representable else f"no, offending {list(rep.offending)}"
    print(f"  {n:>4} = {rep.r}²·{rep.t:<4} representable: {verdict}")
