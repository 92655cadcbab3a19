"""
Totally split primes
====================

A prime splits completely in Q[x]/(f) when x^p = x mod (f, p).  For
abelian fields the split primes are a union of classes mod a conductor.
"""

from sympy import primerange

from steinlab import numtheory as nt

f = nt.ZPoly.parse("x^2 + 1")
print("x^2+1 splits at", [p for p in primerange(3, 60) if nt.is_totally_split(f, p)])

cubic = nt.ZPoly.parse(nt.CUBIC13)
print("cubic of conductor 13:", cubic)
for p in (13, 3, 5, 53):
    print(f"  p = {p:3d}  {nt.verdict(cubic, p)}")

spec = nt.BUILTIN["Qi_cubic13"]
rep = nt.congruence_classes(spec, 52)
print("Qi_cubic13 splits exactly at p mod 52 in", rep.residues, "exact:", rep.exact)

spec = nt.BUILTIN["Qi_sqrt3_zeta7plus"]
print("Qi_sqrt3_zeta7plus mod 84:", nt.congruence_classes(spec, 84).residues)
for row in nt.check_listed_primes(spec, 84, [13, 97, 169]):
    print("  ", row)

# densities approach 1/[K:Q] for Galois cubics
print("density of split primes for the cubic:", round(nt.split_density(cubic, 10_000), 3))

# a non-abelian example is only searched heuristically
print(nt.congruence_classes(nt.field_set("x^3 - 2"), 12).notes)
