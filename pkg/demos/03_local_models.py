"""
Local models of the w0 component
================================

The component for the longest element of S_3 lives in a chart with
coordinates x1, x2, y1 and the strictly upper triangular u12, u13, u23.
Its dualizing sheaf has fibre 2 exactly where the nilpotent part vanishes
and the two lines coincide.
"""

from steinlab import models
from steinlab.weyl import WeylElem

comp = models.iw0_gl3()
print("ideal generators:")
for g in comp.ideal.gens:
    print("   ", g)
print("dimension", comp.dim())

res = comp.resolution()
print("minimal Betti numbers", res.betti())
print("resolution on the five listed generators", models.fallback_resolution_gl3().betti())

# sample the three strata and compare the omega fibre
for stratum in models.STRATA:
    pts = models.sample_w0_points(stratum, 4, seed=0)
    print(f"{stratum:14s}", [models.omega_fiber(comp, p) for p in pts])

print("origin:", models.omega_fiber(comp, [0] * 6))

# smoothness: the tangent dimension equals 9 exactly for products of distinct simples
for w, (formula, simples) in models.is_smooth_classification().items():
    print(f"{w:5s} smooth by tangent count: {formula}  distinct simples: {simples}")

# products of points: the fibre is 2^r where r counts w0 factors with equal lines
for text in ("w0:equal", "w0:equal,w0:equal", "w0:equal,w0:distinct,s1s2:na"):
    spec = models.PdRPointSpec.parse(text)
    print(f"{text:30s} r = {spec.r}  omega fibre = {models.product_omega_fiber(spec)}")

print("component of s1 has dimension", models.component(3, WeylElem.parse("s1", 3)).dim())
