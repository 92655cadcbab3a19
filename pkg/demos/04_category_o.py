"""
Simple constituents, supports and cycles
========================================

Grothendieck group classes for the principal block of GL_3, and the
classes attached to a refinement position.
"""

from steinlab import catO
from steinlab.weyl import WeylElem

print("M(e) contains", catO.verma_jh(WeylElem.parse("e", 3)).as_dict())
print("N(lambda) =", catO.n_lambda_jh().as_dict())

# change basis back and forth
k = catO.KClass({WeylElem.parse("s1", 3): 1}, "L")
print("L(s1) in Verma classes:", k.to_verma().as_dict())

for text in ("1", "s1", "w0", "1,s1"):
    pos = catO.RefinementPosition.parse(text, 1)
    total, summands = catO.s_lambda_wR(pos)
    print(f"w_R = {text:5s} r = {pos.r}  ratio = {catO.classical_dim_ratio(pos)}"
          f"  summands = {len(summands)}  total = {total.as_dict()}")

# every nonzero simple gives one diagonal cycle with multiplicity m
pos = catO.RefinementPosition.parse("e", 2)
for w in WeylElem.all(3):
    if catO.support_nonzero(w, pos):
        print(f"Z(L({w.names()[0]})) =", catO.cycle_of_simple(w, pos).terms())

print("hom count and its inclusion-exclusion for |I2| = 2, m = 3:",
      catO.hom_dim_count(2, 3), catO.inclusion_exclusion_check(2, 3))
