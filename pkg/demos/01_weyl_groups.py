"""
Permutations, lengths and the Bruhat order
==========================================

Elements of S_n (and products of several copies) are written as words in
simple transpositions or in one-line notation.
"""

from steinlab.weyl import (IntWeight, SimpleSubset, WeylElem, bruhat_leq, coset_reps, coxeter_length,
                           dot_action, fixed_space_dim, is_product_of_distinct_simples, reflection_length)

# s1 s2 applies s2 first, so in one-line notation it is 231
w = WeylElem.parse("s1s2", 3)
print("s1s2 =", w, "=", WeylElem.parse("231", 3) == w)

# the two lengths: simple reflections versus arbitrary reflections
for name in ("e", "s1", "s1s2", "w0"):
    u = WeylElem.parse(name, 3)
    print(f"{name:5s} length {coxeter_length(u)}  reflection length {reflection_length(u)}"
          f"  fixed space {fixed_space_dim(u)}  distinct simples {is_product_of_distinct_simples(u)}")

# the longest element is a single reflection, which is why it is never a product of distinct simples
w0 = WeylElem.longest(3)
print("w0 above everything:", all(bruhat_leq(u, w0) for u in WeylElem.all(3)))
print("s1s2 <= s2s1:", bruhat_leq(WeylElem.parse("s1s2", 3), WeylElem.parse("s2s1", 3)))

# the dot action moves weights around the shifted origin
zero = IntWeight.parse("0,0,0")
for name in ("s1", "s2", "w0"):
    print(f"{name} . 0 =", dot_action(WeylElem.parse(name, 3), zero))

# shortest and longest elements in a coset of the parabolic generated by s1
print("coset of w0 mod <s1>:", coset_reps(w0, SimpleSubset.parse("1")))

# products: everything works factor by factor
pair = WeylElem.parse("w0,s1", 3)
print("w0,s1 has length", coxeter_length(pair), "and reflection length", reflection_length(pair))
