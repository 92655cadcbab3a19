"""
Groebner bases and free resolutions
===================================

Exact rational arithmetic throughout.  The resolution is built from a
Groebner basis with Schreyer's order and then trimmed to a minimal one.
"""

from steinlab.polyalg import Ideal, Ring, ext_top, free_resolution, tangent_dim

# the twisted cubic: three quadrics, two linear syzygies
R = Ring(("a", "b", "c", "d"))
I = Ideal([R.parse(s) for s in ("a*c - b^2", "b*d - c^2", "a*d - b*c")])
print("Groebner basis:")
for g in I.groebner():
    print("   ", g)
print("dimension", I.dim(), "codimension", I.codim())

res = free_resolution(I)
print("Betti numbers", res.betti(), "exact:", res.is_exact())
print("syzygy matrix:")
print(res[1])

# the dualizing module is the cokernel of the transposed last map
omega = ext_top(I, res)
print("omega fibre at the cone point:", omega.fiber_dim([0, 0, 0, 0]))
print("omega fibre at (1,1,1,1):", omega.fiber_dim([1, 1, 1, 1]))

# the Zariski tangent space jumps at the singular point
print("tangent dim at the origin:", tangent_dim(I, [0, 0, 0, 0]))
print("tangent dim at (1,1,1,1):", tangent_dim(I, [1, 1, 1, 1]))

# redundant generators are kept when given explicitly
S = Ring(("x", "y"))
x, y = S.gens()
print("(x, y, x + y):", free_resolution(Ideal([x, y]), generators=[x, y, x + y]).betti())
print("(x, y) minimal:", free_resolution(Ideal([x, y])).betti())
