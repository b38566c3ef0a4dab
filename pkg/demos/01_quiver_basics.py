"""Quivers, dimension vectors, slopes, and the covering constructions.

Everything downstream runs on these objects: a quiver is a directed
multigraph with a positive level on each vertex, a dimension vector assigns
a nonnegative integer to each vertex, and stability compares exact slopes
theta(d) / kappa(d).
"""

from quivermoduli import (
    Quiver,
    Refinement,
    Stability,
    check_quiver,
    euler_form,
    hat_quiver,
    n_support,
    slope,
)

# -- the generalized Kronecker quiver and its Euler form ----------------------

K3 = Quiver.kronecker(3)
d = {"i1": 2, "j1": 3}
print("3-arrow Kronecker quiver:", K3.to_json())
print("<d, d> for d = (2,3):", euler_form(K3, d, d))
print("expected moduli dimension 1 - <d,d>:", 1 - euler_form(K3, d, d))

# -- slope stability ----------------------------------------------------------

stab = Stability.of({"i1": 1, "j1": 0})
print("\nslope of (2,3):", slope(stab, K3, d))
print("slope of the subvector (1,0):", slope(stab, K3, {"i1": 1}))
print("(1,0) destabilizes whenever the map has a kernel line)")

# -- blowing a vertex up into weighted copies ----------------------------------
# Replacing i1 (dimension 2) by copies indexed by a multiplicity vector:
# two level-1 copies, or one level-2 copy.

for m in ({1: 2}, {2: 1}):
    Qh, dh, sh = hat_quiver(K3, "i1", m, d, stab)
    print("\nmultiplicity vector %r:" % m)
    print("  vertices:", [(v, l) for v, l in Qh.vertices])
    print("  arrows:", len(Qh.arrows), " dim:", dh)
    print("  lifted slope:", slope(sh, Qh, dh), "(matches the original)")

# -- the level-one splitting ----------------------------------------------------

Qc, dc, sc = check_quiver(K3, "j1", (2, 1), d, stab)
print("\nlevel-one split of j1 along (2,1): dims", dc)

# -- the bipartite support quiver of a refinement -------------------------------
# ((2),(1,1,1)) refined with one weight-2 entry: a level-2 source, three
# level-1 sinks, and 2 parallel arrows to each sink.

r = Refinement.of([((2, 1),)], [((1, 1),), ((1, 1),), ((1, 1),)])
Q, ones, stab_l = n_support(r)
print("\nsupport quiver of the weight-2 refinement of ((2),(1,1,1)):")
print("  vertices:", [(v, l) for v, l in Q.vertices])
print("  arrow count:", len(Q.arrows))
print("  slope of the all-ones vector:", slope(stab_l, Q, ones))
