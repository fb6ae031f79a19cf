"""
Monodromy of a degree-4 Blaschke product, step by step
======================================================

Builds one product, finds its branch values, tracks the fiber around a
lollipop loop per branch value, and prints the resulting permutations
together with the group facts the package certifies.
"""

import numpy as np

from blaschkelab import (
    BlaschkeProduct,
    boundary_product,
    compute_representation,
    group_closure,
    is_transitive,
    orbital_count,
)

# A composition-shaped example: C(z^2) with C a degree-2 product, so the
# monodromy group is smaller than the full symmetric group.
b = BlaschkeProduct(theta=0.0, zeros=[0.0, 0.0, 0.5, -0.5])
print(f"order n = {b.order}")

# Branch data: critical points inside the disc and the distinct critical
# values.  Multiplicities always sum to n - 1.
data = b.branch_data()
for cluster in data.critical_points:
    print(
        f"critical point {cluster.center:.6f}  multiplicity {cluster.multiplicity}"
    )
print("branch values:", np.round(data.branch_values, 6))

# One tracked permutation per branch value, plus the boundary permutation
# tracked independently around a large circle.
rep = compute_representation(b, seed=0)
print(f"base point w0 = {rep.base:.6f}")
for beta, g in zip(rep.branch_values, rep.generators):
    print(f"loop around {beta:.6f}: images {g.images}, cycles {g.cycle_type()}")
print("boundary permutation:", rep.boundary_perm.images)

# The sweep-ordered product of the generators must reproduce the tracked
# boundary permutation -- a consistency check between two independent
# computations.
product = boundary_product(rep)
print("generator product == boundary?", product.images == rep.boundary_perm.images)

# Group invariants: transitivity (the product is not a composition of
# disjoint pieces) and the orbit count q on ordered pairs.
gens = list(rep.generators)
group = group_closure(gens, degree=b.order)
print(f"monodromy group order = {len(group)}")
print("transitive?", is_transitive(gens, b.order))
print("orbital count q =", orbital_count(gens, b.order))
