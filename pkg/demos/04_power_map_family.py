"""
The power map z -> z^n as an exact oracle
=========================================

For B(z) = z^n everything is known in closed form: the monodromy group is
the cyclic group generated by an n-cycle, the commutant is the circulant
algebra (dimension n), the minimal projections are the DFT projections,
and on the Bergman space the reducing subspaces are spanned by the
monomial residue classes mod n.  The package checks its full numerical
pipeline against all of this, plus one identity in exact rational
arithmetic.
"""

from fractions import Fraction

import numpy as np

from blaschkelab import u_i_norm_check, zn_end_to_end, zn_projection

# The residue-class projection onto span{z^i, z^(n+i), ...} is diagonal in
# the monomial basis: here n = 3, i = 1, truncation size 9.
p = zn_projection(3, 1, 9)
print("diag of P_1 for n=3:", np.diag(p).real.astype(int))

# Exact rational identity: the weighted norm of the generating vector of
# the i-th reducing subspace equals n/(n k + i + 1), derived two
# independent ways and compared with fractions.Fraction.
lhs, rhs = u_i_norm_check(3, 2, 1)
print(f"u-norm identity n=3 i=2 k=1: {lhs} == {rhs} == {Fraction(3, 3 * 1 + 2 + 1)}")

# End-to-end: the numerical pipeline (root finding, tracking, commutant,
# projections) against the closed-form answers, for n = 2..6.
for n in range(2, 7):
    report = zn_end_to_end(n)
    print(
        f"n={n}: q={report['q_orbitals']}, dim={report['commutant_dim']}, "
        f"projections={report['num_projections']}, "
        f"max commutator={report['max_commutator']:.1e}, ok={report['ok']}"
    )
