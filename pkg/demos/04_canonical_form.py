# The canonical form of V(3,n) on a chart, checked against Gr(2,n) and against
# the positroid boundary.  Everything is exact rational function arithmetic.
from abct.forms import (omega_gr2, omega_v3n, verify_inductive, verify_n6, verify_pushforward,
                        verify_residue_bcfw, verify_scaling)

print(omega_gr2(5))
print(omega_v3n(6, 3))

# pulled back to the Gr(2,n) chart, the two forms differ by a constant
for n in (5, 6, 7):
    rep = verify_pushforward(n)
    print("n =", n, "constant", rep["constant"], rep["status"])

# forgetting a column, the n = 6 closed form, column scaling
print(verify_inductive(7))
print(verify_n6())
print(verify_scaling(7, 5))

# the residue at p123 = 0 is the dlog form of the BCFW edge weights
for n, m in [(6, 3), (7, 4)]:
    rep = verify_residue_bcfw(n, m)
    print((n, m), rep["status"], "sign", rep["sign"], "weights", rep["edge_symbols"])
