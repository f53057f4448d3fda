# Points on a conic, their Pluecker coordinates, and the quartics that cut
# them out among all configurations of n points in the plane.
from gmpy2 import mpq

from abct.membership import failing_quartic, generic_point, in_V3n, quartic_indices
from abct.pluecker import is_tp, pluecker_of
from abct.veronese import pluecker_image, sample_on_V, sample_positive_gr2, seeded_params, veronese_matrix

n = 7
params = seeded_params(n, seed=1)
print("parameters", [str(s) for s in params])

# a positive point of Gr(2,n) and its image under the degree-2 Veronese map
M2 = sample_positive_gr2(n, params)
M3 = veronese_matrix(3, M2)
print(M3)

P2 = pluecker_of(M2)
P3 = pluecker_of(M3)
# every 3x3 minor is a product of three 2x2 minors
for I in [(1, 2, 3), (2, 4, 7), (1, 5, 6)]:
    print(I, P3[I], "=", pluecker_image(I, P2))
print("totally positive:", is_tp(P3))

# membership: one quartic per way of choosing six columns
print(len(quartic_indices(n)), "quartics for n =", n)
on = sample_on_V(n, seeded_params(n, 5))
off = generic_point(n, 5)
print("on conic:", in_V3n(on), failing_quartic(pluecker_of(on)))
print("generic :", in_V3n(off), "first failing quartic", failing_quartic(pluecker_of(off)))
