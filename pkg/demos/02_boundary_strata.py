# The boundary of the positive part of V(3,n): strata, their codimension,
# the dihedral symmetry and the closure order.
from abct.membership import in_stratum
from abct.pluecker import is_tnn, pluecker_of
from abct.strata import codim, dihedral_orbits, enumerate_strata, poset, sample_stratum

n = 7
P = poset(n, 2)
print("strata by codim:", P.counts_by_codim())
print("cover relations:", len(P.edges))

for c in (1, 2):
    layer = [s for s in P.nodes if codim(s) == c]
    print(f"codim {c}: {len(layer)} strata in {len(dihedral_orbits(layer))} orbits")
    for rep, size in dihedral_orbits(layer):
        print("   ", rep.label(), "orbit size", size)

# each stratum comes with a sampler landing on it and staying nonnegative
for s in enumerate_strata(n, 1)[:3]:
    M = sample_stratum(s, seed=0)
    print(s.label(), in_stratum(M, s), is_tnn(pluecker_of(M)))

# the closure order as a DOT file, clusters by codim
with open("poset_n6.dot", "w") as fh:
    fh.write(poset(6, 2).to_dot())
print("wrote poset_n6.dot")
