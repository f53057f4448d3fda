# The positroid Z(1..m|m+1..n): its bounded affine permutation, necklace,
# factorization into adjacent transpositions and the BCFW matrix.
from abct.positroid import (bcfw_factorization, bcfw_matrix, bcfw_table, boundary_perm,
                            compose_factorization, necklace_from_perm)

m, n = 4, 7
f = boundary_perm(m, n)
print("f =", f.to_list())
print("necklace:", necklace_from_perm(f).labels())

g, word = bcfw_factorization(m, n)
print("word", word, "length", len(word), "= 2n - 5")
assert compose_factorization(g, word) == f

print("edge weights:", list(bcfw_table(m, n).names))
for row in bcfw_matrix(m, n):
    print("  ", [e.to_str() for e in row])
