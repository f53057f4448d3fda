"""Independent reference computations used to freeze and cross-check values.

Nothing here imports abct: Fractions instead of gmpy2, Leibniz determinants
instead of Bareiss, and a from-scratch enumeration of stratum labels.
"""
from fractions import Fraction
from itertools import combinations, permutations


def frac_matrix(M):
    """RationalMatrix (or nested lists) -> rows of Fractions."""
    rows = M.rows if hasattr(M, "rows") else M
    return [[Fraction(str(x)) for x in r] for r in rows]


def leibniz_det(rows):
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inv % 2 else 1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if not term:
                break
        total += term
    return total


def minors(M):
    rows = frac_matrix(M)
    k, n = len(rows), len(rows[0])
    return {I: leibniz_det([[rows[i][j - 1] for j in I] for i in range(k)])
            for I in combinations(range(1, n + 1), k)}


def frac_rank(rows):
    rows = [list(r) for r in rows]
    rk, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rk < len(rows) and col < ncols:
        piv = next((i for i in range(rk, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(len(rows)):
            if i != rk and rows[i][col]:
                f = rows[i][col] / rows[rk][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
        col += 1
    return rk


def on_common_conic(M):
    """Columns of a 3 x n matrix satisfy one quadric: the 6 x n quadric matrix drops rank."""
    cols = list(zip(*frac_matrix(M)))
    quad = [[u * u, v * v, w * w, u * v, u * w, v * w] for u, v, w in cols]
    return frac_rank(quad) <= 5


# -- brute-force stratum labels ------------------------------------------------

def _cyclic_blocks(rest):
    """All partitions of the cyclic sequence rest into consecutive runs."""
    N = len(rest)
    out = set()
    for r in range(1, N + 1):
        for cuts in combinations(range(N), r):
            blocks = []
            for a, b in zip(cuts, cuts[1:] + (cuts[0] + N,)):
                blocks.append(frozenset(rest[j % N] for j in range(a, b)))
            out.add(tuple(blocks))
    # keep one representative per unordered partition, remembering cyclic order
    seen, res = set(), []
    for blocks in sorted(out, key=lambda bl: [sorted(b) for b in bl]):
        key = frozenset(blocks)
        if key not in seen:
            seen.add(key)
            res.append(blocks)
    return res


def _cyclic_order(blocks, rest):
    pos = {x: i for i, x in enumerate(rest)}
    # a block may wrap around; use the position of the element following a gap
    def start(b):
        ps = sorted(pos[x] for x in b)
        for p in ps:
            if (p - 1) % len(rest) not in {pos[x] for x in b} or len(b) == len(rest):
                return p
        return ps[0]
    return sorted(blocks, key=start)


def brute_labels(n, max_codim):
    """Set of hashable labels (kind, A0, blocks, sides) with 0 < codim <= max_codim."""
    labels = set()
    for z in range(n + 1):
        for A0 in combinations(range(1, n + 1), z):
            rest = [x for x in range(1, n + 1) if x not in A0]
            if len(rest) < 4:
                continue
            for blocks in _cyclic_blocks(rest):
                r = len(blocks)
                ordered = _cyclic_order(blocks, rest)
                base = n - r + z
                if r >= 5 and 0 < base <= max_codim:
                    labels.add(("colliding", frozenset(A0), frozenset(blocks), None))
                if r >= 4 and base + 1 <= max_codim:
                    for a, b in combinations(range(r), 2):
                        A = [ordered[i] for i in range(a, b)]
                        B = [ordered[i % r] for i in range(b, a + r)]
                        if len(A) < 2 or len(B) < 2:
                            continue
                        if r == 4:
                            # the two 2|2 splits give one variety
                            sides = "vacuous"
                        else:
                            sides = frozenset([frozenset(A), frozenset(B)])
                        labels.add(("collinear", frozenset(A0), frozenset(blocks), sides))
    return labels


def _apply(label, g, n):
    kind, A0, blocks, sides = label
    shift, flip = g

    def m(x):
        if flip:
            x = n + 1 - x
        return (x - 1 + shift) % n + 1
    mb = lambda b: frozenset(m(x) for x in b)
    new_sides = sides
    if isinstance(sides, frozenset):
        new_sides = frozenset(frozenset(mb(b) for b in side) for side in sides)
    return (kind, frozenset(m(x) for x in A0), frozenset(mb(b) for b in blocks), new_sides)


def brute_codim(label, n):
    kind, A0, blocks, _ = label
    c = n - len(blocks) + len(A0)
    return c + 1 if kind == "collinear" else c


def brute_orbit_counts(n, max_codim):
    """{codim: (strata, dihedral orbits)} from the brute-force labels."""
    labels = brute_labels(n, max_codim)
    group = [(s, f) for f in (False, True) for s in range(n)]
    out = {}
    seen = set()
    for lab in sorted(labels, key=repr):
        c = brute_codim(lab, n)
        cnt, orb = out.get(c, (0, 0))
        cnt += 1
        if lab not in seen:
            seen |= {_apply(lab, g, n) for g in group}
            orb += 1
        out[c] = (cnt, orb)
    return dict(sorted(out.items()))
