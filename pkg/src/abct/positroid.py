"""Positroid indexing: bounded affine permutations, Grassmann necklaces,
cyclic rank matrices, and the BCFW bridge data for the two-interval family."""
from functools import reduce

from .exact_arith import MultiPoly, RationalFunction, SymbolTable


class BoundedAffinePermutation:
    """Window (f(1), ..., f(n)) of a bounded affine permutation."""

    __slots__ = ("n", "window")

    def __init__(self, window, n=None):
        window = tuple(int(x) for x in window)
        if n is not None and n != len(window):
            raise ValueError(f"window has {len(window)} entries, expected n = {n}")
        self.n = len(window)
        self.window = window

    def __call__(self, i):
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def __eq__(self, other):
        return isinstance(other, BoundedAffinePermutation) and self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __repr__(self):
        return f"BoundedAffinePermutation({list(self.window)})"

    def to_list(self):
        return list(self.window)


class GrassmannNecklace:
    __slots__ = ("n", "k", "subsets")

    def __init__(self, subsets, n):
        self.n = n
        self.subsets = tuple(frozenset(s) for s in subsets)
        sizes = {len(s) for s in self.subsets}
        if len(self.subsets) != n or len(sizes) != 1:
            raise ValueError("a necklace has n subsets of a common size")
        self.k = sizes.pop()

    def __getitem__(self, a):
        return self.subsets[(a - 1) % self.n]

    def __eq__(self, other):
        return isinstance(other, GrassmannNecklace) and self.subsets == other.subsets

    def __hash__(self):
        return hash(self.subsets)

    def labels(self):
        """Each I_a listed cyclically from a, e.g. '561' for I_5 = {1,5,6}."""
        out = []
        for a, s in enumerate(self.subsets, start=1):
            out.append("".join(str(x) for x in sorted(s, key=lambda x: (x - a) % self.n)))
        return out

    def __repr__(self):
        return f"GrassmannNecklace({self.labels()})"


def validate(obj):
    """k for a bounded affine permutation, True for a valid necklace; raise otherwise."""
    if isinstance(obj, GrassmannNecklace):
        return _validate_necklace(obj)
    f = obj if isinstance(obj, BoundedAffinePermutation) else BoundedAffinePermutation(obj)
    n = f.n
    seen = {}
    for i, v in enumerate(f.window, start=1):
        if not i <= v <= i + n:
            raise ValueError(f"f({i}) = {v} violates i <= f(i) <= i + n")
        r = v % n
        if r in seen:
            raise ValueError(f"f({i}) and f({seen[r]}) agree modulo n")
        seen[r] = i
    total = sum(v - i for i, v in enumerate(f.window, start=1))
    if total % n:
        raise ValueError("sum of f(i) - i is not a multiple of n")
    return total // n


def _validate_necklace(N):
    n = N.n
    for a in range(1, n + 1):
        cur, nxt = N[a], N[a + 1]
        if a not in cur:
            if nxt != cur:
                raise ValueError(f"I_{a + 1 if a < n else 1} must equal I_{a} since {a} is not in I_{a}")
        else:
            rest = cur - {a}
            if not rest <= nxt or len(nxt - rest) != 1:
                raise ValueError(f"I_{a + 1 if a < n else 1} is not I_{a} with {a} exchanged")
    return True


def necklace_from_perm(f):
    if not isinstance(f, BoundedAffinePermutation):
        f = BoundedAffinePermutation(f)
    validate(f)
    n = f.n
    subsets = []
    for a in range(1, n + 1):
        I = set()
        for b in range(a - n, a):
            v = f(b)
            if v >= a:
                I.add((v - 1) % n + 1)
        subsets.append(I)
    N = GrassmannNecklace(subsets, n)
    _validate_necklace(N)
    return N


def parse_necklace(labels, n):
    return GrassmannNecklace([{int(c) for c in s} for s in labels], n)


# -- cyclic rank matrices ---------------------------------------------------

class CyclicRankMatrix:
    """r(start, length) for every cyclic interval of [n]."""

    __slots__ = ("n", "k", "r")

    def __init__(self, n, k, r):
        self.n, self.k, self.r = n, k, dict(r)

    @classmethod
    def from_conditions(cls, n, k, conds):
        """Largest rank function on intervals obeying the given bounds.

        conds are (start, length, bound) triples; bounds are propagated to
        subintervals, and a one-step extension raises rank by at most one.
        """
        r = {(s, L): min(L, k) for s in range(1, n + 1) for L in range(1, n + 1)}
        for s, L, b in conds:
            s = (s - 1) % n + 1
            r[(s, L)] = min(r[(s, L)], b)
        nxt = lambda s: s % n + 1
        changed = True
        while changed:
            changed = False
            for L in range(n, 0, -1):
                for s in range(1, n + 1):
                    v = r[(s, L)]
                    if L > 1:
                        # the two maximal subintervals
                        for key in ((s, L - 1), (nxt(s), L - 1)):
                            if r[key] > v:
                                r[key] = v
                                changed = True
                    if L < n:
                        for key in ((s, L + 1), ((s - 2) % n + 1, L + 1)):
                            if r[key] > v + 1:
                                r[key] = v + 1
                                changed = True
        return cls(n, k, r)

    def __le__(self, other):
        return self.n == other.n and all(self.r[key] <= other.r[key] for key in self.r)

    def __eq__(self, other):
        return isinstance(other, CyclicRankMatrix) and self.r == other.r

    def __getitem__(self, key):
        return self.r[key]


# -- the BCFW family --------------------------------------------------------

def _check_mn(m, n):
    if not 3 <= m <= n - 2:
        raise ValueError(f"need 3 <= m <= n - 2, got m = {m}, n = {n}")


def boundary_perm(m, n):
    _check_mn(m, n)
    f = {}
    for x in range(1, n + 1):
        if 1 <= x <= m - 2 or m + 1 <= x <= n - 2:
            f[x] = x + 2
    f[m - 1] = m + 2
    f[m] = n + 1
    f[n - 1] = n + 2
    f[n] = m + n + 1
    return BoundedAffinePermutation([f[x] for x in range(1, n + 1)])


def affine_transposition(j, n):
    """s_j swapping j and j+1 periodically, as a function on integers."""
    def s(x):
        r = (x - 1) % n + 1
        if r == j % n or (j % n == 0 and r == n):
            return x + 1
        if r == j % n + 1:
            return x - 1
        return x
    return s


def bcfw_word(m, n):
    _check_mn(m, n)
    return (list(range(m + 1, n)) + list(range(2, n - 1)) + list(range(1, m)))


def bcfw_factorization(m, n):
    """(g, word) with f = g o s_{w1} o s_{w2} o ... as composed functions."""
    _check_mn(m, n)
    g = [x + n if x in (1, 2, m + 1) else x for x in range(1, n + 1)]
    return BoundedAffinePermutation(g), bcfw_word(m, n)


def compose_factorization(g, word):
    n = g.n
    funcs = [affine_transposition(j, n) for j in word]
    w = reduce(lambda acc, s: (lambda x, acc=acc, s=s: acc(s(x))), funcs, lambda x: x)
    return BoundedAffinePermutation([g(w(x)) for x in range(1, n + 1)])


def bcfw_table(m, n):
    _check_mn(m, n)
    names = ([f"p{i}" for i in range(m + 1, n)] + [f"q{i}" for i in range(2, n - 1)]
             + [f"r{i}" for i in range(1, m)])
    return SymbolTable(names)


class _Weights:
    def __init__(self, T):
        self.T = T

    def var(self, s, i):
        return MultiPoly.var(self.T, f"{s}{i}")

    def prod(self, s, a, b):
        out = MultiPoly.const(self.T, 1)
        for i in range(a, b + 1):
            out = out * self.var(s, i)
        return out

    def mixed(self, s, t, a, b):
        """(s,t)_[a,b] = sum over i in [a-1, b] of s_[a,i] t_[i+1,b]."""
        out = MultiPoly(self.T)
        for i in range(a - 1, b + 1):
            out = out + self.prod(s, a, i) * self.prod(t, i + 1, b)
        return out


def bcfw_matrix(m, n):
    T = bcfw_table(m, n)
    w = _Weights(T)
    one, zero = MultiPoly.const(T, 1), MultiPoly(T)
    row1 = [one] + [w.prod("r", 1, j - 1) for j in range(2, m + 1)] + [zero] * (n - m)
    row2 = ([zero, one] + [w.mixed("q", "r", 2, j - 1) for j in range(3, m + 1)]
            + [w.prod("q", 2, j - 1) for j in range(m + 1, n)] + [zero])
    row3 = ([zero] * m + [one] + [w.mixed("p", "q", m + 1, j - 1) for j in range(m + 2, n)]
            + [w.prod("p", m + 1, n - 1)])
    return [row1, row2, row3]


def bcfw_chart_coords(m, n):
    """alpha_i, beta_i, gamma_i of the rotated chart as functions of p, q, r."""
    T = bcfw_table(m, n)
    w = _Weights(T)
    P = w.prod("p", m + 1, n - 1)
    r1 = w.var("r", 1)
    rules = {}
    for i in range(1, n - 2):
        if i <= m - 2:
            a = MultiPoly(T)
            b = w.mixed("q", "r", 2, i + 1)
            c = w.prod("r", 1, i + 1) - r1 * b
        else:
            a = MultiPoly.const(T, 1) if i == m - 1 else w.mixed("p", "q", m + 1, i + 1)
            b = w.prod("q", 2, i + 1)
            c = -(r1 * b)
        rules[f"alpha{i}"] = RationalFunction(a, P)
        rules[f"beta{i}"] = RationalFunction(b)
        rules[f"gamma{i}"] = RationalFunction(c)
    return rules
