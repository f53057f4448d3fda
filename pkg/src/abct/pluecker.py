"""Grassmannian points: maximal minors, positivity, symmetries, Gale duality
and the sorting operators behind supermodularity."""
from itertools import combinations
import json

from gmpy2 import mpq

from .exact_arith import Q, det, rank, nullspace


class NotGrassmannianPoint(ValueError):
    pass


class RationalMatrix:
    """Immutable k x n matrix of exact rationals."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(Q(x) for x in r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows

    @property
    def k(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.rows[0])

    def col(self, j):
        """Column j, 1-based."""
        return tuple(r[j - 1] for r in self.rows)

    def columns(self):
        return [self.col(j) for j in range(1, self.n + 1)]

    @classmethod
    def from_columns(cls, cols):
        cols = list(cols)
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    def submatrix(self, cols):
        return [[r[j - 1] for j in cols] for r in self.rows]

    def rank(self):
        return rank(self.rows)

    def scale_columns(self, lams):
        return RationalMatrix([[x * Q(l) for x, l in zip(r, lams)] for r in self.rows])

    def permute_columns(self, perm):
        """New column j is old column perm[j-1]."""
        return RationalMatrix.from_columns([self.col(p) for p in perm])

    def left_multiply(self, g):
        g = [[Q(x) for x in r] for r in g]
        return RationalMatrix([[sum((g[i][l] * self.rows[l][j] for l in range(self.k)), mpq(0))
                                for j in range(self.n)] for i in range(len(g))])

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in r] for r in self.rows]})"

    def to_json(self):
        return {"k": self.k, "n": self.n,
                "entries": [[str(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        M = cls(obj["entries"])
        if ("k" in obj and obj["k"] != M.k) or ("n" in obj and obj["n"] != M.n):
            raise ValueError("k/n fields disagree with entries")
        return M


def subsets(n, k):
    return list(combinations(range(1, n + 1), k))


class PlueckerVector:
    """Map from sorted k-subsets of [n] to rationals, up to global scale."""

    __slots__ = ("k", "n", "coords")

    def __init__(self, k, n, coords):
        self.k, self.n = k, n
        coords = {tuple(I): Q(v) for I, v in coords.items()}
        if set(coords) != set(subsets(n, k)):
            raise ValueError("coordinates must be indexed by all sorted k-subsets")
        if not any(coords.values()):
            raise NotGrassmannianPoint("Pluecker vector is identically zero")
        self.coords = coords

    def __getitem__(self, I):
        return self.coords[tuple(I)]

    def signed(self, idx):
        """p at an arbitrary index tuple: alternating in the indices."""
        idx = list(idx)
        if len(set(idx)) != len(idx):
            return mpq(0)
        s = 1
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                if idx[a] > idx[b]:
                    s = -s
        return s * self.coords[tuple(sorted(idx))]

    def normalized(self):
        """Representative whose first nonzero coordinate (lex order) is positive."""
        first = next(v for I, v in sorted(self.coords.items()) if v)
        if first > 0:
            return self
        return PlueckerVector(self.k, self.n, {I: -v for I, v in self.coords.items()})

    def support(self):
        return {I for I, v in self.coords.items() if v}

    def to_json(self):
        return {",".join(map(str, I)): str(v) for I, v in sorted(self.coords.items())}


def pluecker_of(M):
    if not isinstance(M, RationalMatrix):
        M = RationalMatrix(M)
    coords = {I: det(M.submatrix(I)) for I in subsets(M.n, M.k)}
    if not any(coords.values()):
        raise NotGrassmannianPoint("not a Grassmannian point: matrix is rank deficient")
    return PlueckerVector(M.k, M.n, coords)


def is_tnn(P):
    return all(v >= 0 for v in P.normalized().coords.values())


def is_tp(P):
    return all(v > 0 for v in P.normalized().coords.values())


def projective_ratio(P, R):
    """The scalar c with R = c*P, or None if the vectors are not proportional."""
    if (P.k, P.n) != (R.k, R.n):
        return None
    c = None
    for I, v in P.coords.items():
        w = R.coords[I]
        if not v:
            if w:
                return None
            continue
        r = w / v
        if c is None:
            c = r
        elif r != c:
            return None
    return c


def projectively_equal(P, R):
    return projective_ratio(P, R) is not None


def cyclic_shift(M):
    """Columns (v1..vn) -> ((-1)^(k-1) vn, v1, ..., v_{n-1})."""
    cols = M.columns()
    s = -1 if (M.k - 1) % 2 else 1
    return RationalMatrix.from_columns([tuple(s * x for x in cols[-1])] + cols[:-1])


def dihedral_flip(M):
    return RationalMatrix.from_columns(M.columns()[::-1])


def gale_dual(M):
    """Kernel of M as an (n-k) x n matrix, then column j scaled by (-1)^(j-1)."""
    if M.rank() != M.k:
        raise NotGrassmannianPoint("not a Grassmannian point: matrix is rank deficient")
    K = nullspace(M.rows, M.n)
    return RationalMatrix([[x if j % 2 == 0 else -x for j, x in enumerate(r)] for r in K])


def complement(I, n):
    s = set(I)
    return tuple(j for j in range(1, n + 1) if j not in s)


def gale_identity_scalar(M):
    """c with p_{I^c}(gale_dual(M)) = c * p_I(M) for all I, or None."""
    P = pluecker_of(M)
    D = pluecker_of(gale_dual(M))
    c = None
    for I, v in P.coords.items():
        w = D[complement(I, M.n)]
        if not v:
            if w:
                return None
            continue
        r = w / v
        if c is None:
            c = r
        elif r != c:
            return None
    return c


def sort_pair(I, J, offset=0, n=None):
    """(min, max, sort1, sort2) of two k-subsets.

    The order is 1<2<...<n rotated to start at offset+1; n is needed only
    when offset is nonzero.
    """
    I, J = sorted(I), sorted(J)
    if len(I) != len(J):
        raise ValueError("I and J must have the same size")
    if offset:
        if n is None:
            raise ValueError("n is required with a nonzero offset")
        pos = lambda a: (a - 1 - offset) % n
        unpos = lambda p: (p + offset) % n + 1
    else:
        pos = lambda a: a
        unpos = lambda p: p
    a = sorted(pos(x) for x in I)
    b = sorted(pos(x) for x in J)
    mn = [min(x, y) for x, y in zip(a, b)]
    mx = [max(x, y) for x, y in zip(a, b)]
    union = sorted(a + b)
    s1, s2 = union[0::2], union[1::2]

    def back(v):
        return tuple(sorted(unpos(p) for p in v))
    return back(mn), back(mx), back(s1), back(s2)


def supermodularity_holds(P, I, J, offset=0):
    if not is_tnn(P):
        raise ValueError("supermodularity needs a totally nonnegative point")
    P = P.normalized()
    mn, mx, s1, s2 = sort_pair(I, J, offset, P.n)
    if len(set(mn)) < P.k or len(set(mx)) < P.k:
        raise ValueError("min/max are not k-subsets")
    lhs = P.signed(I) * P.signed(J)
    mid = P[mn] * P[mx]
    rhs = P.signed(s1) * P.signed(s2)
    return lhs <= mid <= rhs
