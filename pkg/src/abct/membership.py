"""Membership in V(3,n), its quartic ideal, positroid vanishing, colliding
boundary strata, conics, valuations and the two-lines perturbation."""
from itertools import combinations, permutations
import math
import random

from gmpy2 import mpq

from .exact_arith import Q, MultiPoly, SymbolTable, nullspace, poly_det, rank
from .pluecker import NotGrassmannianPoint, RationalMatrix, pluecker_of
from .veronese import theta6, theta6_extended


def _require_full_rank(M):
    if M.rank() != 3:
        raise NotGrassmannianPoint("not a Grassmannian point: rank(M) < 3")


def in_V3n(M):
    if M.k != 3:
        raise ValueError("expected a 3 x n matrix")
    _require_full_rank(M)
    return theta6(M).rank() <= 5


# -- quartics ---------------------------------------------------------------

def quartic_value(idx, P):
    i1, i2, i3, i4, i5, i6 = sorted(idx)
    p = P.signed
    return (p((i1, i2, i3)) * p((i1, i5, i6)) * p((i2, i4, i6)) * p((i3, i4, i5))
            - p((i2, i3, i4)) * p((i1, i2, i6)) * p((i1, i3, i5)) * p((i4, i5, i6)))


def quartic_indices(n):
    return list(combinations(range(1, n + 1), 6))


def failing_quartic(P):
    """First 6-subset whose quartic is nonzero, or None."""
    for idx in quartic_indices(P.n):
        if quartic_value(idx, P):
            return idx
    return None


def colliding_quartic_value(idx, P):
    """idx = (j1, j1', j2, j3, j4, j5, j6); coordinates are taken signed."""
    j1, j1p, j2, j3, j4, j5, j6 = idx
    if len(set(idx)) != 7:
        raise ValueError("colliding quartic needs 7 distinct indices")
    p = P.signed
    return (p((j1p, j2, j3)) * p((j1, j5, j6)) * p((j2, j4, j6)) * p((j3, j4, j5))
            - p((j2, j3, j4)) * p((j1p, j2, j6)) * p((j1, j3, j5)) * p((j4, j5, j6)))


def colliding_quartic_indices(n, intervals):
    """All index tuples whose colliding pair lies in one interval."""
    out = []
    for I in intervals:
        for j1, j1p in permutations(sorted(I), 2):
            rest = [x for x in range(1, n + 1) if x not in (j1, j1p)]
            for five in combinations(rest, 5):
                for perm in permutations(five):
                    out.append((j1, j1p) + perm)
    return out


# -- positroid conditions ---------------------------------------------------

class CyclicRankCondition:
    __slots__ = ("start", "length", "bound")

    def __init__(self, start, length, bound):
        if bound not in (0, 1, 2):
            raise ValueError("bound must be 0, 1 or 2")
        if length < 1:
            raise ValueError("length must be positive")
        self.start, self.length, self.bound = start, length, bound

    def elements(self, n):
        if self.length > n:
            raise ValueError("interval longer than n")
        return frozenset((self.start - 1 + i) % n + 1 for i in range(self.length))

    def __repr__(self):
        return f"CyclicRankCondition({self.start}, {self.length}, {self.bound})"


def _vanishing_for(I, bound, n):
    out = set()
    for J in combinations(range(1, n + 1), 3):
        c = len(I.intersection(J))
        if (bound == 2 and c == 3) or (bound == 1 and c >= 2) or (bound == 0 and c >= 1):
            out.add(J)
    return out


def positroid_vanishing(conds, n):
    out = set()
    for c in conds:
        I = c.elements(n) if isinstance(c, CyclicRankCondition) else frozenset(c[0])
        b = c.bound if isinstance(c, CyclicRankCondition) else c[1]
        out |= _vanishing_for(I, b, n)
    return out


def rank_conditions(s):
    """(set, bound) pairs of the positroid attached to a stratum."""
    conds = [(frozenset([a]), 0) for a in s.A0]
    for I in s.interval_sets():
        if len(I) >= 2:
            conds.append((frozenset(I), 1))
    if s.kind == "collinear":
        for side in s.side_sets():
            conds.append((frozenset(side), 2))
    return conds


def in_stratum(M, s):
    if M.n != s.n:
        raise ValueError("matrix and stratum have different n")
    _require_full_rank(M)
    for I, b in rank_conditions(s):
        if rank(M.submatrix(sorted(I))) > b:
            return False
    if s.kind == "colliding":
        return theta6_extended(M, [sorted(I) for I in s.interval_sets()]).rank() <= 5
    return True


def stratum_vanishing(s):
    return positroid_vanishing(rank_conditions(s), s.n)


# -- conics -----------------------------------------------------------------

def conic_through(M):
    """Coefficients (x^2, y^2, z^2, xy, xz, yz) of the conic through the columns."""
    T = theta6(M)
    K = nullspace(T.columns(), 6)
    if len(K) != 1:
        raise ValueError(f"conic not unique: kernel dimension {len(K)}")
    v = K[0]
    lead = next(x for x in v if x)
    return [x / lead for x in v]


# -- valuations along one-parameter families --------------------------------

T_TABLE = SymbolTable(["t"])


def _as_tpoly(x):
    if isinstance(x, MultiPoly):
        if x.table != T_TABLE:
            x = x.remap(T_TABLE)
        return x
    return MultiPoly.const(T_TABLE, Q(x))


def family_minor(family, I):
    cols = sorted(I)
    return poly_det([[_as_tpoly(row[j - 1]) for j in cols] for row in family])


def valuation_along(family, f):
    """t-adic valuation of f on the family; f is an index triple or a callable
    receiving a minor function I -> MultiPoly in t.  Returns math.inf when f
    vanishes identically."""
    if callable(f):
        val = f(lambda I: family_minor(family, I))
    else:
        val = family_minor(family, f)
    val = _as_tpoly(val)
    if val.is_zero():
        return math.inf
    return val.valuation_in("t")


def family_two_lines(n, m, seed=0):
    """Columns 1..m on {x=0}, m+1..n on {y=0}, pushed onto xy = -t z^2."""
    t = MultiPoly.var(T_TABLE, "t")
    rng = random.Random(seed)
    ys = sorted(rng.sample(range(1, 4 * n), m), reverse=True)
    xs = sorted(rng.sample(range(1, 4 * n), n - m))
    cols = [(-t.scale(mpq(1, y)), y, 1) for y in ys]
    cols += [(x, -t.scale(mpq(1, x)), 1) for x in xs]
    return [[_as_tpoly(c[i]) for c in cols] for i in range(3)]


def family_colliding(n, i, seed=0):
    """Points (1, s, s^2) on a conic with s_{i+1} = s_i + t."""
    t = MultiPoly.var(T_TABLE, "t")
    rng = random.Random(seed)
    s = sorted(rng.sample(range(0, 4 * n), n))
    svals = [_as_tpoly(v) for v in s]
    svals[i] = svals[i - 1] + t
    return [[_as_tpoly(1) for _ in range(n)], svals, [v * v for v in svals]]


def family_at(family, tval):
    tval = Q(tval)
    return RationalMatrix([[e.eval([tval]) for e in row] for row in family])


# -- perturbation off the two-lines boundary ---------------------------------

def perturb_two_lines(M, delta):
    """Push a normalized two-lines point (columns (0,y,z), (0,0,z), (x,0,z))
    onto the conic xy = -delta^2 z^2."""
    delta = Q(delta)
    eps = delta * delta
    cols = []
    for j, (x, y, z) in enumerate(M.columns(), start=1):
        if x == 0 and y != 0:
            cols.append((-eps * z * z / y, y, z))
        elif x == 0 and y == 0:
            cols.append((-j * delta * z, delta * z / j, z))
        elif y == 0:
            if x == 0:
                raise ValueError(f"column {j}: zero denominator")
            cols.append((x, -eps * z * z / x, z))
        else:
            raise ValueError(f"column {j} is not on the coordinate lines x=0 or y=0")
    return RationalMatrix.from_columns(cols)


# -- seeded sampling of non-members ------------------------------------------

def generic_point(n, seed, window=9, attempts=16):
    """Seeded integer 3 x n matrix off V(3,n), resampled at most `attempts` times."""
    rng = random.Random(seed)
    for _ in range(attempts):
        M = RationalMatrix([[rng.randint(-window, window) for _ in range(n)] for _ in range(3)])
        if M.rank() == 3 and not in_V3n(M):
            return M
    raise RuntimeError("no generic non-member found within the attempt bound")


# -- the Gale-dual quartic on V(4,7) -----------------------------------------

def v47_quartic_value(P):
    p = P.signed
    return (p((4, 5, 6, 7)) * p((1, 2, 6, 7)) * p((2, 3, 4, 7)) * p((1, 3, 5, 7))
            - p((1, 5, 6, 7)) * p((1, 2, 3, 7)) * p((3, 4, 5, 7)) * p((2, 4, 6, 7)))


def v47_coplanar_vanishing(P):
    """All 4-subsets of {1..5} vanish on the Gale image of ZV(67x)."""
    return all(P[I] == 0 for I in combinations(range(1, 6), 4))


# -- the three components of ZV(234) at n = 6 ---------------------------------

def zv234_components(M):
    """Names of the components among Z(234|156), Z(34x), Z(2345) containing M."""
    out = []
    if rank(M.submatrix([2, 3, 4])) <= 2 and rank(M.submatrix([5, 6, 1])) <= 2:
        out.append("Z(234|156)")
    if rank(M.submatrix([3, 4])) <= 1:
        out.append("Z(34x)")
    if rank(M.submatrix([2, 3, 4, 5])) <= 2:
        out.append("Z(2345)")
    return out


def zv234_reflected_components(M):
    """The mirror images Z(23x), Z(1234) under j -> 6 - j (mod 6)."""
    out = []
    if rank(M.submatrix([2, 3])) <= 1:
        out.append("Z(23x)")
    if rank(M.submatrix([1, 2, 3, 4])) <= 2:
        out.append("Z(1234)")
    return out
