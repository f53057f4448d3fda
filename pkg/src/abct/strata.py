"""Iterated boundary strata of V(3,n): labels, codimension, the containment
poset, dihedral orbits, samplers and the column-merge check."""
from itertools import combinations
import json
import random

from gmpy2 import mpq

from .exact_arith import MultiPoly, SymbolTable, poly_det, rank
from .pluecker import RationalMatrix
from .positroid import CyclicRankMatrix

MAX_N = 9
MAX_CODIM = 4


class Stratum:
    """Colliding (A0; I_1..I_r) or collinear (A0; {I_a} | {I_b}) label.

    Blocks are cyclic intervals of [n] minus A0 in its induced cyclic order,
    kept sorted by their first element.  For collinear strata `sides` holds
    two tuples of block positions; with four blocks the two possible 2|2
    splits describe the same variety and the split {0,1}|{2,3} is used.
    """

    __slots__ = ("kind", "n", "A0", "blocks", "sides", "_key")

    def __init__(self, kind, n, A0, blocks, sides=None):
        if kind not in ("colliding", "collinear"):
            raise ValueError(f"unknown stratum kind {kind!r}")
        self.kind, self.n = kind, n
        self.A0 = tuple(sorted(set(A0)))
        rest = [x for x in range(1, n + 1) if x not in set(self.A0)]
        blocks = [frozenset(b) for b in blocks]
        seen = set(self.A0)
        for b in blocks:
            if not b or seen & b:
                raise ValueError("A0 and the intervals must partition [n]")
            seen |= b
        if seen != set(range(1, n + 1)):
            raise ValueError("A0 and the intervals must partition [n]")
        ordered = []
        for b in blocks:
            ordered.append(_interval_order(b, rest))
        ordered.sort(key=lambda blk: blk[0])
        self.blocks = tuple(ordered)
        r = len(self.blocks)
        if kind == "colliding":
            if sides is not None:
                raise ValueError("a colliding stratum has no split")
            if r < 5:
                raise ValueError("colliding strata need at least 5 distinct points")
            self.sides = None
        else:
            if sides is None:
                raise ValueError("a collinear stratum needs a split")
            if r < 4:
                raise ValueError("collinear strata need at least 4 distinct points")
            self.sides = self._canonical_sides(sides, blocks)
        self._key = (self.kind, self.A0, frozenset(frozenset(b) for b in self.blocks),
                     None if self.sides is None else
                     frozenset(frozenset(self.blocks[i] for i in s) for s in self.sides))

    def _canonical_sides(self, sides, given_blocks):
        r = len(self.blocks)
        pos = {frozenset(b): i for i, b in enumerate(self.blocks)}
        conv = []
        for side in sides:
            idx = set()
            for x in side:
                if isinstance(x, int):
                    idx.add(pos[frozenset(given_blocks[x])])
                else:
                    idx.add(pos[frozenset(x)])
            conv.append(frozenset(idx))
        if len(conv) != 2 or conv[0] & conv[1] or conv[0] | conv[1] != set(range(r)):
            raise ValueError("the split must divide the intervals into two parts")
        for s in conv:
            if len(s) < 2:
                raise ValueError("each side of a collinear split needs at least 2 intervals")
            if not _cyclic_run(s, r):
                raise ValueError("each side of a collinear split must be a cyclic interval")
        if r == 4:
            return ((0, 1), (2, 3))
        a, b = sorted(conv, key=min)
        return (tuple(sorted(a)), tuple(sorted(b)))

    # accessors
    @property
    def r(self):
        return len(self.blocks)

    def interval_sets(self):
        return [frozenset(b) for b in self.blocks]

    def side_sets(self):
        if self.sides is None:
            return []
        return [frozenset().union(*(self.blocks[i] for i in s)) for s in self.sides]

    def block_of(self, x):
        for i, b in enumerate(self.blocks):
            if x in b:
                return i
        return None

    def __eq__(self, other):
        return isinstance(other, Stratum) and self.n == other.n and self._key == other._key

    def __hash__(self):
        return hash((self.n, self._key))

    def __repr__(self):
        return f"Stratum({self.label()})"

    def label(self):
        a0 = "{" + ",".join(map(str, self.A0)) + "}"
        blk = lambda b: "{" + ",".join(map(str, b)) + "}"
        if self.kind == "colliding":
            return f"V({a0}; " + " ".join(blk(b) for b in self.blocks) + ")"
        sa, sb = self.sides
        return (f"Pi({a0}; " + " ".join(blk(self.blocks[i]) for i in sa) + " | "
                + " ".join(blk(self.blocks[i]) for i in sb) + ")")

    def to_json(self):
        rest = [x for x in range(1, self.n + 1) if x not in set(self.A0)]
        return {"kind": self.kind, "n": self.n, "A0": list(self.A0),
                "intervals": [[b[0], len(b)] for b in self.blocks],
                "split": None if self.sides is None else [list(s) for s in self.sides]}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        n = obj["n"]
        A0 = obj.get("A0", [])
        rest = [x for x in range(1, n + 1) if x not in set(A0)]
        blocks = []
        for start, length in obj["intervals"]:
            if start not in rest:
                raise ValueError(f"interval start {start} is in A0 or out of range")
            i = rest.index(start)
            if length > len(rest):
                raise ValueError("interval longer than the remaining index set")
            blocks.append([rest[(i + j) % len(rest)] for j in range(length)])
        return cls(obj["kind"], n, A0, blocks, obj.get("split"))


def _interval_order(block, rest):
    """Elements of block in induced cyclic order, or raise if not an interval."""
    N = len(rest)
    pos = sorted(rest.index(x) for x in block)
    if len(pos) == N:
        return tuple(rest)
    inb = set(pos)
    starts = [p for p in pos if (p - 1) % N not in inb]
    if len(starts) != 1:
        raise ValueError(f"{sorted(block)} is not a cyclic interval of {rest}")
    s = starts[0]
    return tuple(rest[(s + j) % N] for j in range(len(pos)))


def _cyclic_run(idx, r):
    starts = [i for i in idx if (i - 1) % r not in idx]
    return len(idx) == r or len(starts) == 1


def top(n):
    return Stratum("colliding", n, (), [[x] for x in range(1, n + 1)])


def codim(s):
    c = s.n - s.r + len(s.A0)
    return c + 1 if s.kind == "collinear" else c


# -- enumeration ------------------------------------------------------------

def _check_caps(n, max_codim):
    if n < 5:
        raise ValueError("n must be at least 5")
    if n > MAX_N or max_codim > MAX_CODIM:
        raise ValueError(f"enumeration is capped at n <= {MAX_N} and max_codim <= {MAX_CODIM}")


def _cyclic_partitions(rest, r):
    """All ways to cut the cyclic list rest into r consecutive blocks."""
    N = len(rest)
    if r == 1:
        yield [tuple(rest)]
        return
    for cuts in combinations(range(N), r):
        blocks = []
        for a, b in zip(cuts, cuts[1:] + (cuts[0] + N,)):
            blocks.append(tuple(rest[j % N] for j in range(a, b)))
        yield blocks


def enumerate_strata(n, max_codim, include_top=False):
    _check_caps(n, max_codim)
    out = []
    seen = set()
    for z in range(0, n + 1):
        for A0 in combinations(range(1, n + 1), z):
            rest = [x for x in range(1, n + 1) if x not in A0]
            N = len(rest)
            for r in range(4, N + 1):
                c_col = n - r + z
                if r >= 5 and c_col <= max_codim:
                    for blocks in _cyclic_partitions(rest, r):
                        s = Stratum("colliding", n, A0, blocks)
                        if s not in seen:
                            seen.add(s)
                            out.append(s)
                if c_col + 1 <= max_codim:
                    for blocks in _cyclic_partitions(rest, r):
                        for sa in _arc_splits(r):
                            s = Stratum("collinear", n, A0, blocks, sa)
                            if s not in seen:
                                seen.add(s)
                                out.append(s)
    if not include_top:
        out = [s for s in out if codim(s) > 0]
    out.sort(key=lambda s: (codim(s), s.kind, s.A0, s.blocks, s.sides or ()))
    return out


def _arc_splits(r):
    for a, b in combinations(range(r), 2):
        A = list(range(a, b))
        B = [i % r for i in range(b, a + r)]
        if len(A) >= 2 and len(B) >= 2:
            yield (A, B)


# -- order ------------------------------------------------------------------

def leq(sub, sup):
    """True when the closure of sub is contained in that of sup."""
    if sub.n != sup.n:
        raise ValueError("strata over different n")
    z_sub = set(sub.A0)
    if not z_sub >= set(sup.A0):
        return False
    # every block of sup, minus the new zeros, sits inside one block of sub
    owner = {}
    for i, b in enumerate(sub.blocks):
        for x in b:
            owner[x] = i
    for b in sup.blocks:
        ids = {owner[x] for x in b if x not in z_sub}
        if len(ids) > 1:
            return False
    if sup.kind == "colliding":
        return True
    if sub.kind == "colliding":
        return False
    sub_side = {}
    for si, side in enumerate(sub.sides):
        for i in side:
            sub_side[i] = si
    for S in sup.side_sets():
        ids = {owner[x] for x in S if x not in z_sub}
        if len(ids) > 2 and len({sub_side[i] for i in ids}) > 1:
            return False
    return True


def cyclic_rank_matrix(s):
    """Rank of every cyclic interval of columns at a generic point of s."""
    n = s.n
    owner = {}
    for i, b in enumerate(s.blocks):
        for x in b:
            owner[x] = i
    side_of = {}
    if s.sides is not None and s.r > 4:
        for si, side in enumerate(s.sides):
            for i in side:
                side_of[i] = si
    r = {}
    for start in range(1, n + 1):
        for L in range(1, n + 1):
            ids = {owner[x] for x in ((start - 1 + j) % n + 1 for j in range(L)) if x in owner}
            d = len(ids)
            # with four points the split is vacuous: three distinct points span
            if s.kind == "collinear" and s.r > 4 and len({side_of[i] for i in ids}) <= 1:
                val = min(d, 2)
            else:
                val = min(d, 3)
            r[(start, L)] = val
    return CyclicRankMatrix(n, 3, r)


class GradingError(AssertionError):
    pass


class StratumPoset:
    def __init__(self, n, nodes, edges, grading):
        self.n = n
        self.nodes = nodes
        self.edges = edges
        self.grading = grading

    def counts_by_codim(self):
        out = {}
        for c in self.grading:
            out[c] = out.get(c, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self):
        return {"n": self.n,
                "nodes": [dict(s.to_json(), id=i, codim=c, label=s.label())
                          for i, (s, c) in enumerate(zip(self.nodes, self.grading))],
                "edges": [[a, b] for a, b in self.edges]}

    def to_dot(self):
        lines = ["digraph poset {", "  rankdir=TB;"]
        for c in sorted(set(self.grading)):
            lines.append(f"  subgraph cluster_codim{c} {{")
            lines.append("    rank=same;")
            lines.append(f'    label="codim {c}";')
            for i, (s, g) in enumerate(zip(self.nodes, self.grading)):
                if g == c:
                    lines.append(f'    n{i} [label="{s.label()}"];')
            lines.append("  }")
        for a, b in self.edges:
            lines.append(f"  n{b} -> n{a};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def poset(n, max_codim, check=True):
    """Nodes (top included) and covering edges (sub, sup) of the order leq."""
    nodes = enumerate_strata(n, max_codim, include_top=True)
    grading = [codim(s) for s in nodes]
    N = len(nodes)
    up = [0] * N
    for i in range(N):
        for j in range(N):
            if i != j and grading[j] <= grading[i] and leq(nodes[i], nodes[j]):
                up[i] |= 1 << j
    edges = []
    for i in range(N):
        ups = up[i]
        j_bits = ups
        while j_bits:
            low = j_bits & -j_bits
            j = low.bit_length() - 1
            j_bits ^= low
            # j covers i unless something strictly between
            if not any(((ups >> z) & 1) and ((up[z] >> j) & 1) for z in _bits(ups) if z != j):
                edges.append((i, j))
    if check:
        bad = [(i, j) for i, j in edges if grading[i] != grading[j] + 1]
        if bad:
            i, j = bad[0]
            raise GradingError(f"cover {nodes[i].label()} < {nodes[j].label()} "
                               f"jumps codim {grading[j]} -> {grading[i]}")
    return StratumPoset(n, nodes, edges, grading)


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# -- dihedral symmetry ------------------------------------------------------

def dihedral_elements(n):
    """(shift, flip) pairs; the map is x -> flip(x) then rotate by shift."""
    return [(s, f) for f in (False, True) for s in range(n)]


def act(g, s):
    shift, flip = g
    n = s.n

    def m(x):
        if flip:
            x = n + 1 - x
        return (x - 1 + shift) % n + 1
    blocks = [[m(x) for x in b] for b in s.blocks]
    sides = None
    if s.sides is not None:
        sides = [[blocks[i] for i in side] for side in s.sides]
    return Stratum(s.kind, n, [m(x) for x in s.A0], blocks, sides)


def dihedral_orbits(strata):
    """[(representative, size)] in order of first appearance."""
    out = []
    seen = set()
    for s in strata:
        if s in seen:
            continue
        orbit = {act(g, s) for g in dihedral_elements(s.n)}
        seen |= orbit
        out.append((s, len(orbit)))
    return out


# -- samplers ---------------------------------------------------------------

def sample_stratum(s, seed=0, params=None):
    """A totally nonnegative point of the stratum with integer entries."""
    rng = random.Random(seed)
    n = s.n
    if s.kind == "colliding":
        ts = params or sorted(rng.sample(range(0, 6 * n), s.r))
        if len(set(ts)) != s.r:
            raise ValueError("points must be distinct")
        # blocks are ordered by start, so points go round the conic in column order
        cols = [(0, 0, 0)] * n
        for t, b in zip(ts, s.blocks):
            for x in b:
                lam = rng.randint(1, 5)
                cols[x - 1] = (lam, lam * t, lam * t * t)
        return RationalMatrix.from_columns(cols)
    sa, sb = s.sides
    A = [s.blocks[i] for i in _side_cyclic(sa, s.r)]
    B = [s.blocks[i] for i in _side_cyclic(sb, s.r)]
    ys = params[0] if params else sorted(rng.sample(range(1, 6 * n), len(A)), reverse=True)
    xs = params[1] if params else sorted(rng.sample(range(1, 6 * n), len(B)))
    cols = [(0, 0, 0)] * n
    pts = [(0, y, 1) for y in ys] + [(x, 0, 1) for x in xs]
    for pt, b in zip(pts, A + B):
        for x in b:
            lam = rng.randint(1, 5)
            cols[x - 1] = tuple(lam * c for c in pt)
    # blocks of side A then side B in cyclic order starting at A's first block:
    # an even rotation of the column order, so the sign pattern survives
    return RationalMatrix.from_columns(cols)


def _side_cyclic(side, r):
    side = set(side)
    start = next(i for i in side if (i - 1) % r not in side) if len(side) < r else 0
    return [(start + j) % r for j in range(len(side))]


# -- dimension oracle -------------------------------------------------------

def parametrized_dimension(s, seed=0, points=3):
    """Dimension of s in Gr(3,n) as the rank of the Pluecker Jacobian of a
    generic parametrization (GL3 x points x column scales), minus one."""
    n = s.n
    names = [f"g{i}{j}" for i in range(3) for j in range(3)]
    pt_names = [f"u{i}" for i in range(s.r)]
    zero = set(s.A0)
    sc_names = [f"l{x}" for x in range(1, n + 1) if x not in zero]
    T = SymbolTable(names + pt_names + sc_names)
    v = lambda nm: MultiPoly.var(T, nm)
    one = MultiPoly.const(T, 1)
    zp = MultiPoly(T)
    pts = []
    if s.kind == "colliding":
        for i in range(s.r):
            u = v(f"u{i}")
            pts.append((one, u, u * u))
    else:
        side_of = {}
        for si, side in enumerate(s.sides):
            for i in side:
                side_of[i] = si
        for i in range(s.r):
            u = v(f"u{i}")
            pts.append((zp, u, one) if side_of[i] == 0 else (u, zp, one))
    G = [[v(f"g{i}{j}") for j in range(3)] for i in range(3)]
    cols = []
    for x in range(1, n + 1):
        if x in zero:
            cols.append((zp, zp, zp))
            continue
        p = pts[s.block_of(x)]
        lam = v(f"l{x}")
        cols.append(tuple(lam * (G[i][0] * p[0] + G[i][1] * p[1] + G[i][2] * p[2])
                          for i in range(3)))
    minors = [poly_det([[cols[j - 1][i] for j in I] for i in range(3)])
              for I in combinations(range(1, n + 1), 3)]
    grads = [[m.diff(nm) for nm in T.names] for m in minors]
    rng = random.Random(seed)
    # the rank at one point only bounds the generic rank from below
    best = 0
    for _ in range(points):
        point = [mpq(rng.choice([-1, 1]) * rng.randint(1, 997), rng.randint(1, 97)) for _ in T.names]
        best = max(best, rank([[g.eval(point) for g in row] for row in grads]))
    return best - 1


# -- merging colliding columns ----------------------------------------------

def merge_columns(s, a, b):
    if a == b or s.block_of(a) is None or s.block_of(a) != s.block_of(b):
        raise ValueError(f"columns {a} and {b} are not in one interval")
    relabel = lambda x: x - 1 if x > b else x
    blocks = [[relabel(x) for x in blk if x != b] for blk in s.blocks]
    sides = None
    if s.sides is not None:
        sides = [[blocks[i] for i in side] for side in s.sides]
    return Stratum(s.kind, s.n - 1, [relabel(x) for x in s.A0], blocks, sides)


def merge_consistency(M, s, a, b, t):
    """Column b of M is a positive multiple of column a; deleting it lands in
    the merged stratum, and replacing the multiple by t stays in s."""
    from .membership import in_stratum
    ca, cb = M.col(a), M.col(b)
    ratios = {y / x for x, y in zip(ca, cb) if x} | ({None} if any(y and not x for x, y in zip(ca, cb)) else set())
    if len(ratios) != 1 or None in ratios or next(iter(ratios)) <= 0:
        raise ValueError("column b is not a positive multiple of column a")
    merged = merge_columns(s, a, b)
    cols = M.columns()
    M1 = RationalMatrix.from_columns(cols[:b - 1] + cols[b:])
    cols2 = list(cols)
    cols2[b - 1] = tuple(mpq(t) * x for x in ca)
    M2 = RationalMatrix.from_columns(cols2)
    return in_stratum(M1, merged) and in_stratum(M2, s)
