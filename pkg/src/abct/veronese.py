"""Veronese maps Gr(2,n) -> Gr(k,n), the 6 x n quadric matrix, chart
symbols and seeded samplers."""
from itertools import combinations
import random

from .exact_arith import Q, MultiPoly, RationalFunction, SymbolTable
from .pluecker import RationalMatrix


def veronese_matrix(k, M):
    if k < 2:
        raise ValueError("k must be at least 2")
    if M.k != 2:
        raise ValueError("veronese_matrix expects a 2 x n matrix")
    cols = []
    for a, b in M.columns():
        cols.append(tuple(a ** (k - 1 - i) * b ** i for i in range(k)))
    return RationalMatrix.from_columns(cols)


def pluecker_image(I, P2):
    """p_I of the Veronese image, as the product of pairwise 2x2 coordinates."""
    out = Q(1)
    for a, b in combinations(sorted(I), 2):
        out *= P2[(a, b)]
    return out


def _quad(u, v):
    return (u[0] * v[0], u[1] * v[1], u[2] * v[2], u[0] * v[1], u[0] * v[2], u[1] * v[2])


def theta6(M):
    if M.k != 3:
        raise ValueError("theta6 expects a 3 x n matrix")
    return RationalMatrix.from_columns([_quad(c, c) for c in M.columns()])


def theta6_extended(M, intervals):
    """theta6(M) plus one column per ordered pair a != b inside an interval."""
    seen = set()
    for I in intervals:
        for a in I:
            if a in seen:
                raise ValueError(f"index {a} appears in two intervals")
            seen.add(a)
    cols = [_quad(c, c) for c in M.columns()]
    for I in intervals:
        for a in I:
            for b in I:
                if a != b:
                    cols.append(_quad(M.col(a), M.col(b)))
    return RationalMatrix.from_columns(cols)


# -- charts -----------------------------------------------------------------

def chart2_symbols(n):
    m = n - 3
    return ["a", "b"] + [f"x{i}" for i in range(1, m + 1)] + [f"y{i}" for i in range(1, m + 1)]


def chart3_symbols(n):
    m = n - 3
    out = []
    for i in range(1, m + 1):
        out += [f"alpha{i}", f"beta{i}", f"gamma{i}"]
    return out


def chart2_table(n):
    return SymbolTable(chart2_symbols(n))


def chart3_table(n):
    return SymbolTable(chart3_symbols(n))


def chart2_matrix(n, table=None):
    """Symbolic (1 0 a x..; 0 1 b y..) as rows of MultiPoly."""
    T = table or chart2_table(n)
    v = lambda s: MultiPoly.var(T, s)
    one, zero = MultiPoly.const(T, 1), MultiPoly.const(T, 0)
    m = n - 3
    return [[one, zero, v("a")] + [v(f"x{i}") for i in range(1, m + 1)],
            [zero, one, v("b")] + [v(f"y{i}") for i in range(1, m + 1)]]


def chart3_matrix(n, table=None):
    """Symbolic (1 0 0 alpha..; 0 0 1 beta..; 0 1 0 gamma..)."""
    T = table or chart3_table(n)
    v = lambda s: MultiPoly.var(T, s)
    one, zero = MultiPoly.const(T, 1), MultiPoly.const(T, 0)
    m = n - 3
    return [[one, zero, zero] + [v(f"alpha{i}") for i in range(1, m + 1)],
            [zero, zero, one] + [v(f"beta{i}") for i in range(1, m + 1)],
            [zero, one, zero] + [v(f"gamma{i}") for i in range(1, m + 1)]]


def chart_theta(n, table=None):
    """alpha_i, beta_i, gamma_i as rational functions of a, b, x_i, y_i."""
    if n < 5:
        raise ValueError("n must be at least 5")
    T = table or chart2_table(n)
    v = lambda s: MultiPoly.var(T, s)
    a, b = v("a"), v("b")
    rules = {}
    for i in range(1, n - 2):
        x, y = v(f"x{i}"), v(f"y{i}")
        xy = x * y
        rules[f"alpha{i}"] = RationalFunction(x * x * b - a * xy, b)
        rules[f"beta{i}"] = RationalFunction(xy, a * b)
        rules[f"gamma{i}"] = RationalFunction(y * y * a - b * xy, a)
    return rules


# -- samplers ---------------------------------------------------------------

def seeded_params(n, seed, window=None, lo=0):
    """n strictly increasing integers drawn from [lo, lo+window) by a seeded RNG."""
    window = window or 4 * n + 8
    rng = random.Random(seed)
    return sorted(rng.sample(range(lo, lo + window), n))


def _check_increasing(params):
    params = [Q(t) for t in params]
    if any(s >= t for s, t in zip(params, params[1:])):
        raise ValueError("parameters must be strictly increasing")
    return params


def sample_positive_gr2(n, params):
    params = _check_increasing(params)
    if len(params) != n:
        raise ValueError(f"need {n} parameters")
    return RationalMatrix([[1] * n, params])


def sample_on_V(n, params):
    return veronese_matrix(3, sample_positive_gr2(n, params))
