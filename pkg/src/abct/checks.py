"""Sample-based checks: Gale duality, supermodularity, the n = 6 boundary
decomposition and the V(4,7) image.  Each returns a JSON-ready report."""
from itertools import combinations
import random
import time

from gmpy2 import mpq

from .membership import (in_V3n, v47_coplanar_vanishing, v47_quartic_value,
                         zv234_components, zv234_reflected_components)
from .pluecker import (RationalMatrix, gale_dual, gale_identity_scalar, is_tnn,
                       pluecker_of, subsets, supermodularity_holds)
from .strata import Stratum, enumerate_strata, sample_stratum
from .veronese import sample_on_V, seeded_params


def _report(identity, anchor, ok, t0, **extra):
    out = {"identity": identity, "anchor": anchor, "status": "pass" if ok else "fail"}
    out.update(extra)
    out["timing"] = round(time.perf_counter() - t0, 3)
    return out


# -- samplers ---------------------------------------------------------------

def cauchy_tp(k, n, seed):
    """1/(x_i + y_j) with increasing positive x, y: totally positive."""
    rng = random.Random(seed)
    xs = sorted(rng.sample(range(1, 8 * n), k))
    ys = sorted(rng.sample(range(1, 8 * n), n))
    return RationalMatrix([[mpq(1, x + y) for y in ys] for x in xs])


def tnn_samples(n, count, seed=0):
    """A seeded mix of generic TP points, points of V and boundary points."""
    strata = enumerate_strata(n, 2)
    out = []
    for i in range(count):
        s = seed * 1000 + i
        kind = i % 3
        if kind == 0:
            out.append(cauchy_tp(3, n, s))
        elif kind == 1:
            out.append(sample_on_V(n, seeded_params(n, s)))
        else:
            out.append(sample_stratum(strata[s % len(strata)], seed=s))
    return out


def random_kn_matrix(k, n, seed, window=9):
    rng = random.Random(seed)
    while True:
        M = RationalMatrix([[rng.randint(-window, window) for _ in range(n)] for _ in range(k)])
        if M.rank() == k:
            return M


# -- checks -----------------------------------------------------------------

def verify_gale(n, k=3, seed=0, samples=50):
    t0 = time.perf_counter()
    bad = []
    for i in range(samples):
        M = random_kn_matrix(k, n, seed * 1000 + i)
        c = gale_identity_scalar(M)
        if c is None or c == 0:
            bad.append(i)
    return _report("gale", "Gale dual with alternating column signs", not bad, t0,
                   k=k, n=n, samples=samples, failures=bad)


def verify_supermodularity(n, seed=0, samples=100):
    t0 = time.perf_counter()
    pairs = list(combinations(subsets(n, 3), 2))
    checked, bad = 0, []
    for i, M in enumerate(tnn_samples(n, samples, seed)):
        P = pluecker_of(M)
        offset = i % n  # the cyclic order starts at offset + 1
        for I, J in pairs:
            checked += 1
            if not supermodularity_holds(P, I, J, offset):
                bad.append([i, offset, list(I), list(J)])
    return _report("supermodularity", "min/max and sort inequalities on TNN points",
                   not bad, t0, n=n, samples=samples, pairs_checked=checked,
                   failures=bad[:10])


def zv234_strata():
    """Strata of V(3,6) up to codim 3 on which p234 vanishes."""
    out = []
    for s in enumerate_strata(6, 3):
        if pluecker_of(sample_stratum(s, seed=0))[(2, 3, 4)] == 0:
            out.append(s)
    return out


def zv234_samples(count, seed=0):
    """(matrix, stratum) pairs: TNN points of ZV(234) on the chart p123 != 0,
    and separately the points drawn with p123 = 0."""
    strata = zv234_strata()
    on, off = [], []
    i = 0
    while len(on) < count:
        s = strata[i % len(strata)]
        M = sample_stratum(s, seed=seed * 1000 + i)
        i += 1
        P = pluecker_of(M)
        if not (is_tnn(P) and in_V3n(M) and P[(2, 3, 4)] == 0):
            raise AssertionError(f"sampler left ZV(234) on {s.label()}")
        (on if P[(1, 2, 3)] != 0 else off).append((M, s))
    return on, off


def verify_boundary_decomposition(seed=0, samples=50):
    t0 = time.perf_counter()
    on, off = zv234_samples(samples, seed)
    bad = [s.label() for M, s in on if not zv234_components(M)]
    bad_off = [s.label() for M, s in off
               if not zv234_components(M) and not zv234_reflected_components(M)]
    return _report("boundary-decomposition", "components of the p234 divisor at n = 6",
                   not bad and not bad_off, t0, samples=len(on), off_chart_samples=len(off),
                   uncovered=bad, uncovered_off_chart=bad_off)


def zv67_stratum():
    return Stratum("colliding", 7, [], [[1], [2], [3], [4], [5], [6, 7]])


def verify_v47(seed=0, samples=20):
    t0 = time.perf_counter()
    s = zv67_stratum()
    bad = []
    for i in range(samples):
        M = sample_stratum(s, seed=seed * 1000 + i)
        D = pluecker_of(gale_dual(M))
        if v47_quartic_value(D) != 0 or not v47_coplanar_vanishing(D):
            bad.append(i)
    return _report("v47", "Gale image of a colliding boundary in V(4,7)", not bad, t0,
                   samples=samples, failures=bad)
