"""Top-degree forms on charts: the Gr(2,n) canonical form, expressions of the
canonical form of V(3,n), pullbacks, residues and the identity checks."""
from itertools import combinations
import time

from gmpy2 import mpq

from .exact_arith import (MultiPoly, RationalFunction, SymbolTable, as_rf,
                          jacobian_det, poly_det, rf_equal)
from .positroid import bcfw_chart_coords, bcfw_matrix, bcfw_table
from .veronese import chart2_table, chart3_matrix, chart3_table, chart_theta


class DegenerateParametrization(ValueError):
    pass


class ChartForm:
    """coeff * d(frame[0]) ^ ... ^ d(frame[-1]) over a symbol table.

    `factors`, when given, is a list of (RationalFunction, exponent) whose
    product is coeff; pullbacks substitute factor by factor.
    """

    __slots__ = ("table", "frame", "coeff", "factors")

    def __init__(self, table, frame, coeff, factors=None):
        self.table = table
        self.frame = [as_rf(f, table) for f in frame]
        self.coeff = as_rf(coeff, table)
        self.factors = factors

    @classmethod
    def from_factors(cls, table, frame, factors):
        factors = [(as_rf(f, table), e) for f, e in factors]
        coeff = RationalFunction.const(table, 1)
        for f, e in factors:
            coeff = coeff * f ** e
        return cls(table, frame, coeff, factors)

    def __len__(self):
        return len(self.frame)

    def frame_symbols(self):
        return [f.as_single_symbol() for f in self.frame]

    def scaled(self, c):
        fac = None if self.factors is None else self.factors + [(as_rf(c, self.table), 1)]
        return ChartForm(self.table, self.frame, self.coeff * as_rf(c, self.table), fac)

    def wedge(self, entries, factor=1):
        """self ^ d(entries...), with the coefficient multiplied by factor."""
        factor = as_rf(factor, self.table)
        fac = None if self.factors is None else self.factors + [(factor, 1)]
        return ChartForm(self.table, self.frame + [as_rf(e, self.table) for e in entries],
                         self.coeff * factor, fac)

    def rename(self, mapping, table):
        """Move to another table by renaming symbols."""
        rules = {s: RationalFunction.var(table, mapping.get(s, s)) for s in self.table.names}
        sub = lambda f: f.substitute(rules, table)
        fac = None if self.factors is None else [(sub(f), e) for f, e in self.factors]
        return ChartForm(table, [sub(f) for f in self.frame], sub(self.coeff), fac)

    def check_independent(self, point):
        """Frame Jacobian against the table symbols is nonzero at point."""
        if len(self.frame) != len(self.table):
            raise ValueError("frame length differs from the number of chart symbols")
        return jacobian_det(self.frame, self.table.names).eval(point) != 0

    def __repr__(self):
        return f"ChartForm(frame={[str(f) for f in self.frame]}, coeff={self.coeff})"


class Parametrization:
    __slots__ = ("source", "rules")

    def __init__(self, source, rules):
        self.source = source
        self.rules = {k: as_rf(v, source) for k, v in rules.items()}

    @classmethod
    def identity(cls, table):
        return cls(table, {s: RationalFunction.var(table, s) for s in table.names})


def pullback(form, par, params=None):
    """Pull form back along par; the Jacobian is taken against params
    (default: all source symbols), other source symbols being constants."""
    params = list(params or par.source.names)
    if len(params) != len(form.frame):
        raise ValueError(f"{len(params)} parameters for a frame of length {len(form.frame)}")
    T = par.source
    frame = [f.substitute(par.rules, T) for f in form.frame]
    J = jacobian_det(frame, params)
    if J.is_zero():
        raise DegenerateParametrization("degenerate parametrization: Jacobian is zero")
    if form.factors is not None:
        coeff = J
        for f, e in form.factors:
            coeff = coeff * f.substitute(par.rules, T) ** e
    else:
        coeff = form.coeff.substitute(par.rules, T) * J
    return ChartForm(T, [RationalFunction.var(T, p) for p in params], coeff)


class NotSimplePole(ValueError):
    pass


def residue_at(form, j):
    """Residue along frame[j] = 0 (0-based j), moving d(frame[j]) to the front."""
    v = form.frame[j].as_single_symbol()
    if v is None:
        raise ValueError("residue needs a frame entry that is a single symbol")
    num, den = form.coeff.num, form.coeff.den
    vn, vd = num.valuation_in(v), den.valuation_in(v)
    if num.is_zero() or vd - vn != 1:
        raise NotSimplePole(f"not a simple pole along {v}: order {vd - vn}")
    sh = form.table.shift(v)
    n0 = num.div_monomial(vn << sh).set_zero(v)
    d0 = den.div_monomial(vd << sh).set_zero(v)
    if d0.is_zero():
        raise NotSimplePole(f"denominator does not restrict to {v} = 0")
    sign = -1 if j % 2 else 1
    coeff = RationalFunction(n0.scale(sign), d0)
    zero = {v: RationalFunction.const(form.table, 0)}
    frame = [f.substitute(zero, form.table) for i, f in enumerate(form.frame) if i != j]
    return ChartForm(form.table, frame, coeff)


# -- chart data ---------------------------------------------------------------

def _vars(T):
    return {s: MultiPoly.var(T, s) for s in T.names}


def omega_gr2(n):
    if n < 5:
        raise ValueError("n must be at least 5")
    T = chart2_table(n)
    v = _vars(T)
    m = n - 3
    a, b = v["a"], v["b"]
    x = lambda i: v[f"x{i}"]
    y = lambda i: v[f"y{i}"]
    factors = [(-a, -1), (y(m), -1), (a * y(1) - b * x(1), -1)]
    for i in range(1, m):
        factors.append((x(i) * y(i + 1) - x(i + 1) * y(i), -1))
    frame = [a, b] + [x(i) for i in range(1, m + 1)] + [y(i) for i in range(1, m + 1)]
    return ChartForm.from_factors(T, frame, factors)


def _abg(T):
    v = _vars(T)
    return (lambda i: v[f"alpha{i}"], lambda i: v[f"beta{i}"], lambda i: v[f"gamma{i}"])


def omega_v3n(n, m):
    if not 3 <= m <= n - 2:
        raise ValueError(f"need 3 <= m <= n - 2, got m = {m}")
    T = chart3_table(n)
    al, be, ga = _abg(T)
    N = n - 3
    # gamma_1 in the simplified display stands for (gamma_1 alpha_N - alpha_1 gamma_N) / alpha_N
    factors = [(ga(m - 1), 1), (al(1), -1), (al(m - 1), -1), (be(N), -1), (al(N), 1),
               (ga(1) * al(N) - al(1) * ga(N), -1), (ga(N), -1)]
    for i in range(1, m - 1):
        factors.append((be(i) * ga(i + 1) - ga(i) * be(i + 1), -1))
    for i in range(m - 1, N):
        factors.append((al(i) * be(i + 1) - be(i) * al(i + 1), -1))
    frame = [al(1)]
    for i in range(1, m - 1):
        frame += [be(i), ga(i)]
    for i in range(m - 1, N + 1):
        frame += [al(i), be(i)]
    frame.append(ga(N))
    return ChartForm.from_factors(T, frame, factors)


def abc_products(i, j, n=None):
    if i == j:
        raise ValueError("need i != j")
    T = chart3_table(n or max(i, j) + 3)
    al, be, ga = _abg(T)
    A = be(i) * be(j) * (ga(i) * al(j) - al(i) * ga(j))
    B = al(i) * al(j) * (be(i) * ga(j) - ga(i) * be(j))
    C = ga(i) * ga(j) * (al(i) * be(j) - be(i) * al(j))
    return A, B, C


def fg(i, j, n=None):
    A, B, C = abc_products(i, j, n)
    return RationalFunction(B, A), RationalFunction(C, A)


def p_ijk(i, j, k, n=None):
    """det of the (alpha beta, alpha gamma, beta gamma) rows on columns i, j, k."""
    T = chart3_table(n or max(i, j, k) + 3)
    al, be, ga = _abg(T)
    rows = [[al(c) * be(c) for c in (i, j, k)],
            [al(c) * ga(c) for c in (i, j, k)],
            [be(c) * ga(c) for c in (i, j, k)]]
    return poly_det(rows)


def omega_v3n_simple(n):
    """The expression with d(alpha_i/gamma_i) entries in the middle of the frame."""
    T = chart3_table(n)
    al, be, ga = _abg(T)
    N = n - 3
    f, _ = fg(1, N, n)
    factors = [(f, -1)]
    for i in range(1, N + 1):
        factors.append((be(i), -1))
    factors += [(al(N), 1), (al(1) * ga(N) - al(N) * ga(1), -1), (be(N), -1), (ga(N), -2)]
    for i in range(1, N):
        factors += [(ga(i + 1), 2), (al(i) * ga(i + 1) - al(i + 1) * ga(i), -1)]
    frame = [al(1), be(1), ga(1)]
    for i in range(2, N):
        frame += [RationalFunction(al(i), ga(i)), be(i)]
    frame += [al(N), be(N), ga(N)]
    return ChartForm.from_factors(T, frame, factors)


def omega_v3n_fg(n):
    """The expression in the frame (f, g, alpha_i/gamma_i, beta_i)."""
    T = chart3_table(n)
    al, be, ga = _abg(T)
    N = n - 3
    f, g = fg(1, N, n)
    factors = [(f, -1), (RationalFunction.const(T, -1), 1)]
    for i in range(1, N + 1):
        factors.append((be(i), -1))
    factors += [(be(1) * ga(1), 1), (al(1) * ga(N), -1)]
    for i in range(1, N):
        factors += [(ga(i + 1), 2), (al(i) * ga(i + 1) - al(i + 1) * ga(i), -1)]
    frame = [f, g]
    for i in range(1, N + 1):
        frame += [RationalFunction(al(i), ga(i)), be(i)]
    return ChartForm.from_factors(T, frame, factors)


def _triple_symbols(i, j, k):
    return [f"{s}{c}" for c in (i, j, k) for s in ("alpha", "beta", "gamma")]


def omega_ijk(i, j, k, omit, n=None):
    """Omega^{ijk} = Omega^{ijk}_v / (sgn(v) dP_ijk/dv) with v = omit."""
    n = n or max(i, j, k) + 3
    T = chart3_table(n)
    syms = _triple_symbols(i, j, k)
    pos = syms.index(omit)
    sgn = -1 if pos % 2 else 1
    P = p_ijk(i, j, k, n)
    frame = [MultiPoly.var(T, s) for s in syms if s != omit]
    return ChartForm.from_factors(T, frame, [(P.diff(omit).scale(sgn), -1)])


def chart_theta_par(n):
    return Parametrization(chart2_table(n), chart_theta(n))


def chart3_minor(n, I):
    rows = chart3_matrix(n)
    return poly_det([[r[c - 1] for c in I] for r in rows])


def symbolic_cyclic_shift(rows):
    """Columns (v1..vn) -> ((-1)^(k-1) vn, v1..v_{n-1}) on a symbolic matrix."""
    k = len(rows)
    s = -1 if (k - 1) % 2 else 1
    return [[r[-1].scale(s)] + r[:-1] for r in rows]


def rotated_chart_matrix(n):
    """The chart with pivots at columns 1, 2, n: the basic chart rotated n-1 times."""
    rows = chart3_matrix(n)
    for _ in range(n - 1):
        rows = symbolic_cyclic_shift(rows)
    return rows


# -- comparison helpers -------------------------------------------------------

def constant_ratio(a, b):
    """c with a = c*b as rational functions, or None."""
    return (as_rf(a) / as_rf(b)).constant_value()


def _report(identity, anchor, ok, t0, **extra):
    out = {"identity": identity, "anchor": anchor, "status": "pass" if ok else "fail"}
    out.update(extra)
    out["timing"] = round(time.perf_counter() - t0, 3)
    return out


def _sign(c):
    return None if c is None else (1 if c > 0 else -1)


def _qstr(c):
    return None if c is None else str(c)


# -- identity checks ------------------------------------------------------------

def pushforward_constant(n, m):
    """c with pullback(omega_v3n(n,m), chart_theta) = c * omega_gr2(n)."""
    G = omega_gr2(n)
    pb = pullback(omega_v3n(n, m), chart_theta_par(n), G.table.names)
    return constant_ratio(pb.coeff, G.coeff)


def verify_pushforward(n, ms=None):
    if not 5 <= n <= 7:
        raise ValueError("pushforward check is limited to 5 <= n <= 7")
    t0 = time.perf_counter()
    ms = ms or sorted({3, n - 2})
    consts = {m: pushforward_constant(n, m) for m in ms}
    vals = set(consts.values())
    c = consts[ms[0]]
    ok = None not in vals and len(vals) == 1 and abs(c) == 2 ** (n - 1)
    return _report("pushforward", "pushforward of the Gr(2,n) canonical form", ok, t0,
                   n=n, m=ms, constant=_qstr(c), magnitude=_qstr(abs(c)) if c else None,
                   expected_magnitude=2 ** (n - 1), sign=_sign(c),
                   constants_by_m={str(k): _qstr(v) for k, v in consts.items()})


def phi4_lift(form, n):
    """A form on the chart of V(3,n-1) viewed on the chart of V(3,n) by
    forgetting the first non-pivot column: index i becomes i+1."""
    mapping = {}
    for i in range(1, n - 3):
        for s in ("alpha", "beta", "gamma"):
            mapping[f"{s}{i}"] = f"{s}{i + 1}"
    return form.rename(mapping, chart3_table(n))


def inductive_forms(n, m=3, m_prev=3):
    """The two right-hand sides of the forget-a-column recursion."""
    T = chart3_table(n)
    al, be, ga = _abg(T)
    base = phi4_lift(omega_v3n(n - 1, m_prev), n)
    c1 = RationalFunction(-(be(1) * ga(2)), be(1) * ga(2) - be(2) * ga(1))
    rhs1 = base.wedge([be(1), ga(1)], c1 / RationalFunction(be(1) * ga(1)))
    c2 = RationalFunction(-(al(2) * be(1)), al(1) * be(2) - al(2) * be(1))
    rhs2 = base.wedge([be(1), al(1)], c2 / RationalFunction(be(1) * al(1)))
    return rhs1, rhs2


def verify_inductive(n, m=3):
    """Both variants, each up to a recorded global sign."""
    if not 6 <= n <= 8:
        raise ValueError("inductive check is limited to 6 <= n <= 8")
    t0 = time.perf_counter()
    par = chart_theta_par(n)
    lhs = pullback(omega_v3n(n, m), par).coeff
    rhs1, rhs2 = inductive_forms(n, m=min(m, n - 3), m_prev=3)
    c1 = constant_ratio(lhs, pullback(rhs1, par).coeff)
    c2 = constant_ratio(lhs, pullback(rhs2, par).coeff)
    ok1 = c1 is not None and abs(c1) == 1
    ok2 = c2 is not None and abs(c2) == 1
    return _report("inductive", "forgetting a column of the chart", ok1 and ok2, t0,
                   n=n, beta_gamma_variant=ok1, beta_alpha_variant=ok2,
                   sign_beta_gamma=_sign(c1), sign_beta_alpha=_sign(c2))


def bcfw_residue_coeff(n, m):
    """Residue of omega_v3n at alpha1 on the rotated chart, pulled back to the
    BCFW edge weights; returns (coefficient, residue form)."""
    form = omega_v3n(n, m)
    res = residue_at(form, 0)
    T = bcfw_table(m, n)
    par = Parametrization(T, bcfw_chart_coords(m, n))
    pb = pullback(res, par)
    return pb.coeff, res


def verify_residue_bcfw(n, m):
    if not (3 <= m <= n - 2 and n <= 8):
        raise ValueError("need 3 <= m <= n - 2 and n <= 8")
    t0 = time.perf_counter()
    form = omega_v3n(n, m)
    den = form.coeff.den
    val = den.valuation_in("alpha1") - form.coeff.num.valuation_in("alpha1")
    coeff, _ = bcfw_residue_coeff(n, m)
    T = coeff.table
    prod = MultiPoly.const(T, 1)
    for s in T.names:
        prod = prod * MultiPoly.var(T, s)
    c = constant_ratio(coeff, RationalFunction(MultiPoly.const(T, 1), prod))
    ok = val == 1 and c is not None and abs(c) == 1
    return _report("residue-bcfw", "residue at p123 equals the positroid canonical form",
                   ok, t0, n=n, m=m, alpha1_pole_order=val, sign=_sign(c),
                   edge_symbols=list(T.names),
                   coefficient=None if ok else str(coeff))


def n6_forms():
    """(omega_v3n(6,3), the right-hand side built from Omega^{123})."""
    n = 6
    T = chart3_table(n)
    p135 = chart3_minor(n, (1, 3, 5))
    p156 = chart3_minor(n, (1, 5, 6))
    p345 = chart3_minor(n, (3, 4, 5))
    om = omega_ijk(1, 2, 3, "alpha1", n)
    rhs = om.wedge([], RationalFunction(p135, p156 * p345))
    return omega_v3n(n, 3), rhs


def verify_n6():
    t0 = time.perf_counter()
    n = 6
    par = chart_theta_par(n)
    lhs, rhs = n6_forms()
    L = pullback(lhs, par).coeff
    R = pullback(rhs, par).coeff
    c = constant_ratio(L, R)
    main_ok = c is not None and abs(c) == 1
    # frame-choice independence of Omega^{123}
    oa = pullback(omega_ijk(1, 2, 3, "alpha1", n), par).coeff
    og = pullback(omega_ijk(1, 2, 3, "gamma3", n), par).coeff
    frame_ok = rf_equal(oa, og)
    # alpha1 * dP/dalpha1 = -beta1 gamma1 B23 on the variety
    T = chart3_table(n)
    al, be, ga = _abg(T)
    _, B23, _ = abc_products(2, 3, n)
    rel = al(1) * p_ijk(1, 2, 3, n).diff("alpha1") + be(1) * ga(1) * B23
    rel_ok = RationalFunction(rel).substitute(chart_theta(n)).is_zero()
    return _report("n6", "closed form of the canonical form at n = 6",
                   main_ok and frame_ok and rel_ok, t0, constant=_qstr(c), sign=_sign(c),
                   frame_choice_independent=frame_ok, dP_relation=rel_ok)


def frame_choice_forms(n, i):
    """The four sides of the frame-choice identity with 1 < i < n-3, all as
    top forms on the chart of V(3,n)."""
    N = n - 3
    if not 1 < i < N:
        raise ValueError("need 1 < i < n - 3")
    T = chart3_table(n)
    al, be, ga = _abg(T)
    others = [j for j in range(2, N) if j != i]
    tail = []
    for j in others:
        tail += [RationalFunction(al(j), ga(j)), be(j)]
    f, g = fg(1, N, n)
    A, _, _ = abc_products(1, N, n)
    lhs = ChartForm(T, [al(1), be(1), ga(1), RationalFunction(al(i), ga(i)), be(i),
                        al(N), be(N), ga(N)] + tail, RationalFunction.const(T, 1))
    # the 9-form frames of the triple (1, i, N)
    syms = _triple_symbols(1, i, N)

    def omit(v):
        return [MultiPoly.var(T, s) for s in syms if s != v]
    om = omega_ijk(1, i, N, "alpha1", n)
    side1 = ChartForm(T, om.frame + tail,
                      om.coeff * RationalFunction(al(i) * A, ga(i)))
    side2 = ChartForm(T, omit(f"gamma{i}") + tail,
                      -(RationalFunction(MultiPoly.const(T, 1), be(i)) / g))
    side3 = ChartForm(T, omit(f"alpha{i}") + tail,
                      -(RationalFunction(al(i) * al(i), ga(i) * ga(i) * be(i)) / f))
    return lhs, side1, side2, side3


def verify_frame_choice(n, i=2):
    t0 = time.perf_counter()
    par = chart_theta_par(n)
    forms = frame_choice_forms(n, i)
    coeffs = [pullback(F, par).coeff for F in forms]
    ratios = [constant_ratio(c, coeffs[0]) for c in coeffs[1:]]
    ok = all(r == 1 for r in ratios)
    return _report("frame-choice", "rewriting the top form in three frames", ok, t0,
                   n=n, i=i, ratios=[_qstr(r) for r in ratios])


def verify_omega_expressions(n):
    """omega_v3n for every m, the simple expression and the (f,g) expression
    all pull back to the same form."""
    t0 = time.perf_counter()
    par = chart_theta_par(n)
    G = chart2_table(n).names
    base = pullback(omega_v3n(n, 3), par, G).coeff
    ratios = {}
    for m in range(4, n - 1):
        ratios[f"m={m}"] = constant_ratio(pullback(omega_v3n(n, m), par, G).coeff, base)
    ratios["simple"] = constant_ratio(pullback(omega_v3n_simple(n), par, G).coeff, base)
    ratios["fg"] = constant_ratio(pullback(omega_v3n_fg(n), par, G).coeff, base)
    ok = all(r is not None and abs(r) == 1 for r in ratios.values())
    return _report("expressions", "agreement of the chart expressions", ok, t0,
                   n=n, ratios={k: _qstr(v) for k, v in ratios.items()})


def scaled_chart_theta(n, j):
    """chart_theta with the alpha, beta, gamma of column j multiplied by t."""
    if not 4 <= j <= n:
        raise ValueError("j must be a non-pivot column, 4 <= j <= n")
    T = SymbolTable(list(chart2_table(n).names) + ["t"])
    rules = chart_theta(n, T)
    t = RationalFunction.var(T, "t")
    i = j - 3
    for s in ("alpha", "beta", "gamma"):
        rules[f"{s}{i}"] = rules[f"{s}{i}"] * t
    return Parametrization(T, rules)


def verify_scaling(n, j, m=3):
    t0 = time.perf_counter()
    form = omega_v3n(n, m)
    G = chart2_table(n)
    plain = pullback(form, chart_theta_par(n), G.names).coeff
    scaled = pullback(form, scaled_chart_theta(n, j), G.names).coeff
    ok = rf_equal(scaled, plain.remap(scaled.table))
    return _report("scaling", "invariance under scaling a column", ok, t0, n=n, column=j,
                   t_free="t" not in scaled.variables())
