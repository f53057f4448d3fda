"""Exact arithmetic: rationals, sparse multivariate polynomials, rational
functions, substitution and Jacobian determinants.

Monomials are packed into a single Python int, BITS bits per variable, with
variable 0 in the most significant field.  Comparing packed keys as integers
is then lexicographic order, and multiplying monomials is integer addition.
"""
from fractions import Fraction
import heapq
from math import gcd

from gmpy2 import mpq

Rational = mpq

BITS = 16
MASK = (1 << BITS) - 1
MAX_DEG = MASK


def Q(x):
    """Coerce ints, Fractions, mpq and "p/q" strings to an exact rational."""
    if isinstance(x, str):
        return mpq(x.strip())
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or string")
    return mpq(x)


def _scalar(c):
    # keep small ints as ints, they are much faster than mpq
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    if type(c) is type(mpq(0)):
        return c
    if isinstance(c, float):
        raise TypeError("floats are not exact")
    return mpq(c)


def _is_scalar(c):
    return isinstance(c, (int, Fraction)) or type(c) is type(mpq(0))


class SymbolTable:
    """Ordered, immutable list of variable names."""

    __slots__ = ("names", "_index", "_shifts")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate symbol names")
        self.names = names
        self._index = {s: i for i, s in enumerate(names)}
        n = len(names)
        self._shifts = tuple((n - 1 - i) * BITS for i in range(n))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, SymbolTable) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"SymbolTable({list(self.names)})"

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown symbol {name!r}") from None

    def shift(self, name):
        return self._shifts[self.index(name)]

    def pack(self, exps):
        if len(exps) != len(self.names):
            raise ValueError("exponent vector has wrong length")
        key = 0
        for e in exps:
            if e < 0 or e > MAX_DEG:
                raise OverflowError(f"exponent {e} out of range")
            key = (key << BITS) | e
        return key

    def unpack(self, key):
        n = len(self.names)
        out = [0] * n
        for i in range(n - 1, -1, -1):
            out[i] = key & MASK
            key >>= BITS
        return tuple(out)

    def extend(self, names):
        return SymbolTable(self.names + tuple(s for s in names if s not in self._index))


def _key_degree(key):
    d = 0
    while key:
        d += key & MASK
        key >>= BITS
    return d


def _divides(small, big, nvars):
    # every field of small <= the matching field of big
    for _ in range(nvars):
        if (small & MASK) > (big & MASK):
            return False
        small >>= BITS
        big >>= BITS
    return True


class MultiPoly:
    """Sparse polynomial over Q: dict packed-monomial -> nonzero coefficient."""

    __slots__ = ("table", "terms", "_deg")

    def __init__(self, table, terms=None, _deg=None):
        self.table = table
        self.terms = terms if terms is not None else {}
        if _deg is None:
            _deg = max((_key_degree(k) for k in self.terms), default=0)
        self._deg = _deg

    # construction
    @classmethod
    def const(cls, table, c):
        c = _scalar(c)
        return cls(table, {0: c} if c else {}, 0)

    @classmethod
    def var(cls, table, name, power=1):
        return cls(table, {power << table.shift(name): 1}, power)

    @classmethod
    def from_exponents(cls, table, mapping):
        terms = {}
        for exps, c in mapping.items():
            c = _scalar(c)
            if not c:
                continue
            k = table.pack(exps)
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return cls(table, terms)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.table != self.table:
                raise ValueError("symbol tables differ")
            return other
        if _is_scalar(other):
            return MultiPoly.const(self.table, other)
        return NotImplemented

    # basic predicates
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return mpq(self.terms.get(0, 0))

    def is_monomial(self):
        return len(self.terms) == 1

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, MultiPoly) else other
        if o is NotImplemented:
            return NotImplemented
        return self.table == o.table and self.terms == o.terms

    def __hash__(self):
        return hash((self.table, frozenset(self.terms.items())))

    # arithmetic
    def __neg__(self):
        return MultiPoly(self.table, {k: -c for k, c in self.terms.items()}, self._deg)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if len(o.terms) > len(self.terms):
            a, b = o.terms, self.terms
        else:
            a, b = self.terms, o.terms
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return MultiPoly(self.table, out, max(self._deg, o._deg))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for k, c in o.terms.items():
            s = out.get(k, 0) - c
            if s:
                out[k] = s
            else:
                del out[k]
        return MultiPoly(self.table, out, max(self._deg, o._deg))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _scalar(c)
        if not c:
            return MultiPoly(self.table, {}, 0)
        if c == 1:
            return self
        return MultiPoly(self.table, {k: v * c for k, v in self.terms.items()}, self._deg)

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.terms, o.terms
        if not a or not b:
            return MultiPoly(self.table, {}, 0)
        deg = self._deg + o._deg
        if deg > MAX_DEG:
            raise OverflowError("degree exceeds packed-monomial capacity")
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            if cb == 1:
                return MultiPoly(self.table, {k + kb: c for k, c in a.items()}, deg)
            return MultiPoly(self.table, {k + kb: c * cb for k, c in a.items()}, deg)
        out = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return MultiPoly(self.table, {k: c for k, c in out.items() if c}, deg)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers")
        result = MultiPoly.const(self.table, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # structure
    def exponents(self):
        """Iterate (exponent tuple, coefficient)."""
        unpack = self.table.unpack
        for k, c in self.terms.items():
            yield unpack(k), c

    def total_degree(self):
        return max((_key_degree(k) for k in self.terms), default=0)

    def degree_in(self, name):
        sh = self.table.shift(name)
        return max(((k >> sh) & MASK for k in self.terms), default=0)

    def valuation_in(self, name):
        sh = self.table.shift(name)
        return min(((k >> sh) & MASK for k in self.terms), default=0)

    def variables(self):
        used = 0
        for k in self.terms:
            used |= k
        return [s for s in self.table.names if (used >> self.table.shift(s)) & MASK]

    def diff(self, name):
        sh = self.table.shift(name)
        one = 1 << sh
        out = {}
        for k, c in self.terms.items():
            e = (k >> sh) & MASK
            if e:
                out[k - one] = c * e
        return MultiPoly(self.table, out, max(self._deg - 1, 0))

    def monomial_content(self):
        """Packed key of the gcd of all monomials."""
        if not self.terms:
            return 0
        n = len(self.table)
        mins = None
        for k in self.terms:
            ex = self.table.unpack(k)
            mins = list(ex) if mins is None else [min(a, b) for a, b in zip(mins, ex)]
            if not any(mins):
                return 0
        return self.table.pack(mins) if n else 0

    def div_monomial(self, mkey):
        if not mkey:
            return self
        if not all(_divides(mkey, k, len(self.table)) for k in self.terms):
            raise ValueError("monomial does not divide polynomial")
        return MultiPoly(self.table, {k - mkey: c for k, c in self.terms.items()},
                         self._deg)

    def content(self):
        """Positive rational content: gcd of numerators over lcm of denominators."""
        num = 0
        den = 1
        for c in self.terms.values():
            c = mpq(c)
            num = gcd(num, int(c.numerator))
            d = int(c.denominator)
            den = den * d // gcd(den, d)
        return mpq(num, den) if num else mpq(1)

    def leading_key_glex(self):
        return max(self.terms, key=lambda k: (_key_degree(k), k))

    def leading_coeff_glex(self):
        return self.terms[self.leading_key_glex()]

    def divide_by_variable(self, name):
        """(q, r) with self = name*q + r and r free of name."""
        sh = self.table.shift(name)
        one = 1 << sh
        q, r = {}, {}
        for k, c in self.terms.items():
            if (k >> sh) & MASK:
                q[k - one] = c
            else:
                r[k] = c
        return MultiPoly(self.table, q, self._deg), MultiPoly(self.table, r, self._deg)

    def set_zero(self, name):
        sh = self.table.shift(name)
        return MultiPoly(self.table,
                         {k: c for k, c in self.terms.items() if not (k >> sh) & MASK},
                         self._deg)

    def exact_div(self, other):
        """Quotient self/other; raises ValueError unless the division is exact."""
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if o.is_constant():
            return self.scale(1 / mpq(o.terms[0]))
        if len(o.terms) == 1:
            (mk, mc), = o.terms.items()
            return self.div_monomial(mk).scale(1 / mpq(mc))
        nv = len(self.table)
        ld = max(o.terms)
        lc = mpq(o.terms[ld])
        rem = dict(self.terms)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        q = {}
        while rem:
            k = -heapq.heappop(heap)
            c = rem.get(k)
            if c is None:
                continue
            if not _divides(ld, k, nv):
                raise ValueError("polynomial division is not exact")
            qk = k - ld
            qc = c / lc
            q[qk] = qc
            for dk, dc in o.terms.items():
                kk = qk + dk
                old = rem.get(kk)
                s = (old or 0) - qc * dc
                if s:
                    if old is None:
                        heapq.heappush(heap, -kk)
                    rem[kk] = s
                elif old is not None:
                    del rem[kk]
        return MultiPoly(self.table, q)

    # evaluation and substitution
    def eval(self, point):
        point = list(point)
        if len(point) != len(self.table):
            raise ValueError(f"point has {len(point)} entries, expected {len(self.table)}")
        point = [Q(x) for x in point]
        total = mpq(0)
        cache = {}
        n = len(point)
        for k, c in self.terms.items():
            val = mpq(c)
            i = n - 1
            while k:
                e = k & MASK
                if e:
                    p = cache.get((i, e))
                    if p is None:
                        p = cache[(i, e)] = point[i] ** e
                    val *= p
                k >>= BITS
                i -= 1
            total += val
        return total

    def eval_dict(self, values):
        return self.eval([values[s] for s in self.table.names])

    def remap(self, table):
        """Same polynomial over a table containing all used symbols."""
        if table == self.table:
            return self
        idx = [table.index(s) if s in table else None for s in self.table.names]
        out = {}
        for ex, c in self.exponents():
            new = [0] * len(table)
            for i, e in enumerate(ex):
                if e:
                    if idx[i] is None:
                        raise ValueError(f"symbol {self.table.names[i]} missing from target table")
                    new[idx[i]] = e
            k = table.pack(new)
            out[k] = out.get(k, 0) + c
        return MultiPoly(table, {k: c for k, c in out.items() if c}, self._deg)

    def substitute(self, rules, table=None):
        """Substitute symbols by RationalFunctions (or polys, or scalars).

        Symbols without a rule are carried over to `table` by name.  Returns a
        RationalFunction whose denominator is the product of rule
        denominators raised to the degree of the symbol.
        """
        if table is None:
            table = _rules_table(rules, self.table)
        rfs = {}
        for s, r in rules.items():
            if s not in self.table:
                continue
            rfs[s] = as_rf(r, table)
        rule_syms = [s for s in self.table.names if s in rfs]
        degs = {s: self.degree_in(s) for s in rule_syms}
        rule_syms = [s for s in rule_syms if degs[s]]
        src_idx = [self.table.index(s) for s in rule_syms]
        # carry-over map for the remaining symbols
        carry = []
        for i, s in enumerate(self.table.names):
            if s in rfs:
                continue
            carry.append((i, table.shift(s) if s in table else None, s))
        items = []
        for ex, c in self.exponents():
            k = 0
            for i, sh, s in carry:
                e = ex[i]
                if e:
                    if sh is None:
                        raise ValueError(f"symbol {s} has no rule and is not in the target table")
                    k += e << sh
            items.append((tuple(ex[i] for i in src_idx), k, c))
        num_pows = {}
        den_pows = {}

        def npow(s, e):
            key = (s, e)
            p = num_pows.get(key)
            if p is None:
                p = num_pows[key] = rfs[s].num ** e
            return p

        def dpow(s, e):
            key = (s, e)
            p = den_pows.get(key)
            if p is None:
                p = den_pows[key] = rfs[s].den ** e
            return p

        def rec(group, level):
            if level == len(rule_syms):
                out = {}
                for _, k, c in group:
                    s = out.get(k, 0) + c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
                return MultiPoly(table, out)
            s = rule_syms[level]
            buckets = {}
            for it in group:
                buckets.setdefault(it[0][level], []).append(it)
            acc = MultiPoly(table)
            d = degs[s]
            den_is_one = rfs[s].den.is_constant() and rfs[s].den.constant_value() == 1
            for e in sorted(buckets):
                sub = rec(buckets[e], level + 1)
                if sub.is_zero():
                    continue
                term = sub * npow(s, e) if e else sub
                if not den_is_one and d - e:
                    term = term * dpow(s, d - e)
                acc = acc + term
            return acc

        num = rec(items, 0)
        den = MultiPoly.const(table, 1)
        for s in rule_syms:
            if not (rfs[s].den.is_constant() and rfs[s].den.constant_value() == 1):
                den = den * dpow(s, degs[s])
        return RationalFunction(num, den)

    # printing
    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MultiPoly({self.to_str()!r})"

    def to_str(self):
        """Canonical graded-lex rendering with explicit ^ and *."""
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (_key_degree(k), k), reverse=True)
        parts = []
        for k in keys:
            c = mpq(self.terms[k])
            ex = self.table.unpack(k)
            mono = "*".join(
                s if e == 1 else f"{s}^{e}" for s, e in zip(self.table.names, ex) if e)
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)


def _rules_table(rules, fallback):
    for r in rules.values():
        if isinstance(r, RationalFunction):
            return r.table
        if isinstance(r, MultiPoly):
            return r.table
    return fallback


def as_rf(x, table=None):
    if isinstance(x, RationalFunction):
        if table is not None and x.table != table:
            return RationalFunction(x.num.remap(table), x.den.remap(table))
        return x
    if isinstance(x, MultiPoly):
        if table is not None and x.table != table:
            x = x.remap(table)
        return RationalFunction(x)
    if table is None:
        raise ValueError("need a symbol table to lift a scalar")
    return RationalFunction(MultiPoly.const(table, x))


class RationalFunction:
    """num/den over a common table.

    Normalized by cancelling the common monomial factor and scaling so that
    den has coprime integer coefficients and a positive graded-lex leading
    coefficient.  Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, normalize=True):
        if den is None:
            den = MultiPoly.const(num.table, 1)
        if num.table != den.table:
            raise ValueError("symbol tables differ")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @property
    def table(self):
        return self.num.table

    @classmethod
    def var(cls, table, name):
        return cls(MultiPoly.var(table, name))

    @classmethod
    def const(cls, table, c):
        return cls(MultiPoly.const(table, c))

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.table != self.table:
                raise ValueError("symbol tables differ")
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction(other.remap(self.table) if other.table != self.table else other)
        if _is_scalar(other):
            return RationalFunction.const(self.table, other)
        return NotImplemented

    def is_zero(self):
        return self.num.is_zero()

    def __neg__(self):
        return RationalFunction(-self.num, self.den, normalize=False)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return RationalFunction(self.num.scale(other), self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction(self.num ** e, self.den ** e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return rf_equal(self, o)

    __hash__ = None

    def diff(self, name):
        n, d = self.num, self.den
        if d.is_constant():
            return RationalFunction(n.diff(name), d)
        return RationalFunction(n.diff(name) * d - n * d.diff(name), d * d)

    def eval(self, point):
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at point")
        return self.num.eval(point) / d

    def eval_dict(self, values):
        return self.eval([values[s] for s in self.table.names])

    def substitute(self, rules, table=None):
        if table is None:
            table = _rules_table(rules, self.table)
        n = self.num.substitute(rules, table)
        d = self.den.substitute(rules, table)
        if d.is_zero():
            raise ZeroDivisionError("denominator vanishes under substitution")
        return n / d

    def remap(self, table):
        return RationalFunction(self.num.remap(table), self.den.remap(table), normalize=False)

    def constant_value(self):
        """The constant c if self == c identically, else None."""
        if self.num.is_zero():
            return mpq(0)
        kn = self.num.leading_key_glex()
        kd = self.den.leading_key_glex()
        if kn != kd or len(self.num) != len(self.den):
            return None
        c = mpq(self.num.terms[kn]) / mpq(self.den.terms[kd])
        if self.num == self.den.scale(c):
            return c
        return None

    def is_constant(self):
        return self.constant_value() is not None

    def variables(self):
        used = set(self.num.variables()) | set(self.den.variables())
        return [s for s in self.table.names if s in used]

    def as_single_symbol(self):
        """Name of the symbol if self is exactly one bare symbol, else None."""
        if not (self.den.is_constant() and len(self.num) == 1):
            return None
        (k, c), = self.num.terms.items()
        c = c / self.den.constant_value()
        if c != 1:
            return None
        ex = self.table.unpack(k)
        if sum(ex) != 1:
            return None
        return self.table.names[ex.index(1)]

    def to_json(self):
        return {"num": self.num.to_str(), "den": self.den.to_str()}

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return self.num.to_str()
        return f"({self.num.to_str()})/({self.den.to_str()})"

    def __repr__(self):
        return f"RationalFunction({self})"


def _normalize(num, den):
    if num.is_zero():
        return num, MultiPoly.const(num.table, 1)
    mn = num.monomial_content()
    md = den.monomial_content()
    if mn and md:
        g = num.table.pack([min(a, b) for a, b in
                            zip(num.table.unpack(mn), num.table.unpack(md))])
        if g:
            num = num.div_monomial(g)
            den = den.div_monomial(g)
    c = den.content()
    if den.leading_coeff_glex() < 0:
        c = -c
    if c != 1:
        inv = 1 / c
        num = num.scale(inv)
        den = den.scale(inv)
    num = MultiPoly(num.table, {k: _demote(v) for k, v in num.terms.items()}, num._deg)
    den = MultiPoly(den.table, {k: _demote(v) for k, v in den.terms.items()}, den._deg)
    return num, den


def _demote(c):
    if isinstance(c, int):
        return c
    return int(c) if c.denominator == 1 else c


# -- top-level operations ----------------------------------------------------

def poly_eval(p, point):
    return p.eval(point)


def divide_by_variable(p, name):
    if name not in p.table:
        raise KeyError(f"unknown symbol {name!r}")
    return p.divide_by_variable(name)


def rf_equal(a, b):
    a = as_rf(a)
    b = as_rf(b)
    if a.table != b.table:
        raise ValueError("symbol tables differ")
    return a.num * b.den == b.num * a.den


def poly_det(rows):
    """Determinant of a square matrix of MultiPoly by memoized Laplace expansion.

    Columns are processed sparsest first; the state after each column is the
    set of rows already used, so sparse block structure keeps the number of
    states small.
    """
    m = len(rows)
    if m == 0:
        raise ValueError("empty matrix")
    if any(len(r) != m for r in rows):
        raise ValueError("matrix is not square")
    table = None
    for r in rows:
        for x in r:
            if isinstance(x, MultiPoly):
                table = x.table
                break
        if table is not None:
            break
    if table is None:
        raise ValueError("need at least one polynomial entry")
    M = [[x if isinstance(x, MultiPoly) else MultiPoly.const(table, x) for x in r] for r in rows]
    nz = [sum(1 for i in range(m) if M[i][j]) for j in range(m)]
    order = sorted(range(m), key=lambda j: (nz[j], j))
    # sign of the column permutation
    perm_sign = _perm_sign(order)
    states = {0: MultiPoly.const(table, perm_sign)}
    for j in order:
        new = {}
        for mask, acc in states.items():
            below = 0
            for i in range(m):
                bit = 1 << i
                if mask & bit:
                    continue
                e = M[i][j]
                if e:
                    term = acc * e
                    if below & 1:
                        term = -term
                    key = mask | bit
                    cur = new.get(key)
                    new[key] = term if cur is None else cur + term
                below += 1
        states = {k: v for k, v in new.items() if v}
        if not states:
            return MultiPoly(table)
    return states[(1 << m) - 1]


def _perm_sign(order):
    s = 1
    seen = [False] * len(order)
    for i in range(len(order)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def jacobian_det(fns, names):
    """det(d fns_i / d names_j) as a RationalFunction."""
    fns = [as_rf(f) for f in fns]
    names = list(names)
    if len(fns) != len(names):
        raise ValueError("need as many functions as variables")
    if not fns:
        raise ValueError("empty Jacobian")
    table = fns[0].table
    rows = []
    scale_num = MultiPoly.const(table, 1)
    scale_den = MultiPoly.const(table, 1)
    for f in fns:
        if f.table != table:
            raise ValueError("symbol tables differ")
        n, d = f.num, f.den
        if d.is_constant():
            row = [n.diff(v) for v in names]
            scale_den = scale_den * d
        else:
            dd = [d.diff(v) for v in names]
            row = [n.diff(v) * d - n * dv for v, dv in zip(names, dd)]
            scale_den = scale_den * d * d
        # pull the common monomial out of the row to keep entries small
        mk = None
        for e in row:
            if e:
                k = e.monomial_content()
                mk = k if mk is None else _min_key(mk, k, table)
        if mk:
            row = [e.div_monomial(mk) if e else e for e in row]
            scale_num = scale_num * MultiPoly(table, {mk: 1})
        rows.append(row)
    det = poly_det(rows)
    return RationalFunction(det * scale_num, scale_den)


def _min_key(a, b, table):
    return table.pack([min(x, y) for x, y in zip(table.unpack(a), table.unpack(b))])


# -- numeric exact linear algebra ------------------------------------------

def to_qmatrix(rows):
    return [[Q(x) for x in r] for r in rows]


def _int_rows(rows):
    out = []
    for r in rows:
        r = [mpq(x) for x in r]
        den = 1
        for x in r:
            d = int(x.denominator)
            den = den * d // gcd(den, d)
        out.append([int(x * den) for x in r])
    return out


def rank(rows):
    """Exact rank by fraction-free (Bareiss) elimination, first-nonzero pivoting."""
    if not rows:
        return 0
    A = _int_rows(rows)
    m, n = len(A), len(A[0])
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, m):
            a = A[i][c]
            row_i, row_r = A[i], A[r]
            A[i] = [(p * row_i[j] - a * row_r[j]) // prev for j in range(n)]
        prev = p
        r += 1
        if r == m:
            break
    return r


def det(rows):
    """Exact determinant of a square rational matrix (Bareiss)."""
    m = len(rows)
    if any(len(r) != m for r in rows):
        raise ValueError("matrix is not square")
    if m == 0:
        return mpq(1)
    rows = [[mpq(x) for x in r] for r in rows]
    scale = mpq(1)
    A = []
    for r in rows:
        den = 1
        for x in r:
            d = int(x.denominator)
            den = den * d // gcd(den, d)
        scale /= den
        A.append([int(x * den) for x in r])
    sign = 1
    prev = 1
    for c in range(m - 1):
        piv = next((i for i in range(c, m) if A[i][c]), None)
        if piv is None:
            return mpq(0)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        p = A[c][c]
        for i in range(c + 1, m):
            a = A[i][c]
            A[i] = [(p * A[i][j] - a * A[c][j]) // prev for j in range(m)]
        prev = p
    return sign * A[m - 1][m - 1] * scale


def rref(rows):
    """Reduced row echelon form over Q and the pivot columns."""
    A = [[mpq(x) for x in r] for r in rows]
    if not A:
        return A, []
    m, n = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        A[r] = [x / p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                a = A[i][c]
                A[i] = [x - a * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A, pivots


def nullspace(rows, ncols=None):
    """Basis of {v : rows v = 0}, one vector per free column, in column order."""
    if not rows:
        if ncols is None:
            raise ValueError("need ncols for an empty matrix")
        return [[mpq(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    n = len(rows[0])
    R, piv = rref(rows)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [mpq(0)] * n
        v[f] = mpq(1)
        for i, p in enumerate(piv):
            v[p] = -R[i][f]
        basis.append(v)
    return basis
