"""Enumerative theories: multiplicative or primitive functionals on the
Hopf algebras, given by a rational table on generators.

A multiplicative theory e sends a product of generators to the product of
the table values (and the unit to 1); a primitive theory vanishes on the
unit and on every monomial with two or more factors.  The two kinds are
exchanged by theory_log / theory_exp: writing the table as a generating
function F(T, U) = sum <e, q_{n,m}> T^n U^m over ordered exponent vectors,
the primitive values of log e are the coefficients of log F, because the
formal sum of all q_{n,m} is group-like and its coefficientwise logarithm
is the primitive family p_{n,m}.  In particular a multiplicative e pairs
with a p-basis monomial as the product of its primitive values.

Tables are lazily cached over (n, m) with declared caps n <= n_cap,
m_i <= m_cap; evaluating outside the caps raises CapError rather than
truncating silently.
"""

import itertools
from fractions import Fraction
from math import factorial

from .combinat import pad_partition
from .hopf import ContextMismatchError
from .rational import parse_rational
from .series import MultiSeries, macmahon_series

_ZERO = Fraction(0)


class CapError(ValueError):
    pass


def _series_frame(d, n_cap, m_cap):
    variables = ("T",) + tuple("U%d" % (i + 1) for i in range(d))
    return variables, (n_cap,) + (m_cap,) * d


class Theory:
    """A functional determined by generator values, with lazy caches.

    Exactly one of gen_fn / prim_fn may be omitted; the missing side is
    derived wholesale through the exp/log generating series when first
    needed.  For the nonsep variant gen_fn takes a padded partition.
    """

    __slots__ = ("d", "variant", "kind", "label", "n_cap", "m_cap",
                 "_gen_fn", "_prim_fn", "_gen", "_prim",
                 "_gen_filled", "_prim_filled")

    def __init__(self, d, kind, label, n_cap, m_cap, variant="sep",
                 gen_fn=None, prim_fn=None):
        if kind not in ("multiplicative", "primitive"):
            raise ValueError("kind must be multiplicative or primitive")
        if variant not in ("sep", "nonsep"):
            raise ValueError("variant must be 'sep' or 'nonsep'")
        if gen_fn is None and prim_fn is None:
            raise ValueError("need a generator table or a primitive table")
        self.d = int(d)
        self.variant = variant
        self.kind = kind
        self.label = label or kind
        self.n_cap = int(n_cap)
        self.m_cap = int(m_cap)
        self._gen_fn = gen_fn
        self._prim_fn = prim_fn
        self._gen = {}
        self._prim = {}
        self._gen_filled = False
        self._prim_filled = False

    def __repr__(self):
        return "Theory(%s, d=%d, %s, %s)" % (self.label, self.d, self.kind,
                                             self.variant)

    # -- keyed access ------------------------------------------------------

    def _key(self, n, m):
        n = int(n)
        m = tuple(sorted((int(x) for x in m), reverse=True))
        if len(m) != self.d:
            raise ValueError("exponent vector of length %d, expected %d" %
                             (len(m), self.d))
        if n < 0 or any(x < 0 for x in m):
            raise ValueError("negative index")
        if n > self.n_cap or any(x > self.m_cap for x in m):
            raise CapError("index (%d, %r) outside caps (%d, %d) of %s" %
                           (n, m, self.n_cap, self.m_cap, self.label))
        return (n, m)

    def value(self, n, m):
        """Table value on the sep generator q_{n,m} (n = 0 rows follow the
        unit/zero convention)."""
        if self.variant != "sep":
            raise ContextMismatchError("%s is a nonsep theory" % self.label)
        n, m = self._key(n, m)
        if n == 0:
            return Fraction(1) if not any(m) else _ZERO
        key = (n, m)
        if key in self._gen:
            return self._gen[key]
        if self._gen_fn is not None:
            v = Fraction(self._gen_fn(n, m))
            self._gen[key] = v
            return v
        if not self._gen_filled:
            self._fill_gen_from_prim()
        return self._gen.get(key, _ZERO)

    def nonsep_value(self, lam):
        if self.variant != "nonsep":
            raise ContextMismatchError("%s is a sep theory" % self.label)
        lam = tuple(sorted((int(x) for x in lam), reverse=True))
        lam = pad_partition(lam, self.d)
        if any(x > self.m_cap for x in lam):
            raise CapError("partition %r outside cap %d of %s" %
                           (lam, self.m_cap, self.label))
        if lam in self._gen:
            return self._gen[lam]
        v = Fraction(self._gen_fn(lam))
        self._gen[lam] = v
        return v

    def primitive_value(self, n, m):
        """Value on the primitive p_{n,m}; for a multiplicative theory this
        is also the value of its logarithm."""
        if self.variant != "sep":
            raise ContextMismatchError("%s is a nonsep theory" % self.label)
        if self.kind == "primitive":
            return self.value(n, m)
        n, m = self._key(n, m)
        if n == 0:
            return _ZERO
        key = (n, m)
        if key in self._prim:
            return self._prim[key]
        if self._prim_fn is not None:
            v = Fraction(self._prim_fn(n, m))
            self._prim[key] = v
            return v
        if not self._prim_filled:
            self._fill_prim_from_gen()
        return self._prim.get(key, _ZERO)

    # -- wholesale derivations through the generating series ---------------

    def _table_series(self, from_prim):
        variables, caps = _series_frame(self.d, self.n_cap, self.m_cap)
        terms = {}
        if not from_prim:
            terms[(0,) * (self.d + 1)] = Fraction(1)
        for n in range(1, self.n_cap + 1):
            for m in itertools.product(range(self.m_cap + 1), repeat=self.d):
                v = (self.primitive_value(n, m) if from_prim
                     else self.value(n, m))
                if v:
                    terms[(n,) + m] = v
        return MultiSeries(variables, caps, terms)

    def _absorb(self, series, into):
        for e, c in series.terms.items():
            if e[0] == 0:
                continue
            into[(e[0], tuple(sorted(e[1:], reverse=True)))] = c

    def _fill_prim_from_gen(self):
        self._absorb(self._table_series(from_prim=False).log(), self._prim)
        self._prim_filled = True

    def _fill_gen_from_prim(self):
        self._absorb(self._table_series(from_prim=True).exp(), self._gen)
        self._gen_filled = True

    # -- pairing -----------------------------------------------------------

    def pair(self, x):
        """<self, x> for a HopfElement x, linear over terms."""
        if x.d != self.d or x.variant != self.variant:
            raise ContextMismatchError("element context (%d, %s) does not "
                                       "match theory (%d, %s)" %
                                       (x.d, x.variant, self.d, self.variant))
        total = _ZERO
        if self.kind == "multiplicative":
            for mon, coeff in x.terms.items():
                v = coeff
                for g in mon:
                    if self.variant == "nonsep":
                        v *= self.nonsep_value(g)
                    elif x.basis == "p":
                        v *= self.primitive_value(g[0], g[1])
                    else:
                        v *= self.value(g[0], g[1])
                    if not v:
                        break
                total += v
            return total
        # primitive kind: unit and longer monomials vanish in either basis
        for mon, coeff in x.terms.items():
            if len(mon) != 1:
                continue
            g = mon[0]
            if self.variant == "nonsep":
                total += coeff * self.nonsep_value(g)
            else:
                total += coeff * self.value(g[0], g[1])
        return total


def eval_theory(e, x):
    """The natural pairing <e, x>."""
    return e.pair(x)


def theory_log(e):
    """The primitive theory with the same values on primitives as e."""
    if e.kind != "multiplicative":
        raise ValueError("theory_log expects a multiplicative theory")
    if e.variant == "nonsep":
        return Theory(e.d, "primitive", "log(%s)" % e.label, e.n_cap, e.m_cap,
                      variant="nonsep", gen_fn=e.nonsep_value)
    return Theory(e.d, "primitive", "log(%s)" % e.label, e.n_cap, e.m_cap,
                  gen_fn=lambda n, m: e.primitive_value(n, m))


def theory_exp(p):
    """The multiplicative theory whose primitive values are p's table."""
    if p.kind != "primitive":
        raise ValueError("theory_exp expects a primitive theory")
    if p.variant == "nonsep":
        return Theory(p.d, "multiplicative", "exp(%s)" % p.label, p.n_cap,
                      p.m_cap, variant="nonsep", gen_fn=p.nonsep_value)
    return Theory(p.d, "multiplicative", "exp(%s)" % p.label, p.n_cap, p.m_cap,
                  prim_fn=lambda n, m: p.value(n, m))


# -- constructions ---------------------------------------------------------

def _one_var_coeffs(P, m_cap):
    """Coefficient list of a 1-variable series, zero-extended to m_cap."""
    if len(P.variables) != 1:
        raise ValueError("expected a series in one variable")
    return [P.coefficient((j,)) for j in range(m_cap + 1)]


def mult_class_theory(P, d, n_cap, m_cap, label=None, variant="sep"):
    """The multiplicative class theory of P: on q_{n,m} the value is
    1/n! times prod_i [x^(m_i)] P(x)^n.  Requires P(0) = 1."""
    if P.constant_term() != 1:
        raise ValueError("multiplicative class needs P(0) = 1")
    base = MultiSeries(("x",), (m_cap,),
                       {e: c for e, c in P.terms.items() if e[0] <= m_cap})
    powers = [MultiSeries.one(("x",), (m_cap,))]

    def coeff(n, j):
        while len(powers) <= n:
            powers.append(powers[-1] * base)
        return powers[n].coefficient((j,))

    label = label or "class(%s)" % P.pretty()
    if variant == "nonsep":
        def lam_fn(lam):
            v = Fraction(1)
            for x in lam:
                v *= coeff(1, x)
                if not v:
                    break
            return v
        return Theory(d, "multiplicative", label, n_cap, m_cap,
                      variant="nonsep", gen_fn=lam_fn)

    def gen_fn(n, m):
        v = Fraction(1, factorial(n))
        for x in m:
            v *= coeff(n, x)
            if not v:
                break
        return v

    return Theory(d, "multiplicative", label, n_cap, m_cap, gen_fn=gen_fn)


def ck_theory(k, d, n_cap, m_cap, variant="sep"):
    """The k-th Chern class theory, P = (1+x)^k: values
    1/n! prod binom(k n, m_i)."""
    k = int(k)
    if k < 0:
        raise ValueError("k must be >= 0")
    one = MultiSeries.one(("x",), (m_cap,))
    x = MultiSeries.var(("x",), (m_cap,), "x")
    return mult_class_theory((one + x) ** k, d, n_cap, m_cap,
                             label="c^%d" % k, variant=variant)


def ek_theory(k, d, n_cap, m_cap):
    """The k-th Euler power theory, class x^k: the value on q_{n,m} is 1/n!
    if every m_i = k n and zero otherwise.  (Not a unit class, so this does
    not factor through mult_class_theory.)"""
    k = int(k)

    def gen_fn(n, m):
        return Fraction(1, factorial(n)) if all(x == k * n for x in m) else _ZERO

    return Theory(d, "multiplicative", "e^%d" % k, n_cap, m_cap, gen_fn=gen_fn)


def coarse_curve_theory(k, kind, n_cap, m_cap):
    """Coarse curve-counting theories, d = 1 only.

    kind "chern":  <e, q_{n,m}> = 1/n! [T^m] prod_{i=1..n} (1+iT)^k
    kind "euler":  <e, q_{n,m}> = (n!)^(k-1) if m = nk else 0
    """
    k = int(k)
    if kind == "chern":
        rows = {0: [Fraction(1)]}

        def row(n):
            # coefficients of prod_{i<=n} (1+iT)^k
            if n not in rows:
                poly = list(row(n - 1))
                for _ in range(k):
                    shifted = [_ZERO] + [Fraction(n) * c for c in poly]
                    poly = [a + b for a, b in
                            itertools.zip_longest(poly, shifted,
                                                  fillvalue=_ZERO)]
                rows[n] = poly
            return rows[n]

        def gen_fn(n, m):
            poly = row(n)
            j = m[0]
            c = poly[j] if j < len(poly) else _ZERO
            return c / factorial(n)

        return Theory(1, "multiplicative", "coarse-c^%d" % k, n_cap, m_cap,
                      gen_fn=gen_fn)
    if kind == "euler":
        def gen_fn(n, m):
            if m[0] == n * k:
                return Fraction(factorial(n)) ** (k - 1)
            return _ZERO

        return Theory(1, "multiplicative", "coarse-e^%d" % k, n_cap, m_cap,
                      gen_fn=gen_fn)
    raise ValueError("kind must be 'chern' or 'euler'")


def inertial_theory(P, d, n_cap, m_cap, label=None):
    """The inertial theory of a unit class P = 1 + t_1 U + t_2 U^2 + ...

    It is multiplicative and determined by its primitive values

        <P_, p_{n,m}> = 1/n [U^(m - (n-1))] P(U_1) ... P(U_d)
                      = 1/n t_{m_1-n+1} ... t_{m_d-n+1}

    with t_0 = 1, zero whenever some m_i < n - 1.
    """
    if P.constant_term() != 1:
        raise ValueError("inertial theory needs P(0) = 1")
    t = _one_var_coeffs(P, m_cap)

    def prim_fn(n, m):
        v = Fraction(1, n)
        for x in m:
            j = x - (n - 1)
            if j < 0:
                return _ZERO
            v *= t[j] if j < len(t) else _ZERO
            if not v:
                break
        return v

    return Theory(d, "multiplicative", label or "inertial(%s)" % P.pretty(),
                  n_cap, m_cap, prim_fn=prim_fn)


def dt_vertex_theory(n_cap, m_cap):
    """The degree zero Donaldson-Thomas vertex theory, d = 3.

    The generator table is read off from

        sum <e, q_{n,m}> T^n U^m = exp(-E(U) log M(-U1 U2 U3 T)),
        E(U) = (U1+U2)(U2+U3)(U3+U1) / (U1 U2 U3),

    with M the MacMahon series.  The division by U1 U2 U3 is exact because
    the T^n coefficient of log M(-sT) is divisible by s^n; this is asserted
    term by term, never approximated.
    """
    n_cap = int(n_cap)
    m_cap = int(m_cap)
    if m_cap < n_cap - 1:
        raise ValueError("m_cap must be at least n_cap - 1 to hold the "
                         "vertex support")
    mac = macmahon_series(n_cap)
    m_neg = MultiSeries(("T",), (n_cap,),
                        {e: c if e[0] % 2 == 0 else -c
                         for e, c in mac.terms.items()})
    log_m_neg = m_neg.log()
    variables, caps = _series_frame(3, n_cap, m_cap + 1)
    # log M(-U1 U2 U3 T), truncated
    a_terms = {}
    for e, c in log_m_neg.terms.items():
        n = e[0]
        if n <= m_cap + 1:
            a_terms[(n, n, n, n)] = c
    a_series = MultiSeries(variables, caps, a_terms)
    factors = []
    for i, j in ((1, 2), (2, 3), (3, 1)):
        factors.append(MultiSeries.var(variables, caps, "U%d" % i) +
                       MultiSeries.var(variables, caps, "U%d" % j))
    e_poly = factors[0] * factors[1] * factors[2]
    b_series = -(e_poly * a_series)
    prim_table = {}
    for e, c in b_series.terms.items():
        if min(e[1:]) < 1:
            raise ArithmeticError("vertex exponent series is not divisible "
                                  "by U1 U2 U3 at %r" % (e,))
        key = (e[0], tuple(sorted((x - 1 for x in e[1:]), reverse=True)))
        prim_table[key] = c

    def prim_fn(n, m):
        return prim_table.get((n, m), _ZERO)

    return Theory(3, "multiplicative", "e_DT", n_cap, m_cap, prim_fn=prim_fn)


def table_theory(entries, d, n_cap, m_cap, kind="multiplicative",
                 label="table", variant="sep"):
    """A theory from an explicit generator-value list; absent entries are
    zero.  Entries are tuples ((n, m), value) or, for nonsep, (lam, value)."""
    table = {}
    for key, v in entries:
        if variant == "sep":
            n, m = key
            table[(int(n), tuple(sorted((int(x) for x in m), reverse=True)))] = \
                Fraction(v)
        else:
            table[pad_partition(tuple(sorted(key, reverse=True)), d)] = Fraction(v)
    if variant == "sep":
        return Theory(d, kind, label, n_cap, m_cap,
                      gen_fn=lambda n, m: table.get((n, m), _ZERO))
    return Theory(d, kind, label, n_cap, m_cap, variant="nonsep",
                  gen_fn=lambda lam: table.get(lam, _ZERO))


def theory_from_spec(spec, d, n_cap, m_cap, variant="sep"):
    """Build a theory from a structured description.

    Accepted forms: {"builtin": name, "k": int} with name one of ck, ek,
    coarse-ck, coarse-ek, dt; {"mult_class": [coefficients of P]};
    {"table": [{"n": int, "m": [int..], "value": "num/den"}, ...]}.
    """
    if "builtin" in spec:
        name = spec["builtin"]
        k = int(spec.get("k", 1))
        if name == "ck":
            return ck_theory(k, d, n_cap, m_cap, variant=variant)
        if name == "ek":
            return ek_theory(k, d, n_cap, m_cap)
        if name in ("coarse-ck", "coarse-ek"):
            if d != 1:
                raise ValueError("coarse theories need d = 1")
            kind = "chern" if name == "coarse-ck" else "euler"
            return coarse_curve_theory(k, kind, n_cap, m_cap)
        if name == "dt":
            if d != 3:
                raise ValueError("the vertex theory needs d = 3")
            return dt_vertex_theory(n_cap, m_cap)
        raise ValueError("unknown builtin theory %r" % name)
    if "mult_class" in spec:
        coeffs = [parse_rational(c) if isinstance(c, str) else Fraction(c)
                  for c in spec["mult_class"]]
        cap = max(len(coeffs) - 1, 1)
        P = MultiSeries(("x",), (cap,),
                        {(j,): c for j, c in enumerate(coeffs)})
        return mult_class_theory(P, d, n_cap, m_cap, variant=variant)
    if "table" in spec:
        entries = []
        for row in spec["table"]:
            v = parse_rational(row["value"]) if isinstance(row["value"], str) \
                else Fraction(row["value"])
            entries.append(((int(row["n"]), tuple(row["m"])), v))
        return table_theory(entries, d, n_cap, m_cap)
    raise ValueError("unrecognized theory description %r" % (spec,))
