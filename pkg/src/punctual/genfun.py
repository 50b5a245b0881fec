"""Invariant generating series and end-to-end identity checks.

The vertical series of a multiplicative theory e against Chern data of a
d-fold is sum_n <e, [Z_n]> T^n.  It is computed here along two independent
paths and their agreement is asserted on every call: once by pairing e with
the vertical classes in the p basis, and once by exponentiating the paired
primitive series sum_n T^n sum_{|lam|=d} <m_lam> <e, p_{n, lam+n-1}>.

The gamma-integral form recovers the same logarithm from the raw generator
table: substituting T -> T*g1...gd turns the Laurent expansion into an
honest polynomial one, the logarithm is taken there, and the substitution
is undone on exponents.  Cancellation of all would-be poles (exponents
dropping below zero after the shift) is checked term by term.
"""

from fractions import Fraction
from math import factorial
import itertools

from .combinat import pad_partition
from .hopf import ContextMismatchError, vertical_element
from .series import MultiSeries, macmahon_series
from .symfunc import ChernData
from .theories import (Theory, ck_theory, dt_vertex_theory, inertial_theory)

_ZERO = Fraction(0)


class PoleCancellationError(ArithmeticError):
    """Raised when the shifted logarithm keeps a negative exponent."""

    def __init__(self, offenders):
        self.offenders = tuple(offenders)
        shown = ", ".join("T^%d g^%r: %s" % (e[0], tuple(e[1:]), c)
                          for e, c in self.offenders[:4])
        more = "" if len(self.offenders) <= 4 else \
            " (and %d more)" % (len(self.offenders) - 4)
        super().__init__("uncancelled poles in gamma integral: %s%s" %
                         (shown, more))


class GammaReport:
    __slots__ = ("n_max", "gamma_cap", "terms_checked")

    def __init__(self, n_max, gamma_cap, terms_checked):
        self.n_max = n_max
        self.gamma_cap = gamma_cap
        self.terms_checked = terms_checked

    def to_obj(self):
        return {"n_max": self.n_max, "gamma_cap": self.gamma_cap,
                "terms_checked": self.terms_checked, "poles": []}

    def pretty(self):
        return ("no poles up to T^%d (gamma cap %d, %d terms checked)" %
                (self.n_max, self.gamma_cap, self.terms_checked))


class IdentityReport:
    __slots__ = ("name", "passed", "lhs", "rhs", "residual")

    def __init__(self, name, lhs, rhs):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        self.residual = lhs - rhs
        self.passed = self.residual.is_zero()

    def to_obj(self):
        return {"name": self.name, "passed": self.passed,
                "lhs": self.lhs.to_obj(), "rhs": self.rhs.to_obj(),
                "residual": self.residual.to_obj()}

    def pretty(self):
        return "\n".join([
            "identity: %s" % self.name,
            "passed: %s" % ("true" if self.passed else "false"),
            "lhs: %s" % self.lhs.pretty(),
            "rhs: %s" % self.rhs.pretty(),
            "residual: %s" % self.residual.pretty(),
        ])


def _require_mult_sep(e):
    if e.variant != "sep":
        raise ContextMismatchError("expected a sep-variant theory")
    if e.kind != "multiplicative":
        raise ValueError("expected a multiplicative theory")


def paired_primitive_series(e, chern, n_max):
    """sum_n T^n sum_{|lam|=d} <m_lam> <e, p_{n, lam+(n-1)}>."""
    _require_mult_sep(e)
    if e.d != chern.d:
        raise ContextMismatchError("theory is for d=%d, Chern data for d=%d" %
                                   (e.d, chern.d))
    terms = {}
    for n in range(1, n_max + 1):
        total = _ZERO
        for lam, w in chern.items():
            if not w:
                continue
            m = tuple(x + n - 1 for x in pad_partition(lam, e.d))
            total += w * e.primitive_value(n, m)
        if total:
            terms[(n,)] = total
    return MultiSeries(("T",), (n_max,), terms)


def vertical_series(e, chern, n_max, path="both"):
    """sum_n <e, [Z_n]> T^n for a multiplicative sep theory e.

    path selects the evaluation route: "pair" evaluates e on the vertical
    classes, "exp" exponentiates the paired primitive series, and "both"
    (the default) runs the two and insists they agree.
    """
    _require_mult_sep(e)
    if path not in ("both", "pair", "exp"):
        raise ValueError("path must be 'both', 'pair' or 'exp'")
    paired = expd = None
    if path in ("both", "pair"):
        classes = vertical_element(chern, n_max, variant="sep")
        paired = MultiSeries(("T",), (n_max,),
                             {(n,): e.pair(z) for n, z in enumerate(classes)})
    if path in ("both", "exp"):
        expd = paired_primitive_series(e, chern, n_max).exp()
    if path == "both" and paired != expd:
        raise RuntimeError("vertical series paths disagree for %s; "
                           "pairing gave %s, exponential gave %s" %
                           (e.label, paired.pretty(), expd.pretty()))
    return paired if paired is not None else expd


def curve_series(e, chi, n_max):
    """(sum_n <e, q_{n,n}> T^n)^chi for d = 1."""
    if e.d != 1:
        raise ContextMismatchError("curve series needs d = 1")
    _require_mult_sep(e)
    terms = {(0,): Fraction(1)}
    for n in range(1, n_max + 1):
        v = e.value(n, (n,))
        if v:
            terms[(n,)] = v
    return MultiSeries(("T",), (n_max,), terms).pow(Fraction(chi))


def gamma_integral_series(e, chern, n_max):
    """The logarithm of the vertical series, recovered from the generator
    table by the gamma-integral formula.

    Returns (series in T, GammaReport).  Raises PoleCancellationError when
    a shifted exponent stays negative, listing the offending terms.
    """
    _require_mult_sep(e)
    d = e.d
    if d != chern.d:
        raise ContextMismatchError("theory is for d=%d, Chern data for d=%d" %
                                   (d, chern.d))
    if d < 1:
        raise ValueError("gamma integral needs d >= 1")
    cap = n_max - 1 + d
    variables = ("T",) + tuple("g%d" % (i + 1) for i in range(d))
    caps = (n_max,) + (cap,) * d
    terms = {(0,) * (d + 1): Fraction(1)}
    for n in range(1, n_max + 1):
        for m in itertools.product(range(cap + 1), repeat=d):
            v = e.value(n, m)
            if v:
                terms[(n,) + m] = v
    table = MultiSeries(variables, caps, terms)
    shifted_log = table.log()
    offenders = [(exps, c) for exps, c in shifted_log.sorted_terms()
                 if min(exps[1:]) < exps[0] - 1]
    if offenders:
        raise PoleCancellationError(offenders)
    out = {}
    for n in range(1, n_max + 1):
        total = _ZERO
        for lam, w in chern.items():
            if not w:
                continue
            key = (n,) + tuple(x + n - 1 for x in pad_partition(lam, d))
            total += w * shifted_log.coefficient(key)
        if total:
            out[(n,)] = total
    report = GammaReport(n_max, cap, len(shifted_log.terms))
    return MultiSeries(("T",), (n_max,), out), report


def nonsep_vertical_series(e_values, chern, n_max):
    """exp(<c,[X]> T) where <c,[X]> = sum_lam <m_lam> c(q_lam).

    e_values is either a nonsep multiplicative Theory or a plain mapping
    from partitions to rationals.
    """
    d = chern.d
    if isinstance(e_values, Theory):
        if e_values.variant != "nonsep":
            raise ContextMismatchError("expected a nonsep theory")
        fn = e_values.nonsep_value
    else:
        table = {pad_partition(tuple(sorted(lam, reverse=True)), d): Fraction(v)
                 for lam, v in dict(e_values).items()}
        fn = lambda lam: table.get(lam, _ZERO)
    a = _ZERO
    for lam, w in chern.items():
        a += w * fn(pad_partition(lam, d))
    return MultiSeries(("T",), (n_max,),
                       {(n,): a ** n / factorial(n) for n in range(n_max + 1)})


def chern_class_integral(P, chern):
    """<degree-d part of prod_i P(gamma_i), [X]> for a unit class P.

    Expanding the product, the coefficient of gamma^x is prod t_{x_i}, so
    grouping by sorted exponent vector gives sum_lam <m_lam> prod t_{lam_i}
    (padding zeros contribute t_0 = 1 each).
    """
    if P.constant_term() != 1:
        raise ValueError("class integral needs P(0) = 1")
    total = _ZERO
    for lam, w in chern.items():
        if not w:
            continue
        v = w
        for part in lam:
            v *= P.coefficient((part,))
            if not v:
                break
        total += v
    return total


def _macmahon_neg(n_max):
    mac = macmahon_series(n_max)
    return MultiSeries(("T",), (n_max,),
                       {e: c if e[0] % 2 == 0 else -c
                        for e, c in mac.terms.items()})


def verify_identity(name, **params):
    """Check one of the named series identities; lhs and rhs always come
    from independent code paths.

    curve-vertical   params: theory (d=1 multiplicative), chi, n_max
                     curve_series(e, chi) vs vertical_series against the
                     Chern data of a curve with <m_(1)> = chi.
    inertial-power   params: P (unit class, 1 variable), chern, n_max
                     vertical series of the inertial theory of P vs
                     (1-T)^(-<P(T_X),[X]>).
    dt-degree-zero   params: chern (d=3), n_max
                     vertical series of the vertex theory vs
                     M(-T)^(<c3-c1c2,[X]>).
    ck-bivariate     params: k, n_max, m_max (d=1)
                     the table series sum <c^k, q_{n,m}> T^n U^m vs
                     exp(T (1+U)^k).
    gamma-vertical   params: theory, chern, n_max
                     gamma_integral_series vs log of vertical_series.
    """
    if name == "curve-vertical":
        e = params["theory"]
        chi = Fraction(params["chi"])
        n_max = int(params["n_max"])
        chern = ChernData(1, {(1,): chi})
        return IdentityReport(name, curve_series(e, chi, n_max),
                              vertical_series(e, chern, n_max))
    if name == "inertial-power":
        P = params["P"]
        chern = params["chern"]
        n_max = int(params["n_max"])
        d = chern.d
        e = inertial_theory(P, d, n_max, n_max - 1 + d)
        lhs = vertical_series(e, chern, n_max)
        one_minus_t = (MultiSeries.one(("T",), (n_max,)) -
                       MultiSeries.var(("T",), (n_max,), "T"))
        rhs = one_minus_t.pow(-chern_class_integral(P, chern))
        return IdentityReport(name, lhs, rhs)
    if name == "dt-degree-zero":
        chern = params["chern"]
        n_max = int(params["n_max"])
        if chern.d != 3:
            raise ContextMismatchError("the vertex identity needs d = 3")
        e = dt_vertex_theory(n_max, n_max - 1 + 3)
        lhs = vertical_series(e, chern, n_max)
        # <c3 - c1 c2> = -2 <m_111> - <m_21>
        exponent = -2 * chern.value((1, 1, 1)) - chern.value((2, 1))
        rhs = _macmahon_neg(n_max).pow(exponent)
        return IdentityReport(name, lhs, rhs)
    if name == "ck-bivariate":
        k = int(params["k"])
        n_max = int(params["n_max"])
        m_max = int(params.get("m_max", n_max))
        e = ck_theory(k, 1, n_max, m_max)
        variables, caps = ("T", "U"), (n_max, m_max)
        terms = {(0, 0): Fraction(1)}
        for n in range(1, n_max + 1):
            for m in range(m_max + 1):
                v = e.value(n, (m,))
                if v:
                    terms[(n, m)] = v
        lhs = MultiSeries(variables, caps, terms)
        t = MultiSeries.var(variables, caps, "T")
        u = MultiSeries.var(variables, caps, "U")
        rhs = (t * (MultiSeries.one(variables, caps) + u) ** k).exp()
        return IdentityReport(name, lhs, rhs)
    if name == "gamma-vertical":
        e = params["theory"]
        chern = params["chern"]
        n_max = int(params["n_max"])
        lhs, _report = gamma_integral_series(e, chern, n_max)
        rhs = vertical_series(e, chern, n_max).log()
        return IdentityReport(name, lhs, rhs)
    raise ValueError("unknown identity %r" % name)


IDENTITY_NAMES = ("curve-vertical", "inertial-power", "dt-degree-zero",
                  "ck-bivariate", "gamma-vertical")
