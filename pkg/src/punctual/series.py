"""Truncated multivariate formal power series over Q.

A MultiSeries is a sparse map from exponent vectors to Fraction coefficients
in a fixed ordered tuple of variables, together with hard truncation caps: a
per-variable maximum exponent, and optionally a total-degree cap.  Every
operation truncates eagerly, so term counts stay bounded and results are
reproducible.  Values are immutable after construction and all operations
are pure.

exp and log run a layer recursion on total degree (differentiate, multiply,
integrate back), which costs about one series multiplication in total and
stays cheap whenever one side is sparse.  Rational powers are exp(r*log f),
never Newton iteration; with exact arithmetic this is always well defined
for unit constant term.
"""

from fractions import Fraction

from .rational import format_rational, parse_rational

_ZERO = Fraction(0)


class MultiSeries:

    __slots__ = ("variables", "caps", "total_cap", "terms")

    def __init__(self, variables, caps, terms=None, total_cap=None):
        variables = tuple(str(v) for v in variables)
        caps = tuple(int(c) for c in caps)
        if len(caps) != len(variables):
            raise ValueError("need one cap per variable")
        if any(c < 0 for c in caps):
            raise ValueError("caps must be >= 0")
        if total_cap is not None:
            total_cap = int(total_cap)
            if total_cap < 0:
                raise ValueError("total cap must be >= 0")
        self.variables = variables
        self.caps = caps
        self.total_cap = total_cap
        kept = {}
        if terms:
            for exps, coeff in terms.items():
                e = tuple(int(x) for x in exps)
                if len(e) != len(variables):
                    raise ValueError("exponent vector of wrong length")
                if any(x < 0 for x in e):
                    raise ValueError("negative exponent")
                if not self._admits(e):
                    continue
                c = kept.get(e, _ZERO) + Fraction(coeff)
                if c:
                    kept[e] = c
                elif e in kept:
                    del kept[e]
        self.terms = kept

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables, caps, total_cap=None):
        return cls(variables, caps, None, total_cap)

    @classmethod
    def one(cls, variables, caps, total_cap=None):
        z = (0,) * len(tuple(variables))
        return cls(variables, caps, {z: Fraction(1)}, total_cap)

    @classmethod
    def monomial(cls, variables, caps, exponents, coeff=1, total_cap=None):
        return cls(variables, caps, {tuple(exponents): Fraction(coeff)}, total_cap)

    @classmethod
    def var(cls, variables, caps, name, total_cap=None):
        """The series consisting of the single variable ``name``."""
        variables = tuple(variables)
        i = variables.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls.monomial(variables, caps, e, 1, total_cap)

    # -- basics ------------------------------------------------------------

    def _admits(self, e):
        if any(x > c for x, c in zip(e, self.caps)):
            return False
        return self.total_cap is None or sum(e) <= self.total_cap

    def _degree_bound(self):
        bound = sum(self.caps)
        if self.total_cap is not None:
            bound = min(bound, self.total_cap)
        return bound

    def _like(self, terms):
        s = MultiSeries.zero(self.variables, self.caps, self.total_cap)
        s.terms = {e: c for e, c in terms.items() if c}
        return s

    def _check_compatible(self, other):
        if (self.variables != other.variables or self.caps != other.caps
                or self.total_cap != other.total_cap):
            raise ValueError("series variables/caps mismatch")

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), _ZERO)

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), _ZERO)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (self.variables == other.variables and self.caps == other.caps
                and self.total_cap == other.total_cap and self.terms == other.terms)

    __hash__ = None

    def __repr__(self):
        return "MultiSeries(%r, %d terms)" % (self.variables, len(self.terms))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiSeries.monomial(self.variables, self.caps,
                                         (0,) * len(self.variables), other,
                                         self.total_cap)
        self._check_compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, _ZERO) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-Fraction(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MultiSeries.zero(self.variables, self.caps, self.total_cap)
            return self._like({e: c0 * c for e, c0 in self.terms.items()})
        self._check_compatible(other)
        # product of the two sparse term maps, truncated at the caps
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        acc = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                if not self._admits(e):
                    continue
                acc[e] = acc.get(e, _ZERO) + c1 * c2
        return self._like(acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        """Integer power by repeated squaring (k >= 0)."""
        k = int(k)
        if k < 0:
            raise ValueError("negative integer power, use pow() with a Fraction")
        out = MultiSeries.one(self.variables, self.caps, self.total_cap)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- exp / log / rational powers --------------------------------------

    def _by_total_degree(self, weighted=False):
        layers = {}
        for e, c in self.terms.items():
            k = sum(e)
            layers.setdefault(k, {})[e] = c * k if weighted else c
        return layers

    def exp(self):
        """exp(f) = sum f^k / k!, requires zero constant term."""
        if self.constant_term():
            raise ValueError("exp needs zero constant term")
        nvars = len(self.variables)
        zero_e = (0,) * nvars
        g = self._by_total_degree(weighted=True)   # layers of theta(f)
        out = {0: {zero_e: Fraction(1)}}
        for k in range(1, self._degree_bound() + 1):
            acc = {}
            for j, gj in g.items():
                prev = out.get(k - j)
                if j > k or not prev:
                    continue
                for e1, c1 in gj.items():
                    for e2, c2 in prev.items():
                        e = tuple(x + y for x, y in zip(e1, e2))
                        if not self._admits(e):
                            continue
                        acc[e] = acc.get(e, _ZERO) + c1 * c2
            layer = {}
            inv = Fraction(1, k)
            for e, c in acc.items():
                if c:
                    layer[e] = c * inv
            if layer:
                out[k] = layer
        terms = {}
        for layer in out.values():
            terms.update(layer)
        return self._like(terms)

    def log(self):
        """log(f) for constant term 1."""
        if self.constant_term() != 1:
            raise ValueError("log needs constant term 1")
        s_layers = self._by_total_degree()
        ts_layers = self._by_total_degree(weighted=True)
        theta_l = {}
        for k in range(1, self._degree_bound() + 1):
            acc = dict(ts_layers.get(k, {}))
            for j in range(1, k):
                lj = theta_l.get(j)
                sk = s_layers.get(k - j)
                if not lj or not sk:
                    continue
                for e1, c1 in lj.items():
                    for e2, c2 in sk.items():
                        e = tuple(x + y for x, y in zip(e1, e2))
                        if not self._admits(e):
                            continue
                        acc[e] = acc.get(e, _ZERO) - c1 * c2
            layer = {e: c for e, c in acc.items() if c}
            if layer:
                theta_l[k] = layer
        terms = {}
        for k, layer in theta_l.items():
            inv = Fraction(1, k)
            for e, c in layer.items():
                terms[e] = c * inv
        return self._like(terms)

    def pow(self, r):
        """f^r for rational r, computed as exp(r*log f)."""
        return (self.log() * Fraction(r)).exp()

    # -- serialization -----------------------------------------------------

    def sorted_terms(self):
        """Terms in graded-lexicographic exponent order."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]))

    def to_obj(self):
        return {
            "variables": list(self.variables),
            "caps": list(self.caps),
            "total_cap": self.total_cap,
            "terms": [{"exponents": list(e), "coeff": format_rational(c)}
                      for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_obj(cls, obj):
        terms = {tuple(t["exponents"]): parse_rational(t["coeff"])
                 for t in obj["terms"]}
        return cls(obj["variables"], obj["caps"], terms, obj.get("total_cap"))

    def pretty(self):
        """Deterministic one-line form, coefficients always num/den."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [format_rational(c)]
            for name, x in zip(self.variables, e):
                if x == 1:
                    factors.append(name)
                elif x > 1:
                    factors.append("%s^%d" % (name, x))
            parts.append("*".join(factors))
        return " + ".join(parts)


def macmahon_series(cap):
    """MacMahon's plane partition series prod_{n>=1} (1-T^n)^(-n), to T^cap.

    >>> [macmahon_series(4).coefficient((k,)) for k in range(5)]
    [Fraction(1, 1), Fraction(1, 1), Fraction(3, 1), Fraction(6, 1), Fraction(13, 1)]
    """
    cap = int(cap)
    if cap < 0:
        raise ValueError("cap must be >= 0")
    out = MultiSeries.one(("T",), (cap,))
    for n in range(1, cap + 1):
        factor = MultiSeries.one(("T",), (cap,)) - \
            MultiSeries.monomial(("T",), (cap,), (n,))
        out = out * factor.pow(Fraction(-n))
    return out
