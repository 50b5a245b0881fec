"""Hopf algebras of zero-dimensional cycle classes on a d-fold.

Two graded connected commutative and cocommutative Hopf algebras over Q are
modeled, both as free commutative polynomial algebras.

* The "sep" variant has generators q_{n,m} indexed by a multiplicity n >= 1
  and a vector m of d non-negative integers, stored weakly decreasing (row
  permutations give the same class).  The index (0, 0) is the unit and
  (0, m) with m nonzero is zero; neither occurs inside a monomial.  The
  coproduct of q_{n,m} sums q over all entrywise splittings of the full row
  (n, m), with zero rows dropped by the rule above.

* The "nonsep" variant has primitive generators q_lam indexed by partitions
  lam with at most d parts (trailing zeros padded to length d; the all-zero
  partition is a generator, not the unit).

Elements carry a basis flag: "q" for the generator basis and, for the sep
variant, "p" for the primitive basis obtained as the coefficientwise
logarithm of the formal sum of all q_{n,m}:

    p_{n,m} = sum_{k>=1} (-1)^(k+1)/k sum q_{n_1,m_1} ... q_{n_k,m_k}

over ordered compositions of (n, m) into k nonzero rows, and inversely
q_{n,m} = sum_k 1/k! sum p_{n_1,m_1} ... p_{n_k,m_k}.  The antipode is
multiplicative and acts by -1 on primitives, so it is computed by a p-basis
round trip.

Gradings per monomial: cycle degree is the sum of the multiplicities n (sep)
or the number of factors (nonsep); homological degree is twice the sum of
all column entries; total degree is homological minus 2*d*(cycle degree).
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinat import (compositions_positive, pad_partition,
                       vector_compositions, vector_splittings)
from .rational import format_rational, parse_rational

_ZERO = Fraction(0)


class ContextMismatchError(ValueError):
    pass


class _Sentinel:
    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name


#: canonical_generator results for the two degenerate index rows
UNIT = _Sentinel("UNIT")
ZERO = _Sentinel("ZERO")


def canonical_generator(n, m):
    """Canonical form of a sep index row: sorts m, folds in the unit/zero rule.

    Returns the pair (n, m sorted decreasingly), or UNIT for (0, 0), or ZERO
    for n = 0 with m nonzero.
    """
    n = int(n)
    m = tuple(int(x) for x in m)
    if n < 0 or any(x < 0 for x in m):
        raise ValueError("negative entry in generator index")
    if n == 0:
        return UNIT if not any(m) else ZERO
    return (n, tuple(sorted(m, reverse=True)))


def _check_sep_factor(g, d):
    n, m = g
    if not (isinstance(n, int) and n >= 1):
        raise ValueError("sep factor needs multiplicity >= 1, got %r" % (g,))
    if len(m) != d or any(x < 0 for x in m) or list(m) != sorted(m, reverse=True):
        raise ValueError("bad exponent vector in %r for d=%d" % (g, d))


def _check_nonsep_factor(g, d):
    if len(g) != d or any(x < 0 for x in g) or list(g) != sorted(g, reverse=True):
        raise ValueError("bad nonsep factor %r for d=%d" % (g, d))


def monomial_cycle_degree(mon, variant):
    if variant == "sep":
        return sum(g[0] for g in mon)
    return len(mon)


def monomial_hom_degree(mon, variant):
    if variant == "sep":
        return 2 * sum(sum(g[1]) for g in mon)
    return 2 * sum(sum(g) for g in mon)


class HopfElement:
    """A sparse rational linear combination of monomials in the generators."""

    __slots__ = ("d", "variant", "basis", "terms")

    def __init__(self, d, variant, basis, terms=None):
        d = int(d)
        if d < 0:
            raise ValueError("dimension must be >= 0")
        if variant not in ("sep", "nonsep"):
            raise ValueError("variant must be 'sep' or 'nonsep'")
        if basis not in ("q", "p"):
            raise ValueError("basis must be 'q' or 'p'")
        self.d = d
        self.variant = variant
        self.basis = basis
        kept = {}
        if terms:
            for mon, coeff in terms.items():
                mon = tuple(sorted(tuple(g) if variant == "nonsep" else
                                   (g[0], tuple(g[1])) for g in mon))
                for g in mon:
                    if variant == "sep":
                        _check_sep_factor(g, d)
                    else:
                        _check_nonsep_factor(g, d)
                c = kept.get(mon, _ZERO) + Fraction(coeff)
                if c:
                    kept[mon] = c
                elif mon in kept:
                    del kept[mon]
        self.terms = kept

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, d, variant="sep", basis="q"):
        return cls(d, variant, basis)

    @classmethod
    def unit(cls, d, variant="sep", basis="q"):
        return cls(d, variant, basis, {(): Fraction(1)})

    @classmethod
    def generator(cls, d, n, m, basis="q"):
        """The sep generator q_{n,m} (or p_{n,m}), via the canonical rules."""
        if len(tuple(m)) != d:
            raise ValueError("exponent vector has length %d, expected %d" %
                             (len(tuple(m)), d))
        g = canonical_generator(n, m)
        if g is UNIT:
            return cls.unit(d, "sep", basis)
        if g is ZERO:
            return cls.zero(d, "sep", basis)
        return cls(d, "sep", basis, {(g,): Fraction(1)})

    @classmethod
    def nonsep_generator(cls, d, lam):
        lam = tuple(sorted(lam, reverse=True))
        return cls(d, "nonsep", "q", {(pad_partition(lam, d),): Fraction(1)})

    # -- basics ------------------------------------------------------------

    def _check_context(self, other, basis_too=True):
        if (self.d != other.d or self.variant != other.variant
                or (basis_too and self.basis != other.basis)):
            raise ContextMismatchError("elements live in different contexts")

    def _like(self, terms):
        out = HopfElement(self.d, self.variant, self.basis)
        out.terms = {m: c for m, c in terms.items() if c}
        return out

    def is_zero(self):
        return not self.terms

    def coefficient(self, mon):
        mon = tuple(sorted(mon))
        return self.terms.get(mon, _ZERO)

    def __eq__(self, other):
        if not isinstance(other, HopfElement):
            return NotImplemented
        return (self.d == other.d and self.variant == other.variant
                and self.basis == other.basis and self.terms == other.terms)

    __hash__ = None

    def __repr__(self):
        return "HopfElement(d=%d, %s, %s basis, %d terms)" % (
            self.d, self.variant, self.basis, len(self.terms))

    # -- algebra -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HopfElement.unit(self.d, self.variant, self.basis).scaled(other)
        self._check_context(other)
        terms = dict(self.terms)
        for mon, c in other.terms.items():
            s = terms.get(mon, _ZERO) + c
            if s:
                terms[mon] = s
            elif mon in terms:
                del terms[mon]
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-Fraction(other))
        return self + (-other)

    def scaled(self, c):
        c = Fraction(c)
        return self._like({m: x * c for m, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        self._check_context(other)
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mon = tuple(sorted(m1 + m2))
                acc[mon] = acc.get(mon, _ZERO) + c1 * c2
        return self._like(acc)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = HopfElement.unit(self.d, self.variant, self.basis)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- coalgebra ---------------------------------------------------------

    def counit(self):
        """Coefficient of the empty monomial."""
        return self.terms.get((), _ZERO)

    def coproduct(self):
        if self.basis != "q":
            raise ValueError("coproduct expects the q basis, convert first")
        acc = {}
        for mon, coeff in self.terms.items():
            for pair, mult in _monomial_coproduct(self.variant, mon).items():
                acc[pair] = acc.get(pair, _ZERO) + coeff * mult
        out = TensorElement(self.d, self.variant, self.basis)
        out.terms = {p: c for p, c in acc.items() if c}
        return out

    def antipode(self):
        """Multiplicative, -1 on each primitive factor."""
        if self.variant == "nonsep" or self.basis == "p":
            return self._like({m: c if len(m) % 2 == 0 else -c
                               for m, c in self.terms.items()})
        p = self.to_p()
        negated = p._like({m: c if len(m) % 2 == 0 else -c
                           for m, c in p.terms.items()})
        return negated.to_q()

    # -- basis change ------------------------------------------------------

    def to_p(self):
        """Rewrite in the primitive basis."""
        if self.basis == "p":
            return self
        if self.variant == "nonsep":
            return HopfElement(self.d, "nonsep", "p", self.terms)
        return self._substitute(_q_in_p, "p")

    def to_q(self):
        """Rewrite in the generator basis."""
        if self.basis == "q":
            return self
        if self.variant == "nonsep":
            return HopfElement(self.d, "nonsep", "q", self.terms)
        return self._substitute(_p_in_q, "q")

    def _substitute(self, expander, new_basis):
        acc = {}
        for mon, coeff in self.terms.items():
            prod = {(): Fraction(1)}
            for g in mon:
                prod = _poly_mul(prod, expander(g[0], g[1]))
            for m2, c2 in prod.items():
                acc[m2] = acc.get(m2, _ZERO) + coeff * c2
        out = HopfElement(self.d, self.variant, new_basis)
        out.terms = {m: c for m, c in acc.items() if c}
        return out

    # -- gradings ----------------------------------------------------------

    def grade(self):
        """Split into bigraded components.

        Returns a list of (cycle degree, homological degree, total degree,
        component), ordered by degree.  Total degree is hom - 2*d*cycle.
        """
        buckets = {}
        for mon, c in self.terms.items():
            cyc = monomial_cycle_degree(mon, self.variant)
            hom = monomial_hom_degree(mon, self.variant)
            buckets.setdefault((cyc, hom), {})[mon] = c
        out = []
        for (cyc, hom) in sorted(buckets):
            out.append((cyc, hom, hom - 2 * self.d * cyc,
                        self._like(buckets[(cyc, hom)])))
        return out


class TensorElement:
    """An element of the two-fold tensor product, sparse over monomial pairs."""

    __slots__ = ("d", "variant", "basis", "terms")

    def __init__(self, d, variant, basis, terms=None):
        self.d = d
        self.variant = variant
        self.basis = basis
        self.terms = dict(terms) if terms else {}

    def _like(self, terms):
        out = TensorElement(self.d, self.variant, self.basis)
        out.terms = {p: c for p, c in terms.items() if c}
        return out

    def _check_context(self, other):
        if (self.d != other.d or self.variant != other.variant
                or self.basis != other.basis):
            raise ContextMismatchError("tensor elements live in different contexts")

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.d == other.d and self.variant == other.variant
                and self.basis == other.basis and self.terms == other.terms)

    __hash__ = None

    def __repr__(self):
        return "TensorElement(d=%d, %s, %d terms)" % (self.d, self.variant,
                                                      len(self.terms))

    def __add__(self, other):
        self._check_context(other)
        terms = dict(self.terms)
        for p, c in other.terms.items():
            s = terms.get(p, _ZERO) + c
            if s:
                terms[p] = s
            elif p in terms:
                del terms[p]
        return self._like(terms)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        c = Fraction(c)
        return self._like({p: x * c for p, x in self.terms.items()})

    def __mul__(self, other):
        """Componentwise product (a ox b)(c ox d) = ac ox bd."""
        self._check_context(other)
        acc = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                key = (tuple(sorted(l1 + l2)), tuple(sorted(r1 + r2)))
                acc[key] = acc.get(key, _ZERO) + c1 * c2
        return self._like(acc)

    def swap(self):
        return self._like({(r, l): c for (l, r), c in self.terms.items()})

    def left_counit(self):
        """Apply the counit to the left slot, landing back in the algebra."""
        acc = {}
        for (l, r), c in self.terms.items():
            if not l:
                acc[r] = acc.get(r, _ZERO) + c
        out = HopfElement(self.d, self.variant, self.basis)
        out.terms = {m: c for m, c in acc.items() if c}
        return out

    def right_counit(self):
        return self.swap().left_counit()


def tensor(a, b):
    """The simple tensor a ox b of two elements in the same context."""
    a._check_context(b)
    acc = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            acc[(m1, m2)] = acc.get((m1, m2), _ZERO) + c1 * c2
    out = TensorElement(a.d, a.variant, a.basis)
    out.terms = {p: c for p, c in acc.items() if c}
    return out


# -- structure constants ---------------------------------------------------

@lru_cache(maxsize=None)
def _generator_coproduct(n, m):
    """Splitting list for one sep generator: pairs of factor-or-None."""
    out = []
    for n1 in range(n + 1):
        n2 = n - n1
        for a, b in vector_splittings(m):
            left = canonical_generator(n1, a)
            right = canonical_generator(n2, b)
            if left is ZERO or right is ZERO:
                continue
            out.append((None if left is UNIT else left,
                        None if right is UNIT else right))
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_coproduct(variant, mon):
    """Coproduct of a monomial as a map (left mono, right mono) -> coeff."""
    pairs = {((), ()): Fraction(1)}
    for g in mon:
        if variant == "sep":
            opts = _generator_coproduct(g[0], g[1])
        else:
            opts = ((g, None), (None, g))
        nxt = {}
        for (l, r), c in pairs.items():
            for gl, gr in opts:
                key = (l if gl is None else tuple(sorted(l + (gl,))),
                       r if gr is None else tuple(sorted(r + (gr,))))
                nxt[key] = nxt.get(key, _ZERO) + c
        pairs = nxt
    return pairs


def _poly_mul(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            mon = tuple(sorted(m1 + m2))
            out[mon] = out.get(mon, _ZERO) + c1 * c2
    return out


@lru_cache(maxsize=None)
def _p_in_q(n, m):
    """p_{n,m} expanded in q monomials (ordered compositions, log signs)."""
    acc = {}
    for k in range(1, n + 1):
        coeff = Fraction((-1) ** (k + 1), k)
        for nc in compositions_positive(n, k):
            for mc in vector_compositions(m, k):
                mon = tuple(sorted((nc[i], tuple(sorted(mc[i], reverse=True)))
                                   for i in range(k)))
                acc[mon] = acc.get(mon, _ZERO) + coeff
    return {mon: c for mon, c in acc.items() if c}


@lru_cache(maxsize=None)
def _q_in_p(n, m):
    """q_{n,m} expanded in p monomials (ordered compositions, 1/k!)."""
    acc = {}
    for k in range(1, n + 1):
        coeff = Fraction(1, factorial(k))
        for nc in compositions_positive(n, k):
            for mc in vector_compositions(m, k):
                mon = tuple(sorted((nc[i], tuple(sorted(mc[i], reverse=True)))
                                   for i in range(k)))
                acc[mon] = acc.get(mon, _ZERO) + coeff
    return {mon: c for mon, c in acc.items() if c}


# -- sep -> nonsep ---------------------------------------------------------

@lru_cache(maxsize=None)
def _sep_gen_image(n, m):
    """Image of the sep generator q_{n,m}: 1/n! times the sum over ordered
    splittings of m into n columns of the product of nonsep generators."""
    acc = {}
    coeff = Fraction(1, factorial(n))
    for parts in vector_compositions(m, n):
        mon = tuple(sorted(tuple(sorted(p, reverse=True)) for p in parts))
        acc[mon] = acc.get(mon, _ZERO) + coeff
    return acc


def sep_to_nonsep(x):
    """The algebra map from the sep to the nonsep variant.

    On the q basis, q_{n,m} goes to 1/n! times the sum over ordered
    splittings of m into n columns; on the p basis, p_{1,m} goes to
    q_{sorted m} and p_{n,.} with n >= 2 goes to zero.  Extended
    multiplicatively and linearly.
    """
    if x.variant != "sep":
        raise ContextMismatchError("sep_to_nonsep expects the sep variant")
    acc = {}
    if x.basis == "q":
        for mon, coeff in x.terms.items():
            prod = {(): Fraction(1)}
            for g in mon:
                prod = _poly_mul(prod, _sep_gen_image(g[0], g[1]))
            for m2, c2 in prod.items():
                acc[m2] = acc.get(m2, _ZERO) + coeff * c2
    else:
        for mon, coeff in x.terms.items():
            if any(g[0] >= 2 for g in mon):
                continue
            m2 = tuple(sorted(g[1] for g in mon))
            acc[m2] = acc.get(m2, _ZERO) + coeff
    out = HopfElement(x.d, "nonsep", "q")
    out.terms = {m: c for m, c in acc.items() if c}
    return out


# -- vertical classes ------------------------------------------------------

def vertical_element(chern, n_max, variant="sep"):
    """The cycle classes [Z_n] of the symmetric powers, n = 0 .. n_max.

    sep variant: coefficients of exp(sum_lam <m_lam> sum_j p_{j, lam+j-1} T^j)
    as a series in T, returned in the p basis.  nonsep variant: coefficients
    of exp(T * sum_lam <m_lam> q_lam), in the q basis.
    """
    d = chern.d
    n_max = int(n_max)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if variant == "sep":
        layers = {}
        for j in range(1, n_max + 1):
            t = {}
            for lam, val in chern.items():
                if val:
                    g = (j, tuple(x + j - 1 for x in pad_partition(lam, d)))
                    t[(g,)] = val
            layers[j] = HopfElement(d, "sep", "p", t)
        zs = [HopfElement.unit(d, "sep", "p")]
        for n in range(1, n_max + 1):
            acc = HopfElement.zero(d, "sep", "p")
            for j in range(1, n + 1):
                acc = acc + (layers[j] * zs[n - j]).scaled(j)
            zs.append(acc.scaled(Fraction(1, n)))
        return zs
    if variant == "nonsep":
        c = HopfElement.zero(d, "nonsep", "q")
        for lam, val in chern.items():
            if val:
                c = c + HopfElement.nonsep_generator(d, lam).scaled(val)
        zs = [HopfElement.unit(d, "nonsep", "q")]
        power = HopfElement.unit(d, "nonsep", "q")
        for n in range(1, n_max + 1):
            power = power * c
            zs.append(power.scaled(Fraction(1, factorial(n))))
        return zs
    raise ValueError("variant must be 'sep' or 'nonsep'")


# -- serialization ---------------------------------------------------------

def _monomial_key(mon, variant):
    return (monomial_cycle_degree(mon, variant),
            monomial_hom_degree(mon, variant), mon)


def _monomial_to_obj(mon, variant):
    if variant == "sep":
        return [[g[0], list(g[1])] for g in mon]
    # nonsep factors are serialized with multiplicity 1
    return [[1, list(g)] for g in mon]


def _monomial_from_obj(obj, variant, d):
    factors = []
    for n, m in obj:
        if variant == "sep":
            factors.append((int(n), tuple(int(x) for x in m)))
        else:
            if int(n) != 1:
                raise ValueError("nonsep factors must carry multiplicity 1")
            factors.append(tuple(int(x) for x in m))
    return tuple(sorted(factors))


def element_to_obj(x):
    mons = sorted(x.terms, key=lambda mon: _monomial_key(mon, x.variant))
    return {
        "d": x.d,
        "variant": x.variant,
        "basis": x.basis,
        "terms": [{"monomial": _monomial_to_obj(mon, x.variant),
                   "coeff": format_rational(x.terms[mon])} for mon in mons],
    }


def element_from_obj(obj):
    d = int(obj["d"])
    variant = obj["variant"]
    basis = obj["basis"]
    terms = {}
    for row in obj["terms"]:
        mon = _monomial_from_obj(row["monomial"], variant, d)
        coeff = parse_rational(row["coeff"])
        terms[mon] = terms.get(mon, _ZERO) + coeff
    return HopfElement(d, variant, basis, terms)


def tensor_to_obj(t):
    keys = sorted(t.terms, key=lambda p: (_monomial_key(p[0], t.variant),
                                          _monomial_key(p[1], t.variant)))
    return {
        "d": t.d,
        "variant": t.variant,
        "basis": t.basis,
        "terms": [{"left": _monomial_to_obj(l, t.variant),
                   "right": _monomial_to_obj(r, t.variant),
                   "coeff": format_rational(t.terms[(l, r)])}
                  for (l, r) in keys],
    }


def tensor_from_obj(obj):
    d = int(obj["d"])
    variant = obj["variant"]
    out = TensorElement(d, variant, obj["basis"])
    terms = {}
    for row in obj["terms"]:
        key = (_monomial_from_obj(row["left"], variant, d),
               _monomial_from_obj(row["right"], variant, d))
        terms[key] = terms.get(key, _ZERO) + parse_rational(row["coeff"])
    out.terms = {p: c for p, c in terms.items() if c}
    return out


def _factor_pretty(g, variant, basis):
    letter = "p" if basis == "p" else "q"
    if variant == "sep":
        return "%s_{%d,(%s)}" % (letter, g[0], ",".join(str(x) for x in g[1]))
    return "q_{(%s)}" % ",".join(str(x) for x in g)


def element_pretty(x):
    if not x.terms:
        return "0"
    parts = []
    for mon in sorted(x.terms, key=lambda m: _monomial_key(m, x.variant)):
        piece = [format_rational(x.terms[mon])]
        i = 0
        while i < len(mon):
            j = i
            while j < len(mon) and mon[j] == mon[i]:
                j += 1
            f = _factor_pretty(mon[i], x.variant, x.basis)
            piece.append(f if j - i == 1 else "%s^%d" % (f, j - i))
            i = j
        parts.append("*".join(piece))
    return " + ".join(parts)


def tensor_pretty(t):
    if not t.terms:
        return "0"
    both = []
    for (l, r) in sorted(t.terms, key=lambda p: (_monomial_key(p[0], t.variant),
                                                 _monomial_key(p[1], t.variant))):
        def side(mon):
            if not mon:
                return "1"
            parts = []
            i = 0
            while i < len(mon):
                j = i
                while j < len(mon) and mon[j] == mon[i]:
                    j += 1
                f = _factor_pretty(mon[i], t.variant, t.basis)
                parts.append(f if j - i == 1 else "%s^%d" % (f, j - i))
                i = j
            return "*".join(parts)
        both.append("%s*%s(x)%s" % (format_rational(t.terms[(l, r)]),
                                    side(l), side(r)))
    return " + ".join(both)
