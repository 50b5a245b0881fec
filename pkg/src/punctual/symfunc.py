"""Monomial-to-elementary symmetric transitions and Chern number data.

Only degree-d identities in d variables are ever needed, so transitions are
computed by direct expansion and exact linear algebra, then cached per d.
An elementary monomial e_mu = e_{mu_1} e_{mu_2} ... is keyed by the
partition mu of its indices, e.g. (2, 1) stands for e_2*e_1.

A proper d-fold enters the model only through its Chern numbers
<m_lam(T_X), [X]> for lam a partition of d.  They can be supplied directly
in the monomial basis or converted from Chern class monomial numbers
<c_mu, [X]> via e_i -> c_i.
"""

import itertools
import re
from fractions import Fraction
from functools import lru_cache

from .combinat import canonical_partition, pad_partition, partitions_of
from .rational import format_rational, parse_rational


def _expand_e_monomial(mu, d):
    """Full expansion of e_mu in d variables: ordered exponent -> int."""
    poly = {(0,) * d: 1}
    for k in mu:
        # e_k = sum over k-subsets of the variables
        ek = {}
        for subset in itertools.combinations(range(d), k):
            e = [0] * d
            for i in subset:
                e[i] = 1
            ek[tuple(e)] = 1
        nxt = {}
        for e1, c1 in poly.items():
            for e2, c2 in ek.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                nxt[e] = nxt.get(e, 0) + c1 * c2
        poly = nxt
    return poly


@lru_cache(maxsize=None)
def _m_to_e_table(d):
    """For every lam |- d the expansion of m_lam in the e_mu, exact."""
    lams = partitions_of(d, d)
    mus = partitions_of(d, d, max_part=d)
    # e_mu = sum_lam M[mu][lam] m_lam ; the m_lam coefficient is the
    # coefficient of the sorted exponent vector in the full expansion
    mat = []
    for mu in mus:
        poly = _expand_e_monomial(mu, d)
        mat.append([Fraction(poly.get(pad_partition(lam, d), 0)) for lam in lams])
    # invert by Gauss elimination: columns of inv give m_lam = sum c_mu e_mu
    n = len(mus)
    aug = [[mat[j][i] for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    table = {}
    for i, lam in enumerate(lams):
        table[lam] = {mus[j]: aug[j][n + i] for j in range(n) if aug[j][n + i]}
    return table


def monomial_to_elementary(lam, d):
    """Expand m_lam(x_1..x_d) in elementary symmetric polynomials.

    Returns a map from elementary monomials (partitions of d, keyed by their
    index multiset) to rational coefficients.

    >>> monomial_to_elementary((1, 1), 2)
    {(2,): Fraction(1, 1)}
    >>> monomial_to_elementary((2,), 2) == {(1, 1): Fraction(1), (2,): Fraction(-2)}
    True
    """
    lam = canonical_partition(lam)
    if len(lam) > d:
        raise ValueError("partition %r has more than %d parts" % (lam, d))
    if sum(lam) != d:
        raise ValueError("need a partition of %d, got %r" % (d, lam))
    return dict(_m_to_e_table(d)[lam])


class ChernData:
    """The monomial Chern numbers <m_lam(T_X), [X]>, lam |- d."""

    __slots__ = ("d", "monomial_numbers")

    def __init__(self, d, monomial_numbers):
        d = int(d)
        if d < 1:
            raise ValueError("dimension must be positive")
        values = {}
        for lam, v in monomial_numbers.items():
            key = canonical_partition(lam)
            if sum(key) != d or len(key) > d:
                raise ValueError("key %r is not a partition of %d" % (lam, d))
            values[key] = Fraction(v)
        for lam in partitions_of(d, d):
            values.setdefault(lam, Fraction(0))
        self.d = d
        self.monomial_numbers = values

    def value(self, lam):
        return self.monomial_numbers[canonical_partition(lam)]

    def items(self):
        return [(lam, self.monomial_numbers[lam]) for lam in partitions_of(self.d, self.d)]

    def __eq__(self, other):
        if not isinstance(other, ChernData):
            return NotImplemented
        return self.d == other.d and self.monomial_numbers == other.monomial_numbers

    __hash__ = None

    def __repr__(self):
        return "ChernData(d=%d, %r)" % (self.d, self.monomial_numbers)

    def to_obj(self):
        return {
            "d": self.d,
            "monomial_numbers": [{"lambda": list(lam), "value": format_rational(v)}
                                 for lam, v in self.items()],
        }

    @classmethod
    def from_obj(cls, obj):
        values = {tuple(row["lambda"]): parse_rational(row["value"])
                  for row in obj["monomial_numbers"]}
        return cls(obj["d"], values)


def chern_data_from_classes(d, class_numbers):
    """Build ChernData from Chern class monomial numbers <c_mu, [X]>.

    class_numbers maps partitions mu of d (index multisets, e.g. (2, 1) for
    c_2 c_1) to rationals and must contain every monomial of total degree d
    that occurs in some m_lam expansion.
    """
    numbers = {canonical_partition(mu): Fraction(v)
               for mu, v in class_numbers.items()}
    values = {}
    for lam in partitions_of(d, d):
        total = Fraction(0)
        for mu, coeff in monomial_to_elementary(lam, d).items():
            if mu not in numbers:
                raise ValueError("missing Chern class number for c_%s" %
                                 "".join(str(i) for i in mu))
            total += coeff * numbers[mu]
        values[lam] = total
    return ChernData(d, values)


_CLASS_FACTOR_RE = re.compile(r"c(\d+)(?:\^(\d+))?")


def parse_chern_arg(d, text):
    """Parse command-line Chern data like "c3=4,c1c2=24" or "m21=12,m111=4".

    Keys are either monomial-basis ("m" followed by the parts of lam, one
    digit each) or Chern class monomials ("c1c2", "c1^3").  The two families
    cannot be mixed.  Monomials that are not mentioned default to zero.
    """
    entries = {}
    family = None
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise ValueError("malformed Chern entry %r, expected key=value" % piece)
        key, _, val = piece.partition("=")
        key = key.strip()
        value = parse_rational(val)
        if key.startswith("m") and key[1:].isdigit():
            kind = "m"
            lam = canonical_partition(tuple(int(ch) for ch in key[1:]))
        elif key.startswith("c"):
            kind = "c"
            if not re.fullmatch(r"(c\d+(\^\d+)?)+", key):
                raise ValueError("malformed Chern key %r" % key)
            idx = []
            for index, power in _CLASS_FACTOR_RE.findall(key):
                idx.extend([int(index)] * (int(power) if power else 1))
            lam = canonical_partition(idx)
        else:
            raise ValueError("malformed Chern key %r" % key)
        if family is None:
            family = kind
        elif family != kind:
            raise ValueError("cannot mix m- and c-style Chern keys")
        if sum(lam) != d:
            raise ValueError("Chern key %r has total degree %d, expected %d" %
                             (key, sum(lam), d))
        entries[lam] = entries.get(lam, Fraction(0)) + value
    if family == "c" or family is None:
        full = {mu: entries.get(mu, Fraction(0))
                for mu in partitions_of(d, d, max_part=d)}
        return chern_data_from_classes(d, full)
    return ChernData(d, entries)
