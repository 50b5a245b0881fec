"""Hopf axiom checks on randomly generated elements.

All checks are exact.  The corpus generator draws sparse elements with small
indices from a seeded random stream, so runs are reproducible.
"""

from fractions import Fraction

from .hopf import HopfElement, _monomial_coproduct, tensor

_COEFFS = [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2),
           Fraction(-3, 2), Fraction(2, 3), Fraction(-1, 3), Fraction(5)]


def random_element(rng, d, variant, max_cycle_degree, max_terms=3, max_m=3):
    """A sparse random element of cycle degree at most max_cycle_degree."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mon = []
        budget = rng.randint(0, max_cycle_degree)
        while budget > 0:
            if variant == "sep":
                n = rng.randint(1, budget)
                m = tuple(sorted((rng.randint(0, max_m) for _ in range(d)),
                                 reverse=True))
                mon.append((n, m))
                budget -= n
            else:
                lam = tuple(sorted((rng.randint(0, max_m) for _ in range(d)),
                                   reverse=True))
                mon.append(lam)
                budget -= 1
        key = tuple(sorted(mon))
        terms[key] = terms.get(key, Fraction(0)) + rng.choice(_COEFFS)
    return HopfElement(d, variant, "q", terms)


def _triple_left(t):
    """(coproduct ox id) applied to a TensorElement."""
    acc = {}
    for (l, r), c in t.terms.items():
        for (a, b), c2 in _monomial_coproduct(t.variant, l).items():
            key = (a, b, r)
            acc[key] = acc.get(key, Fraction(0)) + c * c2
    return {k: v for k, v in acc.items() if v}


def _triple_right(t):
    """(id ox coproduct) applied to a TensorElement."""
    acc = {}
    for (l, r), c in t.terms.items():
        for (a, b), c2 in _monomial_coproduct(t.variant, r).items():
            key = (l, a, b)
            acc[key] = acc.get(key, Fraction(0)) + c * c2
    return {k: v for k, v in acc.items() if v}


def check_coassociative(x):
    t = x.coproduct()
    return _triple_left(t) == _triple_right(t)


def check_counit(x):
    t = x.coproduct()
    return t.left_counit() == x and t.right_counit() == x


def check_cocommutative(x):
    t = x.coproduct()
    return t == t.swap()


def check_commutative(x, y):
    return x * y == y * x


def check_bialgebra(x, y):
    """coproduct(x*y) = coproduct(x) * coproduct(y)."""
    return (x * y).coproduct() == x.coproduct() * y.coproduct()


def check_antipode(x):
    """mul (S ox id) coproduct = counit * unit."""
    acc = HopfElement.zero(x.d, x.variant, x.basis)
    for (l, r), c in x.coproduct().terms.items():
        left = HopfElement(x.d, x.variant, x.basis, {l: Fraction(1)})
        right = HopfElement(x.d, x.variant, x.basis, {r: Fraction(1)})
        acc = acc + (left.antipode() * right).scaled(c)
    return acc == HopfElement.unit(x.d, x.variant, x.basis).scaled(x.counit())


def check_primitive(x):
    """coproduct(x) = x ox 1 + 1 ox x, for x in the q basis."""
    one = HopfElement.unit(x.d, x.variant, x.basis)
    return x.coproduct() == tensor(x, one) + tensor(one, x)


def run_axiom_suite(rng, dims=(1, 2, 3), variants=("sep", "nonsep"),
                    count=60, max_cycle_degree=4):
    """Run every axiom check over a corpus; returns {check name: #elements}.

    Raises AssertionError naming the failing check and element.
    """
    counts = {"coassociativity": 0, "counit": 0, "cocommutativity": 0,
              "commutativity": 0, "bialgebra": 0, "antipode": 0}
    for variant in variants:
        for d in dims:
            max_m = 3 if d == 1 else 2
            for _ in range(count):
                x = random_element(rng, d, variant, max_cycle_degree,
                                   max_m=max_m)
                y = random_element(rng, d, variant, max_cycle_degree=2,
                                   max_terms=2, max_m=2)
                for name, ok in (
                        ("coassociativity", check_coassociative(x)),
                        ("counit", check_counit(x)),
                        ("cocommutativity", check_cocommutative(x)),
                        ("commutativity", check_commutative(x, y)),
                        ("bialgebra", check_bialgebra(x, y)),
                        ("antipode", check_antipode(x))):
                    if not ok:
                        raise AssertionError("%s fails for %r (d=%d, %s)" %
                                             (name, x.terms, d, variant))
                    counts[name] += 1
    return counts
