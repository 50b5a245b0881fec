import random
from fractions import Fraction as F
from math import comb, factorial

import pytest

from punctual.hopf import HopfElement
from punctual.series import MultiSeries
from punctual.theories import (CapError, ck_theory,
                               coarse_curve_theory, dt_vertex_theory,
                               ek_theory, eval_theory, inertial_theory,
                               mult_class_theory, table_theory, theory_exp,
                               theory_from_spec, theory_log)

import oracles


def q(d, n, m):
    return HopfElement.generator(d, n, m)


def p(d, n, m):
    return HopfElement.generator(d, n, m, basis="p")


def test_ck_values():
    e = ck_theory(2, 2, 4, 6)
    for n in range(1, 5):
        for m in ((0, 0), (3, 1), (4, 4), (6, 2)):
            expected = F(1, factorial(n)) * comb(2 * n, m[0]) * comb(2 * n, m[1])
            assert e.value(n, m) == expected
    assert e.value(0, (0, 0)) == 1
    assert e.value(0, (1, 0)) == 0


def test_ck_matches_generic_class_construction():
    one = MultiSeries.one(("x",), (5,))
    x = MultiSeries.var(("x",), (5,), "x")
    generic = mult_class_theory((one + x) ** 3, 1, 4, 5)
    builtin = ck_theory(3, 1, 4, 5)
    for n in range(1, 5):
        for m in range(6):
            assert generic.value(n, (m,)) == builtin.value(n, (m,))


def test_mult_class_needs_unit():
    x = MultiSeries.var(("x",), (3,), "x")
    with pytest.raises(ValueError):
        mult_class_theory(x, 1, 3, 3)


def test_ek_values():
    e = ek_theory(2, 1, 4, 8)
    assert e.value(2, (4,)) == F(1, 2)
    assert e.value(2, (3,)) == 0
    assert e.value(3, (6,)) == F(1, 6)
    # stacky Euler class does not factor through a unit class
    e1 = ek_theory(1, 3, 3, 3)
    assert e1.value(2, (2, 2, 2)) == F(1, 2)
    assert e1.value(2, (2, 2, 1)) == 0


def test_coarse_chern_values():
    e = coarse_curve_theory(1, "chern", 3, 3)
    # prod_{i<=2} (1+iT) = 1 + 3T + 2T^2, divided by 2!
    assert e.value(2, (0,)) == F(1, 2)
    assert e.value(2, (1,)) == F(3, 2)
    assert e.value(2, (2,)) == 1
    assert e.value(2, (3,)) == 0
    e2 = coarse_curve_theory(2, "chern", 2, 4)
    # (1+T)^2 (1+2T)^2 = 1 + 6T + 13T^2 + 12T^3 + 4T^4, over 2
    assert [e2.value(2, (m,)) for m in range(5)] == \
        [F(1, 2), 3, F(13, 2), 6, 2]


def test_coarse_euler_values():
    eb = coarse_curve_theory(1, "euler", 6, 6)
    for n in range(1, 7):
        for m in range(7):
            assert eb.value(n, (m,)) == (1 if m == n else 0)
    e3 = coarse_curve_theory(3, "euler", 3, 9)
    assert e3.value(2, (6,)) == 4       # (n!)^(k-1)
    assert e3.value(3, (9,)) == 36
    assert e3.value(2, (5,)) == 0


def test_primitive_values_match_composition_oracle():
    # series-log route vs direct alternating-sum over ordered splittings
    eb = coarse_curve_theory(1, "euler", 4, 4)
    ck = ck_theory(2, 2, 3, 4)
    dt = dt_vertex_theory(3, 4)
    for e, idx in ((eb, [(n, (m,)) for n in range(1, 5) for m in range(5)]),
                   (ck, [(2, (2, 1)), (3, (4, 2)), (1, (3, 0))]),
                   (dt, [(2, (2, 2, 2)), (2, (3, 2, 1)), (3, (3, 3, 3))])):
        for n, m in idx:
            assert e.primitive_value(n, m) == oracles.primitive_from_table(
                e.value, n, m)


def test_pairing_on_p_basis_matches_conversion():
    # <e, p_{n,m}> computed as a primitive value must agree with converting
    # p_{n,m} to the q basis and pairing term by term
    e = ck_theory(1, 2, 3, 4)
    for n, m in ((1, (2, 1)), (2, (2, 2)), (3, (3, 1))):
        direct = e.pair(p(2, n, m))
        via_q = e.pair(p(2, n, m).to_q())
        assert direct == via_q == e.primitive_value(n, m)


def test_log_ebar():
    lg = theory_log(coarse_curve_theory(1, "euler", 6, 6))
    for n in range(1, 7):
        assert lg.value(n, (n,)) == F(1, n)
        assert lg.value(n, (n - 1,)) == 0
    # primitive theories kill products and the unit
    x = q(1, 1, (1,)) * q(1, 1, (1,))
    assert lg.pair(x) == 0
    assert lg.pair(HopfElement.unit(1)) == 0


def test_log_stacky_euler():
    lg = theory_log(ek_theory(1, 1, 5, 5))
    assert lg.value(1, (1,)) == 1
    for n in range(2, 6):
        assert lg.value(n, (n,)) == 0


def test_exp_log_roundtrip():
    e = ck_theory(2, 1, 4, 4)
    back = theory_exp(theory_log(e))
    for n in range(1, 5):
        for m in range(5):
            assert back.value(n, (m,)) == e.value(n, (m,))


def test_pairing_rules():
    eb = coarse_curve_theory(1, "euler", 3, 3)
    combo = q(1, 2, (2,)) - q(1, 1, (0,)) * q(1, 1, (2,)) \
        - F(1, 2) * q(1, 1, (1,)) * q(1, 1, (1,))
    assert eval_theory(eb, combo) == F(1, 2)
    assert eval_theory(eb, HopfElement.unit(1)) == 1
    assert eval_theory(eb, p(1, 2, (2,))) == F(1, 2)


def test_inertial_primitives():
    u = MultiSeries.var(("U",), (2,), "U")
    P = 1 + 2 * u + F(1, 3) * u * u
    e = inertial_theory(P, 2, 4, 6)
    assert e.primitive_value(2, (2, 1)) == F(1, 2) * 2      # t1 t0 / 2
    assert e.primitive_value(2, (3, 2)) == F(1, 2) * F(1, 3) * 2
    assert e.primitive_value(2, (0, 1)) == 0                # m_i < n-1
    assert e.primitive_value(3, (2, 2)) == F(1, 3)          # t0 t0 / 3
    assert e.primitive_value(2, (5, 2)) == 0                # beyond deg P
    with pytest.raises(ValueError):
        inertial_theory(u, 1, 2, 2)


def test_dt_vertex_frozen_values():
    dt = dt_vertex_theory(6, 8)
    assert dt.value(1, (1, 1, 1)) == 2
    assert dt.value(1, (2, 1, 0)) == 1
    assert dt.value(1, (3, 0, 0)) == 0
    for n in range(1, 7):
        a_n = oracles.vertex_log_coeff(n)
        assert dt.primitive_value(n, (n, n, n)) == -2 * a_n
        assert dt.primitive_value(
            n, tuple(sorted((n + 1, n, n - 1), reverse=True))) == -a_n
        # no support off the diagonal band
        assert dt.primitive_value(n, (n + 2, n, n)) == 0


def test_dt_needs_room():
    with pytest.raises(ValueError):
        dt_vertex_theory(6, 3)


def test_cap_errors():
    e = ck_theory(1, 1, 3, 3)
    with pytest.raises(CapError):
        e.value(4, (0,))
    with pytest.raises(CapError):
        e.value(1, (4,))
    with pytest.raises(ValueError):
        e.value(1, (0, 0))


def test_nonsep_theories():
    e = ck_theory(1, 2, 3, 2, variant="nonsep")
    assert e.nonsep_value((1, 1)) == 1
    assert e.nonsep_value((2, 0)) == 0
    assert e.nonsep_value((0, 0)) == 1
    x = HopfElement.nonsep_generator(2, (1, 1))
    assert eval_theory(e, x * x) == 1
    lg = theory_log(e)
    assert lg.pair(x * x) == 0
    assert lg.pair(x) == 1
    with pytest.raises(Exception):
        e.value(1, (1, 1))


def test_table_theory_and_spec():
    e = table_theory([((1, (1,)), F(2)), ((2, (2,)), F(5, 3))], 1, 3, 3)
    assert e.value(1, (1,)) == 2
    assert e.value(2, (2,)) == F(5, 3)
    assert e.value(3, (3,)) == 0

    spec = {"table": [{"n": 1, "m": [1], "value": "2/1"},
                      {"n": 2, "m": [2], "value": "5/3"}]}
    e2 = theory_from_spec(spec, 1, 3, 3)
    assert e2.value(2, (2,)) == F(5, 3)

    e3 = theory_from_spec({"builtin": "ck", "k": 2}, 1, 3, 3)
    assert e3.value(1, (1,)) == 2
    e4 = theory_from_spec({"builtin": "coarse-ek", "k": 1}, 1, 3, 3)
    assert e4.value(2, (2,)) == 1
    e5 = theory_from_spec({"mult_class": ["1", "1", "1/2"]}, 1, 3, 4)
    assert e5.value(1, (2,)) == F(1, 2)
    with pytest.raises(ValueError):
        theory_from_spec({"builtin": "coarse-ck"}, 2, 3, 3)
    with pytest.raises(ValueError):
        theory_from_spec({"builtin": "dt"}, 1, 3, 3)
    with pytest.raises(ValueError):
        theory_from_spec({"builtin": "unknown"}, 1, 3, 3)


def test_context_checks():
    e = ck_theory(1, 2, 3, 3)
    with pytest.raises(Exception):
        eval_theory(e, q(1, 1, (1,)))          # wrong d
    nonsep = HopfElement.nonsep_generator(2, (1, 1))
    with pytest.raises(Exception):
        eval_theory(e, nonsep)                  # wrong variant


def test_random_table_exp_log_consistency():
    # a lazily derived primitive table always exponentiates back to the
    # generator table it came from
    rng = random.Random(41)
    entries = []
    for n in range(1, 4):
        for m in range(4):
            v = F(rng.randint(-3, 3), rng.randint(1, 3))
            if v:
                entries.append(((n, (m,)), v))
    e = table_theory(entries, 1, 3, 3)
    back = theory_exp(theory_log(e))
    for n in range(1, 4):
        for m in range(4):
            assert back.value(n, (m,)) == e.value(n, (m,))
