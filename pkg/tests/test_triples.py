from fractions import Fraction
from math import gcd, isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frozen_tables import RECIPROCAL_METHOD
from plimpton.procedures import enumerate_ratios, named_procedure
from plimpton.sexagesimal import Sexagesimal, is_regular, parse_sexagesimal, regular_numbers
from plimpton.triples import (
    STRATEGIES,
    Equivalence,
    GeneratingPair,
    Triple,
    column_one,
    greek_odd_triple,
    integer_view,
    is_admissible,
    l_from_squares,
    next_multiplier,
    pq_triple,
    pq_vs_r_equivalence,
    r_method,
    shared_factor,
)

S = parse_sexagesimal


def test_pair_validation():
    GeneratingPair(12, 5)
    for p, q in [(5, 5), (3, 7), (14, 5), (12, 0)]:
        with pytest.raises(ValueError):
            GeneratingPair(p, q)
    with pytest.raises(TypeError):
        GeneratingPair(2.0, 1)


def test_triple_validation():
    assert Triple(3, 4, 5).is_primitive
    assert Triple(45, 60, 75).primitive() == Triple(3, 4, 5)
    with pytest.raises(ValueError):
        Triple(3, 4, 6)
    with pytest.raises(ValueError):
        Triple(0, 1, 1)


def test_greek_odd():
    assert greek_odd_triple(3) == Triple(3, 4, 5)
    assert greek_odd_triple(7) == Triple(7, 24, 25)
    with pytest.raises(ValueError):
        greek_odd_triple(4)


def test_pq_and_column_one():
    t = pq_triple(GeneratingPair(12, 5))
    assert t == Triple(119, 120, 169)
    assert str(column_one(t)) == "1;59 00 15"
    assert str(column_one(t, leading_one=False)) == "0;59 00 15"
    with pytest.raises(ValueError):
        column_one(Triple(20, 21, 29))


def test_admissible_is_ratio_below_one_plus_root_two():
    for r in [Fraction(12, 5), Fraction(9, 5), Fraction(2)]:
        assert is_admissible(r)
    assert not is_admissible(Fraction(5, 2))
    assert not is_admissible(Fraction(1))
    assert is_admissible(GeneratingPair(9, 4))


def test_line_five_trace():
    t = r_method(Fraction(9, 4))
    assert (t.x, t.y) == (S("0;54 10").value, S("1;20 50").value)
    assert t.steps == (6, 12)
    assert [str(Sexagesimal.from_fraction(a)) for a, _ in t.pairs] == ["0;54 10", "5;25", "1 05"]
    assert t.result == Triple(65, 72, 97)
    assert t.multiplier_product == 72


def test_line_fifteen_halving_trace():
    t = r_method(Fraction(9, 5), "halving")
    assert t.steps == (3, 30, 30)
    assert t.final_pair == (28 * 60, 53 * 60)
    assert t.result == Triple(28, 45, 53)
    assert r_method(Fraction(9, 5)).steps == (3, 15)


def test_line_two_strategies():
    assert r_method(Fraction(64, 27), "robson").steps == (2, 12, 12, 12)
    mod = r_method(Fraction(64, 27), "modified")
    assert mod.steps == (Fraction(1, 30), Fraction(1, 5), Fraction(1, 5), Fraction(1, 5))
    assert mod.result == Triple(3367, 3456, 4825)


def test_tablet_form_of_ratio_two():
    t = r_method(2)
    assert t.result == Triple(3, 4, 5)
    assert t.tablet_form == Triple(45, 60, 75)


@pytest.mark.parametrize("row", RECIPROCAL_METHOD, ids=lambda r: f"{r[0]}/{r[1]}")
def test_published_x_y(row):
    p, q, r, rbar, x, y = (S(v).value for v in row)
    t = r_method(Fraction(p, q))
    assert (t.r, t.rbar, t.x, t.y) == (r, rbar, x, y)


def test_r_method_rejects():
    for r in [Fraction(7, 3), Fraction(1), Fraction(5, 2)]:
        with pytest.raises(ValueError):
            r_method(r)
    with pytest.raises(ValueError):
        next_multiplier(Fraction(1), Fraction(2), "greedy")


def test_integer_view_and_shared_factor():
    assert integer_view(S("0;54 10").value, S("1;20 50").value) == (3250, 4850, 2)
    assert integer_view(Fraction(60 * 28), Fraction(60 * 53)) == (28, 53, -1)
    assert shared_factor(S("5;25").value, S("8;05").value) == 5
    assert shared_factor(Fraction(65), Fraction(97)) == 1


def test_l_from_squares():
    assert l_from_squares(161, 289) == 240
    assert l_from_squares(3, 6) is None
    assert l_from_squares(5, 3) is None


TABLET_RATIOS = enumerate_ratios(named_procedure("price"))


@pytest.mark.parametrize("strategy", sorted(STRATEGIES))
def test_every_strategy_reaches_the_primitive_triple(strategy):
    for r in TABLET_RATIOS:
        t = r_method(r, strategy)
        assert t.result.is_primitive
        w, l, d = t.result
        assert Fraction(w, l) == t.x and Fraction(d, l) == t.y


@given(st.sampled_from(TABLET_RATIOS), st.integers(1, 5))
def test_scaling_x_y_by_powers_of_sixty(r, k):
    t = r_method(r)
    a, b, _ = integer_view(t.x, t.y)
    a2, b2, _ = integer_view(t.x * 60**k, t.y * 60**k)
    assert (a, b) == (a2, b2)


# -- oracle: brute force over all primitive triples --------------------------------


def _brute_force_primitive(dmax):
    out = set()
    for d in range(5, dmax):
        for w in range(1, d):
            l2 = d * d - w * w
            l = isqrt(l2)
            if l * l == l2 and w < l and gcd(w, l) == 1:
                out.add(Triple(w, l, d))
    return out


def test_oracle_primitive_triples_with_regular_long_side():
    dmax = 2000
    brute = {t for t in _brute_force_primitive(dmax) if is_regular(t.l)}
    generated = set()
    pool = regular_numbers(90)
    for p in pool:
        for q in pool:
            r = Fraction(p, q)
            if r.denominator == q and is_admissible(r):
                t = r_method(r).result
                if t.d < dmax:
                    generated.add(t)
    assert brute == generated
    assert len(brute) == 27


def test_oracle_pq_against_r_up_to_factor_two():
    pool = regular_numbers(200)
    checked = 0
    for p in pool:
        for q in pool:
            if not p > q or gcd(p, q) != 1:
                continue
            pair = GeneratingPair(p, q)
            pq = pq_triple(pair)
            both_odd = p % 2 == 1 and q % 2 == 1
            assert pq.common_factor == (2 if both_odd else 1)
            if is_admissible(pair):
                eq = pq_vs_r_equivalence(pair)
                assert eq is (Equivalence.PQ_IS_DOUBLE if both_odd else Equivalence.IDENTICAL)
                checked += 1
    assert checked == 56


def test_equivalence_needs_reduced_pair():
    with pytest.raises(ValueError):
        pq_vs_r_equivalence(GeneratingPair(18, 10))
