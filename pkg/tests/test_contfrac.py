from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import nonzero_rationals, rationals
from hankelcf.catalog import patterns
from hankelcf.contfrac import (CFPattern, GeneralizedCF, JFraction, X, chop, chop_chain,
                               contract_even, contract_odd, equivalence_scale, evaluate, haircut,
                               is_certified, normalize)
from hankelcf.errors import (AlphaDegenerate, DepthInsufficient, DivisionFails, InsufficientLevels,
                             ZeroFactor)
from hankelcf.exact import Poly
from hankelcf.series import TruncatedSeries

ORDER = 15
EULER = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]

# positive valuation keeps every tail a power series with unit constant term
numerators = st.builds(lambda c, e: c * X ** e, nonzero_rationals, st.integers(1, 2))
denominators = st.builds(lambda u, w: 1 + u * X + w * X ** 2, rationals, rationals)


@st.composite
def random_cfs(draw, min_depth=4, max_depth=8, unit_b=()):
    depth = draw(st.integers(min_depth, max_depth))
    levels = []
    for j in range(1, depth + 1):
        b = 1 if j in unit_b else draw(denominators)
        a = draw(nonzero_rationals) if j == 1 else draw(numerators)
        levels.append((a, b))
    return GeneralizedCF(draw(rationals), levels)


def value(cf, depth=None):
    return evaluate(cf, ORDER, depth)


@given(random_cfs())
def test_even_contraction_keeps_even_approximant(cf):
    ev = contract_even(cf)
    assert value(ev) == value(cf, 2 * (cf.depth // 2))


@given(random_cfs(unit_b={1}))
def test_odd_contraction_keeps_odd_approximant(cf):
    od = contract_odd(cf)
    assert value(od) == value(cf, 2 * ((cf.depth - 1) // 2) + 1)


@given(random_cfs(unit_b={1, 2, 3}), st.integers(1, 3))
def test_chop_preserves_value(cf, p):
    assert value(chop(cf, p)) == value(cf)


@given(random_cfs(), nonzero_rationals, st.integers(1, 3))
def test_haircut_preserves_value(cf, alpha, p):
    # alpha = a_p(0)/b_p(0) leaves a denominator without constant term
    assume(cf.a(p)[0] != alpha * cf.b(p)[0])
    assert value(haircut(cf, alpha, p)) == value(cf)


@given(random_cfs(), st.lists(nonzero_rationals, min_size=1, max_size=8))
def test_equivalence_preserves_value(cf, factors):
    assert value(equivalence_scale(cf, factors)) == value(cf)


def test_contractions_on_twenty_random_cfs():
    import random
    rng = random.Random(7)

    def rq():
        return Fraction(rng.randint(-4, 4), rng.randint(1, 3))

    for _ in range(20):
        depth = rng.randint(5, 8)
        levels = [((rq() or 1) * X ** (rng.randint(1, 2) if j > 1 else 0), 1 + rq() * X if j > 3 else 1)
                  for j in range(1, depth + 1)]
        cf = GeneralizedCF(rq(), levels)
        full = value(cf)
        assert value(chop(cf, 2)) == full
        if cf.a(1)[0] != 2:
            assert value(haircut(cf, 2, 1)) == full
        assert value(equivalence_scale(cf, [2, Fraction(1, 3)])) == full
        assert value(contract_even(cf)) == value(cf, 2 * (depth // 2))
        assert value(contract_odd(cf)) == value(cf, 2 * ((depth - 1) // 2) + 1)


def test_evaluate_examples():
    assert list(patterns.one_plus().evaluate(9, certify=True).coeffs) == EULER
    assert GeneralizedCF(1, ()).evaluate(5) == TruncatedSeries.one(5)
    sec = patterns.secant_j().evaluate(8, certify=True)
    assert list(sec.coeffs) == [1, 0, 1, 0, 5, 0, 61, 0, 1385]


def test_certification_detects_shallow_depth():
    pat = patterns.f7()
    with pytest.raises(DepthInsufficient):
        evaluate(pat, 12, depth=2, certify=True)
    assert is_certified(pat, 12, pat.depth_for(12))


def test_even_contraction_formula_for_unit_denominators():
    a = [Fraction(1), -2 * X, -3 * X, -5 * X, -7 * X]
    cf = GeneralizedCF(0, [(ai, 1) for ai in a])
    ev = contract_even(cf)
    assert ev.a(1) == a[0] and ev.b(1) == 1 + a[1]
    assert ev.a(2) == -a[1] * a[2] and ev.b(2) == 1 + a[2] + a[3]


def test_odd_contraction_formula_for_unit_denominators():
    a = [Fraction(1), -2 * X, -3 * X, -5 * X, -7 * X]
    od = contract_odd(GeneralizedCF(0, [(ai, 1) for ai in a]))
    assert od.b0 == a[0]
    assert od.a(1) == -a[0] * a[1] and od.b(1) == 1 + a[1] + a[2]
    assert od.a(2) == -a[2] * a[3] and od.b(2) == 1 + a[3] + a[4]


def test_super1_even_contraction_gives_level_two_of_the_h_fraction():
    ev = contract_even(patterns.super1(), depth=8)
    assert ev.a(2) == -X ** 3 and ev.b(2) == 1 - 2 * X - 4 * X ** 2


def test_first_chop_of_super1():
    c = chop(patterns.super1(), 1, depth=8)
    assert c.b0 == 1
    assert (c.a(1), c.b(1)) == (X, 1 - X)
    assert (c.a(2), c.b(2)) == (-X ** 2, 1 - 2 * X)


def test_chop_chain_reaches_the_one_plus_fraction():
    out = chop_chain(chop(patterns.super1(), 1, depth=40), 2)
    want = patterns.one_plus().materialize(10)
    assert out.b0 == want.b0 and out.levels[:10] == want.levels


def test_haircut_of_f7():
    h = normalize(haircut(patterns.f7(), 1, 1, depth=6))
    assert h.b0 == 1
    assert [(h.a(j), h.b(j)) for j in (1, 2, 3)] == [(X, 1 - X), (-X, 1 - X), (-3 * X ** 2, 1 - 3 * X)]


def test_haircut_degenerate_alpha():
    cf = GeneralizedCF(0, [(2, 1), (-X, 1)])
    with pytest.raises(AlphaDegenerate):
        haircut(cf, 2)


def test_lambert_equivalence_gives_f12_shape():
    lam = patterns.lambert_tan().materialize(8)
    scaled = equivalence_scale(lam, [Fraction(1, 2 * j - 1) for j in range(1, 9)]).divide_by_x()
    assert scaled.levels == patterns.f12().materialize(8).levels
    assert equivalence_scale(lam, [1] * 8) == lam
    assert value(scaled.multiply_by_x()) == value(lam)
    with pytest.raises(ZeroFactor):
        equivalence_scale(lam, [1, 0])


def test_division_failures_and_shallow_inputs():
    with pytest.raises(DivisionFails):
        contract_odd(patterns.one_plus(), depth=5)
    with pytest.raises(InsufficientLevels):
        chop(GeneralizedCF(0, [(1, 1)]), 1)
    with pytest.raises(InsufficientLevels):
        contract_even(GeneralizedCF(0, [(1, 1)]))
    with pytest.raises(ValueError):
        GeneralizedCF(0, [(0, 1)])


def test_pattern_index_convention():
    pat = CFPattern(lambda j: 1 / Fraction(j - 3), lambda j: 1, a_first={1: 5, 3: 7})
    assert pat.a(1) == 5 and pat.a(3) == 7 and pat.a(2) == -1


def test_power_substitutions_round_trip():
    cf = patterns.f1(2).materialize(6)
    assert cf.contract_power(2).compose_power(2) == cf


def test_json_round_trip():
    cf = patterns.f10().materialize(5)
    assert GeneralizedCF.from_json(cf.to_json()) == cf


def test_jfraction():
    catalan = JFraction([1] * 8, [-1] + [-2] * 7)
    assert list(catalan.evaluate(6).coeffs) == [1, 1, 2, 5, 14, 42, 132]
