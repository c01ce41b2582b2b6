"""One test per acceptance criterion; exact equality throughout, each under its time limit."""
import random
from fractions import Fraction
from math import factorial

from acceptance_log import criterion
from published import EULER_FIRST, Q_EULER_FIRST, Q_SPECIALIZATIONS, WEIGHTS_S3, q_poly

from hankelcf.catalog import DERIVATIONS, ENTRIES, verify_derivation, verify_fraction, verify_hankel
from hankelcf.catalog import patterns
from hankelcf.catalog.determinants import CLOSED_FORMS
from hankelcf.contfrac import GeneralizedCF, X, chop, contract_even, contract_odd, equivalence_scale, haircut
from hankelcf.euler import (en_neg1_closed, en_neg1_recurrence, euler_numbers, euler_ogf,
                            neg1_hankel_identities, q_euler, verify_neg1_ode)
from hankelcf.hankel import cofactor_det, det, hankel_sequence
from hankelcf.hfrac import evaluate_super, expand, hankel_profile
from hankelcf.perms import verify_exp_cf, verify_flajolet_cf, weight_sum, weights
from hankelcf.series import TruncatedSeries, named_series


def test_criterion_1_euler_numbers():
    with criterion(1, "Euler recurrence vs tan+sec and the first-values table", 1):
        E = euler_numbers(30)
        ts = named_series("tan", 30) + named_series("sec", 30)
        assert E == [ts[n] * factorial(n) for n in range(31)]
        assert E[:10] == EULER_FIRST


def test_criterion_2_hankel_fraction_of_euler():
    with criterion(2, "H-fraction of sum E_n x^n: 12 stated levels and round trip", 5):
        f = euler_ogf(40)
        sf = expand(f, 2)
        got = sf.to_cf()
        want = patterns.thm1_1().materialize(12)
        assert got.b0 == want.b0
        assert got.levels[:12] == want.levels
        top = sf.certified_order
        assert top >= 30
        assert evaluate_super(sf, top).agrees_with(f, top)


def test_criterion_3_euler_hankel_determinants():
    with criterion(3, "Hankel determinants of E_n for n <= 16, closed form and profile", 30):
        oracle = hankel_sequence(euler_numbers(30), 16)
        closed = CLOSED_FORMS["Thm1.2"]
        assert oracle == [closed(n) for n in range(17)]
        assert all(oracle[n] == 0 for n in (2, 6, 10, 14))
        profile = hankel_profile(expand(euler_ogf(40), 2))
        assert [profile.determinant(n) for n in range(17)] == oracle


REQUIRED_CHAINS = [
    "F1->F2", "F1->F3", "F4->F5", "F4->F6", "Eq22->F7", "F7->Enp2_xx", "F1->F8",
    "Enp2_notsuper1->Enp2_xx", "Enp2_notsuper1->F10", "f13->F13", "f17->F16", "f17->F17",
    "f18->F18", "f18->F19", "f19->F20", "f22->F23", "f23->F24", "Eq21->Thm1.1", "Eq21->Eq22",
]
REQUIRED_FRACTIONS = ["Eq3", "Eq4", "Eq21", "Eq22", "Eq23"] + [f"F{i}" for i in range(1, 25)]
REQUIRED_DETERMINANTS = [f"H{i}" for i in range(1, 25)]


def test_criterion_4_catalog():
    with criterion(4, "catalog fractions, determinants and derivation chains", 300):
        failed = []
        for id_ in REQUIRED_FRACTIONS:
            rep = verify_fraction(id_, 30)
            if not rep.passed:
                failed.append(rep.to_dict())
        for id_ in REQUIRED_DETERMINANTS:
            rep = verify_hankel(id_, 8)
            if not rep.passed:
                failed.append(rep.to_dict())
        assert set(REQUIRED_CHAINS) <= set(DERIVATIONS)
        for id_ in sorted(DERIVATIONS):
            rep = verify_derivation(id_)
            if not rep.passed:
                failed.append(rep.to_dict())
        for id_ in ("F1", "F2", "F3", "F8", "H1", "H2", "H3", "H8"):
            assert ENTRIES[id_].r_values == (1, 2, 3, 4)
        assert failed == []


def test_criterion_5_weighted_permutation_sums():
    with criterion(5, "weighted permutation sums and the S_3 weight table", 30):
        E = euler_numbers(9)
        for n in range(1, 9):
            assert weight_sum(n, "W2") == E[n]
            assert weight_sum(n, "W3") == E[n]
            assert weight_sum(n, "W4") == E[n]
            if n % 2 == 0:
                assert weight_sum(n, "W1") == 0
        for n in (1, 3, 5, 7, 9):
            assert weight_sum(n, "W1") == E[n]
        for sigma, row in WEIGHTS_S3.items():
            w = weights(sigma)
            assert (w["W1"], w["W2"], w["W3"], w["W4"]) == row


def test_criterion_6_statistic_fractions():
    with criterion(6, "ordinary and exponential statistic fractions at 5 random points", 120):
        rng = random.Random(2024)
        for _ in range(5):
            u = [Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(4)]
            assert verify_flajolet_cf(8, *u), u
            assert verify_exp_cf(8, *u), u


def test_criterion_7_q_analogs():
    with criterion(7, "q-Euler polynomials, q = -1 three ways, ODE, closing determinants", 60):
        values = q_euler(9)
        for n, coeffs in enumerate(Q_EULER_FIRST):
            assert values[n] == q_poly(coeffs)
        for q, row in Q_SPECIALIZATIONS.items():
            assert [v.at(q) for v in values] == row
        closed = [en_neg1_closed(n) for n in range(41)]
        assert en_neg1_recurrence(39) == closed[1:]
        assert q_euler(40, -1) == closed
        assert verify_neg1_ode(30)
        assert neg1_hankel_identities(7)


def _random_series(rng, order):
    return TruncatedSeries([Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(order + 1)],
                           order)


def _random_cf(rng):
    def q():
        return Fraction(rng.randint(-4, 4) or 1, rng.randint(1, 3))
    depth = rng.randint(5, 8)
    levels = [(q() * X ** (0 if j == 1 else rng.randint(1, 2)), 1 if j <= 3 else 1 + q() * X)
              for j in range(1, depth + 1)]
    return GeneralizedCF(q(), levels)


def test_criterion_8_property_suites():
    with criterion(8, "round trip, uniqueness, contractions and determinant oracle", 120):
        rng = random.Random(8)
        for i in range(50):
            delta = 1 + i % 3
            f = _random_series(rng, 24)
            sf = expand(f, delta)
            top = sf.certified_order
            value = evaluate_super(sf, top)
            assert value.agrees_with(f, top)
            again = expand(value, delta)
            assert again.levels[:len(sf.levels) - 1] == sf.levels[:-1]

        order = 15
        for _ in range(20):
            cf = _random_cf(rng)
            full = cf.evaluate(order)
            assert chop(cf, 2).evaluate(order) == full
            assert equivalence_scale(cf, [3, Fraction(-1, 2), 5]).evaluate(order) == full
            if cf.a(1)[0] != 2:
                assert haircut(cf, 2, 1).evaluate(order) == full
            L = cf.depth
            assert contract_even(cf).evaluate(order) == cf.evaluate(order, 2 * (L // 2))
            assert contract_odd(cf).evaluate(order) == cf.evaluate(order, 2 * ((L - 1) // 2) + 1)

        for _ in range(200):
            n = rng.randint(1, 5)
            m = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
            assert det(m) == cofactor_det(m)
