from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from beauville import classifier, closed_forms, oracle
from beauville.closed_forms import (
    asymptotic_ratio,
    density,
    fermat_genus,
    theta,
    theta1,
    theta2,
    theta3,
    theta4,
    theta_prime,
    theta_prime_power,
)
from beauville.modular import LevelError, is_prime, is_valid_level

PRIMES = [p for p in range(5, 200) if is_prime(p)]


@pytest.mark.parametrize("n, expected", [(5, 24), (7, 360), (11, 5040), (25, 15000), (35, 8640)])
def test_theta1(n, expected):
    assert theta1(n) == expected


@pytest.mark.parametrize(
    "f, args, expected",
    [
        (theta2, (5, 1), 12),
        (theta2, (7, 1), 18),
        (theta2, (5, 2), 300),
        (theta3, (5, 1), 0),
        (theta3, (7, 1), 8),
        (theta3, (11, 1), 48),
        (theta4, (5, 1), 0),
        (theta4, (7, 1), 2),
        (theta4, (13, 1), 2),
        (theta4, (13, 3), 2),
    ],
)
def test_class_terms(f, args, expected):
    assert f(*args) == expected


@pytest.mark.parametrize("n, expected", [(5, 1), (7, 7), (11, 79), (13, 178), (25, 225), (35, 132)])
def test_theta(n, expected):
    assert theta(n).theta == expected


def test_theta_breakdown_n7():
    t = theta(7)
    assert (t.theta1, t.theta2_prod, t.theta3_prod, t.theta4_prod) == (360, 18, 8, 2)
    assert t.bracket == 504 == 72 * 7
    assert t.as_dict()["theta"] == 7


@pytest.mark.parametrize("p, e, expected", [(5, 1, 1), (7, 1, 7), (11, 1, 79), (13, 1, 178), (5, 2, 225)])
def test_theta_prime_power(p, e, expected):
    assert theta_prime_power(p, e) == expected


def test_polynomials_match_product_form():
    for p in PRIMES:
        assert theta_prime(p) == theta_prime_power(p, 1)
        for e in (1, 2, 3):
            assert theta_prime_power(p, e) == theta(p**e).theta


def test_invalid_arguments():
    with pytest.raises(LevelError):
        theta(9)
    with pytest.raises(ValueError):
        theta2(9, 1)
    with pytest.raises(ValueError):
        theta3(3, 1)
    with pytest.raises(ValueError):
        theta_prime_power(7, 0)
    with pytest.raises(ValueError):
        fermat_genus(0)


# the full sweep to 55 and {65, 77, 91} runs in the acceptance module
@pytest.mark.parametrize("n", [n for n in range(5, 32) if is_valid_level(n)] + [35, 49, 55, 65])
def test_formula_matches_enumeration(n):
    t = theta(n).theta
    assert t == classifier.burnside_count(n)
    assert t == oracle.naive_orbit_count(n)


def test_bounds_and_divisibility():
    for n in range(5, 10_001):
        if not is_valid_level(n):
            continue
        t = theta(n)
        assert t.bracket == 72 * t.theta
        assert t.theta1 <= 72 * t.theta <= 12 * t.theta1


def test_asymptotic_ratio():
    assert asymptotic_ratio(5) == (72, 625)
    ratios = [Fraction(*asymptotic_ratio(p)) for p in PRIMES if p >= 97]
    assert all(Fraction(85, 100) <= r < 1 for r in ratios)
    assert ratios == sorted(ratios)
    assert density(5) == (24, 625)


def test_fermat_genus():
    assert [fermat_genus(n) for n in (1, 5, 7)] == [0, 6, 15]
    assert all(fermat_genus(n) > 5 for n in range(5, 200) if is_valid_level(n))


@given(st.sampled_from(PRIMES[:20]), st.sampled_from(PRIMES[:20]))
def test_theta1_multiplicative(p, q):
    if p != q:
        assert theta1(p * q) == theta1(p) * theta1(q)
        assert closed_forms.theta(p * q).theta3_prod == theta3(p, 1) * theta3(q, 1)
