"""Tests for scalar.py: Laurent polynomials, Q(q) fractions, quantum integers."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from qlittlewood.combinatorics import multisets
from qlittlewood.scalar import (
    ONE,
    Q,
    Q_DIFF,
    ZERO,
    LaurentPoly,
    PoleError,
    ScalarError,
    ScalarQ,
    clear_denominators,
    evaluate_at_q,
    multiset_multiplicity,
    q_factorial,
    q_int,
    q_int_unbalanced,
    signed_q_int,
    sum_scalars,
)
from tests.conftest import Q_INV, poly

# === LaurentPoly ===


def test_laurent_str_orders_by_descending_exponent() -> None:
    """Terms print from the highest power of q down, with signs folded in."""
    p = LaurentPoly({-2: 1, 0: 1, 2: 1})
    assert str(p) == "q^2 + 1 + q^-2"
    assert str(LaurentPoly({1: 1, -1: -1})) == "q - q^-1"
    assert str(LaurentPoly()) == "0"


def test_laurent_drops_zero_coefficients() -> None:
    """Zero coefficients never appear in the stored terms."""
    p = LaurentPoly({0: 1, 3: 0})
    assert dict(p.terms) == {0: 1}
    assert p == 1


def test_laurent_rejects_float_coefficients() -> None:
    """Only exact coefficients are accepted."""
    with pytest.raises(ScalarError, match="int or Fraction"):
        LaurentPoly({0: 0.5})  # type: ignore[dict-item]


def test_laurent_negative_power_has_pole_at_zero() -> None:
    """Evaluating a negative power at q=0 raises PoleError."""
    with pytest.raises(PoleError):
        LaurentPoly({-1: 1}).evaluate(0)


# === ScalarQ canonical form ===


def test_fraction_cancels_common_factor() -> None:
    """(q^-1 + q) / (q^2 + 1) reduces to q^-1."""
    value = ScalarQ.fraction(LaurentPoly({-1: 1, 1: 1}), LaurentPoly({0: 1, 2: 1}))
    assert value == Q_INV
    assert value.is_laurent()


def test_inverse_of_quantum_two() -> None:
    """1/[2] is stored as q/(q^2 + 1) with a monic denominator."""
    inv = q_int(2).inverse()
    assert inv.numerator == LaurentPoly({1: 1})
    assert inv.denominator == LaurentPoly({0: 1, 2: 1})
    assert inv * q_int(2) == ONE


def test_denominator_is_made_monic() -> None:
    """A constant factor in the denominator moves into the numerator."""
    value = ScalarQ.fraction(LaurentPoly({0: 1}), LaurentPoly({0: 2, 1: 2}))
    assert value.denominator == LaurentPoly({0: 1, 1: 1})
    assert value.numerator == LaurentPoly({0: Fraction(1, 2)})


def test_equal_values_hash_equal() -> None:
    """Constants hash like the ints they equal."""
    assert ScalarQ.of(3) == 3
    assert hash(ScalarQ.of(3)) == hash(3)
    assert hash(Q * Q_INV) == hash(ONE)


def test_division_by_zero_raises() -> None:
    """Dividing by zero and inverting zero both raise ZeroDivisionError."""
    with pytest.raises(ZeroDivisionError):
        _ = ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_arithmetic_with_plain_ints() -> None:
    """Ints mix with scalars on either side."""
    assert 1 + Q == Q + 1
    assert 2 * Q == Q + Q
    assert 1 - Q == -(Q - 1)
    assert (Q**-2) * Q**2 == ONE


def test_str_of_fraction() -> None:
    """A proper fraction prints as num/(den)."""
    assert str(q_int(2).inverse()) == "q/(q^2 + 1)"
    assert str(Q_DIFF) == "q - q^-1"


# === evaluation ===


@pytest.mark.parametrize(
    ("value", "point", "expected"),
    [
        (q_int(3), 1, Fraction(3)),
        (q_int(3), 2, Fraction(21, 4)),
        (Q_DIFF, 1, Fraction(0)),
        (q_int(2).inverse(), 1, Fraction(1, 2)),
    ],
)
def test_evaluate_at_q(value: ScalarQ, point: int, expected: Fraction) -> None:
    """Exact rational evaluation."""
    assert evaluate_at_q(value, point) == expected


def test_evaluate_at_pole_raises() -> None:
    """1/(q - q^-1) has a pole at q=1."""
    with pytest.raises(PoleError, match="pole"):
        Q_DIFF.inverse().evaluate(1)


# === JSON ===


def test_json_form_is_exponent_string_pairs() -> None:
    """Coefficients serialize as exact rational strings."""
    assert q_int(2).inverse().to_json() == {"num": [[1, "1"]], "den": [[0, "1"], [2, "1"]]}


def test_from_json_recanonicalizes() -> None:
    """A non-reduced payload comes back in canonical form."""
    data = {"num": [[-1, "1"], [1, "1"]], "den": [[0, "1"], [2, "1"]]}
    assert ScalarQ.from_json(data) == Q_INV


@pytest.mark.parametrize(
    "data",
    [
        {"num": [[0, "1"]]},
        {"num": [[0, "x"]], "den": [[0, "1"]]},
        {"num": [[0, "1"]], "den": []},
        [1, 2],
    ],
)
def test_from_json_malformed_raises(data: object) -> None:
    """Malformed payloads raise ScalarError."""
    with pytest.raises(ScalarError):
        ScalarQ.from_json(data)


# === quantum integers ===


def test_q_int_is_symmetric() -> None:
    """[3] = q^2 + 1 + q^-2 and [0] = 0."""
    assert q_int(3) == poly({2: 1, 0: 1, -2: 1})
    assert q_int(0) == ZERO
    assert q_int(1) == ONE


@pytest.mark.parametrize("k", range(13))
def test_q_int_times_q_difference(k: int) -> None:
    """[k] (q - q^-1) = q^k - q^-k."""
    assert q_int(k) * Q_DIFF == ScalarQ.q_power(k) - ScalarQ.q_power(-k)


def test_q_int_rejects_negative() -> None:
    """Negative arguments raise ScalarError; signed_q_int extends by oddness."""
    with pytest.raises(ScalarError, match="k >= 0"):
        q_int(-1)
    assert signed_q_int(-2) == -q_int(2)


def test_q_factorial_balanced() -> None:
    """[3]! = [2][3] = q^3 + 2q + 2q^-1 + q^-3."""
    assert q_factorial(3) == poly({3: 1, 1: 2, -1: 2, -3: 1})


@pytest.mark.parametrize("k", [0, 1, 3])
def test_q_factorial_checks_base_first(k: int) -> None:
    """An unknown base is rejected even when the product is empty."""
    with pytest.raises(ScalarError, match="Unknown base"):
        q_factorial(k, "bogus")


def test_q_int_unbalanced_bases() -> None:
    """(3)_q and (2)_{q^2}."""
    assert q_int_unbalanced(3) == poly({0: 1, 1: 1, 2: 1})
    assert q_int_unbalanced(2, "q2") == poly({0: 1, 2: 1})
    with pytest.raises(ScalarError, match="Unknown base"):
        q_int_unbalanced(2, "q3")


@pytest.mark.parametrize(
    ("variant", "expected"),
    [
        ("plain", ScalarQ.of(2)),
        ("q", poly({0: 1, 1: 1})),
        ("q2", poly({0: 1, 2: 1})),
    ],
)
def test_multiset_multiplicity_variants(variant: str, expected: ScalarQ) -> None:
    """A doubled letter contributes 2!, (2)_q! or (2)_{q^2}!."""
    assert multiset_multiplicity((1, 1, 2), variant) == expected


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_q2_multiplicity_specializes_to_plain(size: int) -> None:
    """m_{q^2}(I) at q = 1 is m(I) for every multiset over [4]."""
    for letters in multisets(4, size):
        at_one = evaluate_at_q(multiset_multiplicity(letters, "q2"), 1)
        assert at_one == evaluate_at_q(multiset_multiplicity(letters, "plain"), 1)


def test_multiset_multiplicity_requires_sorted_letters() -> None:
    """Unsorted multisets raise ScalarError."""
    with pytest.raises(ScalarError, match="nondecreasing"):
        multiset_multiplicity((2, 1))


# === sums ===


def test_clear_denominators_common_multiple() -> None:
    """Every value equals its numerator over the shared denominator."""
    values = [q_int(2).inverse(), Q, Q_DIFF.inverse()]
    common, nums = clear_denominators(values)
    for value, num in zip(values, nums, strict=True):
        assert ScalarQ.fraction(num, common) == value


def test_sum_scalars_matches_pairwise_sum() -> None:
    """Single-reduction sums agree with repeated addition."""
    values = [q_int(2).inverse(), Q, q_int(3).inverse(), -Q_INV]
    expected = ZERO
    for v in values:
        expected += v
    assert sum_scalars(values) == expected
    assert sum_scalars([]) == ZERO


# === field laws ===


def _random_poly(rng: random.Random) -> LaurentPoly:
    low = rng.randint(-2, 1)
    return LaurentPoly(
        {low + j: Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for j in range(3)}
    )


def _random_scalar(rng: random.Random) -> ScalarQ:
    den = _random_poly(rng)
    while not den:
        den = _random_poly(rng)
    return ScalarQ.fraction(_random_poly(rng), den)


@pytest.mark.parametrize("seed", range(8))
def test_field_laws_on_random_triples(seed: int) -> None:
    """Associativity, distributivity and a * a^-1 = 1, exactly."""
    rng = random.Random(seed)  # noqa: S311
    a, b, c = (_random_scalar(rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    for value in (a, b, c):
        if value:
            assert value * value.inverse() == ONE
