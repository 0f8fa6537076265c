"""Tests for finite fields of order 4g+1."""

import pytest
from sympy import totient

from highgenus.errors import DomainError, NotFourGPlusOne, UnsupportedPrimePower
from highgenus.heffter import IRREDUCIBLE_POLYNOMIALS, make_field


def test_q13_generator_and_powers():
    """Test that 2 generates F_13 with the expected power sequence."""
    field = make_field(13)
    assert field.alpha == 2
    assert field.powers == (1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7)


def test_q5_generator_and_powers():
    """Test the smallest generator of F_5."""
    field = make_field(5)
    assert field.alpha == 2
    assert field.powers == (1, 2, 4, 3)


@pytest.mark.parametrize("q", [3, 7, 11, 1])
def test_orders_not_one_mod_four_are_rejected(q):
    """Test that q must be 4g+1 with g >= 1."""
    with pytest.raises(NotFourGPlusOne):
        make_field(q)


@pytest.mark.parametrize("q", [21, 45, 169])
def test_unsupported_orders_are_rejected(q):
    """Test non prime powers and prime powers without a tabulated modulus."""
    with pytest.raises(UnsupportedPrimePower):
        make_field(q)


@pytest.mark.parametrize("q", [5, 13, 17, 29, *IRREDUCIBLE_POLYNOMIALS])
def test_field_axioms(q):
    """Test inverses, the generator order and alpha^(2g) = -1."""
    field = make_field(q)
    assert len(set(field.powers)) == q - 1
    assert field.power(field.alpha, (q - 1) // 2) == field.neg(1)
    for a in range(1, q):
        assert field.mul(a, field.inv(a)) == 1
        assert field.add(a, field.neg(a)) == 0


@pytest.mark.parametrize("q", [9, 25, 81, 125])
def test_prime_power_distributivity(q):
    """Test a (b + c) = a b + a c on a sample of elements."""
    field = make_field(q)
    sample = range(0, q, max(1, q // 11))
    for a in sample:
        for b in sample:
            for c in sample:
                left = field.mul(a, field.add(b, c))
                right = field.add(field.mul(a, b), field.mul(a, c))
                assert left == right


@pytest.mark.parametrize("q", [5, 9, 13, 25])
def test_generator_count(q):
    """Test that F_q^* has phi(q-1) generators."""
    assert len(make_field(q).generators()) == totient(q - 1)


def test_explicit_generator():
    """Test that a given generator is used and a non-generator is refused."""
    assert make_field(13, generator=7).alpha == 7
    with pytest.raises(DomainError):
        make_field(13, generator=3)
