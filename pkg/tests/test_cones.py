import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxlift.cones import (
    Cone,
    box_minimal_oracle,
    interior_functional,
    leq_sigma,
    minimal_common_upper_bounds,
    minimal_elements,
    positive_relation_exists,
    strict_interior_point,
)
from coxlift.instances import CONE_OVER_SQUARE, ORTHANT2, QUOTIENT2, TEST_CONES


def test_cone_validation():
    with pytest.raises(ValueError):
        Cone(2, ((2, 4),))  # not primitive
    with pytest.raises(ValueError):
        Cone(2, ((0, 0),))  # zero ray
    with pytest.raises(ValueError):
        Cone(3, ((1, 0),))  # wrong length


def test_flags():
    assert CONE_OVER_SQUARE.full_dimensional
    assert CONE_OVER_SQUARE.pointed_dual
    line = Cone(2, ((1, 0),))
    assert not line.full_dimensional
    with pytest.raises(ValueError):
        minimal_elements(line, (0,))


def test_leq_examples():
    assert leq_sigma(ORTHANT2, (0, 0), (1, 1))
    assert not leq_sigma(CONE_OVER_SQUARE, (-1, 0, 0), (0, 0, 0))
    assert leq_sigma(CONE_OVER_SQUARE, (1, 2, 3), (1, 2, 3))
    with pytest.raises(ValueError):
        leq_sigma(ORTHANT2, (0, 0, 0), (1, 1))


c_vectors = st.lists(st.integers(-3, 3), min_size=4, max_size=4)
m_vectors = st.lists(st.integers(-4, 4), min_size=3, max_size=3)


@given(m_vectors, m_vectors, m_vectors)
def test_order_is_a_partial_order(a, b, c):
    cone = CONE_OVER_SQUARE
    assert leq_sigma(cone, a, a)
    if leq_sigma(cone, a, b) and leq_sigma(cone, b, c):
        assert leq_sigma(cone, a, c)
    if leq_sigma(cone, a, b) and leq_sigma(cone, b, a):
        assert tuple(a) == tuple(b)


def test_minimal_elements_examples():
    got = minimal_elements(CONE_OVER_SQUARE, (-1, 0, -1, 0)).elements
    assert got == ((-1, 0, 0), (0, 0, 0), (1, 0, 0))
    got = minimal_elements(CONE_OVER_SQUARE, (-1, 0, 0, 0)).elements
    assert got == ((-1, 0, 0), (0, 0, 0))


def test_orthant_single_minimum():
    for c in [(0, 0), (3, -2), (-1, -1)]:
        assert minimal_elements(ORTHANT2, c).elements == (c,)


def test_quotient_cone_minimal_elements():
    # class group Z/2: even-sum degrees are hit exactly, odd ones split
    assert minimal_elements(QUOTIENT2, (0, 0)).elements == ((0, 0),)
    got = minimal_elements(QUOTIENT2, (1, 0)).elements
    assert got == ((1, 1), (1, 2))


def test_mcub_examples():
    got = minimal_common_upper_bounds(CONE_OVER_SQUARE, (0, 0, 0), (-1, 0, 0)).elements
    assert got == ((0, 0, 1), (0, 1, 0))
    got = minimal_common_upper_bounds(CONE_OVER_SQUARE, (1, 0, 1), (1, 1, 0)).elements
    assert got == ((1, 1, 1), (2, 1, 1))
    got = minimal_common_upper_bounds(ORTHANT2, (2, -1), (0, 3)).elements
    assert got == ((2, 3),)


@given(c_vectors)
def test_minimal_elements_antichain_and_complete(c):
    cone = CONE_OVER_SQUARE
    mins = minimal_elements(cone, c).elements
    for a in mins:
        assert all(v >= b for v, b in zip(cone.evaluate(a), c))
        for b in mins:
            if a != b:
                assert not leq_sigma(cone, a, b)
    # oracle: every box point of P_c dominates a returned element
    for p in box_minimal_oracle(cone, c, 4):
        assert any(leq_sigma(cone, a, p) for a in mins)


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_minimal_elements_oracle_quotient_cone(c):
    cone = QUOTIENT2
    mins = minimal_elements(cone, c).elements
    box = box_minimal_oracle(cone, c, 5)
    for p in box:
        assert any(leq_sigma(cone, a, p) for a in mins)
    for a in mins:
        if all(abs(x) <= 5 for x in a):
            assert a in box


@given(m_vectors, m_vectors)
def test_mcub_dominates_and_symmetric(a, b):
    cone = CONE_OVER_SQUARE
    ab = minimal_common_upper_bounds(cone, a, b).elements
    ba = minimal_common_upper_bounds(cone, b, a).elements
    assert ab == ba
    for u in ab:
        assert leq_sigma(cone, a, u) and leq_sigma(cone, b, u)


def test_interior_functional():
    assert interior_functional(ORTHANT2) == (1, 1)
    assert interior_functional(CONE_OVER_SQUARE) == (0, 2, 2)
    ray = Cone(1, ((1,),))
    assert interior_functional(ray) == (1,)


def test_strict_interior_point():
    for cone in TEST_CONES:
        w = strict_interior_point(cone)
        assert all(v >= 1 for v in cone.evaluate(w))


def test_positive_relation():
    assert positive_relation_exists(((1, 0), (-1, 0)))
    assert not positive_relation_exists(((1, 0), (0, 1)))
    assert not positive_relation_exists(CONE_OVER_SQUARE.rays)
