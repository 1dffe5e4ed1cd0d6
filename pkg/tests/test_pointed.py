from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclocat.cocycle import CocycleSpec
from cyclocat.cyclotomic import CycScalar, RootPower
from cyclocat.pointed import (
    GradedObj,
    associator,
    constant_by_associators,
    constant_of,
    constant_of_block,
    constant_of_generator,
    hom_dim,
    left_nested,
    rebracket,
    tensor,
    tree_node,
    verify_lambda_independence,
    verify_pentagon,
)


def d(n, g):
    return GradedObj.simple(n, g)


def test_tensor_examples():
    assert tensor(d(3, 1), d(3, 1)) == d(3, 2)
    assert tensor(d(4, 2), d(4, 3)) == d(4, 1)
    assert (d(2, 0) + d(2, 1)) @ d(2, 1) == d(2, 1) + d(2, 0)


def test_hom_dim_examples():
    assert hom_dim(d(3, 1), d(3, 1)) == 1
    assert hom_dim(d(3, 1), d(3, 2)) == 0
    assert hom_dim(d(3, 1) + d(3, 1), d(3, 1)) == 2


def test_modulus_mismatch():
    with pytest.raises(ValueError):
        tensor(d(3, 1), d(4, 1))
    with pytest.raises(ValueError):
        hom_dim(d(3, 1), d(4, 1))


@given(st.integers(1, 12), st.integers(), st.integers())
def test_dual_of_simple(n, g, h):
    assert d(n, g).dual() == d(n, -g)
    assert hom_dim(d(n, g) @ d(n, g).dual(), GradedObj.unit(n)) == 1
    assert d(n, g) @ d(n, h) == d(n, h) @ d(n, g)


def test_associator_examples():
    assert associator(CocycleSpec(2, 1), 1, 1, 1) == RootPower(2, 1)
    assert associator(CocycleSpec(3, 1), 2, 2, 2) == RootPower(3, 2)
    assert associator(CocycleSpec(7, 3), 4, 0, 5).is_one()


def test_constant_of_generator_examples():
    assert constant_of_generator(CocycleSpec(3, 1)) == RootPower(3, 1)
    assert constant_of_generator(CocycleSpec(1, 0)).is_one()
    assert constant_of_generator(CocycleSpec(4, 2)) == RootPower(4, 2)


def test_constant_of_examples():
    assert constant_of(CocycleSpec(5, 1), 2) == RootPower(5, 4)
    assert constant_of(CocycleSpec(8, 1), 3) == RootPower(8, 1)
    assert constant_by_associators(CocycleSpec(8, 1), 3) == RootPower(8, 1)


@pytest.mark.parametrize("n", range(1, 51))
def test_constant_of_generator_is_zeta(n):
    for a in range(n):
        spec = CocycleSpec(n, a)
        assert constant_of_generator(spec) == spec.zeta


@pytest.mark.parametrize("n", range(1, 13))
def test_oracles_agree_with_power_law(n):
    for a in range(n):
        spec = CocycleSpec(n, a)
        gen = constant_of_generator(spec)
        for j in range(n):
            c = constant_by_associators(spec, j)
            assert c == gen ** (j * j) == constant_of(spec, j)
            assert (c**n).is_one()


@pytest.mark.parametrize("n", range(1, 7))
def test_block_oracle(n):
    for a in range(n):
        spec = CocycleSpec(n, a)
        for j in range(n + 1):
            assert constant_of_block(spec, j) == constant_of(spec, j)


@pytest.mark.parametrize("n,a,scale", [(3, 1, 5), (2, 1, RootPower(2, 1)), (1, 0, 1), (6, 5, Fraction(-2, 7))])
def test_lambda_independence(n, a, scale):
    assert verify_lambda_independence(CocycleSpec(n, a), scale)


@given(st.integers(1, 10), st.integers(0, 9), st.lists(st.integers(-9, 9), min_size=1, max_size=4))
def test_lambda_independence_random_scales(n, a, cs):
    scale = CycScalar(n, cs)
    if scale.is_zero():
        with pytest.raises(ValueError):
            verify_lambda_independence(CocycleSpec(n, a), scale)
    else:
        assert verify_lambda_independence(CocycleSpec(n, a), scale)


@pytest.mark.parametrize("n", range(1, 21))
def test_pentagon(n):
    for a in range(n):
        assert verify_pentagon(CocycleSpec(n, a))


def test_rebracket_single_associator():
    spec = CocycleSpec(5, 2)
    src = tree_node(tree_node(1, 3, 5), 4, 5)
    dst = tree_node(1, tree_node(3, 4, 5), 5)
    assert rebracket(spec, src, dst) == associator(spec, 1, 3, 4)
    with pytest.raises(ValueError):
        rebracket(spec, src, tree_node(1, tree_node(4, 3, 5), 5))


@given(st.integers(1, 8), st.integers(0, 7), st.lists(st.integers(0, 7), min_size=1, max_size=7), st.integers(0, 6))
def test_rebracket_is_a_groupoid(n, a, leaves, cut):
    spec = CocycleSpec(n, a)
    leaves = [x % n for x in leaves]
    cut = cut % len(leaves)
    s = left_nested(leaves, n)
    t = tree_node(left_nested(leaves[:cut], n), left_nested(leaves[cut:], n), n)
    u = tree_node(leaves[0], left_nested(leaves[1:], n), n)
    assert rebracket(spec, s, t) * rebracket(spec, t, u) == rebracket(spec, s, u)
    assert rebracket(spec, s, s).is_one()


def test_unit_leaves_are_dropped():
    assert left_nested([None, 1, None, 2], 5) == (3, 1, 2)
