import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclocat.cocycle import CocycleSpec, omega, omega_exponent, verify_cocycle, verify_normalized
from cyclocat.cyclotomic import RootPower


def test_omega_examples():
    assert omega(CocycleSpec(2, 1), 1, 1, 1) == RootPower(2, 1)
    assert omega(CocycleSpec(3, 1), 2, 2, 2) == RootPower(3, 2)


@given(st.integers(1, 30), st.integers(), st.integers(), st.integers(), st.integers())
def test_omega_is_normalized_and_a_power_of_zeta(n, a, i, j, k):
    spec = CocycleSpec(n, a)
    assert omega(spec, i, 0, k).is_one()
    assert omega(spec, 0, j, k).is_one()
    assert omega(spec, i, j, 0).is_one()
    assert omega(spec, i, j, k) in {spec.zeta**m for m in range(n)}


@given(st.integers(1, 30), st.integers(0, 29), st.integers(0, 29), st.integers(0, 29), st.integers(0, 29))
def test_omega_matches_floor_formula(n, a, i, j, k):
    i, j, k = i % n, j % n, k % n
    carry = (j + k - (j + k) % n) // n
    assert omega_exponent(n, a, i, j, k) == (a * i * carry) % n


@pytest.mark.parametrize("n,a", [(2, 1), (1, 0), (5, 3), (4, 1), (6, 2)])
def test_examples_verify(n, a):
    spec = CocycleSpec(n, a)
    assert verify_cocycle(spec)
    assert verify_normalized(spec)


def _cocycle_loop(n, a):
    # plain-Python oracle for the vectorized check
    w = lambda i, j, k: omega_exponent(n, a, i, j, k)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    t = w(j, k, l) - w(i + j, k, l) + w(i, j + k, l) - w(i, j, k + l) + w(i, j, k)
                    if t % n:
                        return False
    return True


def test_swapped_sign_variant_fails():
    # the variant with the middle two factors inverted is not satisfied by omega_zeta
    n, a = 3, 1
    w = lambda i, j, k: omega_exponent(n, a, i, j, k)
    i, j, k, l = 1, 0, 1, 2
    t = w(j, k, l) - w(i, j + k, l) + w(i, j, k + l) - w(i + j, k, l) + w(i, j, k)
    assert t % n


@pytest.mark.parametrize("n", range(1, 9))
def test_vectorized_check_matches_loop(n):
    for a in range(n):
        assert verify_cocycle(CocycleSpec(n, a)) == _cocycle_loop(n, a) is True


def test_broken_cocycle_is_detected(monkeypatch):
    import numpy as np

    from cyclocat import cocycle

    def bad_table(n, a):
        t = np.zeros((n, n, n), dtype=int)
        t[1, 1, 1] = 1
        t[0, 2, 2] = 1
        return t

    monkeypatch.setattr(cocycle, "_omega_table", bad_table)
    assert not cocycle.verify_cocycle(CocycleSpec(3, 1))
    assert not cocycle.verify_normalized(CocycleSpec(3, 1))
