from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclocat.classify import (
    FunctorSpec,
    NatIso,
    aut_2group,
    compose_functors,
    count_classes_bruteforce,
    count_classes_formula,
    equivalence_classes,
    factorize,
    functor_valid,
    hom_between,
    identity_functor,
    is_equivalent,
    orbits,
    units,
)
from cyclocat.cocycle import CocycleSpec
from cyclocat.cyclotomic import CycScalar, RootPower

SEQUENCE = [1, 2, 3, 4, 3, 6, 3, 8, 5, 6]


def test_functor_valid_examples():
    for n in range(1, 10):
        assert functor_valid(identity_functor(CocycleSpec(n, 1)))
    assert functor_valid(FunctorSpec(CocycleSpec(5, 1), CocycleSpec(5, 4), 2))
    assert not any(functor_valid(FunctorSpec(CocycleSpec(5, 1), CocycleSpec(5, 2), j)) for j in range(5))
    with pytest.raises(ValueError):
        FunctorSpec(CocycleSpec(5, 1), CocycleSpec(6, 1), 1)
    with pytest.raises(ValueError):
        FunctorSpec(CocycleSpec(5, 1), CocycleSpec(5, 1), 1, CycScalar.zero(5))


def test_is_equivalent_examples():
    assert is_equivalent(5, 1, 4) == (True, 2)
    assert is_equivalent(5, 1, 2) == (False, None)
    for n in range(1, 20):
        for a in range(n):
            assert is_equivalent(n, a, a) == (True, 1 % n if n > 1 else 0)


def test_counts():
    assert [count_classes_formula(n) for n in range(1, 11)] == SEQUENCE
    assert [count_classes_bruteforce(n) for n in range(1, 11)] == SEQUENCE
    assert orbits(5) == [[0], [1, 4], [2, 3]]
    assert len(orbits(10)) == 6


@pytest.mark.parametrize("n", [16, 24, 48, 360, 2**7 * 3, 3**5])
def test_formula_two_power_cases(n):
    assert count_classes_formula(n) == count_classes_bruteforce(n)


@given(st.integers(1, 10**6))
def test_factorize(n):
    f = factorize(n)
    prod = 1
    for p, k in f.items():
        assert all(p % q for q in range(2, int(p**0.5) + 1))
        prod *= p**k
    assert prod == n


@pytest.mark.parametrize("n", range(1, 41))
def test_equivalence_relation(n):
    eq = [[is_equivalent(n, a, b)[0] for b in range(n)] for a in range(n)]
    for a in range(n):
        assert eq[a][a]
        for b in range(n):
            assert eq[a][b] == eq[b][a]
            if eq[a][b]:
                for c in range(n):
                    if eq[b][c]:
                        assert eq[a][c]
    assert len(equivalence_classes(n)) == count_classes_formula(n)


def test_witness_is_a_functor():
    for n in range(1, 30):
        for a in range(n):
            for b in range(n):
                ok, j = is_equivalent(n, a, b)
                if ok:
                    assert functor_valid(FunctorSpec(CocycleSpec(n, a), CocycleSpec(n, b), j))


def test_aut_2group_examples():
    assert aut_2group(5, 1).pi0 == (1, 4)
    assert aut_2group(8, 1).pi0 == (1, 3, 5, 7)
    for n in range(1, 15):
        assert list(aut_2group(n, 0).pi0) == units(n)


def test_nonunit_solutions_are_reported():
    # 4 j^2 = 4 mod 12 iff j^2 = 1 mod 3 iff 3 does not divide j
    tg = aut_2group(12, 4)
    assert tg.pi0 == (1, 5, 7, 11)
    assert tg.nonunit_solutions == (2, 4, 8, 10)
    assert all(gcd(j, 12) > 1 for j in tg.nonunit_solutions)
    assert aut_2group(8, 1).nonunit_solutions == ()


@pytest.mark.parametrize("n", range(1, 31))
def test_pi0_is_a_subgroup(n):
    us = units(n)
    for a in range(n):
        pi0 = set(aut_2group(n, a).pi0)
        assert 1 % n in pi0
        assert len(us) % len(pi0) == 0
        for x in pi0:
            assert any(x * y % n == 1 % n for y in pi0)
            for y in pi0:
                assert x * y % n in pi0


def test_compose_examples():
    spec = CocycleSpec(5, 0)
    f2, f3, f4 = (FunctorSpec(spec, spec, j) for j in (2, 3, 4))
    assert compose_functors(f2, f3).j == 1
    assert compose_functors(f4, f4).j == 1
    assert compose_functors(f2, identity_functor(spec)) == f2
    assert compose_functors(identity_functor(spec), f2) == f2
    with pytest.raises(ValueError):
        compose_functors(f2, FunctorSpec(spec, CocycleSpec(5, 1), 1))


def test_compose_transports_lambda():
    spec = CocycleSpec(7, 0)
    f = FunctorSpec(spec, spec, 3, RootPower(7, 1))
    g = FunctorSpec(spec, spec, 2, CycScalar(7, [2]))
    h = compose_functors(f, g)
    assert h.j == 6
    assert h.lambda_scalar == CycScalar(7, [2]) * RootPower(7, 2)


@pytest.mark.parametrize("n", range(1, 21))
def test_composition_realizes_pi0_law(n):
    for a in range(n):
        spec = CocycleSpec(n, a)
        pi0 = aut_2group(n, a).pi0
        for j in pi0:
            for k in pi0:
                h = compose_functors(FunctorSpec(spec, spec, j), FunctorSpec(spec, spec, k))
                assert functor_valid(h) and h.j in pi0 and h.j == j * k % n


def test_composition_across_categories_stays_valid():
    for n in range(1, 16):
        for a in range(n):
            for b in range(n):
                ok1, j1 = is_equivalent(n, a, b)
                for c in range(n):
                    ok2, j2 = is_equivalent(n, b, c)
                    if ok1 and ok2:
                        g = FunctorSpec(CocycleSpec(n, a), CocycleSpec(n, b), j1)
                        f = FunctorSpec(CocycleSpec(n, b), CocycleSpec(n, c), j2)
                        assert functor_valid(compose_functors(f, g))


def test_hom_between_examples():
    spec = CocycleSpec(4, 1)
    f = FunctorSpec(spec, spec, 1)
    assert len(hom_between(f, f)) == 4
    triv = CocycleSpec(8, 0)
    assert len(hom_between(FunctorSpec(triv, triv, 1), FunctorSpec(triv, triv, 3))) == 0
    one = CocycleSpec(1, 0)
    assert len(hom_between(identity_functor(one), identity_functor(one))) == 1


def test_hom_between_rejects_invalid():
    spec = CocycleSpec(5, 1)
    with pytest.raises(ValueError):
        hom_between(FunctorSpec(spec, spec, 2), FunctorSpec(spec, spec, 1))
    triv = CocycleSpec(6, 0)
    with pytest.raises(ValueError):
        hom_between(FunctorSpec(triv, triv, 2), FunctorSpec(triv, triv, 1))


def test_natiso_vertical_composition():
    spec = CocycleSpec(6, 1)
    f = FunctorSpec(spec, spec, 5)
    isos = list(hom_between(f, f))
    assert [t.tau_index for t in isos] == list(range(6))
    x, y = isos[4], isos[5]
    assert x.then(y) == NatIso(f, f, 3)
    assert x.then(x.inverse()).tau_index == 0
