"""Tensor functors between the categories Vect_{Z_n}^zeta, equivalence classes
and the automorphism 2-group.

A tensor functor ``Vect_{Z_n}^zeta -> Vect_{Z_n}^xi`` is determined by the image
``delta_j`` of the generator together with an isomorphism
``lambda: delta_j^n -> 1`` satisfying ``id # lambda = zeta * (lambda # id)``.
Since the constant of ``delta_j`` in the target is ``xi**(j*j)``, the pair is
admissible exactly when ``xi**(j*j) == zeta``.  Writing ``zeta = theta**a`` and
``xi = theta**b`` everything reduces to congruences ``b * j*j = a (mod n)``.

>>> count_classes_formula(8), count_classes_bruteforce(8)
(8, 8)
>>> aut_2group(5, 1).pi0
(1, 4)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cocycle import CocycleSpec
from .cyclotomic import CycScalar, check_modulus

__all__ = [
    "FunctorSpec",
    "NatIso",
    "HomSet",
    "TwoGroup",
    "units",
    "functor_valid",
    "is_equivalent",
    "equivalence_classes",
    "count_classes_formula",
    "count_classes_bruteforce",
    "orbits",
    "factorize",
    "hom_between",
    "aut_2group",
    "compose_functors",
    "identity_functor",
]


def units(n: int) -> list[int]:
    check_modulus(n)
    if n == 1:
        return [0]
    return [j for j in range(1, n) if gcd(j, n) == 1]


@dataclass(frozen=True)
class FunctorSpec:
    """The functor ``F_{X, lambda}`` with ``X = delta_j`` in the target category.

    ``lambda_scalar`` is lambda relative to the canonical isomorphism
    ``delta_j^n -> 1``.
    """

    source: CocycleSpec
    target: CocycleSpec
    j: int
    lambda_scalar: CycScalar = None

    def __post_init__(self):
        if self.source.n != self.target.n:
            raise ValueError(f"modulus mismatch: {self.source.n} vs {self.target.n}")
        n = self.source.n
        object.__setattr__(self, "j", self.j % n)
        lam = self.lambda_scalar
        lam = CycScalar.one(n) if lam is None else CycScalar.one(n) * lam
        if lam.is_zero():
            raise ValueError("lambda must be an isomorphism, got scalar 0")
        object.__setattr__(self, "lambda_scalar", lam)

    @property
    def n(self) -> int:
        return self.source.n


def identity_functor(spec: CocycleSpec) -> FunctorSpec:
    return FunctorSpec(spec, spec, 1)


def functor_valid(spec: FunctorSpec) -> bool:
    """``xi**(j*j) == zeta``, i.e. ``b * j*j = a (mod n)``."""
    n = spec.n
    return (spec.target.a * spec.j * spec.j - spec.source.a) % n == 0


def is_equivalent(n: int, a: int, b: int) -> tuple[bool, int | None]:
    """Whether Vect^{theta^a} and Vect^{theta^b} are equivalent, with the least witness j.

    >>> is_equivalent(5, 1, 4)
    (True, 2)
    >>> is_equivalent(5, 1, 2)
    (False, None)
    """
    check_modulus(n)
    for j in units(n):
        if (b * j * j - a) % n == 0:
            return True, j
    return False, None


def equivalence_classes(n: int) -> list[list[int]]:
    """Partition of Z_n (exponents a of zeta = theta^a) into equivalence classes."""
    seen: dict[int, int] = {}
    blocks: list[list[int]] = []
    for a in range(n):
        if a in seen:
            continue
        block = [b for b in range(n) if b not in seen and is_equivalent(n, a, b)[0]]
        for b in block:
            seen[b] = len(blocks)
        blocks.append(block)
    return blocks


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    check_modulus(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def count_classes_formula(n: int) -> int:
    """Number of equivalence classes of categories Vect_{Z_n}^zeta.

    With ``n = 2^k0 * prod p_i^k_i`` the odd part contributes ``prod (2 k_i + 1)``
    and the 2-part a factor 1, 2, 4 or ``4 (k0 - 1)`` for ``k0 = 0, 1, 2, >= 3``.
    """
    f = factorize(n)
    k0 = f.pop(2, 0)
    odd = 1
    for k in f.values():
        odd *= 2 * k + 1
    if k0 == 0:
        return odd
    if k0 == 1:
        return 2 * odd
    if k0 == 2:
        return 4 * odd
    return 4 * (k0 - 1) * odd


def orbits(n: int) -> list[list[int]]:
    """Orbits of Z_n under ``a -> j*j*a`` for units j."""
    squares = sorted({j * j % n for j in units(n)})
    seen = [False] * n
    out = []
    for a in range(n):
        if seen[a]:
            continue
        orbit = sorted({s * a % n for s in squares})
        for b in orbit:
            seen[b] = True
        out.append(orbit)
    return out


def count_classes_bruteforce(n: int) -> int:
    """Orbit count of the squares-of-units action, enumerated explicitly."""
    check_modulus(n)
    return len(orbits(n))


# -- the automorphism 2-group ------------------------------------------------------


@dataclass(frozen=True)
class NatIso:
    """Monoidal natural isomorphism ``source => target``.

    Its component on delta_1 is ``r * Gamma`` for an n-th root of unity ``r``;
    only the index of ``r`` in Z_n is recorded.
    """

    source: FunctorSpec
    target: FunctorSpec
    tau_index: int

    def then(self, other: NatIso) -> NatIso:
        """Vertical composite: first ``self``, then ``other``."""
        if self.target != other.source:
            raise ValueError("natural transformations are not composable")
        n = self.source.n
        return NatIso(self.source, other.target, (self.tau_index + other.tau_index) % n)

    def inverse(self) -> NatIso:
        return NatIso(self.target, self.source, -self.tau_index % self.source.n)


@dataclass(frozen=True)
class HomSet:
    source: FunctorSpec
    target: FunctorSpec
    size: int

    def __len__(self):
        return self.size

    def __iter__(self):
        for k in range(self.size):
            yield NatIso(self.source, self.target, k)

    def __bool__(self):
        return self.size > 0


def _check_automorphism(f: FunctorSpec):
    if f.source != f.target:
        raise ValueError("not an endofunctor")
    if not functor_valid(f) or gcd(f.j, f.n) != 1 and f.n > 1:
        raise ValueError(f"F with j={f.j} is not a tensor automorphism of {f.source}")


def hom_between(f: FunctorSpec, g: FunctorSpec) -> HomSet:
    """Monoidal natural isomorphisms between two automorphisms of the same category.

    Empty when the degrees differ, otherwise in bijection with the n-th roots
    of unity.
    """
    _check_automorphism(f)
    _check_automorphism(g)
    if f.source != g.source:
        raise ValueError("functors act on different categories")
    return HomSet(f, g, f.n if f.j == g.j else 0)


def compose_functors(f: FunctorSpec, g: FunctorSpec) -> FunctorSpec:
    """``f o g``: apply g first, then f.

    Degrees multiply.  g's lambda is transported through f, which scales it by
    f's lambda once per generator in ``delta_{j_g}``.
    """
    if g.target != f.source:
        raise ValueError("cannot compose: target of g is not the source of f")
    lam = f.lambda_scalar ** g.j * g.lambda_scalar
    return FunctorSpec(g.source, f.target, f.j * g.j, lam)


@dataclass(frozen=True)
class TwoGroup:
    """Invariants of the 2-group of tensor autoequivalences of Vect_{Z_n}^{theta^a}."""

    n: int
    a: int
    pi0: tuple[int, ...]
    nonunit_solutions: tuple[int, ...]

    @property
    def zeta(self):
        return CocycleSpec(self.n, self.a).zeta

    @property
    def pi1_order(self) -> int:
        return self.n

    def objects(self) -> list[FunctorSpec]:
        spec = CocycleSpec(self.n, self.a)
        return [FunctorSpec(spec, spec, j) for j in self.pi0]

    def automorphisms_of(self, j: int) -> HomSet:
        spec = CocycleSpec(self.n, self.a)
        f = FunctorSpec(spec, spec, j)
        return hom_between(f, f)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "zeta": self.a,
            "pi0": list(self.pi0),
            "pi1_order": self.n,
            "nonunit_solutions": list(self.nonunit_solutions),
        }


def aut_2group(n: int, a: int) -> TwoGroup:
    """pi0 = units j with ``a * j*j = a (mod n)``, pi1 = Z_n."""
    check_modulus(n)
    a %= n
    us = set(units(n))
    sols = [j for j in range(n) if (a * j * j - a) % n == 0]
    return TwoGroup(
        n,
        a,
        tuple(j for j in sols if j in us),
        tuple(j for j in sols if j not in us),
    )
