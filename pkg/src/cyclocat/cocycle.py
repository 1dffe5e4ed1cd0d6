"""The 3-cocycles ``omega_zeta`` on Z_n and their verification.

For ``zeta = theta**a`` the cocycle is

    omega(i, j, k) = zeta ** (i * (j + k - (j + k) % n) / n)

and since ``(j + k - (j + k) % n) / n`` is the carry bit of ``j + k`` for
reduced ``j, k``, this is ``zeta**i`` when ``j + k >= n`` and ``1`` otherwise.
Group elements are written additively, so the identity is 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclotomic import RootPower, check_modulus

__all__ = [
    "CocycleSpec",
    "omega",
    "omega_exponent",
    "verify_cocycle",
    "verify_normalized",
]


@dataclass(frozen=True)
class CocycleSpec:
    """Parameter ``zeta = theta**a`` of the category Vect_{Z_n}^zeta."""

    n: int
    a: int = 1

    def __post_init__(self):
        check_modulus(self.n)
        object.__setattr__(self, "a", self.a % self.n)

    @property
    def zeta(self) -> RootPower:
        return RootPower(self.n, self.a)

    @classmethod
    def from_zeta(cls, zeta: RootPower) -> CocycleSpec:
        return cls(zeta.n, zeta.e)


def omega_exponent(n: int, a: int, i: int, j: int, k: int) -> int:
    """Exponent of theta in ``omega_{theta^a}(i, j, k)``, reduced mod n."""
    i, j, k = i % n, j % n, k % n
    return (a * i) % n if j + k >= n else 0


def omega(spec: CocycleSpec, i: int, j: int, k: int) -> RootPower:
    """Evaluate the cocycle at ``(i, j, k)``.

    >>> omega(CocycleSpec(2, 1), 1, 1, 1)
    RootPower(n=2, e=1)
    >>> omega(CocycleSpec(3, 1), 2, 2, 2)
    RootPower(n=3, e=2)
    """
    return RootPower(spec.n, omega_exponent(spec.n, spec.a, i, j, k))


def _omega_table(n: int, a: int) -> np.ndarray:
    idx = np.arange(n)
    carry = (idx[:, None] + idx[None, :]) >= n
    return (a * idx[:, None, None] * carry[None, :, :]) % n


def verify_cocycle(spec: CocycleSpec) -> bool:
    """Check the 3-cocycle identity over all of Z_n^4.

    In multiplicative form the identity is
    ``omega(j,k,l) omega(i+j,k,l)^-1 omega(i,j+k,l) omega(i,j,k+l)^-1 omega(i,j,k) = 1``;
    here it is checked on theta-exponents mod n, vectorised over all quadruples.
    """
    n = spec.n
    w = _omega_table(n, spec.a)
    i, j, k, l = np.ix_(*(np.arange(n),) * 4)
    total = (
        w[j, k, l]
        - w[(i + j) % n, k, l]
        + w[i, (j + k) % n, l]
        - w[i, j, (k + l) % n]
        + w[i, j, k]
    )
    return bool(np.all(total % n == 0))


def verify_normalized(spec: CocycleSpec) -> bool:
    """True iff omega is 1 whenever one of its arguments is the identity 0."""
    w = _omega_table(spec.n, spec.a)
    return bool(not w[0, :, :].any() and not w[:, 0, :].any() and not w[:, :, 0].any())
