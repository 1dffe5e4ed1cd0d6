"""The skeletal pointed category Vect_{Z_n}^zeta.

Objects are Z_n-graded multiplicity vectors; all morphism data we need is
scalar, because every hom space between tensor products of simple objects
is at most one-dimensional.  Associativity constraints are given by
``omega_zeta`` and the unit constraints are identities (the cocycle is
normalized).

Parenthesized tensor products of simple objects are modelled as binary
trees, which lets us compute the scalar of any composite of associators
explicitly (:func:`rebracket`).  That gives an associator-level oracle for
the constant attached to an object ``X`` with ``X^n ~ 1``, independent of the
closed formula ``zeta**(j*j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import repeat

import numpy as np

from .cocycle import CocycleSpec, omega, _omega_table
from .cyclotomic import CycScalar, RootPower, check_modulus, embed

__all__ = [
    "GradedObj",
    "tensor",
    "hom_dim",
    "associator",
    "constant_of_generator",
    "constant_of",
    "constant_by_associators",
    "constant_of_block",
    "verify_lambda_independence",
    "verify_pentagon",
    "left_nested",
    "tree_node",
    "rebracket",
]


@dataclass(frozen=True)
class GradedObj:
    """Direct sum of simple objects, ``mult[g]`` copies of delta_g."""

    n: int
    mult: tuple[int, ...]

    def __post_init__(self):
        check_modulus(self.n)
        mult = tuple(int(m) for m in self.mult)
        if len(mult) != self.n or any(m < 0 for m in mult):
            raise ValueError(f"need {self.n} non-negative multiplicities, got {self.mult!r}")
        object.__setattr__(self, "mult", mult)

    @classmethod
    def simple(cls, n: int, g: int) -> GradedObj:
        mult = [0] * n
        mult[g % n] = 1
        return cls(n, tuple(mult))

    @classmethod
    def unit(cls, n: int) -> GradedObj:
        return cls.simple(n, 0)

    def __add__(self, other: GradedObj) -> GradedObj:
        _same_n(self, other)
        return GradedObj(self.n, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def __matmul__(self, other: GradedObj) -> GradedObj:
        return tensor(self, other)

    def dual(self) -> GradedObj:
        return GradedObj(self.n, tuple(self.mult[-g % self.n] for g in range(self.n)))

    def power(self, k: int) -> GradedObj:
        out = GradedObj.unit(self.n)
        for _ in range(k):
            out = tensor(out, self)
        return out

    def degrees(self) -> list[int]:
        return [g for g, m in enumerate(self.mult) for _ in range(m)]

    def is_simple(self) -> bool:
        return sum(self.mult) == 1

    def __str__(self):
        parts = [f"delta_{g}" if m == 1 else f"{m}*delta_{g}" for g, m in enumerate(self.mult) if m]
        return " + ".join(parts) if parts else "0"


def _same_n(a, b):
    if a.n != b.n:
        raise ValueError(f"modulus mismatch: {a.n} vs {b.n}")


def tensor(a: GradedObj, b: GradedObj) -> GradedObj:
    """Convolution of multiplicities: ``(a (x) b)_g = sum_{x+y=g} a_x b_y``."""
    _same_n(a, b)
    n = a.n
    out = [0] * n
    for x, ax in enumerate(a.mult):
        if ax:
            for y, by in enumerate(b.mult):
                out[(x + y) % n] += ax * by
    return GradedObj(n, tuple(out))


def hom_dim(a: GradedObj, b: GradedObj) -> int:
    _same_n(a, b)
    return sum(x * y for x, y in zip(a.mult, b.mult))


def associator(spec: CocycleSpec, g: int, h: int, l: int) -> RootPower:
    """Scalar of ``a_{delta_g, delta_h, delta_l}``."""
    return omega(spec, g, h, l)


# -- parenthesized tensor products ---------------------------------------------
#
# A tree is either None (the unit object), an int (a simple object, given by
# its degree) or a tuple (degree, left, right).

def _deg(t) -> int:
    return t if isinstance(t, int) else t[0]


def tree_node(left, right, n: int):
    if left is None:
        return right
    if right is None:
        return left
    return ((_deg(left) + _deg(right)) % n, left, right)


def left_nested(parts, n: int):
    """``((p0 (x) p1) (x) p2) ...``, dropping unit factors."""
    t = None
    for p in parts:
        t = tree_node(t, p, n)
    return t


def _leaves(t):
    stack = [t]
    while stack:
        t = stack.pop()
        if t is None:
            continue
        if isinstance(t, int):
            yield t
        else:
            stack.append(t[2])
            stack.append(t[1])


def _to_right_comb(t, n: int, a: int) -> int:
    # theta-exponent of the associator composite t -> right comb on the same leaves
    exp = 0
    while t.__class__ is tuple:
        d, left, right = t
        if left.__class__ is tuple:
            _, x, y = left
            dx = x if x.__class__ is int else x[0]
            dy = y if y.__class__ is int else y[0]
            dr = right if right.__class__ is int else right[0]
            if dy + dr >= n:  # omega(dx, dy, dr) = zeta^dx on a carry
                exp += a * dx
            t = (d, x, ((dy + dr) % n, y, right))
        else:
            t = right
    return exp


def rebracket(spec: CocycleSpec, source, target) -> RootPower:
    """Scalar of the associator composite ``source -> target``.

    Both trees must have the same sequence of leaves.  By coherence the
    answer does not depend on the path; we route through the right comb.
    """
    if list(_leaves(source)) != list(_leaves(target)):
        raise ValueError("trees have different leaf sequences")
    n, a = spec.n, spec.a
    return RootPower(n, _to_right_comb(source, n, a) - _to_right_comb(target, n, a))


def _rebracket_exp(n: int, a: int, source, target) -> int:
    # unchecked fast path used by the diagram evaluator
    return _to_right_comb(source, n, a) - _to_right_comb(target, n, a)


# -- the constant attached to X with X^n ~ 1 -----------------------------------

def constant_of_generator(spec: CocycleSpec) -> RootPower:
    """Product of associators ``prod_{k=1}^{n-1} omega(1, k, 1)`` moving delta_1 past delta_1^n.

    >>> constant_of_generator(CocycleSpec(3, 1))
    RootPower(n=3, e=1)
    """
    out = RootPower.one(spec.n)
    for k in range(1, spec.n):
        out = out * omega(spec, 1, k, 1)
    return out


def constant_of(spec: CocycleSpec, j: int) -> RootPower:
    """Closed form ``zeta**(j*j)`` for the constant of delta_j."""
    return spec.zeta ** ((j * j) % spec.n)


def constant_by_associators(spec: CocycleSpec, j: int) -> RootPower:
    """Constant of X = delta_j computed by an explicit parenthesization walk.

    With lambda the canonical map on the left-nested ``X^n``, the constant is
    the scalar of the associator ``(X^n) (x) X -> X (x) (X^n)``.
    """
    n = spec.n
    j %= n
    block = left_nested(repeat(j, n), n)
    return rebracket(spec, tree_node(block, j, n), tree_node(j, block, n))


def constant_of_block(spec: CocycleSpec, j: int) -> RootPower:
    """Same constant, but with X = delta_1^{(x) j} expanded into j strands.

    The trees carry ``j * (n + 1)`` leaves of degree 1, so every associator
    involved is evaluated on the finest bracketing.
    """
    n = spec.n
    y = left_nested(repeat(1 % n, j), n)
    block = left_nested(repeat(y, n), n)
    return rebracket(spec, tree_node(block, y, n), tree_node(y, block, n))


def _lambda_sides(spec: CocycleSpec, lam: CycScalar, j: int = 1):
    # values of (id (x) lam) o assoc and (lam (x) id) on the left-nested X^{n+1}
    n = spec.n
    block = left_nested(repeat(j % n, n), n)
    alpha = rebracket(spec, tree_node(block, j % n, n), tree_node(j % n, block, n))
    return lam * alpha, lam


def verify_lambda_independence(spec: CocycleSpec, scale, j: int = 1) -> bool:
    """Recompute the constant with lambda replaced by ``scale * lambda``."""
    scale = CycScalar.one(spec.n) * scale
    if scale.is_zero():
        raise ValueError("lambda must be an isomorphism; scale is zero")
    one = CycScalar.one(spec.n)
    base_left, base_right = _lambda_sides(spec, one, j)
    left, right = _lambda_sides(spec, scale, j)
    return left / right == base_left / base_right == embed(constant_of(spec, j))


def verify_pentagon(spec: CocycleSpec) -> bool:
    """Compare the two associator paths ``((gh)k)l -> g(h(kl))`` on all simple objects."""
    n = spec.n
    w = _omega_table(n, spec.a)
    g, h, k, l = np.ix_(*(np.arange(n),) * 4)
    # top path: a_{gh,k,l} then a_{g,h,kl}
    top = w[(g + h) % n, k, l] + w[g, h, (k + l) % n]
    # bottom path: a_{g,h,k} (x) id, a_{g,hk,l}, id (x) a_{h,k,l}
    bottom = w[g, h, k] + w[g, (h + k) % n, l] + w[h, k, l]
    return bool(np.all((top - bottom) % n == 0))
