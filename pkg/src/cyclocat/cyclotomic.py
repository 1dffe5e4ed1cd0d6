"""Exact arithmetic in the cyclotomic field Q(theta), theta a primitive n-th root of unity.

Two representations are provided:

* :class:`RootPower` -- a pure monomial ``theta**e`` with ``e`` reduced mod ``n``.
  Every scalar produced by diagram rewriting is of this form, so it is kept as
  a cheap fast path.
* :class:`CycScalar` -- a general element of Q(theta), stored as rational
  coefficients of a polynomial in ``theta`` reduced modulo the n-th cyclotomic
  polynomial.  Reduction makes the representation canonical, so equality of
  field elements is equality of coefficient tuples.

>>> t = RootPower(5, 3) * RootPower(5, 4)
>>> t
RootPower(n=5, e=2)
>>> sum((embed(RootPower(5, e)) for e in range(5)), CycScalar.zero(5))
CycScalar(5, [])
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = [
    "RootPower",
    "CycScalar",
    "cyclotomic_poly",
    "embed",
    "order",
    "check_modulus",
]


def check_modulus(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"modulus must be a positive integer, got {n!r}")
    return n


# -- dense polynomials over Q, coefficient lists low -> high ------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    qs = [(j, b) for j, b in enumerate(q) if b]
    for i, a in enumerate(p):
        if a:
            for j, b in qs:
                out[i + j] += a * b
    return _trim(out)


def _poly_sub(p, q):
    m = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(m)])


def _poly_divmod(p, q):
    """Long division over Q; ``q`` must be nonzero."""
    p = [Fraction(c) for c in _trim(p)]
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(q[-1])
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(p) >= len(q):
        c = p[-1] / lead
        shift = len(p) - len(q)
        quot[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        p = _trim(p)
    return _trim(quot), p


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients (low -> high) of the n-th cyclotomic polynomial.

    Computed as ``(x**n - 1) / prod(Phi_d for d | n, d < n)``.

    >>> cyclotomic_poly(1)
    (-1, 1)
    >>> cyclotomic_poly(6)
    (1, -1, 1)
    """
    check_modulus(n)
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, list(cyclotomic_poly(d)))
    quot, rem = _poly_divmod(num, den)
    assert not rem, "x^n - 1 must be divisible by the proper cyclotomic factors"
    assert all(c.denominator == 1 for c in quot)
    return tuple(int(c) for c in quot)


@lru_cache(maxsize=None)
def _degree(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    # reduced coefficient vectors of theta**e for e in [0, n)
    phi = cyclotomic_poly(n)
    d = len(phi) - 1
    rows = []
    for e in range(n):
        mono = [0] * e + [1]
        _, rem = _poly_divmod(mono, phi)
        rows.append(tuple(Fraction(c) for c in rem) + (Fraction(0),) * (d - len(rem)))
    return tuple(rows)


class RootPower:
    """The monomial ``theta**e`` in Q(theta), theta a fixed primitive n-th root of unity."""

    __slots__ = ("n", "e")

    def __init__(self, n: int, e: int = 0):
        check_modulus(n)
        self.n = n
        self.e = e % n

    @classmethod
    def one(cls, n: int) -> RootPower:
        return cls(n, 0)

    def __mul__(self, other):
        if isinstance(other, RootPower):
            self._check(other)
            return RootPower(self.n, self.e + other.e)
        if isinstance(other, (CycScalar, int, Rational)):
            return embed(self) * other
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return embed(self) * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, RootPower):
            self._check(other)
            return RootPower(self.n, self.e - other.e)
        return NotImplemented

    def __pow__(self, k: int) -> RootPower:
        return RootPower(self.n, self.e * k)

    def inverse(self) -> RootPower:
        return RootPower(self.n, -self.e)

    def __eq__(self, other):
        if isinstance(other, RootPower):
            return self.n == other.n and self.e == other.e
        if isinstance(other, CycScalar):
            return other == embed(self)
        if isinstance(other, (int, Rational)):
            return embed(self) == other
        return NotImplemented

    def __hash__(self):
        return hash(("RootPower", self.n, self.e))

    def __repr__(self):
        return f"RootPower(n={self.n}, e={self.e})"

    def __str__(self):
        return f"theta^{self.e}"

    def is_one(self) -> bool:
        return self.e == 0

    def to_complex(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.e / self.n)

    def _check(self, other):
        if other.n != self.n:
            raise ValueError(f"modulus mismatch: {self.n} vs {other.n}")


def order(r: RootPower) -> int:
    """Multiplicative order of ``theta**e``, i.e. ``n / gcd(e, n)``.

    >>> order(RootPower(12, 4)), order(RootPower(8, 6)), order(RootPower(7, 0))
    (3, 4, 1)
    """
    return r.n // gcd(r.e, r.n)


class CycScalar:
    """Element of Q(theta) with a canonical coefficient vector.

    ``coeffs[i]`` is the rational coefficient of ``theta**i``; the vector has
    length ``phi(n)`` (degree of the cyclotomic polynomial).
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=()):
        check_modulus(n)
        d = _degree(n)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > d:
            _, cs = _poly_divmod(cs, cyclotomic_poly(n))
        cs = list(cs) + [Fraction(0)] * (d - len(cs))
        self.n = n
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, n: int) -> CycScalar:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> CycScalar:
        return cls(n, [1])

    @classmethod
    def rational(cls, n: int, q) -> CycScalar:
        return cls(n, [Fraction(q)])

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.n != self.n:
                raise ValueError(f"modulus mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, RootPower):
            if other.n != self.n:
                raise ValueError(f"modulus mismatch: {self.n} vs {other.n}")
            return embed(other)
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return CycScalar(self.n, [Fraction(other)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycScalar(self.n, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.n, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, RootPower):
            return self._shift(other.e)
        prod = _poly_mul(list(self.coeffs), list(o.coeffs))
        return CycScalar(self.n, prod)

    __rmul__ = __mul__

    def _shift(self, e: int) -> CycScalar:
        # multiply by theta**e using the precomputed power table
        table = _power_table(self.n)
        d = len(self.coeffs)
        out = [Fraction(0)] * d
        for i, c in enumerate(self.coeffs):
            if c:
                row = table[(i + e) % self.n]
                for k in range(d):
                    if row[k]:
                        out[k] += c * row[k]
        return CycScalar(self.n, out)

    def inverse(self) -> CycScalar:
        """Inverse via the extended Euclidean algorithm against Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(theta)")
        # invariant: r_i = s_i * self  (mod Phi_n)
        r0, r1 = [Fraction(c) for c in cyclotomic_poly(self.n)], _trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        return CycScalar(self.n, [x / c for x in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> CycScalar:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = CycScalar.one(self.n), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("CycScalar", self.n, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_monomial(self):
        """Return ``(c, e)`` with ``self == c * theta**e`` and ``e`` minimal, or ``None``."""
        if self.is_zero():
            return Fraction(0), 0
        for e in range(self.n):
            q = self._shift(-e)
            if not any(q.coeffs[1:]):
                return q.coeffs[0], e
        return None

    def to_complex(self) -> complex:
        t = cmath.exp(2j * cmath.pi / self.n)
        return sum(complex(c) * t**i for i, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [_frac_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> CycScalar:
        return cls(int(obj["n"]), [Fraction(c) for c in obj["coeffs"]])

    def __repr__(self):
        return f"CycScalar({self.n}, [{', '.join(_frac_str(c) for c in _trim(self.coeffs))}])"

    def __str__(self):
        mono = self.as_monomial()
        if mono is not None:
            c, e = mono
            if not c or not e:
                return str(c)
            return f"theta^{e}" if c == 1 else f"{c}*theta^{e}"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"theta^{i}")
            else:
                terms.append(f"{c}*theta^{i}")
        return " + ".join(terms)


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def embed(r: RootPower) -> CycScalar:
    """``theta**e`` as an element of Q(theta)."""
    return CycScalar(r.n, _power_table(r.n)[r.e])
