"""Morphisms of the diagrammatic category D_{zeta,n}.

Objects are natural numbers (k side-by-side points, tensor product is
addition).  Morphisms are words of stacked slices read top to bottom; every
slice is a horizontal row of atoms:

* ``STRAND``  1 -> 1, the identity on one point,
* ``CAP``     n -> 0, the generator f,
* ``CUP``     0 -> n, the generator g,

modulo the relations

    g ; f = id_0            (cup then cap, the bubble)
    f ; g = id_n
    id_1 # f = zeta * (f # id_1)

(``;`` is vertical stacking, ``#`` horizontal concatenation).  Every hom space
``Hom(k, l)`` is one-dimensional when ``k = l mod n`` and zero otherwise, so a
normal form is a scalar times a canonical shape: all caps (or all cups)
packed to the left, followed by identity strands.

:func:`normalize` rewrites a word into that shape.  :func:`evaluate_in_vect`
computes the same scalar a different way, by sending the word to
Vect_{Z_n}^zeta and tracking every associator explicitly, without using any of
the relations above.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import repeat

from .cocycle import CocycleSpec
from .cyclotomic import CycScalar, RootPower, embed
from .pointed import _rebracket_exp, left_nested

__all__ = [
    "Atom",
    "STRAND",
    "CAP",
    "CUP",
    "DiagramWord",
    "NormalForm",
    "CompositionError",
    "WordTooLarge",
    "compose",
    "tensor",
    "normalize",
    "hom_dim_D",
    "eval_coeval",
    "verify_snake",
    "evaluate_in_vect",
    "defining_relations",
    "random_word",
    "random_relation_step",
    "max_atoms_default",
]

DEFAULT_MAX_ATOMS = 10_000


def max_atoms_default() -> int:
    """Size limit for rewriting; ``CYCLOCAT_MAX_ATOMS`` overrides the default."""
    raw = os.environ.get("CYCLOCAT_MAX_ATOMS")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"CYCLOCAT_MAX_ATOMS must be an integer, got {raw!r}") from None
    return DEFAULT_MAX_ATOMS


class CompositionError(ValueError):
    """Raised when arities do not match in a composition."""


class WordTooLarge(ValueError):
    pass


class Atom(Enum):
    STRAND = "id"
    CAP = "f"
    CUP = "g"

    def inputs(self, n: int) -> int:
        return 1 if self is Atom.STRAND else (n if self is Atom.CAP else 0)

    def outputs(self, n: int) -> int:
        return 1 if self is Atom.STRAND else (0 if self is Atom.CAP else n)


STRAND, CAP, CUP = Atom.STRAND, Atom.CAP, Atom.CUP


def slice_dom(slc, n: int) -> int:
    return sum(a.inputs(n) for a in slc)


def slice_cod(slc, n: int) -> int:
    return sum(a.outputs(n) for a in slc)


@dataclass(frozen=True)
class DiagramWord:
    """A scalar times a stack of slices, or the zero morphism ``dom -> cod``."""

    spec: CocycleSpec
    dom: int
    cod: int
    slices: tuple[tuple[Atom, ...], ...] = ()
    scalar: CycScalar = None

    def __post_init__(self):
        n = self.spec.n
        scalar = self.scalar
        if scalar is None:
            scalar = CycScalar.one(n)
        elif not isinstance(scalar, CycScalar):
            scalar = CycScalar.one(n) * scalar
        object.__setattr__(self, "scalar", scalar)
        slices = tuple(tuple(s) for s in self.slices)
        object.__setattr__(self, "slices", slices)
        if self.dom < 0 or self.cod < 0:
            raise ValueError("objects are natural numbers")
        width = self.dom
        for i, s in enumerate(slices):
            d = slice_dom(s, n)
            if d != width:
                raise CompositionError(f"slice {i} expects {d} points but receives {width}")
            width = slice_cod(s, n)
        if slices and width != self.cod:
            raise CompositionError(f"word ends at {width} points, declared codomain {self.cod}")
        if not slices and self.dom != self.cod and not scalar.is_zero():
            raise CompositionError("an empty word is an identity and needs dom == cod")

    # constructors

    @classmethod
    def identity(cls, spec: CocycleSpec, k: int) -> DiagramWord:
        return cls(spec, k, k, ((STRAND,) * k,))

    @classmethod
    def cap(cls, spec: CocycleSpec) -> DiagramWord:
        return cls(spec, spec.n, 0, ((CAP,),))

    @classmethod
    def cup(cls, spec: CocycleSpec) -> DiagramWord:
        return cls(spec, 0, spec.n, ((CUP,),))

    @classmethod
    def zero(cls, spec: CocycleSpec, dom: int, cod: int) -> DiagramWord:
        return cls(spec, dom, cod, (), CycScalar.zero(spec.n))

    @classmethod
    def from_slices(cls, spec: CocycleSpec, slices, scalar=None) -> DiagramWord:
        slices = tuple(tuple(s) for s in slices)
        if not slices:
            raise ValueError("need at least one slice to infer arities")
        n = spec.n
        return cls(spec, slice_dom(slices[0], n), slice_cod(slices[-1], n), slices, scalar)

    # properties

    @property
    def n(self) -> int:
        return self.spec.n

    def is_zero(self) -> bool:
        return self.scalar.is_zero()

    def atom_count(self) -> int:
        return sum(len(s) for s in self.slices)

    def scale(self, c) -> DiagramWord:
        return DiagramWord(self.spec, self.dom, self.cod, self.slices, self.scalar * c)

    def __matmul__(self, other):
        return tensor(self, other)

    def then(self, other: DiagramWord) -> DiagramWord:
        return compose(self, other)


def _check_same(a: DiagramWord, b: DiagramWord):
    if a.spec != b.spec:
        raise ValueError(f"words live in different categories: {a.spec} vs {b.spec}")


def compose(top: DiagramWord, bottom: DiagramWord) -> DiagramWord:
    """Stack ``top`` above ``bottom``: first ``top``, then ``bottom``."""
    _check_same(top, bottom)
    if top.cod != bottom.dom:
        raise CompositionError(
            f"cannot compose: top ends at {top.cod} points, bottom starts at {bottom.dom}"
        )
    if top.is_zero() or bottom.is_zero():
        return DiagramWord.zero(top.spec, top.dom, bottom.cod)
    return DiagramWord(
        top.spec, top.dom, bottom.cod, top.slices + bottom.slices, top.scalar * bottom.scalar
    )


def tensor(left: DiagramWord, right: DiagramWord) -> DiagramWord:
    """Place ``left`` and ``right`` side by side, padding the shorter stack with strands."""
    _check_same(left, right)
    dom, cod = left.dom + right.dom, left.cod + right.cod
    if left.is_zero() or right.is_zero():
        return DiagramWord.zero(left.spec, dom, cod)
    depth = max(len(left.slices), len(right.slices))
    if depth == 0:
        return DiagramWord(left.spec, dom, cod, (), left.scalar * right.scalar)

    def padded(w):
        pad = (STRAND,) * w.cod
        return list(w.slices) + [pad] * (depth - len(w.slices))

    rows = [l + r for l, r in zip(padded(left), padded(right))]
    if not left.slices:
        rows = [(STRAND,) * left.dom + r for r in right.slices]
    elif not right.slices:
        rows = [l + (STRAND,) * right.dom for l in left.slices]
    return DiagramWord(left.spec, dom, cod, tuple(rows), left.scalar * right.scalar)


# -- normal forms ----------------------------------------------------------------


@dataclass(frozen=True)
class NormalForm:
    """``scalar`` times the canonical basis morphism of ``Hom(dom, cod)``.

    The canonical morphism is ``f^p # id(cod)`` when ``dom = cod + p*n``,
    ``g^q # id(dom)`` when ``cod = dom + q*n`` and ``id(dom)`` otherwise.
    """

    spec: CocycleSpec
    dom: int
    cod: int
    scalar: CycScalar

    @property
    def hom_dim(self) -> int:
        return hom_dim_D(self.spec.n, self.dom, self.cod)

    @property
    def caps(self) -> int:
        return max(self.dom - self.cod, 0) // self.spec.n if self.hom_dim else 0

    @property
    def cups(self) -> int:
        return max(self.cod - self.dom, 0) // self.spec.n if self.hom_dim else 0

    @property
    def residual(self) -> int:
        return min(self.dom, self.cod)

    def is_zero(self) -> bool:
        return self.scalar.is_zero()

    def shape(self) -> str:
        if not self.hom_dim:
            return "0"
        if self.caps:
            return f"caps^{self.caps} ⊗ id^{self.residual}"
        if self.cups:
            return f"cups^{self.cups} ⊗ id^{self.residual}"
        return f"id^{self.residual}"

    def to_word(self) -> DiagramWord:
        if not self.hom_dim or self.is_zero():
            return DiagramWord.zero(self.spec, self.dom, self.cod)
        atom = CAP if self.caps else CUP
        row = (atom,) * (self.caps or self.cups) + (STRAND,) * self.residual
        return DiagramWord(self.spec, self.dom, self.cod, (row,), self.scalar)

    def to_json(self) -> dict:
        return {
            "scalar": self.scalar.to_json(),
            "shape": self.shape(),
            "dom": self.dom,
            "cod": self.cod,
        }


def hom_dim_D(n: int, k: int, l: int) -> int:
    """Dimension of ``Hom(k, l)``: 1 when ``k = l mod n``, else 0."""
    return 1 if (k - l) % n == 0 else 0


def normalize(w: DiagramWord, trace: list | None = None, max_atoms: int | None = None) -> NormalForm:
    """Rewrite ``w`` into its normal form.

    Slices are split into single-generator layers (interchange law) and folded
    one at a time into a running block ``f^p # id(r)`` or ``g^q # id(r)``.  A new
    cap or cup at offset x is first slid to the left edge, which costs
    ``zeta**x`` for a cap and ``zeta**-x`` for a cup, and then either joins the
    block or cancels against its leftmost generator.
    """
    limit = max_atoms_default() if max_atoms is None else max_atoms
    if w.atom_count() > limit:
        raise WordTooLarge(f"word has {w.atom_count()} atoms, limit is {limit}")
    spec = w.spec
    if w.is_zero() or not hom_dim_D(spec.n, w.dom, w.cod):
        return NormalForm(spec, w.dom, w.cod, CycScalar.zero(spec.n))
    n = spec.n
    p, q, r = 0, 0, w.dom  # block is f^p # id(r) or g^q # id(r); never both p and q
    z = 0  # accumulated power of zeta
    for si, slc in enumerate(w.slices):
        pos = 0
        for atom in slc:
            if atom is STRAND:
                pos += 1
                continue
            x = pos
            if atom is CAP:
                z += x
                if trace is not None and x:
                    trace.append(f"slice {si}: slide cap left past {x} strand(s), factor zeta^{x}")
                if q:
                    q -= 1
                    if trace is not None:
                        trace.append(f"slice {si}: cancel cap against cup, g ; f = id_0")
                else:
                    p += 1
                    r -= n
                    if trace is not None:
                        trace.append(f"slice {si}: stack cap, block f^{p} # id({r})")
            else:
                if p:
                    # the cup slides past the p*n legs of the cap block as well
                    z -= x + p * n
                    p -= 1
                    r += n
                    if trace is not None:
                        trace.append(
                            f"slice {si}: slide cup left past {x + (p + 1) * n} strand(s), "
                            f"factor zeta^-{x + (p + 1) * n}"
                        )
                        trace.append(f"slice {si}: cancel cup against cap, f ; g = id_{n}")
                else:
                    z -= x
                    q += 1
                    if trace is not None:
                        if x:
                            trace.append(f"slice {si}: slide cup left past {x} strand(s), factor zeta^-{x}")
                        trace.append(f"slice {si}: stack cup, block g^{q} # id({r})")
                pos += n
    assert not (p and q)
    width = r if not q else q * n + r
    assert width == w.cod and (p * n + r if not q else r) == w.dom, "normal form arity drift"
    factor = RootPower(n, spec.a * z)
    return NormalForm(spec, w.dom, w.cod, w.scalar * factor)


# -- evaluation in Vect_{Z_n}^zeta ------------------------------------------------


@lru_cache(maxsize=4096)
def _comb(n: int, width: int):
    # delta_1^{(x) width}, left-nested; the unit for width 0
    return left_nested(repeat(1 % n, width), n)


def _slice_exponent(n: int, a: int, slc) -> int:
    # theta-exponent of F(slice) between left-nested source and target,
    # with lambda and mu taken as the canonical (scalar 1) maps
    if CAP not in slc and CUP not in slc:
        return 0
    block = _comb(n, n)
    ins, outs = [], []
    for atom in slc:
        if atom is STRAND:
            ins.append(1 % n)
            outs.append(1 % n)
        elif atom is CAP:
            ins.append(block)
        else:
            outs.append(block)
    grouped_in = left_nested(ins, n)
    grouped_out = left_nested(outs, n)
    exp = _rebracket_exp(n, a, _comb(n, slice_dom(slc, n)), grouped_in)
    exp += _rebracket_exp(n, a, grouped_out, _comb(n, slice_cod(slc, n)))
    return exp


def _raw_value(w: DiagramWord, lam: CycScalar):
    n, a = w.spec.n, w.spec.a
    exp = 0
    caps = cups = 0
    for slc in w.slices:
        exp += _slice_exponent(n, a, slc)
        for atom in slc:
            if atom is CAP:
                caps += 1
            elif atom is CUP:
                cups += 1
    value = embed(RootPower(n, exp))
    # each cap contributes lam, each cup its inverse mu
    if lam != 1:
        value = value * lam ** (caps - cups)
    return value


def evaluate_in_vect(w: DiagramWord, lam=None) -> NormalForm:
    """Image of ``w`` under the functor to Vect_{Z_n}^zeta.

    ``k`` points go to the left-nested ``delta_1^{(x) k}``, a cap goes to
    ``lam`` times the canonical map ``delta_1^{(x) n} -> 1`` and a cup to its
    inverse.  The value of every slice is computed by rebracketing into the
    grouping the slice needs and back, multiplying cocycle values along the
    way.  The result is expressed relative to the image of the canonical
    morphism, so it is directly comparable with :func:`normalize`.
    """
    spec = w.spec
    n = spec.n
    if w.is_zero() or not hom_dim_D(n, w.dom, w.cod):
        return NormalForm(spec, w.dom, w.cod, CycScalar.zero(n))
    lam = CycScalar.one(n) if lam is None else CycScalar.one(n) * lam
    if lam.is_zero():
        raise ValueError("lambda must be invertible")
    basis = NormalForm(spec, w.dom, w.cod, CycScalar.one(n)).to_word()
    return NormalForm(spec, w.dom, w.cod, w.scalar * _raw_value(w, lam) / _raw_value(basis, lam))


# -- duals -------------------------------------------------------------------------


def eval_coeval(spec: CocycleSpec, k: int) -> tuple[DiagramWord, DiagramWord]:
    """Evaluation ``(n-k) # k -> 0`` and coevaluation ``0 -> k # (n-k)`` exhibiting n-k as dual of k."""
    n = spec.n
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    ev = DiagramWord.cap(spec).scale(spec.zeta ** (-k))
    coev = DiagramWord.cup(spec)
    return ev, coev


def verify_snake(spec: CocycleSpec, k: int) -> bool:
    """Both zig-zag composites normalize to identities with scalar exactly 1."""
    n = spec.n
    ev, coev = eval_coeval(spec, k)
    idk = DiagramWord.identity(spec, k)
    iddual = DiagramWord.identity(spec, n - k)
    first = compose(tensor(coev, idk), tensor(idk, ev))
    second = compose(tensor(iddual, coev), tensor(ev, iddual))
    one = CycScalar.one(n)
    a, b = normalize(first), normalize(second)
    return (a.dom, a.cod, a.scalar) == (k, k, one) and (b.dom, b.cod, b.scalar) == (n - k, n - k, one)


def defining_relations(spec: CocycleSpec):
    """The three relations as ``(name, left-hand word, right-hand normal form)``."""
    n = spec.n
    f, g = DiagramWord.cap(spec), DiagramWord.cup(spec)
    one = CycScalar.one(n)
    return [
        ("bubble", compose(g, f), NormalForm(spec, 0, 0, one)),
        ("cap-cup", compose(f, g), NormalForm(spec, n, n, one)),
        (
            "slide",
            tensor(DiagramWord.identity(spec, 1), f),
            NormalForm(spec, n + 1, 1, one * spec.zeta),
        ),
    ]


# -- random words and random relation moves --------------------------------------


def random_word(
    spec: CocycleSpec,
    rng: random.Random,
    max_atoms: int = 60,
    max_width: int | None = None,
    dom: int | None = None,
) -> DiagramWord:
    """A random well-typed unit-scalar word with at most ``max_atoms`` atoms."""
    n = spec.n
    if max_width is None:
        max_width = 3 * n + 3
    width = rng.randrange(0, max_width + 1) if dom is None else dom
    start = width
    budget = rng.randrange(max(width, 1), max(max_atoms, width) + 1)
    slices = []
    used = 0
    for _ in range(max_atoms):
        row = []
        rem, out = width, 0
        while rem or (out + n <= max_width and rng.random() < 0.2):
            choices = [STRAND] if rem else []
            if rem >= n:
                choices += [CAP, CAP]
            if out + n + rem <= max_width:
                choices.append(CUP)
            atom = rng.choice(choices or [STRAND])
            row.append(atom)
            rem -= atom.inputs(n)
            out += atom.outputs(n)
        if used + len(row) > budget:
            break
        slices.append(tuple(row))
        used += len(row)
        width = out
    if not slices:
        return DiagramWord(spec, start, start, ())
    return DiagramWord(spec, start, width, tuple(slices))


def _layer(width_left: int, atom: Atom, width_right: int):
    return (STRAND,) * width_left + (atom,) + (STRAND,) * width_right


def random_relation_step(w: DiagramWord, rng: random.Random) -> DiagramWord:
    """Apply one randomly chosen relation (either direction) somewhere in ``w``.

    The returned word denotes the same morphism.
    """
    spec, n = w.spec, w.spec.n
    slices = list(w.slices) or [(STRAND,) * w.dom]
    widths = [w.dom] + [slice_cod(s, n) for s in slices]
    zeta = spec.zeta
    moves = ["bubble+", "capcup+", "swap", "split", "cancel", "merge"]
    rng.shuffle(moves)
    for move in moves:
        if move == "bubble+":
            i = rng.randrange(len(slices) + 1)
            wd = widths[i]
            p = rng.randrange(wd + 1)
            new = [_layer(p, CUP, wd - p), _layer(p, CAP, wd - p)]
            return DiagramWord(spec, w.dom, w.cod, tuple(slices[:i] + new + slices[i:]), w.scalar)
        if move == "capcup+":
            i = rng.randrange(len(slices) + 1)
            wd = widths[i]
            if wd < n:
                continue
            p = rng.randrange(wd - n + 1)
            new = [_layer(p, CAP, wd - n - p), _layer(p, CUP, wd - n - p)]
            return DiagramWord(spec, w.dom, w.cod, tuple(slices[:i] + new + slices[i:]), w.scalar)
        if move == "swap":
            spots = [
                (i, j)
                for i, s in enumerate(slices)
                for j in range(len(s) - 1)
                if (s[j] is STRAND) != (s[j + 1] is STRAND)
            ]
            if not spots:
                continue
            i, j = rng.choice(spots)
            s = list(slices[i])
            pair = (s[j], s[j + 1])
            # id # f = zeta f # id  and  id # g = zeta^-1 g # id
            if pair == (STRAND, CAP):
                c = zeta
            elif pair == (CAP, STRAND):
                c = zeta.inverse()
            elif pair == (STRAND, CUP):
                c = zeta.inverse()
            else:
                c = zeta
            s[j], s[j + 1] = s[j + 1], s[j]
            new = slices[:i] + [tuple(s)] + slices[i + 1 :]
            return DiagramWord(spec, w.dom, w.cod, tuple(new), w.scalar * c)
        if move == "split":
            spots = [i for i, s in enumerate(slices) if sum(a is not STRAND for a in s) >= 2]
            if not spots:
                continue
            i = rng.choice(spots)
            s = slices[i]
            gens = [j for j, a in enumerate(s) if a is not STRAND]
            m = rng.choice(gens[1:])
            upper = s[:m] + (STRAND,) * slice_dom(s[m:], n)
            lower = (STRAND,) * slice_cod(s[:m], n) + s[m:]
            new = slices[:i] + [upper, lower] + slices[i + 1 :]
            return DiagramWord(spec, w.dom, w.cod, tuple(new), w.scalar)
        if move == "cancel":
            spots = []
            for i in range(len(slices) - 1):
                s, t = slices[i], slices[i + 1]
                gs = [j for j, a in enumerate(s) if a is not STRAND]
                gt = [j for j, a in enumerate(t) if a is not STRAND]
                if len(gs) == 1 and len(gt) == 1 and gs == gt and s[gs[0]] is not t[gt[0]]:
                    spots.append(i)
            if not spots:
                continue
            i = rng.choice(spots)
            new = slices[:i] + slices[i + 2 :]
            if not new:
                new = [(STRAND,) * w.dom]
            return DiagramWord(spec, w.dom, w.cod, tuple(new), w.scalar)
        if move == "merge":
            # drop an all-strand slice (identity law)
            spots = [i for i, s in enumerate(slices) if all(a is STRAND for a in s)]
            if not spots or len(slices) == 1:
                continue
            i = rng.choice(spots)
            return DiagramWord(spec, w.dom, w.cod, tuple(slices[:i] + slices[i + 1 :]), w.scalar)
    return w
