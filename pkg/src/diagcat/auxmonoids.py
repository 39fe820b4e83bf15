"""Auxiliary monoids that the diagram families map onto.

Circle forests model nested families of disjoint planar circles: a forest
is a multiset of trees and a tree is one circle enclosing a forest.  They
form a free commutative monoid under disjoint union, generated by the
single-circle trees, with a unary "enclose" operation.  On top of them
live a group completion, a free product with one extra generator, generic
ideal extensions of rectangular bands, a five-element 0-simple semigroup,
a semidirect product with parity twisting, and a triple semigroup whose
middle coordinate absorbs encircled sums.  A validated multiplication
table type covers the finite cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .errors import (
    BadInvolution,
    InstanceMismatch,
    NoIdentity,
    NotAssociative,
    NotClosed,
    RangeError,
)
from .cobordisms import Cobordism, Spectrum, make_cobordism
from .partitions import make_partition, vin, vout

__all__ = [
    "CircleForest",
    "CF_EMPTY",
    "CF_CIRCLE",
    "cf_add",
    "cf_enclose",
    "cf_times",
    "GCElement",
    "gc_zero",
    "gc_embed",
    "gc_add",
    "gc_negate",
    "OCWord",
    "oc_identity",
    "oc_omega",
    "oc_mul",
    "JEInstance",
    "JEElement",
    "JE_INT",
    "JE_NAT",
    "JE_PARITY",
    "je_s",
    "je_pair",
    "je_mul",
    "je_embed_nat",
    "A21Element",
    "A2_ONE",
    "A2_ZERO",
    "a21_pair",
    "a21_elements",
    "a21_mul",
    "a21_star",
    "SDPElement",
    "SDP_ONE",
    "sdp_mul",
    "sdp_star",
    "ReesL2Element",
    "REES_ONE",
    "rees_mul",
    "rees_star",
    "rees_mul_1",
    "rees_star_1",
    "FiniteMonoid",
    "singleton_base",
    "genus_pair",
    "genus_pair_parts",
    "a2_image",
]


# -- circle forests ----------------------------------------------------------

def _tree_depth(t) -> int:
    return 1 + max((_tree_depth(c) for c in t), default=0)


def _tree_size(t) -> int:
    return 1 + sum(_tree_size(c) for c in t)


def _tree_key(t):
    """Total order on canonical trees: depth, then size, then children."""
    return (_tree_depth(t), _tree_size(t), tuple(_tree_key(c) for c in t))


def _render_forest(trees) -> str:
    if not trees:
        return "0"
    return " + ".join(f"({_render_forest(t)})" for t in trees)


@dataclass(frozen=True)
class CircleForest:
    """Multiset of nested circles in canonical (recursively sorted) form."""

    trees: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "trees", tuple(sorted(self.trees, key=_tree_key))
        )

    def __add__(self, other: "CircleForest") -> "CircleForest":
        return CircleForest(self.trees + other.trees)

    def __mul__(self, m: int) -> "CircleForest":
        if m < 0:
            raise RangeError("forest multiples must be non-negative")
        return CircleForest(self.trees * m)

    __rmul__ = __mul__

    def enclose(self) -> "CircleForest":
        """One new circle drawn around the whole forest."""
        return CircleForest((self.trees,))

    @property
    def size(self) -> int:
        return sum(_tree_size(t) for t in self.trees)

    @property
    def depth(self) -> int:
        return max((_tree_depth(t) for t in self.trees), default=0)

    @property
    def is_empty(self) -> bool:
        return not self.trees

    def indecomposables(self) -> tuple["CircleForest", ...]:
        """The single-tree summands, with multiplicity."""
        return tuple(CircleForest((t,)) for t in self.trees)

    def __repr__(self) -> str:
        return _render_forest(self.trees)


CF_EMPTY = CircleForest()
CF_CIRCLE = CF_EMPTY.enclose()


def cf_add(x: CircleForest, y: CircleForest) -> CircleForest:
    return x + y


def cf_enclose(x: CircleForest) -> CircleForest:
    return x.enclose()


def cf_times(x: CircleForest, m: int) -> CircleForest:
    return x * m


# -- group completion --------------------------------------------------------

@dataclass(frozen=True)
class GCElement:
    """Finitely supported integer combination of circle trees."""

    coeffs: tuple = ()

    def __post_init__(self):
        merged: dict = {}
        for tree, c in self.coeffs:
            merged[tree] = merged.get(tree, 0) + c
        cleaned = tuple(
            (t, c)
            for t, c in sorted(merged.items(), key=lambda tc: _tree_key(tc[0]))
            if c != 0
        )
        object.__setattr__(self, "coeffs", cleaned)

    def __add__(self, other: "GCElement") -> "GCElement":
        return GCElement(self.coeffs + other.coeffs)

    def __neg__(self) -> "GCElement":
        return GCElement(tuple((t, -c) for t, c in self.coeffs))

    def __sub__(self, other: "GCElement") -> "GCElement":
        return self + (-other)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs


def gc_zero() -> GCElement:
    return GCElement()


def gc_embed(x: CircleForest) -> GCElement:
    return GCElement(tuple((t, 1) for t in x.trees))


def gc_add(x: GCElement, y: GCElement) -> GCElement:
    return x + y


def gc_negate(x: GCElement) -> GCElement:
    return -x


# -- free product with one extra generator -----------------------------------

@dataclass(frozen=True)
class OCWord:
    """Alternating word c0 o c1 o ... o cq over forests and a generator o.

    The segments tuple lists the forests between consecutive occurrences
    of the extra generator; q = len(segments) - 1 counts the generator.
    """

    segments: tuple = (CF_EMPTY,)

    def __post_init__(self):
        if not self.segments:
            raise RangeError("an alternating word needs at least one segment")

    @property
    def is_identity(self) -> bool:
        return len(self.segments) == 1 and self.segments[0].is_empty

    def __repr__(self) -> str:
        return " + o + ".join(repr(s) for s in self.segments)


def oc_identity() -> OCWord:
    return OCWord((CF_EMPTY,))


def oc_omega() -> OCWord:
    """The extra generator itself."""
    return OCWord((CF_EMPTY, CF_EMPTY))


def oc_mul(x: OCWord, y: OCWord) -> OCWord:
    head = x.segments[:-1]
    tail = y.segments[1:]
    return OCWord(head + (x.segments[-1] + y.segments[0],) + tail)


# -- ideal extensions of rectangular bands -----------------------------------

@dataclass(frozen=True, eq=False)
class JEInstance:
    """One (L, R, S, actions) package; elements carry their instance."""

    name: str
    s_one: object
    s_mul: Callable
    left_act: Callable   # (s, l) -> l'
    right_act: Callable  # (r, s) -> r'
    s_check: Callable
    lr_check: Callable


JE_INT = JEInstance(
    name="additive-integers",
    s_one=0,
    s_mul=lambda a, b: a + b,
    left_act=lambda s, l: s + l,
    right_act=lambda r, s: r + s,
    s_check=lambda v: isinstance(v, int),
    lr_check=lambda v: isinstance(v, int),
)

JE_NAT = JEInstance(
    name="additive-naturals",
    s_one=0,
    s_mul=lambda a, b: a + b,
    left_act=lambda s, l: s + l,
    right_act=lambda r, s: r + s,
    s_check=lambda v: isinstance(v, int) and v >= 0,
    lr_check=lambda v: isinstance(v, int) and v >= 0,
)

JE_PARITY = JEInstance(
    name="parity-on-two-points",
    s_one=0,
    s_mul=lambda a, b: a + b,
    left_act=lambda s, l: (s + l) % 2,
    right_act=lambda r, s: (r + s) % 2,
    s_check=lambda v: isinstance(v, int),
    lr_check=lambda v: v in (0, 1),
)


@dataclass(frozen=True)
class JEElement:
    instance: JEInstance
    kind: str  # "s" or "pair"
    value: tuple

    def __repr__(self) -> str:
        if self.kind == "s":
            return f"{self.value[0]}"
        return f"({self.value[0]},{self.value[1]})"


def je_s(instance: JEInstance, s) -> JEElement:
    if not instance.s_check(s):
        raise RangeError(f"{s!r} is not a scalar of {instance.name}")
    return JEElement(instance, "s", (s,))


def je_pair(instance: JEInstance, l, r) -> JEElement:
    if not (instance.lr_check(l) and instance.lr_check(r)):
        raise RangeError(f"({l!r},{r!r}) is not a pair of {instance.name}")
    return JEElement(instance, "pair", (l, r))


def je_mul(x: JEElement, y: JEElement) -> JEElement:
    if x.instance is not y.instance:
        raise InstanceMismatch(
            f"cannot mix {x.instance.name} with {y.instance.name}"
        )
    ins = x.instance
    if x.kind == "s" and y.kind == "s":
        return JEElement(ins, "s", (ins.s_mul(x.value[0], y.value[0]),))
    if x.kind == "s":
        l, r = y.value
        return JEElement(ins, "pair", (ins.left_act(x.value[0], l), r))
    if y.kind == "s":
        l, r = x.value
        return JEElement(ins, "pair", (l, ins.right_act(r, y.value[0])))
    return JEElement(ins, "pair", (x.value[0], y.value[1]))


def je_embed_nat(x: JEElement) -> JEElement:
    """The inclusion of the non-negative instance into the integer one."""
    if x.instance is not JE_NAT:
        raise InstanceMismatch("embedding is defined on the naturals instance")
    return JEElement(JE_INT, x.kind, x.value)


# -- the five-element 0-simple semigroup with identity -----------------------

@dataclass(frozen=True)
class A21Element:
    tag: str  # "one", "zero" or "pair"
    i: int = 0
    j: int = 0

    def __repr__(self) -> str:
        if self.tag == "pair":
            return f"({self.i},{self.j})"
        return "1" if self.tag == "one" else "0"


A2_ONE = A21Element("one")
A2_ZERO = A21Element("zero")


def a21_pair(i: int, j: int) -> A21Element:
    if i not in (0, 1) or j not in (0, 1):
        raise RangeError("pair entries must be 0 or 1")
    return A21Element("pair", i, j)


def a21_elements() -> tuple[A21Element, ...]:
    return (
        A2_ONE,
        a21_pair(0, 0),
        a21_pair(0, 1),
        a21_pair(1, 0),
        a21_pair(1, 1),
        A2_ZERO,
    )


def a21_mul(x: A21Element, y: A21Element) -> A21Element:
    if x.tag == "one":
        return y
    if y.tag == "one":
        return x
    if x.tag == "zero" or y.tag == "zero":
        return A2_ZERO
    if (x.j, y.i) == (1, 1):
        return A2_ZERO
    return a21_pair(x.i, y.j)


def a21_star(x: A21Element) -> A21Element:
    if x.tag == "pair":
        return a21_pair(x.j, x.i)
    return x


# -- semidirect product with parity twisting ---------------------------------

@dataclass(frozen=True)
class SDPElement:
    left: CircleForest = CF_EMPTY
    right: CircleForest = CF_EMPTY
    shift: int = 0

    def __repr__(self) -> str:
        return f"(({self.left!r}, {self.right!r}), {self.shift})"


SDP_ONE = SDPElement()


def _twist(left: CircleForest, right: CircleForest, k: int):
    return (left, right) if k % 2 == 0 else (right, left)


def sdp_mul(x: SDPElement, y: SDPElement) -> SDPElement:
    c, d = _twist(y.left, y.right, x.shift)
    return SDPElement(x.left + c, x.right + d, x.shift + y.shift)


def sdp_star(x: SDPElement) -> SDPElement:
    # Twisting the pair by the shift is what makes (xy)* == y* x* hold for
    # all parities; on shift-0 and circle-free elements this reduces to
    # plain shift negation.
    a, b = _twist(x.left, x.right, x.shift)
    return SDPElement(a, b, -x.shift)


# -- triple semigroup with encircled middle sums -----------------------------

@dataclass(frozen=True)
class ReesL2Element:
    left: CircleForest = CF_EMPTY
    mid: CircleForest = CF_EMPTY
    right: CircleForest = CF_EMPTY

    def __repr__(self) -> str:
        return f"({self.left!r}, {self.mid!r}, {self.right!r})"


def rees_mul(x: ReesL2Element, y: ReesL2Element) -> ReesL2Element:
    mid = x.mid + (x.right + y.left).enclose() + y.mid
    return ReesL2Element(x.left, mid, y.right)


def rees_star(x: ReesL2Element) -> ReesL2Element:
    return ReesL2Element(x.right, x.mid, x.left)


class _Adjoined:
    """Formal identity adjoined to a semigroup without one."""

    __slots__ = ("label",)

    def __init__(self, label: str):
        self.label = label

    def __repr__(self) -> str:
        return self.label


REES_ONE = _Adjoined("1")


def rees_mul_1(x, y):
    if x is REES_ONE:
        return y
    if y is REES_ONE:
        return x
    return rees_mul(x, y)


def rees_star_1(x):
    return x if x is REES_ONE else rees_star(x)


# -- validated finite multiplication tables ----------------------------------

class FiniteMonoid:
    """Multiplication table over indices 0..n-1, checked on construction."""

    __slots__ = ("table", "one", "star", "labels")

    def __init__(self, table, star=None, labels=None):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        for row in table:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise NotClosed("table is not a square over its own indices")
        one = None
        for e in range(n):
            if all(table[e][x] == x == table[x][e] for x in range(n)):
                one = e
                break
        if one is None:
            raise NoIdentity("table has no identity element")
        for x in range(n):
            for y in range(n):
                xy = table[x][y]
                for z in range(n):
                    if table[xy][z] != table[x][table[y][z]]:
                        raise NotAssociative(
                            f"({x}{y}){z} != {x}({y}{z})"
                        )
        if star is not None:
            star = tuple(star)
            if len(star) != n or any(not 0 <= v < n for v in star):
                raise BadInvolution("star map is not a self-map of the table")
            for x in range(n):
                if star[star[x]] != x:
                    raise BadInvolution(f"star is not involutive at {x}")
                for y in range(n):
                    if star[table[x][y]] != table[star[y]][star[x]]:
                        raise BadInvolution(
                            f"star is not an anti-automorphism at ({x},{y})"
                        )
        self.table = table
        self.one = one
        self.star = star
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_elements(cls, elements, mul, star=None) -> "FiniteMonoid":
        elements = list(elements)
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise NotClosed("duplicate elements")

        def look(e):
            if e not in index:
                raise NotClosed(f"product {e!r} escapes the element list")
            return index[e]

        table = [[look(mul(x, y)) for y in elements] for x in elements]
        star_map = [look(star(x)) for x in elements] if star else None
        return cls(table, star=star_map, labels=elements)

    @property
    def size(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def power(self, i: int, t: int) -> int:
        out = self.one
        for _ in range(t):
            out = self.table[out][i]
        return out

    def idempotents(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if self.table[i][i] == i)

    def units(self) -> tuple[int, ...]:
        return tuple(
            i
            for i in range(self.size)
            if any(
                self.table[i][j] == self.one == self.table[j][i]
                for j in range(self.size)
            )
        )

    def unit_order(self, i: int) -> int:
        if i not in self.units():
            raise RangeError(f"element {i} is not a unit")
        t, acc = 1, i
        while acc != self.one:
            acc = self.table[acc][i]
            t += 1
        return t

    def index_period(self, i: int) -> tuple[int, int]:
        """Least (t, p) with x^t == x^(t+p); t starts at 1."""
        seen = {}
        acc, t = i, 1
        while acc not in seen:
            seen[acc] = t
            acc = self.table[acc][i]
            t += 1
        return seen[acc], t - seen[acc]

    def is_commutative(self) -> bool:
        return all(
            self.table[i][j] == self.table[j][i]
            for i in range(self.size)
            for j in range(self.size)
        )


# -- genus pairs over the disconnected singleton base ------------------------

def singleton_base():
    """The rank-0 shape [1] ~> [1] whose two vertices sit in separate
    blocks; its self-composition makes exactly one dead block."""
    return make_partition(1, 1, [[vin(1)], [vout(1)]])


def genus_pair(i: int, s, j: int) -> Cobordism:
    """Closed surface data over the singleton base: genus i on the in
    block, j on the out block, closed spectrum s."""
    if i not in (0, 1) or j not in (0, 1):
        raise RangeError("genus entries must be 0 or 1 here")
    base = singleton_base()
    return make_cobordism(base, {base.blocks[0]: i, base.blocks[1]: j}, s)


def genus_pair_parts(x: Cobordism):
    """Invert genus_pair: the (i, s, j) coordinates of such a cobordism."""
    base = singleton_base()
    if x.base != base:
        raise RangeError("not a value over the singleton base")
    return x.genus[0], x.spectrum, x.genus[1]


def a2_image(x: Cobordism) -> A21Element:
    """Collapse a genus pair: kill everything with a genus-2 closed part.

    The dead block created by one composition step has genus j + k, so a
    genus-2 closed component appears exactly when two genus-1 boundary
    blocks meet; that is the zero case of the five-element table.
    """
    i, s, j = genus_pair_parts(x)
    if s[2] > 0:
        return A2_ZERO
    return a21_pair(i, j)
