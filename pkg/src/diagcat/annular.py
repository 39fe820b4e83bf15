"""Shift-invariant non-crossing matchings and their annular quotients.

An affine diagram [m] ~> [n] is a perfect matching of Z x {1..m} (top row)
with Z x {1..n} (bottom row) that is invariant under the unit shift
(t, k) -> (t+1, k) and non-crossing when drawn in the strip.  It is stored
by the partner of each point in the offset-0 window: partner entries are
APoint(offset, side, index) triples.

The linear order behind the non-crossing test runs through the bottom row
in reverse lexicographic order, then the top row in lexicographic order;
a matching is non-crossing when for every two strings {x, x'} and {y, y'}
the points y, y' are either both inside or both outside the interval
[x, x'].

Composition glues the bottom row of the first diagram to the top row of
the second and traces strings through the shared middle row.  Closed
middle cycles are counted by the net shift they pick up per period:
shift 0 components are contractible circles (b0), shift +-1 components
wrap the annulus once (bw).  A cycle can never pick up more than one unit
of shift without self-intersection, which compose_affine asserts.

The quotient tower keeps successively less of this data: AffineTriple
keeps both circle counters, AffinePair only the wrapping one, the bare
AffineDiagram none, and AnnularPartition also forgets the offsets,
leaving an ordinary partition arrow.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import (
    CrossingError,
    NotInvolutive,
    ParityError,
    RangeError,
    RankZero,
    RegularityMismatch,
    NotRegular,
    NegativeLabel,
    ShapeMismatch,
    UnmatchedPoint,
    BoundExceeded,
)
from .partitions import (
    IN,
    OUT,
    Partition,
    Vertex,
    compose as compose_partition,
    make_partition,
    reflect,
    rotate,
)

__all__ = [
    "APoint",
    "AffineDiagram",
    "make_affine",
    "affine_identity",
    "zeta",
    "lambda_pow",
    "cup_cap",
    "AffineComposition",
    "compose_affine",
    "affine_power",
    "AffinePair",
    "AffineTriple",
    "make_pair",
    "make_triple",
    "compose_pair",
    "compose_triple",
    "star_pair",
    "star_triple",
    "sigma_affine",
    "rho_affine",
    "AnnularPartition",
    "DeformedAnnular",
    "project_to_ann",
    "compose_ann",
    "compose_deformed_ann",
    "star_deformed_ann",
    "shift_gap",
    "is_rectangular",
    "enumerate_affine",
    "build_ann_monoid",
    "AnnMonoid",
]


class APoint(NamedTuple):
    """A marked point (offset, side, index) of the doubly infinite strip."""

    offset: int
    side: int
    index: int

    def shifted(self, t: int) -> "APoint":
        return APoint(self.offset + t, self.side, self.index)

    def __repr__(self) -> str:
        return f"({self.offset},{'in' if self.side == IN else 'out'}{self.index})"


def _order_key(p: APoint):
    """Total order: bottom row in reverse lex below the whole top row."""
    if p.side == OUT:
        return (0, -p.offset, -p.index)
    return (1, p.offset, p.index)


class AffineDiagram:
    """Validated shift-invariant non-crossing matching, window storage."""

    __slots__ = ("m", "n", "partner", "_hash")

    def __init__(self, m: int, n: int, partner: tuple[APoint, ...]):
        self.m = m
        self.n = n
        self.partner = partner
        self._hash = hash((m, n, partner))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AffineDiagram)
            and self.m == other.m
            and self.n == other.n
            and self.partner == other.partner
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        pts = [APoint(0, IN, i + 1) for i in range(self.m)]
        pts += [APoint(0, OUT, j + 1) for j in range(self.n)]
        body = ", ".join(f"{p!r}->{q!r}" for p, q in zip(pts, self.partner))
        return f"AffineDiagram({self.m}->{self.n}: {body})"

    def __mul__(self, other: "AffineDiagram") -> "AffineDiagram":
        return compose_affine(self, other).product

    def partner_of(self, side: int, index: int, offset: int = 0) -> APoint:
        slot = index - 1 if side == IN else self.m + index - 1
        return self.partner[slot].shifted(offset)

    @property
    def rank(self) -> int:
        """Number of transversal strings per period."""
        return sum(1 for p in self.partner[: self.m] if p.side == OUT)

    def strings(self) -> list[tuple[APoint, APoint]]:
        """One representative per string orbit, lowest endpoint at offset 0."""
        seen = set()
        out = []
        for i, q in enumerate(self.partner):
            side, index = (IN, i + 1) if i < self.m else (OUT, i - self.m + 1)
            p = APoint(0, side, index)
            shift = -min(0, q.offset)
            rep = tuple(sorted((p.shifted(shift), q.shifted(shift))))
            if rep not in seen:
                seen.add(rep)
                out.append(rep)
        return out


def _fundamental_slots(m: int, n: int) -> list[tuple[int, int]]:
    return [(IN, i) for i in range(1, m + 1)] + [(OUT, j) for j in range(1, n + 1)]


def make_affine(m: int, n: int, partners) -> AffineDiagram:
    """Build a validated affine diagram.

    partners maps each window point to its partner; accepted forms are a
    mapping {(side, index): (offset, side, index)} or an iterable of such
    pairs, with sides given as "in"/"out" strings or the IN/OUT constants.
    """
    if m < 0 or n < 0:
        raise RangeError("shape must be non-negative")
    if (m + n) % 2:
        raise ParityError(f"[{m}]~>[{n}] admits no perfect matching")
    side_of = {"in": IN, "out": OUT, IN: IN, OUT: OUT}
    table: dict[tuple[int, int], APoint] = {}
    items = partners.items() if hasattr(partners, "items") else partners
    for key, value in items:
        side, index = key
        offset, pside, pindex = value
        if side not in side_of or pside not in side_of:
            raise RangeError(f"unknown side in {key!r} -> {value!r}")
        slot = (side_of[side], int(index))
        if slot in table:
            raise UnmatchedPoint(f"duplicate partner for {slot}")
        table[slot] = APoint(int(offset), side_of[pside], int(pindex))

    slots = _fundamental_slots(m, n)
    for slot in slots:
        if slot not in table:
            raise UnmatchedPoint(f"no partner for {slot}")
        q = table[slot]
        hi = m if q.side == IN else n
        if not 1 <= q.index <= hi:
            raise RangeError(f"partner {q!r} out of range")
    if len(table) != m + n:
        extra = [s for s in table if s not in set(slots)]
        raise UnmatchedPoint(f"partners for unknown points: {extra}")

    for slot in slots:
        q = table[slot]
        if (q.side, q.index) == slot:
            raise NotInvolutive(f"{slot} partnered with its own orbit")
        back = table[(q.side, q.index)]
        if (back.side, back.index) != slot or back.offset != -q.offset:
            raise NotInvolutive(f"partner map not self-inverse at {slot}")

    diagram = AffineDiagram(m, n, tuple(table[s] for s in slots))
    _check_crossings(diagram)
    return diagram


def _check_crossings(d: AffineDiagram, window: int | None = None) -> None:
    """Reject crossing strings; checks all shifts within the offset window."""
    reps = d.strings()
    if window is None:
        window = max((abs(q.offset) for q in d.partner), default=0) + 1
    shifted = []
    for rep in reps:
        for t in range(-window, window + 1):
            a, b = rep[0].shifted(t), rep[1].shifted(t)
            ka, kb = _order_key(a), _order_key(b)
            shifted.append((min(ka, kb), max(ka, kb)))
    for (x, x1), (y, y1) in itertools.combinations(shifted, 2):
        inside_y = x < y < x1
        inside_y1 = x < y1 < x1
        if inside_y != inside_y1:
            raise CrossingError("strings cross")


def affine_identity(n: int) -> AffineDiagram:
    return AffineDiagram(
        n,
        n,
        tuple(APoint(0, OUT, i) for i in range(1, n + 1))
        + tuple(APoint(0, IN, i) for i in range(1, n + 1)),
    )


def zeta(n: int) -> AffineDiagram:
    """The unit rotation: top k joins bottom k+1, wrapping at the seam."""
    if n < 1:
        raise RangeError("zeta needs n >= 1")
    tops = [
        APoint(0, OUT, k + 1) if k < n else APoint(1, OUT, 1) for k in range(1, n + 1)
    ]
    bottoms = [
        APoint(0, IN, k - 1) if k > 1 else APoint(-1, IN, n) for k in range(1, n + 1)
    ]
    return AffineDiagram(n, n, tuple(tops) + tuple(bottoms))


def lambda_pow(n: int, r: int = 1) -> AffineDiagram:
    """The central full twist to the r-th power: (t, k) -> (t + r, k)."""
    return AffineDiagram(
        n,
        n,
        tuple(APoint(r, OUT, k) for k in range(1, n + 1))
        + tuple(APoint(-r, IN, k) for k in range(1, n + 1)),
    )


def cup_cap(n: int, i: int) -> AffineDiagram:
    """Adjacent cup-cap joining i with i+1 (indices mod n) on both rows."""
    if n < 2 or not 1 <= i <= n:
        raise RangeError("cup_cap needs n >= 2 and 1 <= i <= n")
    j = i + 1 if i < n else 1
    wrap = 1 if i == n else 0
    tops = [APoint(0, OUT, k) for k in range(1, n + 1)]
    bottoms = [APoint(0, IN, k) for k in range(1, n + 1)]
    tops[i - 1] = APoint(wrap, IN, j)
    tops[j - 1] = APoint(-wrap, IN, i)
    bottoms[i - 1] = APoint(wrap, OUT, j)
    bottoms[j - 1] = APoint(-wrap, OUT, i)
    return AffineDiagram(n, n, tuple(tops) + tuple(bottoms))


class AffineComposition(NamedTuple):
    product: AffineDiagram
    b0: int  # contractible circles created
    bw: int  # wrapping circles created


_TRACE_GUARD = 100_000


def compose_affine(a: AffineDiagram, b: AffineDiagram) -> AffineComposition:
    """Glue a's bottom row to b's top row and trace the strings."""
    if a.n != b.m:
        raise ShapeMismatch(
            f"cannot compose [{a.m}]~>[{a.n}] with [{b.m}]~>[{b.n}]"
        )
    mid = a.n
    visited: set[int] = set()

    def follow(start_side: int, index: int) -> APoint:
        if start_side == IN:
            t, side, k = a.partner_of(IN, index)
            via_a = True
        else:
            t, side, k = b.partner_of(OUT, index)
            via_a = False
        for _ in range(_TRACE_GUARD):
            if via_a:
                if side == IN:
                    return APoint(t, IN, k)
                visited.add(k)
                t, side, k = b.partner_of(IN, k, t)
                via_a = False
            else:
                if side == OUT:
                    return APoint(t, OUT, k)
                visited.add(k)
                t, side, k = a.partner_of(OUT, k, t)
                via_a = True
        raise AssertionError("string trace did not terminate")

    partner = [follow(IN, i) for i in range(1, a.m + 1)]
    partner += [follow(OUT, j) for j in range(1, b.n + 1)]
    product = AffineDiagram(a.m, b.n, tuple(partner))

    b0 = bw = 0
    assigned: set[int] = set(visited)
    for k0 in range(1, mid + 1):
        if k0 in assigned:
            continue
        t, k, parity = 0, k0, 0
        for _ in range(_TRACE_GUARD):
            assigned.add(k)
            if parity == 0:
                t, side, k = b.partner_of(IN, k, t)
            else:
                t, side, k = a.partner_of(OUT, k, t)
            assert side == (IN if parity == 0 else OUT), "cycle left the middle row"
            parity ^= 1
            if parity == 0 and k == k0:
                break
        else:
            raise AssertionError("middle cycle did not close")
        assert abs(t) <= 1, "middle cycle wraps more than once"
        if t == 0:
            b0 += 1
        else:
            bw += 1
    return AffineComposition(product, b0, bw)


def affine_power(a: AffineDiagram, k: int) -> AffineDiagram:
    if a.m != a.n or k < 1:
        raise ShapeMismatch("powers need a square diagram and k >= 1")
    out = a
    for _ in range(k - 1):
        out = compose_affine(out, a).product
    return out


# -- decorated variants ------------------------------------------------------

@dataclass(frozen=True)
class AffinePair:
    """Diagram plus the count k of wrapping circles."""

    skeleton: AffineDiagram
    k: int
    regular: bool = False


@dataclass(frozen=True)
class AffineTriple:
    """Diagram plus wrapping (k) and contractible (k0) circle counts."""

    skeleton: AffineDiagram
    k: int
    k0: int
    regular: bool = False


def _check_circle_count(skeleton: AffineDiagram, k: int, regular: bool, what: str) -> None:
    if skeleton.rank > 0 and k != 0:
        raise RangeError(f"{what} must be 0 alongside a transversal string")
    if not regular and k < 0:
        raise NegativeLabel(f"negative {what} in non-regular value")


def make_pair(skeleton: AffineDiagram, k: int, regular: bool = False) -> AffinePair:
    _check_circle_count(skeleton, k, regular, "wrap count")
    return AffinePair(skeleton, k, regular)


def make_triple(
    skeleton: AffineDiagram, k: int, k0: int, regular: bool = False
) -> AffineTriple:
    _check_circle_count(skeleton, k, regular, "wrap count")
    if not regular and k0 < 0:
        raise NegativeLabel("negative circle count in non-regular value")
    return AffineTriple(skeleton, k, k0, regular)


def compose_pair(x: AffinePair, y: AffinePair) -> AffinePair:
    if x.regular != y.regular:
        raise RegularityMismatch("cannot mix regular and non-regular values")
    res = compose_affine(x.skeleton, y.skeleton)
    if res.product.rank > 0:
        assert res.bw == 0 and x.k == 0 and y.k == 0
    return AffinePair(res.product, x.k + y.k + res.bw, x.regular)


def compose_triple(x: AffineTriple, y: AffineTriple) -> AffineTriple:
    if x.regular != y.regular:
        raise RegularityMismatch("cannot mix regular and non-regular values")
    res = compose_affine(x.skeleton, y.skeleton)
    if res.product.rank > 0:
        assert res.bw == 0 and x.k == 0 and y.k == 0
    return AffineTriple(res.product, x.k + y.k + res.bw, x.k0 + y.k0 + res.b0, x.regular)


def star_pair(x: AffinePair) -> AffinePair:
    """Inverse-like star with x x* x == x on the regular extension."""
    if not x.regular:
        raise NotRegular("star needs a regular value")
    s = sigma_affine(x.skeleton)
    fwd = compose_affine(x.skeleton, s)
    bwd = compose_affine(s, x.skeleton)
    return AffinePair(s, -x.k - fwd.bw - bwd.bw, True)


def star_triple(x: AffineTriple) -> AffineTriple:
    if not x.regular:
        raise NotRegular("star needs a regular value")
    s = sigma_affine(x.skeleton)
    fwd = compose_affine(x.skeleton, s)
    bwd = compose_affine(s, x.skeleton)
    return AffineTriple(
        s, -x.k - fwd.bw - bwd.bw, -x.k0 - fwd.b0 - bwd.b0, True
    )


def sigma_affine(x):
    """Reflection swapping the two rows while keeping offsets."""
    if isinstance(x, AffineDiagram):
        flip = {IN: OUT, OUT: IN}
        new = [
            APoint(q.offset, flip[q.side], q.index)
            for q in x.partner[x.m :] + x.partner[: x.m]
        ]
        return AffineDiagram(x.n, x.m, tuple(new))
    if isinstance(x, AffinePair):
        return AffinePair(sigma_affine(x.skeleton), x.k, x.regular)
    if isinstance(x, AffineTriple):
        return AffineTriple(sigma_affine(x.skeleton), x.k, x.k0, x.regular)
    if isinstance(x, AnnularPartition):
        return AnnularPartition(reflect(x.base))
    if isinstance(x, DeformedAnnular):
        return DeformedAnnular(AnnularPartition(reflect(x.base.base)), x.k, x.regular)
    raise TypeError(f"no reflection for {type(x).__name__}")


def rho_affine(x):
    """Half-turn: reflect rows, negate offsets, reverse both index orders."""
    if isinstance(x, AffineDiagram):
        new = []
        # New top row has x.n indices; new top (0, k) is the image of the
        # old bottom point (0, n + 1 - k), and so on.
        for k in range(1, x.n + 1):
            q = x.partner_of(OUT, x.n + 1 - k)
            if q.side == IN:
                new.append(APoint(-q.offset, OUT, x.m + 1 - q.index))
            else:
                new.append(APoint(-q.offset, IN, x.n + 1 - q.index))
        for k in range(1, x.m + 1):
            q = x.partner_of(IN, x.m + 1 - k)
            if q.side == IN:
                new.append(APoint(-q.offset, OUT, x.m + 1 - q.index))
            else:
                new.append(APoint(-q.offset, IN, x.n + 1 - q.index))
        return AffineDiagram(x.n, x.m, tuple(new))
    if isinstance(x, AffinePair):
        return AffinePair(rho_affine(x.skeleton), x.k, x.regular)
    if isinstance(x, AffineTriple):
        return AffineTriple(rho_affine(x.skeleton), x.k, x.k0, x.regular)
    if isinstance(x, AnnularPartition):
        return AnnularPartition(rotate(x.base))
    if isinstance(x, DeformedAnnular):
        return DeformedAnnular(AnnularPartition(rotate(x.base.base)), x.k, x.regular)
    raise TypeError(f"no half-turn for {type(x).__name__}")


# -- annular quotients -------------------------------------------------------

@dataclass(frozen=True)
class AnnularPartition:
    """Partition arrow that arises as the shadow of an affine diagram."""

    base: Partition

    @property
    def rank(self) -> int:
        return self.base.rank

    def __mul__(self, other: "AnnularPartition") -> "AnnularPartition":
        return compose_ann(self, other)[0]


@dataclass(frozen=True)
class DeformedAnnular:
    base: AnnularPartition
    k: int
    regular: bool = False


def project_to_ann(a: AffineDiagram) -> AnnularPartition:
    """Forget offsets: each string becomes a two-element block."""
    blocks = set()
    for i, q in enumerate(a.partner):
        side, index = (IN, i + 1) if i < a.m else (OUT, i - a.m + 1)
        blocks.add(frozenset({Vertex(side, index), Vertex(q.side, q.index)}))
    return AnnularPartition(make_partition(a.m, a.n, [sorted(b) for b in blocks]))


def compose_ann(x: AnnularPartition, y: AnnularPartition) -> tuple[AnnularPartition, int]:
    """Compose the shadows; returns the product and the dead-block count,
    which equals the total number of circles the affine composition makes."""
    res = compose_partition(x.base, y.base)
    return AnnularPartition(res.product), res.b


def compose_deformed_ann(x: DeformedAnnular, y: DeformedAnnular) -> DeformedAnnular:
    if x.regular != y.regular:
        raise RegularityMismatch("cannot mix regular and non-regular values")
    prod, dead = compose_ann(x.base, y.base)
    return DeformedAnnular(prod, x.k + y.k + dead, x.regular)


def star_deformed_ann(x: DeformedAnnular) -> DeformedAnnular:
    if not x.regular:
        raise NotRegular("star needs a regular value")
    s = AnnularPartition(reflect(x.base.base))
    fwd = compose_ann(x.base, s)[1]
    bwd = compose_ann(s, x.base)[1]
    return DeformedAnnular(s, -x.k - fwd - bwd, True)


def shift_gap(x: AffineDiagram, y: AffineDiagram):
    """The twist power q with y == lambda^q x, or None.

    Only diagrams with at least one transversal string determine such a q;
    the rank-0 fibers of the shadow map are trivial instead.
    """
    if x.m != y.m or x.n != y.n:
        raise ShapeMismatch("diagrams must share a shape")
    if x.rank == 0:
        raise RankZero("shift gap needs a transversal string")
    if project_to_ann(x) != project_to_ann(y):
        return None
    for i in range(x.m):
        if x.partner[i].side == OUT:
            q = y.partner[i].offset - x.partner[i].offset
            break
    if compose_affine(lambda_pow(x.m, q), x).product != y:
        return None
    return q


def is_rectangular(a: AffineDiagram) -> bool:
    """True when no string crosses the seam between adjacent windows,
    i.e. every partner offset is 0, so the diagram is a glued-in
    rectangle diagram."""
    return all(q.offset == 0 for q in a.partner)


def enumerate_affine(m: int, n: int, max_offset: int, bound: int = 10):
    """Yield every valid affine diagram with partner offsets within
    [-max_offset, max_offset]."""
    if m + n > bound:
        raise BoundExceeded(f"window of {m + n} points exceeds bound {bound}")
    if (m + n) % 2:
        return
    slots = _fundamental_slots(m, n)
    offsets = range(-max_offset, max_offset + 1)

    def rec(table: dict):
        free = [s for s in slots if s not in table]
        if not free:
            try:
                yield make_affine(m, n, dict(table))
            except CrossingError:
                pass
            return
        p = free[0]
        for q in free[1:]:
            for t in offsets:
                table[p] = (t, q[0], q[1])
                table[q] = (-t, p[0], p[1])
                yield from rec(table)
                del table[p], table[q]

    yield from rec({})


class AnnMonoid(NamedTuple):
    """Shadow monoid on [n]: elements, index lookup and the finite table."""

    elements: tuple[AnnularPartition, ...]
    index: dict
    monoid: object  # FiniteMonoid; typed loosely to avoid an import cycle


def build_ann_monoid(n: int, bound: int = 2000) -> AnnMonoid:
    """Close the shadows of the rotation and the cup-caps under
    composition and package the result as a finite monoid."""
    from .auxmonoids import FiniteMonoid

    gens = [project_to_ann(affine_identity(n))]
    if n >= 1:
        z = zeta(n)
        gens.append(project_to_ann(z))
        gens.append(project_to_ann(sigma_affine(z)))
    if n >= 2:
        for i in range(1, n + 1):
            gens.append(project_to_ann(cup_cap(n, i)))

    elements: list[AnnularPartition] = []
    index: dict = {}
    for g in gens:
        if g.base not in index:
            index[g.base] = len(elements)
            elements.append(g)
    frontier = list(elements)
    while frontier:
        new: list[AnnularPartition] = []
        for x in frontier:
            for y in elements:
                for prod in (x * y, y * x):
                    if prod.base not in index:
                        index[prod.base] = len(elements)
                        elements.append(prod)
                        new.append(prod)
                        if len(elements) > bound:
                            raise BoundExceeded(
                                f"closure exceeded {bound} elements"
                            )
        frontier = new

    table = [
        [index[(x * y).base] for y in elements]
        for x in elements
    ]
    monoid = FiniteMonoid(table)
    return AnnMonoid(tuple(elements), index, monoid)
