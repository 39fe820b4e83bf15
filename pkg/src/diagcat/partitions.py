"""Set-partition arrows [m] ~> [n] and their composition.

An (m, n)-partition is a set partition of the disjoint union of an incoming
index set {1..m} and an outgoing index set {1..n}.  Vertices are written
``in1, in2, ...`` and ``out1, out2, ...``; the canonical order is all
incoming vertices first, then all outgoing ones, both by index.

Composition of alpha: [l] ~> [m] with beta: [m] ~> [n] stacks the two
partitions on a three-layer vertex set (alpha's incoming layer, the shared
middle layer, beta's outgoing layer), takes the join of the two equivalence
relations, and restricts the result to the outer layers.  Classes that fall
entirely inside the middle layer are *dead*: the product forgets them, but
their count b(alpha, beta) and the record of which blocks merged into each
class drive the label bookkeeping of the decorated variants, so compose()
returns them alongside the product.

>>> a = make_partition(2, 2, [[("in", 1), ("out", 1)], [("in", 2), ("out", 2)]])
>>> compose(a, a).product == a
True
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import (
    BoundExceeded,
    CoverageError,
    OverlapError,
    RangeError,
    ShapeMismatch,
)

__all__ = [
    "IN",
    "OUT",
    "Vertex",
    "vin",
    "vout",
    "Partition",
    "make_partition",
    "identity_partition",
    "CompositionResult",
    "MergeInfo",
    "compose",
    "BlockStats",
    "PartitionStats",
    "block_stats",
    "reflect",
    "rotate",
    "IdempotentDecomposition",
    "is_idempotent_structurally",
    "enumerate_partitions",
]

IN = 0
OUT = 1

_SIDE_NAMES = {"in": IN, "out": OUT, IN: IN, OUT: OUT}


class Vertex(NamedTuple):
    """A boundary vertex, ordered incoming-before-outgoing, then by index."""

    side: int
    index: int

    def __repr__(self) -> str:
        return f"{'in' if self.side == IN else 'out'}{self.index}"


def vin(i: int) -> Vertex:
    return Vertex(IN, i)


def vout(j: int) -> Vertex:
    return Vertex(OUT, j)


def _coerce_vertex(v) -> Vertex:
    if isinstance(v, Vertex):
        return v
    side, index = v
    if side not in _SIDE_NAMES:
        raise RangeError(f"unknown side {side!r}")
    return Vertex(_SIDE_NAMES[side], int(index))


class Partition:
    """An immutable (m, n)-partition with canonically ordered blocks.

    Blocks are stored as tuples of vertices sorted in canonical order, and
    the block list is sorted by least vertex, so equal partitions compare
    and hash equal.  Use make_partition() to build one with validation.
    """

    __slots__ = ("m", "n", "blocks", "_hash")

    def __init__(self, m: int, n: int, blocks: tuple[tuple[Vertex, ...], ...]):
        self.m = m
        self.n = n
        self.blocks = blocks
        self._hash = hash((m, n, blocks))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Partition)
            and self.m == other.m
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("{" + " ".join(map(repr, b)) + "}" for b in self.blocks)
        return f"Partition({self.m}->{self.n}: {body})"

    def __mul__(self, other: "Partition") -> "Partition":
        return compose(self, other).product

    @property
    def rank(self) -> int:
        """Number of transversal blocks (touching both sides)."""
        r = 0
        for b in self.blocks:
            if b[0].side == IN and b[-1].side == OUT:
                r += 1
        return r

    def block_of(self, v: Vertex) -> tuple[Vertex, ...]:
        for b in self.blocks:
            if v in b:
                return b
        raise RangeError(f"{v!r} is not a vertex of this partition")


def _sort_blocks(blocks: Iterable[Iterable[Vertex]]) -> tuple[tuple[Vertex, ...], ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def make_partition(m: int, n: int, blocks: Iterable[Iterable]) -> Partition:
    """Build a validated (m, n)-partition from raw block data.

    Raises RangeError for out-of-range indices, OverlapError for repeated
    vertices, and CoverageError when some vertex is missing.
    """
    if m < 0 or n < 0:
        raise RangeError("shape must be non-negative")
    seen: set[Vertex] = set()
    clean: list[list[Vertex]] = []
    for raw in blocks:
        block = [_coerce_vertex(v) for v in raw]
        if not block:
            raise CoverageError("empty block")
        for v in block:
            hi = m if v.side == IN else n
            if not 1 <= v.index <= hi:
                raise RangeError(f"{v!r} out of range for shape [{m}]~>[{n}]")
            if v in seen:
                raise OverlapError(f"{v!r} appears twice")
            seen.add(v)
        clean.append(block)
    if len(seen) != m + n:
        missing = [v for v in _ground(m, n) if v not in seen]
        raise CoverageError(f"uncovered vertices: {missing}")
    return Partition(m, n, _sort_blocks(clean))


def _ground(m: int, n: int) -> list[Vertex]:
    return [vin(i) for i in range(1, m + 1)] + [vout(j) for j in range(1, n + 1)]


def identity_partition(n: int) -> Partition:
    return Partition(n, n, tuple((vin(i), vout(i)) for i in range(1, n + 1)))


class MergeInfo(NamedTuple):
    """How one class of a composition was assembled.

    alpha_blocks / beta_blocks index into the factors' block lists; middle
    holds the middle-layer indices the class touches.  The label increment
    of a merged class is v - (a + b) + 1 with v = len(middle).
    """

    alpha_blocks: tuple[int, ...]
    beta_blocks: tuple[int, ...]
    middle: tuple[int, ...]


class CompositionResult(NamedTuple):
    """Product partition plus the merge bookkeeping of one composition.

    origins is aligned with product.blocks: each entry is either
    ("alpha", i) / ("beta", j) for an untouched factor block, or a MergeInfo
    for a class that involves middle vertices.  dead_blocks lists the
    classes that lie entirely in the middle layer; len(dead_blocks) is
    b(alpha, beta).
    """

    product: Partition
    origins: tuple
    dead_blocks: tuple[MergeInfo, ...]

    @property
    def b(self) -> int:
        return len(self.dead_blocks)


def compose(alpha: Partition, beta: Partition) -> CompositionResult:
    """Compose alpha: [l] ~> [m] with beta: [m] ~> [n]."""
    if alpha.n != beta.m:
        raise ShapeMismatch(f"cannot compose [{alpha.m}]~>[{alpha.n}] with [{beta.m}]~>[{beta.n}]")
    lo, mid, hi = alpha.m, alpha.n, beta.n
    total = lo + mid + hi

    parent = list(range(total))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    # Layer encoding: alpha-in -> [0, lo), middle -> [lo, lo+mid),
    # beta-out -> [lo+mid, total).
    def enc_alpha(v: Vertex) -> int:
        return v.index - 1 if v.side == IN else lo + v.index - 1

    def enc_beta(v: Vertex) -> int:
        return lo + v.index - 1 if v.side == IN else lo + mid + v.index - 1

    for block in alpha.blocks:
        first = enc_alpha(block[0])
        for v in block[1:]:
            union(first, enc_alpha(v))
    for block in beta.blocks:
        first = enc_beta(block[0])
        for v in block[1:]:
            union(first, enc_beta(v))

    classes: dict[int, list[int]] = {}
    for x in range(total):
        classes.setdefault(find(x), []).append(x)

    alpha_of: dict[int, list[int]] = {}
    for i, block in enumerate(alpha.blocks):
        alpha_of.setdefault(find(enc_alpha(block[0])), []).append(i)
    beta_of: dict[int, list[int]] = {}
    for j, block in enumerate(beta.blocks):
        beta_of.setdefault(find(enc_beta(block[0])), []).append(j)

    live: list[tuple[tuple[Vertex, ...], object]] = []
    dead: list[MergeInfo] = []
    for root, members in classes.items():
        outer: list[Vertex] = []
        middle: list[int] = []
        for x in members:
            if x < lo:
                outer.append(vin(x + 1))
            elif x < lo + mid:
                middle.append(x - lo + 1)
            else:
                outer.append(vout(x - lo - mid + 1))
        info = MergeInfo(
            tuple(alpha_of.get(root, ())),
            tuple(beta_of.get(root, ())),
            tuple(middle),
        )
        if not outer:
            dead.append(info)
            continue
        if middle:
            origin: object = info
        elif outer[0].side == IN:
            assert len(info.alpha_blocks) == 1 and not info.beta_blocks
            origin = ("alpha", info.alpha_blocks[0])
        else:
            assert len(info.beta_blocks) == 1 and not info.alpha_blocks
            origin = ("beta", info.beta_blocks[0])
        live.append((tuple(outer), origin))

    live.sort(key=lambda pair: pair[0])
    product = Partition(lo, hi, tuple(b for b, _ in live))
    dead.sort(key=lambda d: d.middle)
    return CompositionResult(product, tuple(o for _, o in live), tuple(dead))


class BlockStats(NamedTuple):
    iv: int  # incoming vertices
    ov: int  # outgoing vertices

    @property
    def v(self) -> int:
        return self.iv + self.ov

    @property
    def is_left(self) -> bool:
        return self.ov == 0

    @property
    def is_right(self) -> bool:
        return self.iv == 0

    @property
    def is_transversal(self) -> bool:
        return self.iv > 0 and self.ov > 0


class PartitionStats(NamedTuple):
    per_block: tuple[BlockStats, ...]
    rank: int
    lb: int  # number of left blocks (incoming only)
    rb: int  # number of right blocks (outgoing only)


def block_stats(p: Partition) -> PartitionStats:
    """Per-block vertex counts plus rank / left / right block totals."""
    per = []
    rank = lb = rb = 0
    for block in p.blocks:
        iv = sum(1 for v in block if v.side == IN)
        ov = len(block) - iv
        per.append(BlockStats(iv, ov))
        if iv and ov:
            rank += 1
        elif ov:
            rb += 1
        else:
            lb += 1
    return PartitionStats(tuple(per), rank, lb, rb)


def reflect(p: Partition) -> Partition:
    """Swap the two sides: incoming i becomes outgoing i and vice versa.

    reflect is an involutive anti-automorphism: reflect(a * b) equals
    reflect(b) * reflect(a).
    """
    blocks = _sort_blocks(
        [Vertex(OUT if v.side == IN else IN, v.index) for v in b] for b in p.blocks
    )
    return Partition(p.n, p.m, blocks)


def rotate(p: Partition) -> Partition:
    """Half-turn: reflect, then reverse the index order on both layers."""
    blocks = _sort_blocks(
        [
            Vertex(OUT, p.m + 1 - v.index) if v.side == IN else Vertex(IN, p.n + 1 - v.index)
            for v in b
        ]
        for b in p.blocks
    )
    return Partition(p.n, p.m, blocks)


class IdempotentDecomposition(tuple):
    """Witness for structural idempotency: (component indices, rank) pairs.

    Always truthy, so the n = 0 case (no components) still reads as a
    positive answer.
    """

    def __bool__(self) -> bool:
        return True


def is_idempotent_structurally(e: Partition):
    """Structural idempotency test for a square partition.

    Returns the witness decomposition when the ground set [n] splits into
    the connected components of the join of e's two side restrictions,
    every block stays inside one component, and each restriction has rank
    at most 1.  Returns None otherwise.  The result is truthy exactly when
    e * e == e.
    """
    if e.m != e.n:
        raise ShapeMismatch("idempotency needs a square shape")
    n = e.n
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # Join of the two induced partitions of [n]: indices meeting in a block
    # on the incoming side, or on the outgoing side, are connected.
    for block in e.blocks:
        ins = [v.index for v in block if v.side == IN]
        outs = [v.index for v in block if v.side == OUT]
        for group in (ins, outs):
            for i in group[1:]:
                parent[find(i)] = find(group[0])

    # Every block must stay inside a single component.
    for block in e.blocks:
        roots = {find(v.index) for v in block}
        if len(roots) > 1:
            return None

    components: dict[int, list[int]] = {}
    for i in range(1, n + 1):
        components.setdefault(find(i), []).append(i)

    witness = []
    for indices in sorted(components.values()):
        index_set = set(indices)
        rank = 0
        for block in e.blocks:
            if block[0].index in index_set or block[-1].index in index_set:
                if any(v.side == IN for v in block) and any(v.side == OUT for v in block):
                    rank += 1
        if rank > 1:
            return None
        witness.append((tuple(indices), rank))
    return IdempotentDecomposition(witness)


def enumerate_partitions(m: int, n: int, bound: int = 8):
    """Yield every (m, n)-partition; the ground set may hold at most bound
    vertices (raise the bound explicitly for larger runs)."""
    size = m + n
    if size > bound:
        raise BoundExceeded(f"ground set of {size} exceeds bound {bound}")
    ground = _ground(m, n)
    if size == 0:
        yield Partition(m, n, ())
        return
    # Restricted growth strings: label[0] = 0, label[i] <= max(label[:i]) + 1.
    labels = [0] * size

    def rec(i: int, top: int):
        if i == size:
            blocks: list[list[Vertex]] = [[] for _ in range(top + 1)]
            for v, lab in zip(ground, labels):
                blocks[lab].append(v)
            yield Partition(m, n, _sort_blocks(blocks))
            return
        for lab in range(top + 2):
            labels[i] = lab
            yield from rec(i + 1, max(top, lab))

    yield from rec(1, 0)
