"""Partition arrows decorated with genus labels and closed-surface spectra.

Three decorated variants share a Partition base:

* DeformedPartition -- base plus one integer s; composition adds the
  operands' s values and the dead-block count of the base composition.
* LabeledPartition -- an integer label on every block; when composition
  merges blocks, the merged class gets the sum of the incoming labels plus
  the increment v - (a + b) + 1 (v middle vertices, a and b merged blocks
  from either side), the cyclomatic count of the merge.
* Cobordism -- labels plus a spectrum recording closed components by
  label; dead blocks of the base composition deposit their labels there.

Non-regular values keep every label and spectrum entry non-negative;
regular values drop the restriction and gain a star with x x* x == x.
The reflection sigma and the half-turn rho transport labels along the
block bijection and are involutive anti-automorphisms on all variants.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Sequence, Union

from .errors import (
    BaseMismatch,
    NegativeLabel,
    NotIdempotent,
    NotIrreducible,
    NotRegular,
    RegularityMismatch,
    ShapeMismatch,
)
from .partitions import (
    IN,
    OUT,
    CompositionResult,
    MergeInfo,
    Partition,
    Vertex,
    block_stats,
    compose,
    is_idempotent_structurally,
    reflect,
    rotate,
)

__all__ = [
    "Spectrum",
    "DeformedPartition",
    "LabeledPartition",
    "Cobordism",
    "make_cobordism",
    "increment",
    "compose_deformed",
    "compose_labeled",
    "compose_cobordism",
    "star_deformed",
    "star_labeled",
    "star_cobordism",
    "sigma",
    "rho",
    "to_deformed",
    "to_labeled",
    "to_partition",
    "fiber_product_oracle",
]


class Spectrum:
    """Finitely supported multiset of labels, canonically trimmed."""

    __slots__ = ("pairs",)

    def __init__(self, data: Union[Mapping[int, int], Iterable[tuple[int, int]]] = ()):
        counts: dict[int, int] = {}
        items = data.items() if isinstance(data, Mapping) else data
        for genus, count in items:
            if count:
                counts[int(genus)] = counts.get(int(genus), 0) + int(count)
        self.pairs = tuple(sorted((g, c) for g, c in counts.items() if c))

    def __eq__(self, other) -> bool:
        return isinstance(other, Spectrum) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __repr__(self) -> str:
        return f"Spectrum({dict(self.pairs)!r})"

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def __getitem__(self, genus: int) -> int:
        for g, c in self.pairs:
            if g == genus:
                return c
        return 0

    def __add__(self, other: "Spectrum") -> "Spectrum":
        return Spectrum(list(self.pairs) + list(other.pairs))

    def negate(self) -> "Spectrum":
        return Spectrum((g, -c) for g, c in self.pairs)

    def total(self) -> int:
        return sum(c for _, c in self.pairs)

    def min_genus_negative(self) -> bool:
        return any(g < 0 or c < 0 for g, c in self.pairs)


class DeformedPartition(NamedTuple):
    base: Partition
    s: int
    regular: bool = False


class LabeledPartition(NamedTuple):
    base: Partition
    genus: tuple[int, ...]
    regular: bool = False


class Cobordism(NamedTuple):
    base: Partition
    genus: tuple[int, ...]
    spectrum: Spectrum
    regular: bool = False


def _coerce_genus(base: Partition, genus) -> tuple[int, ...]:
    if isinstance(genus, Mapping):
        table = {}
        for key, value in genus.items():
            block = tuple(sorted(key))
            table[block] = int(value)
        out = []
        for block in base.blocks:
            if block not in table:
                raise BaseMismatch(f"no label for block {block!r}")
            out.append(table[block])
        if len(table) != len(base.blocks):
            raise BaseMismatch("labels for unknown blocks")
        return tuple(out)
    genus = tuple(int(g) for g in genus)
    if len(genus) != len(base.blocks):
        raise BaseMismatch(
            f"{len(genus)} labels for {len(base.blocks)} blocks"
        )
    return genus


def make_cobordism(
    base: Partition,
    genus,
    spectrum: Union[Spectrum, Mapping[int, int]] = (),
    regular: bool = False,
) -> Cobordism:
    """Validated constructor; genus may be a block-keyed mapping or a
    sequence aligned with base.blocks."""
    g = _coerce_genus(base, genus)
    s = spectrum if isinstance(spectrum, Spectrum) else Spectrum(spectrum)
    if not regular:
        if any(x < 0 for x in g):
            raise NegativeLabel(f"negative genus in non-regular value: {g}")
        if s.min_genus_negative():
            raise NegativeLabel(f"negative spectrum entry in non-regular value: {s}")
    return Cobordism(base, g, s, regular)


def increment(v: int, a: int, b: int) -> int:
    """Label increment of a merged class: v - (a + b) + 1."""
    assert v >= 0 and a >= 1 and b >= 1
    return v - (a + b) + 1


def _check_flags(x, y) -> None:
    if x.regular != y.regular:
        raise RegularityMismatch("cannot mix regular and non-regular values")


def compose_deformed(x: DeformedPartition, y: DeformedPartition) -> DeformedPartition:
    _check_flags(x, y)
    res = compose(x.base, y.base)
    return DeformedPartition(res.product, x.s + y.s + res.b, x.regular)


def _merge_labels(
    res: CompositionResult, g: Sequence[int], h: Sequence[int]
) -> tuple[tuple[int, ...], list[int]]:
    """Labels of the product blocks and of the dead blocks, in order."""
    live = []
    for origin in res.origins:
        if isinstance(origin, MergeInfo):
            a, b, v = len(origin.alpha_blocks), len(origin.beta_blocks), len(origin.middle)
            label = (
                sum(g[i] for i in origin.alpha_blocks)
                + sum(h[j] for j in origin.beta_blocks)
                + increment(v, a, b)
            )
        elif origin[0] == "alpha":
            label = g[origin[1]]
        else:
            label = h[origin[1]]
        live.append(label)
    dead = []
    for info in res.dead_blocks:
        a, b, v = len(info.alpha_blocks), len(info.beta_blocks), len(info.middle)
        dead.append(
            sum(g[i] for i in info.alpha_blocks)
            + sum(h[j] for j in info.beta_blocks)
            + increment(v, a, b)
        )
    return tuple(live), dead


def compose_labeled(x: LabeledPartition, y: LabeledPartition) -> LabeledPartition:
    """Compose label-decorated partitions, discarding dead-block labels."""
    _check_flags(x, y)
    res = compose(x.base, y.base)
    live, _ = _merge_labels(res, x.genus, y.genus)
    if not x.regular:
        assert all(l >= 0 for l in live)
    return LabeledPartition(res.product, live, x.regular)


def compose_cobordism(x: Cobordism, y: Cobordism) -> Cobordism:
    """Compose, depositing dead-block labels into the spectrum."""
    _check_flags(x, y)
    res = compose(x.base, y.base)
    live, dead = _merge_labels(res, x.genus, y.genus)
    spectrum = x.spectrum + y.spectrum + Spectrum((d, 1) for d in dead)
    if not x.regular:
        assert all(l >= 0 for l in live)
        assert not spectrum.min_genus_negative()
    return Cobordism(res.product, live, spectrum, x.regular)


def _block_index_map(p: Partition) -> dict[tuple[Vertex, ...], int]:
    return {block: i for i, block in enumerate(p.blocks)}


def _transport(base: Partition, image: Partition, genus: Sequence[int], move) -> tuple[int, ...]:
    """Carry labels along the block bijection induced by a vertex map."""
    index = _block_index_map(image)
    out = [0] * len(image.blocks)
    for block, label in zip(base.blocks, genus):
        target = tuple(sorted(move(v) for v in block))
        out[index[target]] = label
    return tuple(out)


def _reflect_vertex(p: Partition):
    def move(v: Vertex) -> Vertex:
        return Vertex(OUT if v.side == IN else IN, v.index)

    return move


def _rotate_vertex(p: Partition):
    def move(v: Vertex) -> Vertex:
        if v.side == IN:
            return Vertex(OUT, p.m + 1 - v.index)
        return Vertex(IN, p.n + 1 - v.index)

    return move


def _require_regular(x) -> None:
    if not x.regular:
        raise NotRegular("star needs a regular value")


def star_deformed(x: DeformedPartition) -> DeformedPartition:
    """Inverse-like star: (a, s)* = (a*, -s - rb(a) - lb(a))."""
    _require_regular(x)
    stats = block_stats(x.base)
    return DeformedPartition(reflect(x.base), -x.s - stats.rb - stats.lb, True)


def _star_genus(x: Partition, genus: Sequence[int]) -> tuple[int, ...]:
    """Reflected labels g*(B*) = -g(B) - v(B) + 2."""
    image = reflect(x)
    index = _block_index_map(image)
    out = [0] * len(image.blocks)
    for block, label in zip(x.blocks, genus):
        target = tuple(
            sorted(Vertex(OUT if v.side == IN else IN, v.index) for v in block)
        )
        out[index[target]] = -label - len(block) + 2
    return tuple(out)


def star_labeled(x: LabeledPartition) -> LabeledPartition:
    _require_regular(x)
    return LabeledPartition(reflect(x.base), _star_genus(x.base, x.genus), True)


def star_cobordism(x: Cobordism) -> Cobordism:
    """Star: reflect the base, flip labels by g* = -g - v + 2, negate the
    spectrum and correct label 1 by the closed components that the
    round trip x x* necessarily creates."""
    _require_regular(x)
    stats = block_stats(x.base)
    spectrum = x.spectrum.negate() + Spectrum({1: -(stats.lb + stats.rb)})
    return Cobordism(reflect(x.base), _star_genus(x.base, x.genus), spectrum, True)


def sigma(x):
    """Side-swapping reflection; labels travel with their blocks, spectra
    and deformation integers stay put."""
    if isinstance(x, Partition):
        return reflect(x)
    if isinstance(x, DeformedPartition):
        return DeformedPartition(reflect(x.base), x.s, x.regular)
    image = reflect(x.base)
    genus = _transport(x.base, image, x.genus, _reflect_vertex(x.base))
    if isinstance(x, LabeledPartition):
        return LabeledPartition(image, genus, x.regular)
    return Cobordism(image, genus, x.spectrum, x.regular)


def rho(x):
    """Half-turn; like sigma but composed with the index reversal."""
    if isinstance(x, Partition):
        return rotate(x)
    if isinstance(x, DeformedPartition):
        return DeformedPartition(rotate(x.base), x.s, x.regular)
    image = rotate(x.base)
    genus = _transport(x.base, image, x.genus, _rotate_vertex(x.base))
    if isinstance(x, LabeledPartition):
        return LabeledPartition(image, genus, x.regular)
    return Cobordism(image, genus, x.spectrum, x.regular)


def to_deformed(x: Cobordism) -> DeformedPartition:
    """Forget labels; keep the total closed-component count."""
    return DeformedPartition(x.base, x.spectrum.total(), x.regular)


def to_labeled(x: Cobordism) -> LabeledPartition:
    """Forget the spectrum."""
    return LabeledPartition(x.base, x.genus, x.regular)


def to_partition(x) -> Partition:
    return x.base if not isinstance(x, Partition) else x


def fiber_product_oracle(e: Partition, xs: Sequence[Cobordism]) -> Cobordism:
    """Closed form for products of cobordisms sharing one irreducible
    idempotent base.

    For rank 1, the transversal label collects every factor's transversal
    label, the interior right labels of all but the last factor, the
    interior left labels of all but the first, and (k-1) copies of the
    constant increment n - p - q - 1; side blocks keep the labels of the
    outermost factors and spectra add.  For rank 0 each adjacent pair
    additionally deposits one closed component of label
    sum(right_l) + sum(left_{l+1}) + n - (p + q) + 1.
    """
    witness = is_idempotent_structurally(e)
    if witness is None:
        raise NotIdempotent("base is not idempotent")
    if len(witness) > 1:
        raise NotIrreducible("base splits into several components")
    if not xs:
        raise BaseMismatch("need at least one factor")
    for x in xs:
        if x.base != e:
            raise BaseMismatch("factor over a different base")
        if x.regular != xs[0].regular:
            raise RegularityMismatch("mixed regularity in factor list")
    if len(xs) == 1:
        return xs[0]

    n = e.n
    k = len(xs)
    stats = block_stats(e)
    left = [i for i, st in enumerate(stats.per_block) if st.is_left]
    right = [i for i, st in enumerate(stats.per_block) if st.is_right]
    trans = [i for i, st in enumerate(stats.per_block) if st.is_transversal]
    p, q = len(left), len(right)
    spectrum = Spectrum()
    for x in xs:
        spectrum = spectrum + x.spectrum

    genus = [0] * len(e.blocks)
    for i in left:
        genus[i] = xs[0].genus[i]
    for j in right:
        genus[j] = xs[-1].genus[j]

    if trans:
        assert len(trans) == 1 and n >= 1
        t = trans[0]
        label = sum(x.genus[t] for x in xs)
        label += sum(xs[l].genus[j] for l in range(k - 1) for j in right)
        label += sum(xs[l].genus[i] for l in range(1, k) for i in left)
        label += (k - 1) * (n - p - q - 1)
        genus[t] = label
    elif n > 0:
        for l in range(k - 1):
            dead = (
                sum(xs[l].genus[j] for j in right)
                + sum(xs[l + 1].genus[i] for i in left)
                + n - (p + q) + 1
            )
            spectrum = spectrum + Spectrum({dead: 1})

    return Cobordism(e, tuple(genus), spectrum, xs[0].regular)
