"""Concrete monoid families on X = {0, ..., n-1} and the small named monoids.

Elements compose left to right: ``s.then(t)`` first applies ``s``.
"""

import logging
import re
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import comb, factorial

import networkx as nx
import numpy as np

from .config import max_size
from .errors import TooLarge
from .monoid import (
    FiniteMonoid,
    UnaryAlgebra,
    UnaryKind,
    _frozen,
    adjoin_zero,
    build_table_monoid,
    monoid_from_elements,
)

logger = logging.getLogger(__name__)


class Composition(str, Enum):
    ORDINARY = "ordinary"
    DEMONIC = "demonic"


def _check_degree(n: int) -> None:
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")


def _check_cap(family: str, n: int, size: int) -> None:
    cap = max_size()
    if size > cap:
        raise TooLarge(family, n, size, cap)


def bell_number(m: int) -> int:
    """Number of set partitions of an m-element set (Bell triangle)."""
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


@dataclass(frozen=True)
class Transformation:
    img: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.img)

    def then(self, other: "Transformation") -> "Transformation":
        return Transformation(tuple(other.img[y] for y in self.img))

    @property
    def range(self) -> frozenset[int]:
        return frozenset(self.img)

    def kernel(self) -> tuple[tuple[int, ...], ...]:
        """Kernel classes, ordered by least member."""
        cells: dict[int, list[int]] = {}
        for x, y in enumerate(self.img):
            cells.setdefault(y, []).append(x)
        return tuple(sorted(tuple(c) for c in cells.values()))

    def is_idempotent(self) -> bool:
        return self.then(self) == self

    def label(self) -> str:
        return "".join(str(y) for y in self.img) if self.degree <= 10 else str(list(self.img))

    @classmethod
    def identity(cls, n: int) -> "Transformation":
        return cls(tuple(range(n)))


@dataclass(frozen=True)
class PartialTransformation:
    img: tuple[int | None, ...]

    @property
    def degree(self) -> int:
        return len(self.img)

    def then(self, other: "PartialTransformation") -> "PartialTransformation":
        return PartialTransformation(
            tuple(None if y is None else other.img[y] for y in self.img)
        )

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.img) if y is not None)

    def restrict(self, points: Iterable[int]) -> "PartialTransformation":
        keep = set(points)
        return PartialTransformation(
            tuple(y if x in keep else None for x, y in enumerate(self.img))
        )

    def domain_identity(self) -> "PartialTransformation":
        return PartialTransformation(
            tuple(None if y is None else x for x, y in enumerate(self.img))
        )

    def is_injective(self) -> bool:
        defined = [y for y in self.img if y is not None]
        return len(defined) == len(set(defined))

    def label(self) -> str:
        return "".join("-" if y is None else str(y) for y in self.img)

    @classmethod
    def total(cls, t: Transformation) -> "PartialTransformation":
        return cls(tuple(t.img))


@dataclass(frozen=True)
class BinaryRelation:
    """Relation on X stored as one bitmask row per point (bit y of row x: x relates to y)."""

    rows: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.rows)

    def then(
        self, other: "BinaryRelation", composition: Composition = Composition.ORDINARY
    ) -> "BinaryRelation":
        out = []
        for row in self.rows:
            image = 0
            total = True
            for z in _bits(row):
                image |= other.rows[z]
                if other.rows[z] == 0:
                    total = False
            if composition is Composition.DEMONIC and not total:
                image = 0
            out.append(image)
        return BinaryRelation(tuple(out))

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(x for x, row in enumerate(self.rows) if row)

    @property
    def range(self) -> frozenset[int]:
        image = 0
        for row in self.rows:
            image |= row
        return frozenset(_bits(image))

    def domain_identity(self) -> "BinaryRelation":
        return BinaryRelation(tuple((1 << x) if row else 0 for x, row in enumerate(self.rows)))

    def restrict(self, points: Iterable[int]) -> "BinaryRelation":
        keep = set(points)
        return BinaryRelation(tuple(row if x in keep else 0 for x, row in enumerate(self.rows)))

    def is_left_total(self) -> bool:
        return all(self.rows)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, row in enumerate(self.rows) for y in _bits(row)]

    def label(self) -> str:
        if not any(self.rows):
            return "∅"
        return "{" + ",".join(f"({x},{y})" for x, y in self.pairs()) + "}"

    @classmethod
    def from_transformation(cls, t: Transformation) -> "BinaryRelation":
        return cls(tuple(1 << y for y in t.img))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "BinaryRelation":
        rows = [0] * n
        for x, y in pairs:
            rows[x] |= 1 << y
        return cls(tuple(rows))


def _bits(mask: int) -> list[int]:
    out = []
    z = 0
    while mask:
        if mask & 1:
            out.append(z)
        mask >>= 1
        z += 1
    return out


@dataclass(frozen=True)
class BlockPartition:
    """Partition of X ∪ X′: points 0..n-1 are upper, n..2n-1 are the primed lower points.

    ``block`` is the canonical restricted growth string, block ids in order of first
    occurrence.
    """

    block: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.block) // 2

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> "BlockPartition":
        renumber: dict[int, int] = {}
        out = []
        for label in labels:
            if label not in renumber:
                renumber[label] = len(renumber)
            out.append(renumber[label])
        return cls(tuple(out))

    @classmethod
    def parse(cls, text: str, n: int) -> "BlockPartition":
        """Parse "{1,2,1'},{3,3'}" style notation with 1-based points."""
        labels = [-1] * (2 * n)
        for k, body in enumerate(re.findall(r"\{([^}]*)\}", text)):
            for token in body.split(","):
                token = token.strip()
                if not token:
                    continue
                lower = token.endswith("'") or token.endswith("′")
                point = int(token.rstrip("'′")) - 1
                labels[point + n if lower else point] = k
        fresh = max(labels) + 1
        for i, label in enumerate(labels):
            if label == -1:
                labels[i] = fresh
                fresh += 1
        return cls.from_labels(labels)

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(max(self.block) + 1)]
        for point, b in enumerate(self.block):
            out[b].append(point)
        return out

    def then(self, other: "BlockPartition") -> "BlockPartition":
        """Stack self above other and keep the connectivity of the outer rows."""
        n = self.degree
        graph = nx.Graph()
        graph.add_nodes_from(range(3 * n))
        _link_blocks(graph, self.blocks(), n, upper_offset=0, lower_offset=n)
        _link_blocks(graph, other.blocks(), n, upper_offset=n, lower_offset=2 * n)
        component = {}
        for k, nodes in enumerate(nx.connected_components(graph)):
            for v in nodes:
                component[v] = k
        return BlockPartition.from_labels(
            [component[i] for i in range(n)] + [component[2 * n + i] for i in range(n)]
        )

    def involution(self) -> "BlockPartition":
        n = self.degree
        return BlockPartition.from_labels(self.block[n:] + self.block[:n])

    def is_left_total(self) -> bool:
        n = self.degree
        return set(self.block[:n]) <= set(self.block[n:])

    def lower_pattern(self) -> "BlockPartition":
        """The element of F whose blocks are cell ∪ cell′ for the lower-row pattern."""
        n = self.degree
        lower = self.block[n:]
        return BlockPartition.from_labels(lower + lower)

    def label(self) -> str:
        n = self.degree
        parts = []
        for members in self.blocks():
            names = [str(p + 1) if p < n else f"{p - n + 1}'" for p in members]
            parts.append("{" + ",".join(names) + "}")
        return "".join(parts)

    @classmethod
    def identity(cls, n: int) -> "BlockPartition":
        return cls.from_labels(list(range(n)) * 2)


def _link_blocks(
    graph: nx.Graph, blocks: list[list[int]], n: int, upper_offset: int, lower_offset: int
) -> None:
    for members in blocks:
        nodes = [upper_offset + p if p < n else lower_offset + (p - n) for p in members]
        graph.add_edges_from(zip(nodes, nodes[1:]))


def transformation_partition(t: Transformation) -> BlockPartition:
    """ρ_t: blocks t⁻¹(y) ∪ {y′} for y in the range, singletons {y′} otherwise."""
    n = t.degree
    return BlockPartition.from_labels(list(t.img) + list(range(n)))


def equivalence_partition(classes: Iterable[Iterable[int]], n: int) -> BlockPartition:
    """The element of F with blocks cell ∪ cell′ for an equivalence on X."""
    labels = [-1] * n
    for k, cell in enumerate(classes):
        for x in cell:
            labels[x] = k
    if -1 in labels:
        raise ValueError("classes do not cover X")
    return BlockPartition.from_labels(labels + labels)


# Display names for the degree-2 examples; x is 0 and y is 1.
_T2_NAMES = {(0, 0): "e", (0, 1): "1", (1, 0): "i", (1, 1): "f"}
_TREL2_NAMES = {
    (1, 1): "e",
    (1, 2): "1",
    (2, 1): "i",
    (2, 2): "f",
    (3, 2): "g",
    (1, 3): "h",
    (3, 3): "∇",
    (3, 1): "a",
    (2, 3): "b",
}


def full_transformation_monoid(n: int, with_zero: bool = False) -> FiniteMonoid:
    """T_n, optionally with an adjoined zero."""
    _check_degree(n)
    _check_cap("ttransf", n, n**n + int(with_zero))
    elements = [Transformation(img) for img in product(range(n), repeat=n)]

    def label(t: Transformation) -> str:
        return _T2_NAMES[t.img] if n == 2 else t.label()

    monoid = monoid_from_elements(
        elements, Transformation.then, Transformation.identity(n), label=label
    )
    logger.debug("enumerated T_%d with %d elements", n, monoid.size)
    return adjoin_zero(monoid) if with_zero else monoid


def _domain_algebra(monoid: FiniteMonoid) -> UnaryAlgebra:
    assert monoid.elements is not None
    unary = [monoid.index_of_element(x.domain_identity()) for x in monoid.elements]
    return UnaryAlgebra(
        base=monoid, unary=_frozen(np.asarray(unary)), kind=UnaryKind.DOMAIN
    )


def partial_transformation_monoid(n: int) -> UnaryAlgebra:
    """PT_n with D(s) the partial identity on dom(s); the empty map is the zero."""
    _check_degree(n)
    _check_cap("ptransf", n, (n + 1) ** n)
    options: list[int | None] = [*range(n), None]
    elements = [PartialTransformation(img) for img in product(options, repeat=n)]
    monoid = monoid_from_elements(
        elements,
        PartialTransformation.then,
        PartialTransformation(tuple(range(n))),
        zero=PartialTransformation((None,) * n),
        label=PartialTransformation.label,
    )
    return _domain_algebra(monoid)


def symmetric_inverse_monoid(n: int) -> UnaryAlgebra:
    """I_n: injective partial maps, a sub-left-restriction monoid of PT_n."""
    _check_degree(n)
    size = sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))
    _check_cap("sym-inverse", n, size)
    options: list[int | None] = [*range(n), None]
    elements = [
        p
        for p in (PartialTransformation(img) for img in product(options, repeat=n))
        if p.is_injective()
    ]
    monoid = monoid_from_elements(
        elements,
        PartialTransformation.then,
        PartialTransformation(tuple(range(n))),
        zero=PartialTransformation((None,) * n),
        label=PartialTransformation.label,
    )
    return _domain_algebra(monoid)


def relation_monoid(n: int, composition: Composition | str = Composition.ORDINARY) -> UnaryAlgebra:
    """Rel_n under ordinary or demonic composition, D(ρ) the diagonal on dom(ρ).

    Only the demonic variant is a left restriction monoid; the ordinary one breaks
    xD(y) = D(xy)x.
    """
    _check_degree(n)
    composition = Composition(composition)
    _check_cap("rel", n, 2 ** (n * n))
    elements = [BinaryRelation(rows) for rows in product(range(2**n), repeat=n)]

    def compose(a: BinaryRelation, b: BinaryRelation) -> BinaryRelation:
        return a.then(b, composition)

    monoid = monoid_from_elements(
        elements,
        compose,
        BinaryRelation(tuple(1 << x for x in range(n))),
        zero=BinaryRelation((0,) * n),
        label=BinaryRelation.label,
    )
    return _domain_algebra(monoid)


def left_total_relation_monoid(n: int, with_zero: bool = False) -> FiniteMonoid:
    """TRel_n, the left-total relations; both compositions agree on them."""
    _check_degree(n)
    _check_cap("trel", n, (2**n - 1) ** n + int(with_zero))
    elements = [BinaryRelation(rows) for rows in product(range(1, 2**n), repeat=n)]

    def label(r: BinaryRelation) -> str:
        return _TREL2_NAMES[r.rows] if n == 2 else r.label()

    monoid = monoid_from_elements(
        elements,
        BinaryRelation.then,
        BinaryRelation(tuple(1 << x for x in range(n))),
        label=label,
    )
    return adjoin_zero(monoid) if with_zero else monoid


def _set_partitions(m: int) -> list[tuple[int, ...]]:
    """All restricted growth strings of length m."""
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], top: int) -> None:
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for b in range(top + 2):
            prefix.append(b)
            extend(prefix, max(top, b))
            prefix.pop()

    extend([], -1)
    return out


def partition_monoid(n: int) -> FiniteMonoid:
    """P_n, all partitions of X ∪ X′ under the stacking product."""
    _check_degree(n)
    _check_cap("partition", n, bell_number(2 * n))
    elements = [BlockPartition(rgs) for rgs in _set_partitions(2 * n)]
    return monoid_from_elements(
        elements, BlockPartition.then, BlockPartition.identity(n), label=BlockPartition.label
    )


def partition_involution(monoid: FiniteMonoid) -> np.ndarray:
    """The map ρ ↦ ρ* swapping the two rows, as an index array."""
    assert monoid.elements is not None
    return np.asarray(
        [monoid.index_of_element(p.involution()) for p in monoid.elements], dtype=np.int64
    )


def left_total_partition_monoid(n: int) -> UnaryAlgebra:
    """P^lt_n with R(ρ) the element of F given by ρ's lower-row pattern."""
    _check_degree(n)
    _check_cap("lt-partition", n, bell_number(2 * n))
    elements = [
        p for p in (BlockPartition(rgs) for rgs in _set_partitions(2 * n)) if p.is_left_total()
    ]
    monoid = monoid_from_elements(
        elements, BlockPartition.then, BlockPartition.identity(n), label=BlockPartition.label
    )
    unary = [monoid.index_of_element(p.lower_pattern()) for p in elements]
    return UnaryAlgebra(base=monoid, unary=_frozen(np.asarray(unary)), kind=UnaryKind.RANGE)


def named_monoid(name: str) -> FiniteMonoid:
    """Small monoids used by the worked examples, by identifier."""
    if name == "small-5elt":
        # e, 1, f, g, s: a five-element monoid whose non-identity part is a band
        return build_table_monoid(
            [
                [0, 0, 0, 0, 0],
                [0, 1, 2, 3, 4],
                [0, 2, 2, 0, 0],
                [4, 3, 4, 3, 4],
                [4, 4, 4, 4, 4],
            ],
            one=1,
            labels=["e", "1", "f", "g", "s"],
        )
    if name == "band-0ef1":
        return build_table_monoid(
            [
                [0, 0, 0, 0],
                [0, 1, 0, 1],
                [0, 0, 2, 2],
                [0, 1, 2, 3],
            ],
            one=3,
            zero=0,
            labels=["0", "e", "f", "1"],
        )
    if name == "monoid-01a":
        return build_table_monoid(
            [
                [0, 0, 0],
                [0, 1, 2],
                [0, 2, 0],
            ],
            one=1,
            zero=0,
            labels=["0", "1", "a"],
        )
    raise KeyError(f"unknown named monoid {name!r}")


NAMED_MONOIDS = ("small-5elt", "band-0ef1", "monoid-01a")
