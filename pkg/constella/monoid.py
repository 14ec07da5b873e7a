"""Finite semigroups and monoids given by Cayley tables, and unary algebras over them.

Composition is left to right: ``mul[x, y]`` is the product ``xy``, so for
transformations ``xy`` means "apply x, then y".
"""

import logging
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any

import numpy as np

from .errors import BadIdentity, BadZero, LawViolated, NotAssociative
from .laws import LawReport, demigroup_report, left_restriction_report, right_restriction_report

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False, kw_only=True)
class FiniteSemigroup:
    """An associative table on ``0..n-1``.

    ``elements`` optionally keeps the concrete objects (transformations, relations,
    completion pairs) the indices stand for.
    """

    mul: np.ndarray = field(repr=False)
    labels: tuple[str, ...] | None = None
    elements: tuple[Any, ...] | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return int(self.mul.shape[0])

    def product(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def label(self, x: int) -> str:
        if self.labels is None:
            return str(x)
        return self.labels[x]

    @cached_property
    def all_labels(self) -> tuple[str, ...]:
        return tuple(self.label(x) for x in range(self.size))

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.all_labels)}

    def index(self, label: str) -> int:
        """Element index for a display label (plain integers are accepted too)."""
        if label in self._label_index:
            return self._label_index[label]
        if label.isdigit() and int(label) < self.size:
            return int(label)
        raise KeyError(f"no element labelled {label!r}")

    @cached_property
    def _element_index(self) -> dict[Hashable, int]:
        if self.elements is None:
            return {}
        return {element: i for i, element in enumerate(self.elements)}

    def index_of_element(self, element: Hashable) -> int:
        return self._element_index[element]

    def is_idempotent(self, x: int) -> bool:
        return int(self.mul[x, x]) == x

    @cached_property
    def idempotent_indices(self) -> tuple[int, ...]:
        diag = np.diagonal(self.mul)
        return tuple(int(x) for x in np.flatnonzero(diag == np.arange(self.size)))

    @cached_property
    def left_ideal_masks(self) -> np.ndarray:
        """Boolean matrix whose row ``a`` marks the left ideal Sa."""
        n = self.size
        masks = np.zeros((n, n), dtype=bool)
        columns = np.broadcast_to(np.arange(n)[None, :], (n, n))
        masks[columns, self.mul] = True
        return masks

    def identity_element(self) -> int | None:
        idx = np.arange(self.size)
        rows = (self.mul == idx[None, :]).all(axis=1)
        cols = (self.mul == idx[:, None]).all(axis=0)
        hits = np.flatnonzero(rows & cols)
        return int(hits[0]) if len(hits) else None

    def zero_element(self) -> int | None:
        for z in range(self.size):
            if (self.mul[z, :] == z).all() and (self.mul[:, z] == z).all():
                return z
        return None

    def opposite(self) -> "FiniteSemigroup":
        return FiniteSemigroup(
            mul=_frozen(self.mul.T), labels=self.labels, elements=self.elements
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "size": self.size,
            "mul": self.mul.tolist(),
            "one": None,
            "zero": self.zero_element(),
            "labels": list(self.labels) if self.labels is not None else None,
            "unary": None,
        }


@dataclass(frozen=True, eq=False, kw_only=True)
class FiniteMonoid(FiniteSemigroup):
    """A finite semigroup with a designated identity and an optional designated zero."""

    one: int
    zero: int | None = None

    def zero_element(self) -> int | None:
        return self.zero

    def identity_element(self) -> int | None:
        return self.one

    def opposite(self) -> "FiniteMonoid":
        return FiniteMonoid(
            mul=_frozen(self.mul.T),
            one=self.one,
            zero=self.zero,
            labels=self.labels,
            elements=self.elements,
        )

    def to_dict(self) -> dict[str, Any]:
        data = super().to_dict()
        data["one"] = self.one
        data["zero"] = self.zero
        return data


class UnaryKind(str, Enum):
    DEMIGROUP = "d"
    DOMAIN = "D"
    RANGE = "R"


@dataclass(frozen=True, eq=False)
class UnaryAlgebra:
    """A semigroup together with a unary operation ``unary[x]``."""

    base: FiniteSemigroup
    unary: np.ndarray = field(repr=False)
    kind: UnaryKind

    @property
    def size(self) -> int:
        return self.base.size

    @property
    def mul(self) -> np.ndarray:
        return self.base.mul

    def apply(self, x: int) -> int:
        return int(self.unary[x])

    @cached_property
    def projections(self) -> tuple[int, ...]:
        """The image of the unary operation, sorted."""
        return tuple(sorted({int(v) for v in self.unary}))

    def to_dict(self) -> dict[str, Any]:
        data = self.base.to_dict()
        data["unary"] = {"kind": self.kind.value, "map": self.unary.tolist()}
        return data


def _frozen(table: np.ndarray) -> np.ndarray:
    out = np.array(table, dtype=np.int64, copy=True)
    out.setflags(write=False)
    return out


def _as_table(table: Sequence[Sequence[int]] | np.ndarray) -> np.ndarray:
    mul = np.asarray(table, dtype=np.int64)
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
        raise ValueError(f"multiplication table must be square, got shape {mul.shape}")
    n = mul.shape[0]
    if n == 0:
        raise ValueError("multiplication table is empty")
    if mul.min() < 0 or mul.max() >= n:
        raise ValueError(f"table entries must lie in 0..{n - 1}")
    return mul


def check_associative(mul: np.ndarray) -> None:
    """Raise NotAssociative with the least witness (x, y, z) if (xy)z != x(yz)."""
    n = mul.shape[0]
    for x in range(n):
        # [y, z] -> (xy)z and x(yz)
        left = mul[mul[x, :], :]
        right = mul[x, mul]
        bad = np.argwhere(left != right)
        if len(bad):
            y, z = (int(v) for v in bad[0])
            raise NotAssociative(x, y, z)


def _check_identity(mul: np.ndarray, one: int) -> None:
    idx = np.arange(mul.shape[0])
    bad = np.flatnonzero((mul[one, :] != idx) | (mul[:, one] != idx))
    if len(bad):
        raise BadIdentity(one, int(bad[0]))


def _check_zero(mul: np.ndarray, zero: int) -> None:
    bad = np.flatnonzero((mul[zero, :] != zero) | (mul[:, zero] != zero))
    if len(bad):
        raise BadZero(zero, int(bad[0]))


def build_table_semigroup(
    table: Sequence[Sequence[int]] | np.ndarray,
    labels: Sequence[str] | None = None,
    elements: Sequence[Any] | None = None,
) -> FiniteSemigroup:
    """Validate associativity and wrap a table as a semigroup."""
    mul = _as_table(table)
    check_associative(mul)
    return FiniteSemigroup(
        mul=_frozen(mul),
        labels=_labels(labels, mul.shape[0]),
        elements=tuple(elements) if elements is not None else None,
    )


def build_table_monoid(
    table: Sequence[Sequence[int]] | np.ndarray,
    one: int,
    zero: int | None = None,
    labels: Sequence[str] | None = None,
    elements: Sequence[Any] | None = None,
) -> FiniteMonoid:
    """Validate and wrap a multiplication table as a monoid.

    Args:
        table: Square table with ``table[x][y]`` the product ``xy``.
        one: Index of the identity.
        zero: Index of the zero, if the monoid has a designated one.
        labels: Display names for the elements.
        elements: Concrete objects the indices stand for.

    Returns:
        The validated FiniteMonoid.

    Raises:
        NotAssociative: With the lexicographically least failing triple.
        BadIdentity: If ``one`` is not a two-sided identity.
        BadZero: If ``zero`` is not a two-sided zero.
    """
    mul = _as_table(table)
    n = mul.shape[0]
    if not 0 <= one < n:
        raise ValueError(f"identity index {one} out of range")
    check_associative(mul)
    _check_identity(mul, one)
    if zero is not None:
        if not 0 <= zero < n:
            raise ValueError(f"zero index {zero} out of range")
        _check_zero(mul, zero)
    logger.debug("built monoid with %d elements", n)
    return FiniteMonoid(
        mul=_frozen(mul),
        one=one,
        zero=zero,
        labels=_labels(labels, n),
        elements=tuple(elements) if elements is not None else None,
    )


def semigroup_from_table(
    table: np.ndarray,
    labels: Sequence[str] | None = None,
    elements: Sequence[Any] | None = None,
) -> FiniteSemigroup:
    """Build a monoid when the table has an identity, a semigroup otherwise."""
    semigroup = build_table_semigroup(table, labels, elements)
    one = semigroup.identity_element()
    if one is None:
        return semigroup
    return FiniteMonoid(
        mul=semigroup.mul,
        one=one,
        zero=semigroup.zero_element(),
        labels=semigroup.labels,
        elements=semigroup.elements,
    )


def _labels(labels: Sequence[str] | None, n: int) -> tuple[str, ...] | None:
    if labels is None:
        return None
    labels = tuple(str(label) for label in labels)
    if len(labels) != n:
        raise ValueError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise ValueError("labels must be distinct")
    return labels


def monoid_from_elements(
    elements: Sequence[Hashable],
    compose: Callable[[Any, Any], Hashable],
    identity: Hashable,
    zero: Hashable | None = None,
    label: Callable[[Any], str] | None = None,
) -> FiniteMonoid:
    """Tabulate a monoid given by concrete elements and their composition."""
    index = {element: i for i, element in enumerate(elements)}
    table = [[index[compose(x, y)] for y in elements] for x in elements]
    labels = [label(x) for x in elements] if label is not None else None
    return build_table_monoid(
        table,
        one=index[identity],
        zero=index[zero] if zero is not None else None,
        labels=labels,
        elements=elements,
    )


def trivial_monoid() -> FiniteMonoid:
    return build_table_monoid([[0]], one=0, labels=["1"])


def adjoin_zero(monoid: FiniteMonoid) -> FiniteMonoid:
    """Return S⁰: a fresh zero appended as the last index, labelled "0"."""
    n = monoid.size
    mul = np.full((n + 1, n + 1), n, dtype=np.int64)
    mul[:n, :n] = monoid.mul
    labels = monoid.all_labels + ("0",)
    if "0" in monoid.all_labels:
        labels = monoid.all_labels + ("0*",)
    elements = monoid.elements + (None,) if monoid.elements is not None else None
    return FiniteMonoid(
        mul=_frozen(mul), one=monoid.one, zero=n, labels=labels, elements=elements
    )


def restrict_to_subset(
    monoid: FiniteMonoid, subset: Iterable[int]
) -> tuple[FiniteMonoid, tuple[int, ...]]:
    """Submonoid on a closed subset containing the identity.

    Returns the submonoid (indices renumbered in increasing parent order) and the
    embedding ``sub index -> parent index``.
    """
    embedding = tuple(sorted(set(int(x) for x in subset)))
    if monoid.one not in embedding:
        raise ValueError("subset does not contain the identity")
    position = {x: i for i, x in enumerate(embedding)}
    rows = monoid.mul[np.ix_(embedding, embedding)]
    missing = [int(v) for v in np.unique(rows) if int(v) not in position]
    if missing:
        raise ValueError(f"subset is not closed: product {missing[0]} falls outside")
    table = np.vectorize(position.__getitem__, otypes=[np.int64])(rows)
    zero = position.get(monoid.zero) if monoid.zero is not None else None
    sub = FiniteMonoid(
        mul=_frozen(table),
        one=position[monoid.one],
        zero=zero,
        labels=tuple(monoid.label(x) for x in embedding),
        elements=(
            tuple(monoid.elements[x] for x in embedding) if monoid.elements is not None else None
        ),
    )
    return sub, embedding


def submonoid_generated(
    monoid: FiniteMonoid, generators: Iterable[int]
) -> tuple[FiniteMonoid, tuple[int, ...]]:
    """Closure of the generators and the identity under multiplication."""
    gens = sorted(set(int(g) for g in generators))
    seen = {monoid.one, *gens}
    frontier = list(seen)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = int(monoid.mul[x, g])
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
        frontier = fresh
    return restrict_to_subset(monoid, seen)


def opposite(monoid: FiniteMonoid) -> FiniteMonoid:
    return monoid.opposite()


def make_unary(
    base: FiniteSemigroup, unary: Sequence[int] | np.ndarray, kind: UnaryKind | str
) -> UnaryAlgebra:
    """Attach a unary operation after checking the laws of its kind.

    Raises:
        LawViolated: Naming the first failing law and its least witness.
    """
    kind = UnaryKind(kind)
    u = np.asarray(unary, dtype=np.int64)
    if u.shape != (base.size,):
        raise ValueError(f"unary map must have {base.size} entries")
    if u.min() < 0 or u.max() >= base.size:
        raise ValueError("unary map entries out of range")
    algebra = UnaryAlgebra(base=base, unary=_frozen(u), kind=kind)
    report = unary_laws(algebra)
    failure = report.first_failure()
    if failure is not None:
        raise LawViolated(failure.law, failure.witness)
    return algebra


def unary_laws(algebra: UnaryAlgebra) -> LawReport:
    mul, u = algebra.mul, algebra.unary
    if algebra.kind is UnaryKind.DEMIGROUP:
        return demigroup_report(mul, u, "left demigroup")
    if algebra.kind is UnaryKind.DOMAIN:
        return left_restriction_report(mul, u, "left restriction")
    return right_restriction_report(mul, u, "right restriction")


def constant_unary(monoid: FiniteMonoid, kind: UnaryKind = UnaryKind.DOMAIN) -> UnaryAlgebra:
    """The monoid with D(s) = 1 for every s."""
    u = np.full(monoid.size, monoid.one, dtype=np.int64)
    return UnaryAlgebra(base=monoid, unary=_frozen(u), kind=kind)


def dual_algebra(algebra: UnaryAlgebra) -> UnaryAlgebra:
    """Swap left and right: opposite table, D and R exchanged."""
    kind = {
        UnaryKind.DOMAIN: UnaryKind.RANGE,
        UnaryKind.RANGE: UnaryKind.DOMAIN,
        UnaryKind.DEMIGROUP: UnaryKind.DEMIGROUP,
    }[algebra.kind]
    return UnaryAlgebra(base=algebra.base.opposite(), unary=algebra.unary, kind=kind)
