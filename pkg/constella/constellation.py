"""Constellations: partial products with a domain map, and the E-completions of monoids."""

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, NamedTuple

import numpy as np

from .errors import InvariantViolation, NotEDemigroup, NotIntegral, NotProtomodal
from .idempotents import IdempotentSet, Verdict, idempotents, is_protomodal, sim_r_classes
from .isomorphism import find_isomorphism
from .laws import LawReport, first_witness
from .monoid import FiniteMonoid, UnaryAlgebra, UnaryKind, _frozen, semigroup_from_table

logger = logging.getLogger(__name__)

UNDEFINED = -1


class CompletionElement(NamedTuple):
    """A pair (e, s) of parent indices with es = s."""

    e: int
    s: int


@dataclass(frozen=True, eq=False)
class Constellation:
    """Partial product table (``UNDEFINED`` where x∘y does not exist) and domain map."""

    product: np.ndarray = field(repr=False)
    dmap: np.ndarray = field(repr=False)
    labels: tuple[str, ...] | None = None
    elements: tuple[Any, ...] | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return int(self.product.shape[0])

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    @cached_property
    def all_labels(self) -> tuple[str, ...]:
        return tuple(self.label(x) for x in range(self.size))

    def index(self, label: str) -> int:
        return self.all_labels.index(label)

    def compose(self, x: int, y: int) -> int | None:
        value = int(self.product[x, y])
        return None if value == UNDEFINED else value

    def defined(self, x: int, y: int) -> bool:
        return int(self.product[x, y]) != UNDEFINED

    def domain(self, x: int) -> int:
        return int(self.dmap[x])

    @cached_property
    def domain_elements(self) -> tuple[int, ...]:
        return tuple(sorted({int(v) for v in self.dmap}))

    @cached_property
    def extended(self) -> np.ndarray:
        """Product with an absorbing sink at index ``size`` standing for undefined."""
        n = self.size
        ext = np.full((n + 1, n + 1), n, dtype=np.int64)
        ext[:n, :n] = np.where(self.product == UNDEFINED, n, self.product)
        return ext

    def to_dict(self) -> dict[str, Any]:
        n = self.size
        triples = [
            [int(x), int(y), int(self.product[x, y])]
            for x, y in zip(*np.nonzero(self.product != UNDEFINED))
        ]
        elements = None
        if self.elements is not None and all(
            isinstance(c, CompletionElement) for c in self.elements
        ):
            elements = [{"e": c.e, "s": c.s} for c in self.elements]
        return {
            "size": n,
            "elements": elements,
            "labels": list(self.labels) if self.labels is not None else None,
            "product": triples,
            "dmap": self.dmap.tolist(),
        }


@dataclass(frozen=True, eq=False)
class SmallCategory:
    """Arrows (e, s, f) with esf = s; objects are the chosen idempotents."""

    arrows: tuple[tuple[int, int, int], ...]
    product: np.ndarray = field(repr=False)
    dom: np.ndarray = field(repr=False)
    cod: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.arrows)


def _completion_label(monoid: FiniteMonoid, c: CompletionElement) -> str:
    return f"({monoid.label(c.e)},{monoid.label(c.s)})"


def _completion(
    monoid: FiniteMonoid, e_set: IdempotentSet, keep: Callable[[int, int], bool]
) -> Constellation:
    mul = monoid.mul
    n = monoid.size
    carrier = [
        CompletionElement(e, s)
        for e in e_set.members
        for s in range(n)
        if int(mul[e, s]) == s and keep(e, s)
    ]
    es = np.asarray([c.e for c in carrier], dtype=np.int64)
    ss = np.asarray([c.s for c in carrier], dtype=np.int64)
    lookup = np.full((n, n), UNDEFINED, dtype=np.int64)
    lookup[es, ss] = np.arange(len(carrier))
    # (e,s)∘(f,t) = (e, st) exactly when sf = s
    defined = mul[ss[:, None], es[None, :]] == ss[:, None]
    result = lookup[es[:, None], mul[ss[:, None], ss[None, :]]]
    if (defined & (result == UNDEFINED)).any():
        raise InvariantViolation("completion product left the carrier")
    product = np.where(defined, result, UNDEFINED)
    dmap = lookup[es, es]
    if (dmap == UNDEFINED).any():
        raise InvariantViolation("domain element missing from the completion carrier")
    logger.debug("completion over %d idempotents has %d elements", len(e_set), len(carrier))
    return Constellation(
        product=_frozen(product),
        dmap=_frozen(dmap),
        labels=tuple(_completion_label(monoid, c) for c in carrier),
        elements=tuple(carrier),
    )


def c_E(monoid: FiniteMonoid, e_set: IdempotentSet) -> Constellation:
    """C_E(S) = {(e,s) : es = s} with (e,s)∘(f,t) = (e,st) when sf = s and D((e,s)) = (e,e)."""
    return _completion(monoid, e_set, lambda e, s: True)


def _check_e_demigroup(algebra: UnaryAlgebra, e_set: IdempotentSet) -> None:
    d = algebra.unary
    outside = e_set.position_array[d] < 0
    if outside.any():
        raise NotEDemigroup("d(s) outside E", (int(np.flatnonzero(outside)[0]),))
    e = e_set.array
    bad = algebra.mul[e, d[e]] != e
    if bad.any():
        raise NotEDemigroup("e d(e) != e", (int(e[np.flatnonzero(bad)[0]]),))


def c_d_E(algebra: UnaryAlgebra, e_set: IdempotentSet) -> Constellation:
    """The (d, E)-completion {(e,s) : es = s, d(e) = d(s)} of a left E-demigroup.

    Raises:
        NotEDemigroup: If d leaves E or some e d(e) != e.
    """
    base = algebra.base
    if not isinstance(base, FiniteMonoid):
        raise NotEDemigroup("base has no identity", ())
    _check_e_demigroup(algebra, e_set)
    d = algebra.unary
    return _completion(base, e_set, lambda e, s: int(d[e]) == int(d[s]))


def integrality_witness(monoid: FiniteMonoid) -> tuple[int, int] | None:
    """Least pair of non-zero elements with product zero."""
    zero = monoid.zero
    if zero is None:
        raise NotIntegral(None, "no designated zero")
    divisors = monoid.mul == zero
    divisors[zero, :] = False
    divisors[:, zero] = False
    witness = first_witness(divisors)
    return None if witness is None else (witness[0], witness[1])


def zero_demigroup(monoid: FiniteMonoid) -> UnaryAlgebra:
    """S as a demigroup with d(0) = 0 and d(s) = 1 otherwise."""
    witness = integrality_witness(monoid)
    if witness is not None:
        raise NotIntegral(witness)
    d = np.full(monoid.size, monoid.one, dtype=np.int64)
    assert monoid.zero is not None
    d[monoid.zero] = monoid.zero
    return UnaryAlgebra(base=monoid, unary=_frozen(d), kind=UnaryKind.DEMIGROUP)


def c_0_E(monoid: FiniteMonoid, e_set: IdempotentSet) -> Constellation:
    """Zero-reduced completion: C_E(S) without the pairs (e, 0) for e != 0.

    Raises:
        NotIntegral: With a zero-divisor pair when S is not integral with zero.
    """
    algebra = zero_demigroup(monoid)
    if not (e_set.contains_zero and e_set.contains_one):
        raise NotEDemigroup("E must contain 0 and 1", ())
    return c_d_E(algebra, e_set)


def demonization(algebra: UnaryAlgebra) -> Constellation:
    """C^d_{d(S)}(S), which is {(d(s), s)}."""
    base = algebra.base
    assert isinstance(base, FiniteMonoid)
    return c_d_E(algebra, IdempotentSet(base, algebra.projections))


def check_constellation(p: Constellation) -> LawReport:
    """(C1) x∘(y∘z) defined implies (x∘y)∘z defined and equal; (C2) x∘y, y∘z defined
    implies x∘(y∘z) defined; (C3) D(x) is the unique right identity with D(x)∘x = x."""
    n = p.size
    ext = p.extended
    inner = ext[:n, :n]
    c1: list[tuple[int, ...]] = []
    c2: list[tuple[int, ...]] = []
    for x in range(n):
        left = ext[ext[x, :n]][:, :n]  # (x∘y)∘z
        right = ext[x, inner]  # x∘(y∘z)
        hit = first_witness((right != n) & (left != right))
        if hit is not None:
            c1.append((x, *hit))
        chained = (ext[x, :n] != n)[:, None] & (inner != n)
        hit = first_witness(chained & (right == n))
        if hit is not None:
            c2.append((x, *hit))
    report = LawReport(subject="constellation")
    report.add_least("C1", c1)
    report.add_least("C2", c2)

    product = p.product
    idx = np.arange(n)
    right_identity = ((product == UNDEFINED) | (product == idx[:, None])).all(axis=0)
    fixes = product == idx[None, :]  # [e, x]: e∘x = x
    c3 = np.zeros(n, dtype=bool)
    for x in range(n):
        d = int(p.dmap[x])
        others = right_identity & fixes[:, x]
        others[d] = False
        c3[x] = not right_identity[d] or not fixes[d, x] or others.any()
    report.add("C3", c3)
    return report


def cat_E(monoid: FiniteMonoid, e_set: IdempotentSet) -> SmallCategory:
    """Cat_E(S): arrows (e,s,f) with esf = s and (e,s,f)∘(f,t,g) = (e,st,g)."""
    mul = monoid.mul
    arrows = [
        (e, s, f)
        for e in e_set.members
        for s in range(monoid.size)
        for f in e_set.members
        if int(mul[mul[e, s], f]) == s
    ]
    index = {a: i for i, a in enumerate(arrows)}
    m = len(arrows)
    product = np.full((m, m), UNDEFINED, dtype=np.int64)
    for i, (e, s, f) in enumerate(arrows):
        for j, (f2, t, g) in enumerate(arrows):
            if f == f2:
                product[i, j] = index[(e, int(mul[s, t]), g)]
    dom = np.asarray([index[(e, e, e)] for e, _, _ in arrows], dtype=np.int64)
    cod = np.asarray([index[(f, f, f)] for _, _, f in arrows], dtype=np.int64)
    return SmallCategory(tuple(arrows), _frozen(product), _frozen(dom), _frozen(cod))


def check_category(cat: SmallCategory) -> LawReport:
    """Composable exactly when codomain meets domain, associative, with identities."""
    m = cat.size
    product = cat.product
    idx = np.arange(m)
    report = LawReport(subject="category")
    report.add("composable", (product != UNDEFINED) != (cat.cod[:, None] == cat.dom[None, :]))
    assoc: list[tuple[int, ...]] = []
    for x in range(m):
        for y in np.flatnonzero(product[x] != UNDEFINED):
            xy = product[x, y]
            for z in np.flatnonzero(product[y] != UNDEFINED):
                if product[xy, z] != product[x, product[y, z]]:
                    assoc.append((x, int(y), int(z)))
                    break
    report.add_least("associative", assoc)
    report.add(
        "identities",
        (product[cat.dom, idx] != idx) | (product[idx, cat.cod] != idx),
    )
    return report


def is_normal(p: Constellation) -> Verdict:
    """No two distinct domain elements compose both ways."""
    dom = np.asarray(p.domain_elements, dtype=np.int64)
    sub = p.product[np.ix_(dom, dom)] != UNDEFINED
    clash = sub & sub.T & ~np.eye(len(dom), dtype=bool)
    witness = first_witness(clash)
    if witness is None:
        return Verdict(True)
    i, j = witness
    return Verdict(False, (int(dom[i]), int(dom[j])), "domain elements compose both ways")


@dataclass(frozen=True, eq=False)
class InductivityCertificate:
    """``table[s, j]`` is the domain element s·e for e = domain_elements[j]."""

    constellation: Constellation
    table: np.ndarray = field(repr=False)

    @cached_property
    def positions(self) -> dict[int, int]:
        return {e: j for j, e in enumerate(self.constellation.domain_elements)}

    def dot(self, s: int, e: int) -> int:
        return int(self.table[s, self.positions[e]])


def _certificate_search(
    p: Constellation,
) -> tuple[InductivityCertificate | None, tuple[str, tuple[int, ...]] | None]:
    normal = is_normal(p)
    if not normal:
        assert normal.witness is not None
        return None, ("normal", normal.witness)
    n = p.size
    ext = p.extended
    dom = np.asarray(p.domain_elements, dtype=np.int64)
    # [t, j]: t∘x_j defined
    reach = p.product[:, dom] != UNDEFINED
    table = np.empty((n, len(dom)), dtype=np.int64)
    for s in range(n):
        # [t, j]: (t∘s)∘e_j defined
        lhs = ext[ext[:n, s]][:, dom] != n
        match = (lhs[:, :, None] == reach[:, None, :]).all(axis=0)
        found = match.any(axis=1)
        if not found.all():
            j = int(np.flatnonzero(~found)[0])
            return None, ("dot", (s, int(dom[j])))
        table[s] = dom[match.argmax(axis=1)]
    table.setflags(write=False)
    return InductivityCertificate(p, table), None


def is_inductive(p: Constellation) -> InductivityCertificate | None:
    """Normal, and for every s and domain element e some x in D(P) with
    (t∘s)∘e defined iff t∘x defined, for all t."""
    certificate, witness = _certificate_search(p)
    if certificate is None:
        logger.debug("constellation is not inductive: %s", witness)
    return certificate


def inductivity_obstruction(p: Constellation) -> tuple[str, tuple[int, ...]] | None:
    return _certificate_search(p)[1]


def natural_order(p: Constellation) -> np.ndarray:
    """``le[x, y]`` iff x = D(x)∘y."""
    idx = np.arange(p.size)
    return p.product[p.dmap, :] == idx[:, None]


def co_restriction(p: Constellation, certificate: InductivityCertificate, a: int, e: int) -> int:
    """a|e computed as (a·e)∘a."""
    value = int(p.product[certificate.dot(a, e), a])
    if value == UNDEFINED:
        raise InvariantViolation(f"(a·e)∘a undefined for a={a}, e={e}")
    return value


def brute_force_co_restriction(p: Constellation, a: int, e: int) -> int | None:
    """The ≤-maximum of {x ≤ a : x∘e defined}, found by scanning."""
    le = natural_order(p)
    candidates = np.flatnonzero(le[:, a] & (p.product[:, e] != UNDEFINED))
    for m in candidates:
        if le[candidates, m].all():
            return int(m)
    return None


def induced_left_restriction(
    p: Constellation, certificate: InductivityCertificate
) -> UnaryAlgebra:
    """Total product s⊗t = (s|D(t))∘t with D inherited from P."""
    n = p.size
    idx = np.arange(n)
    positions = np.asarray([certificate.positions[int(d)] for d in p.dmap], dtype=np.int64)
    dots = certificate.table[idx[:, None], positions[None, :]]  # s·D(t)
    restricted = p.product[dots, idx[:, None]]
    if (restricted == UNDEFINED).any():
        raise InvariantViolation("co-restriction undefined")
    table = p.product[restricted, idx[None, :]]
    if (table == UNDEFINED).any():
        raise InvariantViolation("co-restriction does not compose with its target")
    base = semigroup_from_table(table, labels=p.labels, elements=p.elements)
    return UnaryAlgebra(base=base, unary=p.dmap, kind=UnaryKind.DOMAIN)


def quotient_by_theta(monoid: FiniteMonoid) -> Constellation:
    """C_{E(S)}(S) modulo (e,s) θ (f,t) iff e ∼_r f and es = et.

    Raises:
        NotProtomodal: If some Eq(s, se) has no idempotent generator.
    """
    protomodal = is_protomodal(monoid)
    if not protomodal:
        assert protomodal.witness is not None
        s, e = protomodal.witness
        raise NotProtomodal((s, e))
    everything = idempotents(monoid)
    q = c_E(monoid, everything)
    assert q.elements is not None
    representative = {}
    for cls in sim_r_classes(everything):
        for e in cls:
            representative[e] = cls[0]
    # each class has the canonical member (r, rs) with r the least of e's ∼_r class
    keys = []
    for c in q.elements:
        r = representative[c.e]
        keys.append((r, int(monoid.mul[r, c.s])))
    distinct = sorted(set(keys))
    class_of = {k: i for i, k in enumerate(distinct)}
    cls = np.asarray([class_of[k] for k in keys], dtype=np.int64)
    m = len(distinct)
    table = np.full((m, m), -2, dtype=np.int64)
    n = q.size
    for x in range(n):
        for y in range(n):
            value = int(q.product[x, y])
            image = UNDEFINED if value == UNDEFINED else int(cls[value])
            slot = table[cls[x], cls[y]]
            if slot == -2:
                table[cls[x], cls[y]] = image
            elif slot != image:
                raise InvariantViolation("θ is not a congruence on the completion")
    dmap = np.empty(m, dtype=np.int64)
    for x in range(n):
        dmap[cls[x]] = cls[q.dmap[x]]
    elements = tuple(CompletionElement(e, s) for e, s in distinct)
    return Constellation(
        product=_frozen(table),
        dmap=_frozen(dmap),
        labels=tuple(_completion_label(monoid, c) for c in elements),
        elements=elements,
    )


def constellation_isomorphic(
    p: Constellation, q: Constellation, budget: int | None = None
) -> dict[int, int] | None:
    """A bijection preserving D, definedness in both directions and products."""
    if p.size != q.size:
        return None
    mapping = find_isomorphism(p.product, p.dmap, q.product, q.dmap, budget)
    return None if mapping is None else dict(enumerate(mapping))
