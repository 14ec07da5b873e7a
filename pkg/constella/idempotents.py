"""Idempotent sets, the quasiorders on them, equalizer ideals and modal actions.

For idempotents e, f of S: e ≤_r f iff e = ef, and e ≤_l f iff e = fe. The modal
action t·e is the member of E generating Eq(te, t) = {u : ute = ut} as a left ideal.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any

import numpy as np

from .errors import AlgebraError, InvariantViolation, NotIdempotent, SelectorInapplicable
from .families import Transformation
from .laws import LawReport, first_witness
from .monoid import FiniteMonoid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer with the least counterexample when the answer is no."""

    holds: bool
    witness: tuple[int, ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self, labels: tuple[str, ...] | None = None) -> dict[str, Any]:
        witness = None
        if self.witness is not None:
            witness = [labels[w] if labels else w for w in self.witness]
        return {"holds": self.holds, "witness": witness, "reason": self.reason}


@dataclass(frozen=True, eq=False)
class IdempotentSet:
    """A non-empty set of idempotents of a monoid, kept as sorted indices."""

    parent: FiniteMonoid
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted(set(int(x) for x in self.members)))
        if not members:
            raise AlgebraError("idempotent set must be non-empty")
        for x in members:
            if not self.parent.is_idempotent(x):
                raise NotIdempotent(x)
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):  # type: ignore[no-untyped-def]
        return iter(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self._positions

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.members, dtype=np.int64)

    @cached_property
    def _positions(self) -> dict[int, int]:
        return {e: i for i, e in enumerate(self.members)}

    def position(self, e: int) -> int:
        return self._positions[e]

    @cached_property
    def position_array(self) -> np.ndarray:
        """Element index -> position in members, -1 for non-members."""
        pos = np.full(self.parent.size, -1, dtype=np.int64)
        pos[self.array] = np.arange(len(self.members))
        return pos

    @cached_property
    def le_r(self) -> np.ndarray:
        """``le_r[i, j]`` iff members[i] ≤_r members[j]."""
        e = self.array
        return self.parent.mul[np.ix_(e, e)] == e[:, None]

    @cached_property
    def le_l(self) -> np.ndarray:
        e = self.array
        return self.parent.mul[np.ix_(e, e)].T == e[:, None]

    @cached_property
    def right_pre_reduced(self) -> bool:
        return is_right_pre_reduced(self).holds

    @cached_property
    def left_pre_reduced(self) -> bool:
        return is_left_pre_reduced(self).holds

    @cached_property
    def right_reduced(self) -> bool:
        return is_right_reduced(self).holds

    @cached_property
    def left_reduced(self) -> bool:
        return is_left_reduced(self).holds

    @property
    def contains_one(self) -> bool:
        return self.parent.one in self

    @property
    def contains_zero(self) -> bool:
        return self.parent.zero is not None and self.parent.zero in self

    def rebind(self, parent: FiniteMonoid) -> "IdempotentSet":
        """Same indices over another table on the same carrier (e.g. the opposite)."""
        return IdempotentSet(parent, self.members)

    def labels(self) -> list[str]:
        return [self.parent.label(e) for e in self.members]

    def to_dict(self) -> dict[str, Any]:
        return {
            "members": self.labels(),
            "right_pre_reduced": self.right_pre_reduced,
            "left_pre_reduced": self.left_pre_reduced,
            "right_reduced": self.right_reduced,
            "left_reduced": self.left_reduced,
            "contains_one": self.contains_one,
            "contains_zero": self.contains_zero,
        }


def idempotents(monoid: FiniteMonoid) -> IdempotentSet:
    """E(S), every x with xx = x."""
    return IdempotentSet(monoid, monoid.idempotent_indices)


def idempotent_set(monoid: FiniteMonoid, labels: Iterable[str]) -> IdempotentSet:
    return IdempotentSet(monoid, tuple(monoid.index(label) for label in labels))


def leq_r(e_set: IdempotentSet, e: int, f: int) -> bool:
    return int(e_set.parent.mul[e, f]) == e


def leq_l(e_set: IdempotentSet, e: int, f: int) -> bool:
    return int(e_set.parent.mul[f, e]) == e


def _classes(members: tuple[int, ...], le: np.ndarray) -> list[tuple[int, ...]]:
    equiv = le & le.T
    seen: set[int] = set()
    out = []
    for i in range(len(members)):
        if i in seen:
            continue
        cls = tuple(int(j) for j in np.flatnonzero(equiv[i]))
        seen.update(cls)
        out.append(tuple(members[j] for j in cls))
    return out


def sim_r_classes(e_set: IdempotentSet) -> list[tuple[int, ...]]:
    """∼_r classes ordered by least member."""
    return _classes(e_set.members, e_set.le_r)


def sim_l_classes(e_set: IdempotentSet) -> list[tuple[int, ...]]:
    return _classes(e_set.members, e_set.le_l)


def _antisymmetry(e_set: IdempotentSet, le: np.ndarray) -> Verdict:
    k = len(e_set)
    clash = le & le.T & ~np.eye(k, dtype=bool)
    witness = first_witness(clash)
    if witness is None:
        return Verdict(True)
    i, j = witness
    return Verdict(False, (e_set.members[i], e_set.members[j]), "mutually related")


def is_right_pre_reduced(e_set: IdempotentSet) -> Verdict:
    """≤_r is a partial order on E."""
    return _antisymmetry(e_set, e_set.le_r)


def is_left_pre_reduced(e_set: IdempotentSet) -> Verdict:
    return _antisymmetry(e_set, e_set.le_l)


def is_right_reduced(e_set: IdempotentSet) -> Verdict:
    """e = ef implies e = fe for all e, f in E."""
    witness = first_witness(e_set.le_r & ~e_set.le_l)
    if witness is None:
        return Verdict(True)
    i, j = witness
    return Verdict(False, (e_set.members[i], e_set.members[j]), "e = ef but e != fe")


def is_left_reduced(e_set: IdempotentSet) -> Verdict:
    witness = first_witness(e_set.le_l & ~e_set.le_r)
    if witness is None:
        return Verdict(True)
    i, j = witness
    return Verdict(False, (e_set.members[i], e_set.members[j]), "e = fe but e != ef")


def is_reduced(e_set: IdempotentSet) -> Verdict:
    right = is_right_reduced(e_set)
    return right if not right else is_left_reduced(e_set)


class Selector(str, Enum):
    LEAST_INDEX = "least-index"
    MIN_OF_RANGE = "min-of-range"
    KERNEL_MIN = "kernel-min"


def _min_of_range(t: Transformation) -> bool:
    low = min(t.img)
    return all(y == x or y == low for x, y in enumerate(t.img))


def _kernel_min(t: Transformation) -> bool:
    return all(t.img[x] == cell[0] for cell in t.kernel() for x in cell)


def _pick(monoid: FiniteMonoid, cls: tuple[int, ...], selector: Selector) -> int:
    if selector is Selector.LEAST_INDEX:
        return cls[0]
    if monoid.elements is None:
        raise SelectorInapplicable(selector.value, "elements are not transformations")
    predicate = _min_of_range if selector is Selector.MIN_OF_RANGE else _kernel_min
    hits = []
    for x in cls:
        element = monoid.elements[x]
        if element is None:
            # adjoined zero
            hits.append(x)
        elif isinstance(element, Transformation):
            if predicate(element):
                hits.append(x)
        else:
            raise SelectorInapplicable(selector.value, f"{monoid.label(x)} is not a transformation")
    if len(hits) != 1:
        raise SelectorInapplicable(
            selector.value, f"class {[monoid.label(x) for x in cls]} has {len(hits)} candidates"
        )
    return hits[0]


def maximal_right_pre_reduced(
    monoid: FiniteMonoid,
    selector: Selector | str = Selector.LEAST_INDEX,
    within: IdempotentSet | None = None,
) -> IdempotentSet:
    """One representative per ∼_r class (per ∼_l class for ``kernel-min``).

    Raises:
        SelectorInapplicable: If the selector needs transformations and the monoid
            is not T_n or T_n⁰, or a class has no unique candidate.
    """
    selector = Selector(selector)
    pool = within if within is not None else idempotents(monoid)
    if selector is Selector.KERNEL_MIN:
        classes = sim_l_classes(pool)
    else:
        classes = sim_r_classes(pool)
    return IdempotentSet(monoid, tuple(_pick(monoid, cls, selector) for cls in classes))


def maximal_left_pre_reduced(
    monoid: FiniteMonoid, within: IdempotentSet | None = None
) -> IdempotentSet:
    pool = within if within is not None else idempotents(monoid)
    return IdempotentSet(monoid, tuple(cls[0] for cls in sim_l_classes(pool)))


def is_maximal_right_pre_reduced(e_set: IdempotentSet) -> Verdict:
    """Right pre-reduced and meeting every ∼_r class of E(S)."""
    pre = is_right_pre_reduced(e_set)
    if not pre:
        return pre
    monoid = e_set.parent
    mul = monoid.mul
    for f in monoid.idempotent_indices:
        if not any(mul[f, e] == f and mul[e, f] == e for e in e_set.members):
            return Verdict(False, (f,), "∼_r class has no member in E")
    return Verdict(True)


def right_equivalent(e_set: IdempotentSet, other: IdempotentSet) -> dict[int, int] | None:
    """The bijection e ↦ e′ with e ∼_r e′, if E ∼_r E′."""
    if len(e_set) != len(other) or not (e_set.right_pre_reduced and other.right_pre_reduced):
        return None
    mul = e_set.parent.mul
    pairing: dict[int, int] = {}
    for e in e_set.members:
        partners = [f for f in other.members if mul[e, f] == e and mul[f, e] == f]
        if len(partners) != 1:
            return None
        pairing[e] = partners[0]
    if len(set(pairing.values())) != len(pairing):
        return None
    return pairing


def equalizer_set(monoid: FiniteMonoid, s: int, t: int) -> frozenset[int]:
    """Eq(s, t) = {u : us = ut}."""
    return frozenset(int(u) for u in np.flatnonzero(monoid.mul[:, s] == monoid.mul[:, t]))


def left_ideal(monoid: FiniteMonoid, a: int) -> frozenset[int]:
    return frozenset(int(x) for x in np.flatnonzero(monoid.left_ideal_masks[a]))


def _as_mask(monoid: FiniteMonoid, subset: Iterable[int] | np.ndarray) -> np.ndarray:
    if isinstance(subset, np.ndarray) and subset.dtype == bool:
        return subset
    mask = np.zeros(monoid.size, dtype=bool)
    mask[list(subset)] = True
    return mask


def ideal_generators_in(
    monoid: FiniteMonoid, subset: Iterable[int] | np.ndarray, candidates: IdempotentSet
) -> list[int]:
    """All e in F with Se equal to the given subset."""
    mask = _as_mask(monoid, subset)
    rows = monoid.left_ideal_masks[candidates.array]
    hits = np.flatnonzero((rows == mask[None, :]).all(axis=1))
    return [candidates.members[i] for i in hits]


def ideal_generator_in(
    monoid: FiniteMonoid, subset: Iterable[int] | np.ndarray, candidates: IdempotentSet
) -> int | None:
    """Some e in F with Se = L; the least index when F is not right pre-reduced."""
    hits = ideal_generators_in(monoid, subset, candidates)
    if not hits:
        return None
    if len(hits) > 1:
        if candidates.right_pre_reduced:
            raise InvariantViolation(f"right pre-reduced set has generators {hits}")
        logger.debug("left ideal has %d generators in F, taking the least", len(hits))
    return hits[0]


@dataclass(frozen=True, eq=False)
class ModalAction:
    """The table t·e for t in S and e in E."""

    parent: FiniteMonoid
    e_set: IdempotentSet
    table: np.ndarray = field(repr=False)

    def dot(self, t: int, e: int) -> int:
        return int(self.table[t, self.e_set.position(e)])

    def to_dict(self) -> dict[str, Any]:
        labels = self.parent.all_labels
        return {
            "columns": self.e_set.labels(),
            "rows": {
                labels[t]: [labels[v] for v in self.table[t]] for t in range(self.parent.size)
            },
        }


def _modal_search(
    monoid: FiniteMonoid, e_set: IdempotentSet
) -> tuple[np.ndarray | None, tuple[int, int] | None]:
    if not e_set.contains_one:
        raise AlgebraError("a modal action needs 1 in E")
    if not e_set.right_pre_reduced:
        raise AlgebraError("a modal action needs E right pre-reduced")
    mul = monoid.mul
    e = e_set.array
    gens = monoid.left_ideal_masks[e]
    table = np.empty((monoid.size, len(e)), dtype=np.int64)
    for t in range(monoid.size):
        # column i marks Eq(t e_i, t)
        eq = mul[:, mul[t, e]] == mul[:, [t]]
        match = (gens[None, :, :] == eq.T[:, None, :]).all(axis=2)
        found = match.any(axis=1)
        if not found.all():
            i = int(np.flatnonzero(~found)[0])
            return None, (t, int(e[i]))
        table[t] = e[match.argmax(axis=1)]
    table.setflags(write=False)
    return table, None


def modal_action(monoid: FiniteMonoid, e_set: IdempotentSet) -> ModalAction | None:
    """The left E-modal operation, or None when some Eq(te, t) has no generator in E.

    Requires 1 in E and E right pre-reduced.
    """
    table, witness = _modal_search(monoid, e_set)
    if table is None:
        logger.debug("no modal action: Eq(te, t) not generated in E at %s", witness)
        return None
    return ModalAction(monoid, e_set, table)


def modal_obstruction(monoid: FiniteMonoid, e_set: IdempotentSet) -> tuple[int, int] | None:
    """Least (t, e) whose Eq(te, t) has no generator in E."""
    return _modal_search(monoid, e_set)[1]


def transport_modal_action(action: ModalAction, other: IdempotentSet) -> ModalAction:
    """Carry s·e over to a right-equivalent E′ via s·e′ = (s·e)′."""
    pairing = right_equivalent(action.e_set, other)
    if pairing is None:
        raise AlgebraError("idempotent sets are not right equivalent")
    inverse = {v: k for k, v in pairing.items()}
    table = np.empty((action.parent.size, len(other)), dtype=np.int64)
    for j, f in enumerate(other.members):
        column = action.table[:, action.e_set.position(inverse[f])]
        table[:, j] = [pairing[int(v)] for v in column]
    return ModalAction(action.parent, other, table)


@dataclass(frozen=True, eq=False)
class MeetTable:
    """Greatest lower bounds in (E, ≤_r)."""

    e_set: IdempotentSet
    table: np.ndarray = field(repr=False)

    def meet(self, e: int, f: int) -> int:
        return int(self.table[self.e_set.position(e), self.e_set.position(f)])

    def to_dict(self) -> dict[str, Any]:
        labels = self.e_set.parent.all_labels
        return {
            "columns": self.e_set.labels(),
            "rows": {
                labels[e]: [labels[v] for v in self.table[i]]
                for i, e in enumerate(self.e_set.members)
            },
        }


def _meet_search(e_set: IdempotentSet) -> tuple[np.ndarray | None, tuple[int, int] | None]:
    le = e_set.le_r
    k = len(e_set)
    table = np.empty((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            lower = le[:, i] & le[:, j]
            greatest = [g for g in np.flatnonzero(lower) if le[lower, g].all()]
            if not greatest:
                return None, (e_set.members[i], e_set.members[j])
            table[i, j] = e_set.members[int(greatest[0])]
    table.setflags(write=False)
    return table, None


def meet_table(e_set: IdempotentSet) -> MeetTable | None:
    table, _ = _meet_search(e_set)
    return MeetTable(e_set, table) if table is not None else None


def meet_obstruction(e_set: IdempotentSet) -> tuple[int, int] | None:
    """Least pair of E with no greatest lower bound under ≤_r."""
    return _meet_search(e_set)[1]


def check_modal_laws(
    monoid: FiniteMonoid,
    e_set: IdempotentSet,
    action: ModalAction,
    meets: MeetTable | None = None,
) -> LawReport:
    """(M1) e·e = 1, (M2) s·1 = 1, (M3) (s·e)s = (s·e)se, (M4) (st)·e = s·(t·e),
    and (M5) s·(e∧f) = (s·e)∧(s·f) when a meet table is supplied."""
    n = monoid.size
    mul, act = monoid.mul, action.table
    e = e_set.array
    k = len(e)
    pos = e_set.position_array
    idx = np.arange(n)
    report = LawReport(subject="modal action")

    m1 = np.zeros(n, dtype=bool)
    m1[e] = act[e, np.arange(k)] != monoid.one
    report.add("M1", m1)
    report.add("M2", act[:, e_set.position(monoid.one)] != monoid.one)

    lhs = mul[act, idx[:, None]]
    m3 = np.zeros((n, n), dtype=bool)
    m3[:, e] = lhs != mul[lhs, e[None, :]]
    report.add("M3", m3)

    m4: list[tuple[int, ...]] = []
    for i in range(k):
        left = act[mul, i]
        right = act[idx[:, None], pos[act[:, i]][None, :]]
        hit = first_witness(left != right)
        if hit is not None:
            m4.append((*hit, int(e[i])))
    report.add_least("M4", m4)

    if meets is None:
        report.skip("M5")
    else:
        m5: list[tuple[int, ...]] = []
        for i in range(k):
            for j in range(k):
                left = act[:, pos[meets.table[i, j]]]
                right = meets.table[pos[act[:, i]], pos[act[:, j]]]
                hit = first_witness(left != right)
                if hit is not None:
                    m5.append((hit[0], int(e[i]), int(e[j])))
        report.add_least("M5", m5)
    return report


@dataclass
class InductiveVerdict:
    """Outcome of the inductive left E-monoid decision."""

    holds: bool
    action: ModalAction | None = None
    meets: MeetTable | None = None
    condition: str | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self, labels: tuple[str, ...]) -> dict[str, Any]:
        return {
            "inductive": self.holds,
            "failed_condition": self.condition,
            "witness": [labels[w] for w in self.witness] if self.witness else None,
        }


def is_inductive_left_E_monoid(monoid: FiniteMonoid, e_set: IdempotentSet) -> InductiveVerdict:
    """E right pre-reduced, every Eq(te, t) generated in E, meets exist, and
    se = sf = s implies s(e∧f) = s."""
    if not e_set.contains_one:
        raise AlgebraError("E must contain the identity")
    pre = is_right_pre_reduced(e_set)
    if not pre:
        return InductiveVerdict(False, condition="right-pre-reduced", witness=pre.witness)
    table, witness = _modal_search(monoid, e_set)
    if table is None:
        return InductiveVerdict(False, condition="modal", witness=witness)
    action = ModalAction(monoid, e_set, table)
    meet, pair = _meet_search(e_set)
    if meet is None:
        return InductiveVerdict(False, action=action, condition="meet", witness=pair)
    meets = MeetTable(e_set, meet)
    e = e_set.array
    fixed = monoid.mul[:, e] == np.arange(monoid.size)[:, None]
    pos = e_set.position_array
    for i in range(len(e)):
        for j in range(len(e)):
            both = fixed[:, i] & fixed[:, j]
            broken = both & ~fixed[:, pos[meet[i, j]]]
            if broken.any():
                s = int(np.flatnonzero(broken)[0])
                return InductiveVerdict(
                    False, action, meets, condition="meet-fixes", witness=(s, int(e[i]), int(e[j]))
                )
    return InductiveVerdict(True, action, meets)


def has_definable_meets(monoid: FiniteMonoid, e_set: IdempotentSet, action: ModalAction) -> Verdict:
    """(e·f)e lies in E for all e, f in E."""
    e = e_set.array
    # [i, j] -> (e_i · e_j) e_i
    values = monoid.mul[action.table[e, :], e[:, None]]
    outside = e_set.position_array[values] < 0
    witness = first_witness(outside)
    if witness is None:
        return Verdict(True)
    i, j = witness
    return Verdict(False, (int(e[i]), int(e[j])), "(e·f)e falls outside E")


def protomodal_failures(
    monoid: FiniteMonoid, candidates: IdempotentSet | None = None
) -> list[tuple[int, int]]:
    """Every (s, e), e in F, whose Eq(s, se) has no generator in F."""
    pool = candidates if candidates is not None else idempotents(monoid)
    mul = monoid.mul
    gens = monoid.left_ideal_masks[pool.array]
    out = []
    for e in pool.members:
        # column s marks Eq(s, se)
        eq = mul[:, mul[:, e]] == mul
        match = (gens[None, :, :] == eq.T[:, None, :]).all(axis=2).any(axis=1)
        out.extend((int(s), e) for s in np.flatnonzero(~match))
    return sorted(out)


def is_protomodal(monoid: FiniteMonoid, candidates: IdempotentSet | None = None) -> Verdict:
    """Every Eq(s, se), e in F, is generated as a left ideal by a member of F."""
    failures = protomodal_failures(monoid, candidates)
    if not failures:
        return Verdict(True)
    return Verdict(False, failures[0], "Eq(s, se) has no idempotent generator")


@dataclass
class ProtomodalCore:
    """The largest G making S G-protomodal and a maximal right pre-reduced E′ ⊆ G."""

    largest: IdempotentSet
    chosen: IdempotentSet
    rounds: int


def largest_protomodal_idempotents(
    monoid: FiniteMonoid, known: Iterable[IdempotentSet] = ()
) -> ProtomodalCore:
    """Greatest fixpoint: drop e while some Eq(s, se) has no generator left in the set.

    ``known`` protomodal sets are checked to lie inside the result.
    """
    mul = monoid.mul
    everything = idempotents(monoid)
    all_gens = monoid.left_ideal_masks[everything.array]
    # generators[e] lists, per s, the idempotents generating Eq(s, se)
    generators: dict[int, list[np.ndarray]] = {}
    current: set[int] = set()
    for e in everything.members:
        eq = mul[:, mul[:, e]] == mul
        match = (all_gens[None, :, :] == eq.T[:, None, :]).all(axis=2)
        if match.any(axis=1).all():
            current.add(e)
            generators[e] = [everything.array[row] for row in match]
    rounds = 0
    while True:
        rounds += 1
        keep = {
            e for e in current if all(any(int(g) in current for g in gs) for gs in generators[e])
        }
        if keep == current:
            break
        current = keep
    if not current:
        raise InvariantViolation("fixpoint lost the identity")
    largest = IdempotentSet(monoid, tuple(current))
    check = is_protomodal(monoid, largest)
    if not check:
        raise InvariantViolation(f"fixpoint is not protomodal at {check.witness}")
    for other in known:
        if is_protomodal(monoid, other) and not set(other.members) <= current:
            raise InvariantViolation("a protomodal set escapes the computed fixpoint")
    chosen = maximal_right_pre_reduced(monoid, within=largest)
    logger.debug("largest protomodal set has %d idempotents after %d rounds", len(current), rounds)
    return ProtomodalCore(largest=largest, chosen=chosen, rounds=rounds)


def zero_one_idempotents(monoid: FiniteMonoid) -> IdempotentSet:
    """{0, 1} for an integral monoid with zero."""
    if monoid.zero is None:
        raise AlgebraError("monoid has no zero")
    return IdempotentSet(monoid, (monoid.zero, monoid.one))


def analysis_report(monoid: FiniteMonoid, e_set: IdempotentSet) -> dict[str, Any]:
    """Everything known about (S, E), keyed for JSON, with labels throughout."""
    labels = monoid.all_labels
    verdict = is_inductive_left_E_monoid(monoid, e_set) if e_set.contains_one else None
    protomodal = is_protomodal(monoid)
    report: dict[str, Any] = {
        "size": monoid.size,
        "idempotents": idempotents(monoid).labels(),
        "e_set": e_set.to_dict(),
        "sim_r_classes": [[labels[x] for x in c] for c in sim_r_classes(e_set)],
        "protomodal": protomodal.to_dict(labels),
        "modal_action": None,
        "meet_table": None,
        "definable_meets": None,
        "inductive": verdict.to_dict(labels) if verdict is not None else None,
    }
    if protomodal.witness is not None:
        s, e = protomodal.witness
        report["protomodal"]["equalizer"] = sorted(
            labels[u] for u in equalizer_set(monoid, s, int(monoid.mul[s, e]))
        )
    if verdict is not None and verdict.action is not None:
        report["modal_action"] = verdict.action.to_dict()
        report["definable_meets"] = has_definable_meets(monoid, e_set, verdict.action).holds
    if verdict is not None and verdict.meets is not None:
        report["meet_table"] = verdict.meets.to_dict()
    report["largest_protomodal"] = largest_protomodal_idempotents(monoid).largest.labels()
    return report
