"""The two actions of an inductive left E-monoid, the external product E⋈S they
define, and the reduced idempotent sets of T_n used to embed completions in it."""

import logging
from dataclasses import dataclass, field

import numpy as np

from .constellation import CompletionElement
from .errors import InvariantViolation, NotInductive, ZSLawFails
from .families import full_transformation_monoid
from .idempotents import (
    IdempotentSet,
    MeetTable,
    ModalAction,
    Selector,
    is_inductive_left_E_monoid,
    is_left_reduced,
    is_right_reduced,
    maximal_right_pre_reduced,
)
from .laws import LawReport, first_witness
from .monoid import FiniteMonoid, FiniteSemigroup, UnaryAlgebra, build_table_semigroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TwoActions:
    """s·e from the modal action and s^e = (s·e)s, both tabulated over S×E."""

    dot: ModalAction
    up: np.ndarray = field(repr=False)

    @property
    def e_set(self) -> IdempotentSet:
        return self.dot.e_set

    def power(self, s: int, e: int) -> int:
        return int(self.up[s, self.e_set.position(e)])


def two_actions(monoid: FiniteMonoid, e_set: IdempotentSet) -> tuple[TwoActions, MeetTable]:
    """Both actions and the meet table of an inductive left E-monoid.

    Raises:
        NotInductive: With the failing condition and its witness.
    """
    verdict = is_inductive_left_E_monoid(monoid, e_set)
    if not verdict:
        raise NotInductive(verdict.condition or "inductive", verdict.witness)
    assert verdict.action is not None and verdict.meets is not None
    act = verdict.action.table
    up = monoid.mul[act, np.arange(monoid.size)[:, None]]
    up.setflags(write=False)
    return TwoActions(verdict.action, up), verdict.meets


def check_zs_laws(monoid: FiniteMonoid, acts: TwoActions, meets: MeetTable) -> LawReport:
    """(ZS1) (st)·e = s·(t·e), (ZS2) s·(e∧f) = (s·e)∧(s^e·f), (ZS3) (s^e)^f = s^(e∧f)
    and (ZS4) (st)^e = s^(t·e) t^e, with witnesses (s, t, e) or (s, e, f)."""
    mul = monoid.mul
    act, up, meet = acts.dot.table, acts.up, meets.table
    e_set = acts.e_set
    pos = e_set.position_array
    e = e_set.array
    k = len(e)
    idx = np.arange(monoid.size)
    zs1: list[tuple[int, ...]] = []
    zs2: list[tuple[int, ...]] = []
    zs3: list[tuple[int, ...]] = []
    zs4: list[tuple[int, ...]] = []
    for i in range(k):
        # [s, t]
        hit = first_witness(act[mul, i] != act[idx[:, None], pos[act[:, i]][None, :]])
        if hit is not None:
            zs1.append((*hit, int(e[i])))
        lhs = up[mul, i]
        rhs = mul[up[idx[:, None], pos[act[:, i]][None, :]], up[:, i][None, :]]
        hit = first_witness(lhs != rhs)
        if hit is not None:
            zs4.append((*hit, int(e[i])))
        # [s, j]
        lhs = act[idx[:, None], pos[meet[i, :]][None, :]]
        rhs = meet[pos[act[:, i]][:, None], pos[act[up[:, i], :]]]
        hit = first_witness(lhs != rhs)
        if hit is not None:
            zs2.append((hit[0], int(e[i]), int(e[hit[1]])))
        lhs = up[up[:, i], :]
        rhs = up[idx[:, None], pos[meet[i, :]][None, :]]
        hit = first_witness(lhs != rhs)
        if hit is not None:
            zs3.append((hit[0], int(e[i]), int(e[hit[1]])))
    report = LawReport(subject="Zappa-Szép")
    report.add_least("ZS1", zs1)
    report.add_least("ZS2", zs2)
    report.add_least("ZS3", zs3)
    report.add_least("ZS4", zs4)
    return report


def _otimes_table(
    monoid: FiniteMonoid,
    acts: TwoActions,
    meets: MeetTable,
    es: np.ndarray,
    ss: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Component arrays of (e,s)⊗(f,t) = (e∧(s·f), (s·f)st) over paired carriers."""
    pos = acts.e_set.position_array
    dots = acts.dot.table[ss[:, None], pos[es][None, :]]
    g = meets.table[pos[es][:, None], pos[dots]]
    h = monoid.mul[dots, monoid.mul[ss[:, None], ss[None, :]]]
    return g, h


@dataclass(frozen=True, eq=False)
class ZappaSzep:
    """E⋈S on E×S, element (e, s) at index ``position(e) * |S| + s``."""

    monoid: FiniteMonoid
    acts: TwoActions
    meets: MeetTable
    semigroup: FiniteSemigroup

    @property
    def e_set(self) -> IdempotentSet:
        return self.acts.e_set

    def index(self, e: int, s: int) -> int:
        return self.e_set.position(e) * self.monoid.size + s

    def element(self, x: int) -> CompletionElement:
        assert self.semigroup.elements is not None
        return self.semigroup.elements[x]

    def otimes(self, a: CompletionElement, b: CompletionElement) -> CompletionElement:
        return self.element(self.semigroup.product(self.index(*a), self.index(*b)))

    @property
    def hat_e(self) -> tuple[int, ...]:
        """Indices of the pairs (e, e)."""
        return tuple(self.index(e, e) for e in self.e_set.members)


def zappa_szep_product(
    monoid: FiniteMonoid,
    e_set: IdempotentSet,
    acts: TwoActions | None = None,
    meets: MeetTable | None = None,
) -> ZappaSzep:
    """Build E⋈S with (e,s)⊗(f,t) = (e∧(s·f), (s·f)st), associativity re-checked.

    Raises:
        NotInductive: When no actions are supplied and S is not an inductive left E-monoid.
        ZSLawFails: Naming the first failing law among (ZS1)-(ZS4).
    """
    if acts is None or meets is None:
        acts, meets = two_actions(monoid, e_set)
    report = check_zs_laws(monoid, acts, meets)
    failure = report.first_failure()
    if failure is not None:
        raise ZSLawFails(failure.law, failure.witness)
    n = monoid.size
    es = np.repeat(e_set.array, n)
    ss = np.tile(np.arange(n), len(e_set))
    g, h = _otimes_table(monoid, acts, meets, es, ss)
    table = e_set.position_array[g] * n + h
    elements = tuple(CompletionElement(int(e), int(s)) for e, s in zip(es, ss, strict=True))
    labels = tuple(f"({monoid.label(c.e)},{monoid.label(c.s)})" for c in elements)
    semigroup = build_table_semigroup(table, labels=labels, elements=elements)
    logger.info("built E⋈S with %d elements", semigroup.size)
    return ZappaSzep(monoid, acts, meets, semigroup)


def carrier_product_report(
    completion: UnaryAlgebra, monoid: FiniteMonoid, acts: TwoActions, meets: MeetTable
) -> LawReport:
    """Whether ⊗ keeps the completion carrier closed and agrees with its product there.

    Runs without (ZS3), but closure is only guaranteed when (ZS3) holds: otherwise
    e∧(s·f) need not fix (s·f)st and the product can leave the carrier.
    """
    elements = completion.base.elements
    assert elements is not None
    es = np.asarray([c.e for c in elements], dtype=np.int64)
    ss = np.asarray([c.s for c in elements], dtype=np.int64)
    g, h = _otimes_table(monoid, acts, meets, es, ss)
    n = monoid.size
    lookup = np.full((n, n), -1, dtype=np.int64)
    lookup[es, ss] = np.arange(len(elements))
    image = lookup[g, h]
    report = LawReport(subject="⊗ on the completion carrier")
    report.add("closed", image == -1)
    report.add("products", (image != -1) & (image != completion.mul))
    return report


def maximal_lrs_in_zs(zs: ZappaSzep, with_zero: bool = False) -> tuple[CompletionElement, ...]:
    """Pairs (e, s) with (e,e)⊗(e,s) = (e,s), dropping (e, 0) for e != 0 when
    ``with_zero``; the largest left restriction subsemigroup with domains the (e, e)."""
    zero = zs.monoid.zero
    if with_zero and (zero is None or zero not in zs.e_set):
        raise ValueError("zero variant needs a monoid with zero and 0 in E")
    mul = zs.semigroup.mul
    keep = []
    for e in zs.e_set.members:
        d = zs.index(e, e)
        for s in range(zs.monoid.size):
            x = zs.index(e, s)
            if int(mul[d, x]) != x:
                continue
            if with_zero and s == zero and e != zero:
                continue
            keep.append(zs.element(x))
    indices = np.asarray([zs.index(*c) for c in keep], dtype=np.int64)
    block = mul[np.ix_(indices, indices)]
    if not np.isin(block, indices).all():
        raise InvariantViolation("left restriction part of E⋈S is not closed")
    logger.debug("maximal left restriction subsemigroup has %d elements", len(keep))
    return tuple(keep)


def right_reduced_E_TX0(n: int) -> IdempotentSet:
    """E ∪ {0} in T_n⁰ where e(x) != x forces e(x) = min ran(e): one idempotent per range.

    Raises:
        TooLarge: Past the enumeration cap.
    """
    monoid = full_transformation_monoid(n, with_zero=True)
    e_set = maximal_right_pre_reduced(monoid, Selector.MIN_OF_RANGE)
    verdict = is_right_reduced(e_set)
    if not verdict:
        raise InvariantViolation(f"min-of-range set is not right reduced at {verdict.witness}")
    return e_set


def left_reduced_E_TX(n: int) -> IdempotentSet:
    """Projections of T_n sending each kernel class to its least member."""
    monoid = full_transformation_monoid(n)
    e_set = maximal_right_pre_reduced(monoid, Selector.KERNEL_MIN)
    verdict = is_left_reduced(e_set)
    if not verdict:
        raise InvariantViolation(f"kernel-min set is not left reduced at {verdict.witness}")
    return e_set
