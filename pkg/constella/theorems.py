"""The three decompositions of concrete restriction monoids as E-completions of
transformation-like monoids, each checked through an explicit map, plus the
structural facts relating completions to maximal pre-reduced sets."""

import logging
from dataclasses import dataclass

import numpy as np

from .constellation import c_0_E, c_E, natural_order
from .families import (
    BinaryRelation,
    PartialTransformation,
    Transformation,
    equivalence_partition,
    left_total_partition_monoid,
    left_total_relation_monoid,
    partial_transformation_monoid,
    relation_monoid,
    transformation_partition,
)
from .idempotents import IdempotentSet, Verdict, is_maximal_right_pre_reduced
from .isomorphism import check_map
from .laws import LawReport
from .monoid import FiniteMonoid, UnaryAlgebra
from .restriction import large_idempotent_analysis, natural_order_restriction, rest, rest0, rrest
from .zappa_szep import left_reduced_E_TX, right_reduced_E_TX0

logger = logging.getLogger(__name__)


@dataclass
class TheoremCheck:
    """A completion, its concrete counterpart and the verified map between them."""

    name: str
    completion: UnaryAlgebra
    target: UnaryAlgebra
    theta: tuple[int, ...]
    report: LawReport

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> dict[str, object]:
        return {
            "name": self.name,
            "completion_size": self.completion.size,
            "target_size": self.target.size,
            "report": self.report.to_dict(),
        }


def _verify(
    name: str, completion: UnaryAlgebra, target: UnaryAlgebra, theta: list[int]
) -> TheoremCheck:
    report = check_map(
        completion.mul, completion.unary, target.mul, target.unary, theta, subject=name
    )
    logger.info("%s: %d elements, %s", name, completion.size, "ok" if report.passed else "FAILED")
    return TheoremCheck(name, completion, target, tuple(theta), report)


def partial_maps_from_t0(n: int, e_set: IdempotentSet | None = None) -> TheoremCheck:
    """Rest₀(E, T_n⁰) ≅ PT_n via (e′, s) ↦ s restricted to ran(e′), (0, 0) ↦ ∅.

    ``e_set`` is any maximal right pre-reduced subset of E(T_n⁰) containing 0 and
    defaults to the min-of-range choice.
    """
    if e_set is None:
        e_set = right_reduced_E_TX0(n)
    monoid = e_set.parent
    completion = rest0(e_set, monoid)
    target = partial_transformation_monoid(n)
    assert monoid.elements is not None and completion.base.elements is not None
    empty = target.base.index_of_element(PartialTransformation((None,) * n))
    theta = []
    for c in completion.base.elements:
        e, s = monoid.elements[c.e], monoid.elements[c.s]
        if s is None:
            theta.append(empty)
            continue
        assert isinstance(e, Transformation) and isinstance(s, Transformation)
        image = PartialTransformation.total(s).restrict(e.range)
        theta.append(target.base.index_of_element(image))
    return _verify(f"Rest0(E, T_{n}^0) -> PT_{n}", completion, target, theta)


def demonic_relations_from_trel0(n: int, e_set: IdempotentSet | None = None) -> TheoremCheck:
    """Rest₀(E, TRel_n⁰) ≅ (Rel_n, ⊛, D) via (e′, ρ) ↦ ρ restricted to ran(e′).

    The default E is the min-of-range set of T_n⁰ carried into TRel_n⁰.
    """
    monoid = left_total_relation_monoid(n, with_zero=True)
    if e_set is None:
        t_set = right_reduced_E_TX0(n)
        assert t_set.parent.elements is not None and monoid.zero is not None
        members = []
        for e in t_set.members:
            t = t_set.parent.elements[e]
            if t is None:
                members.append(monoid.zero)
            else:
                members.append(monoid.index_of_element(BinaryRelation.from_transformation(t)))
        e_set = IdempotentSet(monoid, tuple(members))
    monoid = e_set.parent
    completion = rest0(e_set, monoid)
    target = relation_monoid(n, "demonic")
    assert monoid.elements is not None and completion.base.elements is not None
    empty = target.base.index_of_element(BinaryRelation((0,) * n))
    theta = []
    for c in completion.base.elements:
        e, s = monoid.elements[c.e], monoid.elements[c.s]
        if s is None:
            theta.append(empty)
            continue
        assert isinstance(e, BinaryRelation) and isinstance(s, BinaryRelation)
        theta.append(target.base.index_of_element(s.restrict(e.range)))
    return _verify(f"Rest0(E, TRel_{n}^0) -> Rel_{n}", completion, target, theta)


def left_total_partitions_from_t(n: int, e_set: IdempotentSet | None = None) -> TheoremCheck:
    """RRest(T_n, E) ≅ P^lt_n via (s, e′) ↦ ρ_s·F(ker e′).

    ``e_set`` is a maximal left pre-reduced subset of E(T_n), kernel-min by default.
    """
    if e_set is None:
        e_set = left_reduced_E_TX(n)
    monoid = e_set.parent
    completion = rrest(monoid, e_set)
    target = left_total_partition_monoid(n)
    assert monoid.elements is not None and completion.base.elements is not None
    theta = []
    for c in completion.base.elements:
        e, s = monoid.elements[c.e], monoid.elements[c.s]
        assert isinstance(e, Transformation) and isinstance(s, Transformation)
        image = transformation_partition(s).then(equivalence_partition(e.kernel(), n))
        theta.append(target.base.index_of_element(image))
    return _verify(f"RRest(T_{n}, E) -> Plt_{n}", completion, target, theta)


def precisely_enough_iff_maximal(
    monoid: FiniteMonoid, e_set: IdempotentSet, zero_reduced: bool = False
) -> Verdict:
    """Rest(E,S) (or Rest₀) has precisely enough large idempotents exactly when E
    is maximal right pre-reduced; the verdict fails when the two answers disagree."""
    completion = rest0(e_set, monoid) if zero_reduced else rest(e_set, monoid)
    precisely = large_idempotent_analysis(completion).precisely_enough
    maximal = is_maximal_right_pre_reduced(e_set).holds
    if precisely == maximal:
        return Verdict(True, reason=f"both {maximal}")
    return Verdict(False, reason=f"precisely enough {precisely}, maximal {maximal}")


def natural_orders_agree(
    monoid: FiniteMonoid, e_set: IdempotentSet, zero_reduced: bool = False
) -> bool:
    """s = D(s)t in Rest(E,S) exactly when s = D(s)∘t in the constellation."""
    completion = rest0(e_set, monoid) if zero_reduced else rest(e_set, monoid)
    p = c_0_E(monoid, e_set) if zero_reduced else c_E(monoid, e_set)
    return bool(np.array_equal(natural_order_restriction(completion), natural_order(p)))
