"""Left and right restriction monoids: law checks, the semigroup completions Rest(E,S)
and Rest₀(E,S), their right-handed duals, and reconstruction from large idempotents."""

import dataclasses
import logging
from dataclasses import dataclass, field

import numpy as np

from .constellation import CompletionElement, Constellation, c_0_E, c_E
from .errors import InvariantViolation, NotEnoughLargeIdempotents, NotInductive
from .idempotents import (
    IdempotentSet,
    InductiveVerdict,
    MeetTable,
    ModalAction,
    is_inductive_left_E_monoid,
    modal_action,
)
from .isomorphism import check_map, find_isomorphism
from .laws import LawReport, demigroup_report, left_restriction_report, right_restriction_report
from .monoid import (
    FiniteMonoid,
    UnaryAlgebra,
    UnaryKind,
    _frozen,
    dual_algebra,
    restrict_to_subset,
    semigroup_from_table,
)

logger = logging.getLogger(__name__)

RestrictionReport = LawReport


def check_left_restriction(algebra: UnaryAlgebra) -> RestrictionReport:
    """(R1) D(x)x = x through (R4) xD(y) = D(xy)x, plus the derived (R5)."""
    return left_restriction_report(algebra.mul, algebra.unary, "left restriction")


def check_right_restriction(algebra: UnaryAlgebra) -> RestrictionReport:
    return right_restriction_report(algebra.mul, algebra.unary, "right restriction")


def check_demigroup(algebra: UnaryAlgebra) -> LawReport:
    return demigroup_report(algebra.mul, algebra.unary, "left demigroup")


def natural_order_restriction(algebra: UnaryAlgebra) -> np.ndarray:
    """``le[s, t]`` iff s = D(s)t."""
    idx = np.arange(algebra.size)
    return algebra.mul[algebra.unary, :] == idx[:, None]


def _require_inductive(monoid: FiniteMonoid, e_set: IdempotentSet) -> InductiveVerdict:
    verdict = is_inductive_left_E_monoid(monoid, e_set)
    if not verdict:
        raise NotInductive(verdict.condition or "inductive", verdict.witness)
    return verdict


def _rest(monoid: FiniteMonoid, e_set: IdempotentSet, zero_reduced: bool) -> UnaryAlgebra:
    verdict = _require_inductive(monoid, e_set)
    assert verdict.action is not None and verdict.meets is not None
    p = c_0_E(monoid, e_set) if zero_reduced else c_E(monoid, e_set)
    assert p.elements is not None
    mul = monoid.mul
    n = monoid.size
    es = np.asarray([c.e for c in p.elements], dtype=np.int64)
    ss = np.asarray([c.s for c in p.elements], dtype=np.int64)
    lookup = np.full((n, n), -1, dtype=np.int64)
    lookup[es, ss] = np.arange(p.size)
    pos = e_set.position_array
    act, meet = verdict.action.table, verdict.meets.table
    # (e,s)(f,t) = (g, g st) with g = e ∧ (s·f)
    dots = act[ss[:, None], pos[es][None, :]]
    g = meet[pos[es][:, None], pos[dots]]
    table = lookup[g, mul[g, mul[ss[:, None], ss[None, :]]]]
    if (table == -1).any():
        raise InvariantViolation("completion product left the carrier")
    base = semigroup_from_table(table, labels=p.labels, elements=p.elements)
    logger.debug("built %s with %d elements", "Rest0" if zero_reduced else "Rest", p.size)
    return UnaryAlgebra(base=base, unary=p.dmap, kind=UnaryKind.DOMAIN)


def rest(e_set: IdempotentSet, monoid: FiniteMonoid) -> UnaryAlgebra:
    """Rest(E,S): the completion carrier with (e,s)(f,t) = (e∧(s·f), (e∧(s·f))st).

    Raises:
        NotInductive: With the failing condition and its witness.
    """
    return _rest(monoid, e_set, zero_reduced=False)


def rest0(e_set: IdempotentSet, monoid: FiniteMonoid) -> UnaryAlgebra:
    """Rest₀(E,S) for an integral monoid with zero; pairs (e,0) with e != 0 are dropped.

    Raises:
        NotIntegral: With a zero-divisor pair.
        NotInductive: With the failing condition and its witness.
    """
    return _rest(monoid, e_set, zero_reduced=True)


def _right_dual(algebra: UnaryAlgebra, monoid: FiniteMonoid) -> UnaryAlgebra:
    """Turn a Rest built over S^op into the right restriction monoid over S."""
    base = algebra.base.opposite()
    if base.elements is not None:
        labels = tuple(
            f"({monoid.label(c.s)},{monoid.label(c.e)})" for c in base.elements
        )
        base = dataclasses.replace(base, labels=labels)
    return UnaryAlgebra(base=base, unary=algebra.unary, kind=UnaryKind.RANGE)


def rrest(monoid: FiniteMonoid, e_set: IdempotentSet) -> UnaryAlgebra:
    """RRest(S,E), pairs (s,e) with se = s, built as the opposite of Rest(E, S^op).

    E must be left pre-reduced in S; elements keep the (e, s) pair of the opposite side.
    """
    op = monoid.opposite()
    return _right_dual(rest(e_set.rebind(op), op), monoid)


def rrest0(monoid: FiniteMonoid, e_set: IdempotentSet) -> UnaryAlgebra:
    op = monoid.opposite()
    return _right_dual(rest0(e_set.rebind(op), op), monoid)


def restricted_product_agrees(algebra: UnaryAlgebra, p: Constellation) -> LawReport:
    """s∘t (defined when sD(t) = s) is the constellation product wherever defined."""
    idx = np.arange(algebra.size)
    restricted = algebra.mul[idx[:, None], algebra.unary[None, :]] == idx[:, None]
    report = LawReport(subject="restricted product")
    report.add("definedness", restricted != (p.product != -1))
    report.add("products", restricted & (algebra.mul != p.product))
    return report


def s1_submonoid(algebra: UnaryAlgebra) -> tuple[FiniteMonoid, tuple[int, ...]]:
    """S₁ = {s : D(s) = 1} and its embedding into the carrier."""
    base = algebra.base
    if not isinstance(base, FiniteMonoid):
        raise ValueError("S₁ needs a monoid")
    keep = np.flatnonzero(algebra.unary == base.one)
    return restrict_to_subset(base, keep)


def _zero(algebra: UnaryAlgebra) -> int | None:
    z = algebra.base.zero_element()
    return z if z is not None and int(algebra.unary[z]) == z else None


@dataclass
class LargeIdempotentAnalysis:
    """Pairing of non-zero domain elements with ∼_r-equivalent idempotents of S₁."""

    s1: FiniteMonoid
    embedding: tuple[int, ...]
    pairing: dict[int, int] = field(default_factory=dict)
    unpaired: tuple[int, ...] = ()
    enough: bool = False
    precisely_enough: bool = False

    def to_dict(self, labels: tuple[str, ...]) -> dict[str, object]:
        return {
            "s1": [labels[x] for x in self.embedding],
            "pairing": {labels[e]: labels[f] for e, f in self.pairing.items()},
            "unpaired": [labels[e] for e in self.unpaired],
            "enough": self.enough,
            "precisely_enough": self.precisely_enough,
        }


def large_idempotent_analysis(algebra: UnaryAlgebra) -> LargeIdempotentAnalysis:
    s1, embedding = s1_submonoid(algebra)
    mul = algebra.mul
    zero = _zero(algebra)
    domain = [e for e in algebra.projections if e != zero]
    large = [embedding[i] for i in s1.idempotent_indices]
    pairing: dict[int, int] = {}
    unpaired = []
    for e in domain:
        partners = [f for f in large if mul[e, f] == e and mul[f, e] == f]
        if partners:
            pairing[e] = partners[0]
        else:
            unpaired.append(e)
    covered = all(
        any(mul[e, f] == e and mul[f, e] == f for e in algebra.projections) for f in large
    )
    enough = not unpaired
    return LargeIdempotentAnalysis(
        s1=s1,
        embedding=embedding,
        pairing=pairing,
        unpaired=tuple(unpaired),
        enough=enough,
        precisely_enough=enough and covered,
    )


@dataclass
class Reconstruction:
    """S′, E and the rebuilt Rest (or Rest₀) with θ((e′, s)) = es into the input."""

    s_prime: FiniteMonoid
    embedding: tuple[int, ...]
    e_set: IdempotentSet
    modal: ModalAction
    rebuilt: UnaryAlgebra
    theta: tuple[int, ...]
    report: LawReport


def reconstruct(
    algebra: UnaryAlgebra, pairing: dict[int, int] | None = None
) -> Reconstruction:
    """Rebuild a left restriction monoid with enough large idempotents from S₁ (∪ {0}).

    ``pairing`` maps non-zero domain elements to ∼_r-equivalent idempotents of S₁ and
    defaults to the least-index choice.

    Raises:
        NotEnoughLargeIdempotents: Naming a domain element with no partner.
    """
    if algebra.kind is UnaryKind.RANGE:
        raise ValueError("use reconstruct_right for right restriction monoids")
    analysis = large_idempotent_analysis(algebra)
    if not analysis.enough:
        raise NotEnoughLargeIdempotents(analysis.unpaired[0])
    chosen = dict(pairing) if pairing is not None else analysis.pairing
    base = algebra.base
    assert isinstance(base, FiniteMonoid)
    zero = _zero(algebra)
    keep = list(analysis.embedding)
    if zero is not None:
        keep.append(zero)
    s_prime, embedding = restrict_to_subset(base, keep)
    local = {x: i for i, x in enumerate(embedding)}
    members = [local[f] for f in chosen.values()]
    if zero is not None:
        members.append(local[zero])
    e_set = IdempotentSet(s_prime, tuple(members))
    rebuilt = rest0(e_set, s_prime) if zero is not None else rest(e_set, s_prime)
    action = modal_action(s_prime, e_set)
    assert action is not None
    back = {local[f]: e for e, f in chosen.items()}
    if zero is not None:
        back[local[zero]] = zero
    assert rebuilt.base.elements is not None
    theta = tuple(
        int(base.mul[back[c.e], embedding[c.s]]) for c in rebuilt.base.elements
    )
    report = check_map(
        rebuilt.mul, rebuilt.unary, base.mul, algebra.unary, theta, subject="θ"
    )
    if not report.passed:
        raise InvariantViolation(f"θ fails: {report.first_failure()}")
    return Reconstruction(s_prime, embedding, e_set, action, rebuilt, theta, report)


def reconstruct_right(algebra: UnaryAlgebra) -> Reconstruction:
    """Dual reconstruction for a right restriction monoid; S′, E and θ refer to the
    opposite side and ``rebuilt`` is the right restriction monoid RRest(S′, E)."""
    if algebra.kind is not UnaryKind.RANGE:
        raise ValueError("expected a right restriction monoid")
    left = reconstruct(dual_algebra(algebra))
    monoid = left.s_prime.opposite()
    right = _right_dual(left.rebuilt, monoid)
    return dataclasses.replace(left, rebuilt=right)


def unary_isomorphic(
    a: UnaryAlgebra, b: UnaryAlgebra, budget: int | None = None
) -> dict[int, int] | None:
    """A bijection preserving the product and the unary map."""
    if a.size != b.size:
        return None
    mapping = find_isomorphism(a.mul, a.unary, b.mul, b.unary, budget)
    return None if mapping is None else dict(enumerate(mapping))


def semidirect_P(
    e_set: IdempotentSet, monoid: FiniteMonoid, action: ModalAction, meets: MeetTable
) -> UnaryAlgebra:
    """P(E,S) on all of E×S: (e,s)*(f,t) = (e∧(s·f), st) and D((e,s)) = (e,1)."""
    n = monoid.size
    k = len(e_set)
    pos = e_set.position_array
    es = np.repeat(e_set.array, n)
    ss = np.tile(np.arange(n), k)
    dots = action.table[ss[:, None], pos[es][None, :]]
    g = meets.table[pos[es][:, None], pos[dots]]
    table = pos[g] * n + monoid.mul[ss[:, None], ss[None, :]]
    elements = tuple(CompletionElement(int(e), int(s)) for e, s in zip(es, ss, strict=True))
    labels = tuple(f"({monoid.label(c.e)},{monoid.label(c.s)})" for c in elements)
    base = semigroup_from_table(table, labels=labels, elements=elements)
    unary = pos[es] * n + monoid.one
    return UnaryAlgebra(base=base, unary=_frozen(unary), kind=UnaryKind.DOMAIN)


def psi_check(
    semidirect: UnaryAlgebra, completion: UnaryAlgebra, monoid: FiniteMonoid
) -> LawReport:
    """ψ((e,s)) = (e, es) from P(E,S) onto Rest(E,S): surjective, product and D
    preserving, injective on domain elements."""
    assert semidirect.base.elements is not None
    psi = np.asarray(
        [
            completion.base.index_of_element(CompletionElement(c.e, int(monoid.mul[c.e, c.s])))
            for c in semidirect.base.elements
        ],
        dtype=np.int64,
    )
    report = check_map(
        semidirect.mul,
        semidirect.unary,
        completion.mul,
        completion.unary,
        psi,
        bijective=False,
        subject="ψ",
    )
    domain = np.asarray(semidirect.projections, dtype=np.int64)
    images = psi[domain]
    clash = (images[:, None] == images[None, :]) & ~np.eye(len(domain), dtype=bool)
    report.add("separates domain elements", clash)
    return report
