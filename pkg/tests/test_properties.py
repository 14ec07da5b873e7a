"""Property tests over random transformation monoids."""

import random

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from constella.constellation import c_E, check_constellation, is_normal
from constella.families import Transformation, full_transformation_monoid
from constella.idempotents import (
    IdempotentSet,
    idempotents,
    is_inductive_left_E_monoid,
    is_maximal_right_pre_reduced,
    is_right_pre_reduced,
    maximal_right_pre_reduced,
    sim_r_classes,
)
from constella.isomorphism import check_map, find_isomorphism
from constella.monoid import FiniteMonoid, UnaryAlgebra, UnaryKind, submonoid_generated
from constella.restriction import (
    check_left_restriction,
    rest,
    restricted_product_agrees,
    unary_isomorphic,
)

T3 = full_transformation_monoid(3)

maps = st.tuples(*(st.integers(min_value=0, max_value=2) for _ in range(3)))


@st.composite
def transformation_monoids(draw: st.DrawFn) -> FiniteMonoid:
    """Submonoid of T_3 generated by one to three random maps."""
    images = draw(st.lists(maps, min_size=1, max_size=3))
    gens = [T3.index_of_element(Transformation(img)) for img in images]
    monoid, _ = submonoid_generated(T3, gens)
    return monoid


@settings(max_examples=40, deadline=None)
@given(transformation_monoids())
def test_maximal_right_pre_reduced(monoid: FiniteMonoid) -> None:
    """Test one idempotent is kept per ∼_r class."""
    e_set = maximal_right_pre_reduced(monoid)
    assert is_right_pre_reduced(e_set).holds
    assert is_maximal_right_pre_reduced(e_set).holds
    assert len(e_set) == len(sim_r_classes(idempotents(monoid)))
    assert all(monoid.is_idempotent(e) for e in e_set)


@settings(max_examples=40, deadline=None)
@given(transformation_monoids())
def test_inductive_completion(monoid: FiniteMonoid) -> None:
    """Test Rest(E,S) is a left restriction monoid whenever S is inductive over E."""
    e_set = maximal_right_pre_reduced(monoid)
    if not is_inductive_left_E_monoid(monoid, e_set):
        return
    completion = rest(e_set, monoid)
    assert check_left_restriction(completion).passed
    assert restricted_product_agrees(completion, c_E(monoid, e_set)).passed


@settings(max_examples=40, deadline=None)
@given(transformation_monoids(), st.randoms(use_true_random=False))
def test_relabelling_is_isomorphic(monoid: FiniteMonoid, rnd: random.Random) -> None:
    """Test a shuffled table is found isomorphic to the original."""
    perm = list(range(monoid.size))
    rnd.shuffle(perm)
    p = np.asarray(perm)
    shuffled = np.empty_like(monoid.mul)
    shuffled[p[:, None], p[None, :]] = p[monoid.mul]
    phi = find_isomorphism(monoid.mul, None, shuffled, None)
    assert phi is not None
    assert check_map(monoid.mul, None, shuffled, None, phi).passed


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_any_completion_is_constellation(data: st.DataObject) -> None:
    """Test C_E(S) is a constellation for every E, normal exactly when E is right pre-reduced."""
    monoid = data.draw(transformation_monoids())
    members = data.draw(
        st.lists(st.sampled_from(monoid.idempotent_indices), min_size=1, unique=True)
    )
    e_set = IdempotentSet(monoid, tuple(members))
    p = c_E(monoid, e_set)
    assert check_constellation(p).passed
    assert is_normal(p).holds == is_right_pre_reduced(e_set).holds


@settings(max_examples=20, deadline=None)
@given(transformation_monoids())
def test_trivial_completion(monoid: FiniteMonoid) -> None:
    """Test Rest({1},S) is S with D ≡ 1."""
    completion = rest(IdempotentSet(monoid, (monoid.one,)), monoid)
    constant = UnaryAlgebra(
        base=monoid,
        unary=np.full(monoid.size, monoid.one, dtype=np.int64),
        kind=UnaryKind.DOMAIN,
    )
    assert unary_isomorphic(completion, constant) is not None
