"""Tests for the decompositions of PT_n, demonic Rel_n and P^lt_n."""

import pytest

from constella.families import full_transformation_monoid
from constella.idempotents import (
    IdempotentSet,
    Selector,
    idempotent_set,
    maximal_right_pre_reduced,
)
from constella.monoid import FiniteMonoid
from constella.theorems import (
    demonic_relations_from_trel0,
    left_total_partitions_from_t,
    natural_orders_agree,
    partial_maps_from_t0,
    precisely_enough_iff_maximal,
)


class TestDecompositions:
    """Tests for the three θ maps at n = 2."""

    def test_partial_maps(self) -> None:
        """Test Rest₀(E, T_2⁰) ≅ PT_2."""
        check = partial_maps_from_t0(2)
        assert check.passed
        assert check.completion.size == check.target.size == 9

    def test_partial_maps_least_index(self) -> None:
        """Test the least-index choice of E gives the same answer."""
        monoid = full_transformation_monoid(2, with_zero=True)
        e_set = maximal_right_pre_reduced(monoid, Selector.LEAST_INDEX)
        assert partial_maps_from_t0(2, e_set).passed

    def test_demonic_relations(self) -> None:
        """Test Rest₀(E, TRel_2⁰) ≅ demonic Rel_2."""
        check = demonic_relations_from_trel0(2)
        assert check.passed
        assert check.completion.size == 16

    def test_left_total_partitions(self) -> None:
        """Test RRest(T_2, E) ≅ P^lt_2."""
        check = left_total_partitions_from_t(2)
        assert check.passed
        assert check.target.size == 5

    def test_to_dict(self) -> None:
        """Test the summary carries sizes and the report."""
        data = partial_maps_from_t0(2).to_dict()
        assert data["completion_size"] == 9
        assert data["report"]["passed"] is True


@pytest.mark.slow
class TestDecompositionsN3:
    """The same maps at n = 3."""

    def test_partial_maps(self) -> None:
        """Test Rest₀(E, T_3⁰) ≅ PT_3 with 64 elements."""
        check = partial_maps_from_t0(3)
        assert check.passed
        assert check.target.size == 64

    def test_left_total_partitions(self) -> None:
        """Test RRest(T_3, E) ≅ P^lt_3."""
        assert left_total_partitions_from_t(3).passed

    def test_demonic_relations(self) -> None:
        """Test Rest₀(E, TRel_3⁰) ≅ demonic Rel_3 with 512 elements."""
        check = demonic_relations_from_trel0(3)
        assert check.passed
        assert check.target.size == 512
        assert check.completion.size == 512


class TestStructure:
    """Tests for the facts tying completions to maximal sets."""

    def test_precisely_enough(self, t2zero: FiniteMonoid, t2zero_e: IdempotentSet) -> None:
        """Test maximality and precisely enough agree for E(T_2⁰)."""
        assert precisely_enough_iff_maximal(t2zero, t2zero_e, zero_reduced=True).holds

    def test_precisely_enough_small5(self, small5: FiniteMonoid, small5_e: IdempotentSet) -> None:
        """Test the same for the five-element monoid."""
        assert precisely_enough_iff_maximal(small5, small5_e).holds

    def test_orders_agree(self, small5: FiniteMonoid, small5_e: IdempotentSet) -> None:
        """Test the restriction order equals the constellation order."""
        assert natural_orders_agree(small5, small5_e)

    def test_orders_agree_zero(self, t2zero: FiniteMonoid, t2zero_e: IdempotentSet) -> None:
        """Test the same for Rest₀(E, T_2⁰)."""
        assert natural_orders_agree(t2zero, t2zero_e, zero_reduced=True)

    def test_singleton(self, small5: FiniteMonoid) -> None:
        """Test E = {1} is consistent too."""
        assert precisely_enough_iff_maximal(small5, idempotent_set(small5, ["1"])).holds
