"""Tests for the concrete monoid families."""

import numpy as np
import pytest

from constella.config import MAX_SIZE_ENV
from constella.errors import TooLarge
from constella.families import (
    NAMED_MONOIDS,
    BinaryRelation,
    BlockPartition,
    Composition,
    PartialTransformation,
    Transformation,
    bell_number,
    equivalence_partition,
    full_transformation_monoid,
    left_total_partition_monoid,
    left_total_relation_monoid,
    named_monoid,
    partial_transformation_monoid,
    partition_involution,
    partition_monoid,
    relation_monoid,
    symmetric_inverse_monoid,
    transformation_partition,
)
from constella.laws import left_restriction_report
from constella.monoid import FiniteMonoid, UnaryKind, unary_laws


class TestElements:
    """Tests for the element classes."""

    def test_transformation_then_applies_left_first(self) -> None:
        """Test xy means apply x, then y."""
        swap = Transformation((1, 0))
        const0 = Transformation((0, 0))
        assert swap.then(const0) == const0
        assert const0.then(swap) == Transformation((1, 1))

    def test_transformation_kernel(self) -> None:
        """Test kernel classes are ordered by least member."""
        assert Transformation((3, 0, 3, 0)).kernel() == ((0, 2), (1, 3))

    def test_partial_restrict_and_domain(self) -> None:
        """Test restriction to a set of points and the domain identity."""
        p = PartialTransformation((1, None, 0))
        assert p.domain == frozenset({0, 2})
        assert p.restrict([2]).img == (None, None, 0)
        assert p.domain_identity().img == (0, None, 2)
        assert p.label() == "1-0"

    def test_demonic_composition_discards_partial_outputs(self) -> None:
        """Test ⊛ drops inputs with an intermediate value outside the next domain."""
        rho = BinaryRelation.from_pairs(2, [(0, 0), (0, 1)])
        sigma = BinaryRelation.from_pairs(2, [(0, 0)])
        assert rho.then(sigma).label() == "{(0,0)}"
        assert rho.then(sigma, Composition.DEMONIC).label() == "∅"

    def test_relation_range(self) -> None:
        """Test the range collects every related output."""
        rho = BinaryRelation.from_pairs(3, [(0, 2), (1, 2), (2, 0)])
        assert rho.range == frozenset({0, 2})

    def test_partition_parse_label(self) -> None:
        """Test parsing puts unnamed points into singleton blocks."""
        p = BlockPartition.parse("{1,2,1'}", 2)
        assert p.label() == "{1,2,1'}{2'}"
        assert p.is_left_total()

    def test_partition_then(self) -> None:
        """Test stacking joins blocks through the middle row."""
        cap = BlockPartition.parse("{1,2},{1',2'}", 2)
        assert cap.then(cap).label() == cap.label()
        assert BlockPartition.identity(2).then(cap) == cap

    def test_transformation_partition_of_identity(self) -> None:
        """Test ρ_1 is the identity partition."""
        assert transformation_partition(Transformation.identity(3)) == BlockPartition.identity(3)

    def test_equivalence_partition(self) -> None:
        """Test cells become blocks cell ∪ cell′."""
        e = equivalence_partition([[0, 1], [2]], 3)
        assert e.label() == "{1,2,1',2'}{3,3'}"
        with pytest.raises(ValueError):
            equivalence_partition([[0]], 2)


class TestFamilies:
    """Tests for family sizes, labels and unary maps."""

    def test_t2_labels(self, t2: FiniteMonoid) -> None:
        """Test T_2 carries the names e, 1, i, f."""
        assert t2.all_labels == ("e", "1", "i", "f")
        assert t2.one == 1

    def test_t2zero(self, t2zero: FiniteMonoid) -> None:
        """Test T_2⁰ has five elements with the zero last."""
        assert t2zero.size == 5
        assert t2zero.zero == 4

    def test_t3(self) -> None:
        """Test |T_3| = 27 with ten idempotents."""
        t3 = full_transformation_monoid(3)
        assert t3.size == 27
        assert len(t3.idempotent_indices) == 10

    def test_partial_transformations(self) -> None:
        """Test |PT_2| = 9 and the domain map satisfies the left restriction laws."""
        pt2 = partial_transformation_monoid(2)
        assert pt2.size == 9
        assert pt2.kind is UnaryKind.DOMAIN
        assert unary_laws(pt2).passed

    def test_symmetric_inverse(self) -> None:
        """Test |I_2| = 7 and |I_3| = 34."""
        assert symmetric_inverse_monoid(2).size == 7
        assert symmetric_inverse_monoid(3).size == 34

    def test_relations(self) -> None:
        """Test Rel_2 has 16 elements under either composition."""
        assert relation_monoid(2).size == 16
        assert relation_monoid(2, "demonic").size == 16

    def test_demonic_is_left_restriction(self) -> None:
        """Test demonic Rel_2 passes (R1)-(R5) and ordinary Rel_2 breaks (R4)."""
        demonic = relation_monoid(2, Composition.DEMONIC)
        ordinary = relation_monoid(2, Composition.ORDINARY)
        assert left_restriction_report(demonic.mul, demonic.unary, "d").passed
        report = left_restriction_report(ordinary.mul, ordinary.unary, "o")
        assert not report["R4"].passed

    def test_left_total_relations(self) -> None:
        """Test |TRel_2| = 9 with the named elements."""
        trel = left_total_relation_monoid(2)
        assert trel.size == 9
        assert set(trel.all_labels) == {"e", "1", "i", "f", "g", "h", "∇", "a", "b"}
        assert left_total_relation_monoid(2, with_zero=True).size == 10

    def test_partition_monoid(self) -> None:
        """Test |P_2| = Bell(4) = 15 and the involution is an anti-automorphism."""
        p2 = partition_monoid(2)
        assert p2.size == bell_number(4) == 15
        star = partition_involution(p2)
        assert np.array_equal(star[star], np.arange(p2.size))
        assert np.array_equal(star[p2.mul], p2.mul[star[None, :], star[:, None]])

    def test_left_total_partitions(self) -> None:
        """Test |P^lt_2| = 5 and R satisfies the right restriction laws."""
        plt = left_total_partition_monoid(2)
        assert plt.size == 5
        assert plt.kind is UnaryKind.RANGE
        assert unary_laws(plt).passed

    def test_bell_numbers(self) -> None:
        """Test the first Bell numbers."""
        assert [bell_number(m) for m in range(7)] == [1, 1, 2, 5, 15, 52, 203]

    def test_degree_must_be_positive(self) -> None:
        """Test degree zero is rejected."""
        with pytest.raises(ValueError, match="degree"):
            full_transformation_monoid(0)

    def test_cap(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test families refuse to enumerate past the size cap."""
        monkeypatch.setenv(MAX_SIZE_ENV, "20")
        with pytest.raises(TooLarge) as info:
            full_transformation_monoid(3)
        assert info.value.size == 27
        assert info.value.cap == 20


class TestNamedMonoids:
    """Tests for the built-in small monoids."""

    @pytest.mark.parametrize("name", NAMED_MONOIDS)
    def test_named_monoids_build(self, name: str) -> None:
        """Test every named monoid validates."""
        assert named_monoid(name).size in (3, 4, 5)

    def test_unknown(self) -> None:
        """Test an unknown name raises KeyError."""
        with pytest.raises(KeyError):
            named_monoid("nope")

    def test_small5_products(self, small5: FiniteMonoid) -> None:
        """Test gf = s and fg = e in the five-element monoid."""
        f, g = small5.index("f"), small5.index("g")
        assert small5.label(small5.product(g, f)) == "s"
        assert small5.label(small5.product(f, g)) == "e"
