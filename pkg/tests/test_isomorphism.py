"""Tests for isomorphism search and explicit map checks."""

import numpy as np
import pytest

from constella.errors import SearchBudgetExceeded
from constella.isomorphism import check_map, find_isomorphism
from constella.monoid import FiniteMonoid


def relabel(table: np.ndarray, perm: list[int]) -> np.ndarray:
    """The table carried along x ↦ perm[x]."""
    n = len(perm)
    out = np.empty_like(table)
    p = np.asarray(perm)
    for x in range(n):
        for y in range(n):
            out[p[x], p[y]] = p[table[x, y]]
    return out


class TestFindIsomorphism:
    """Tests for find_isomorphism."""

    def test_finds_relabelling(self, small5: FiniteMonoid) -> None:
        """Test a shuffled copy is recognised and the map verifies."""
        perm = [3, 0, 4, 1, 2]
        shuffled = relabel(small5.mul, perm)
        phi = find_isomorphism(small5.mul, None, shuffled, None)
        assert phi is not None
        assert check_map(small5.mul, None, shuffled, None, phi).passed

    def test_respects_unary(self, t2zero: FiniteMonoid) -> None:
        """Test the unary map must be carried along."""
        n = t2zero.size
        identity = np.arange(n)
        constant = np.full(n, t2zero.one)
        assert find_isomorphism(t2zero.mul, identity, t2zero.mul, identity) is not None
        assert find_isomorphism(t2zero.mul, identity, t2zero.mul, constant) is None

    def test_partial_tables(self) -> None:
        """Test undefined entries must match undefined entries."""
        a = np.array([[0, -1], [-1, 1]])
        b = np.array([[0, 1], [-1, 1]])
        assert find_isomorphism(a, None, a, None) is not None
        assert find_isomorphism(a, None, b, None) is None

    def test_non_isomorphic(self, t2: FiniteMonoid) -> None:
        """Test T_2 is not the cyclic group of order four."""
        cyclic = np.add.outer(np.arange(4), np.arange(4)) % 4
        assert find_isomorphism(t2.mul, None, cyclic, None) is None

    def test_size_mismatch(self, t2: FiniteMonoid, small5: FiniteMonoid) -> None:
        """Test tables of different sizes are never isomorphic."""
        assert find_isomorphism(t2.mul, None, small5.mul, None) is None

    def test_budget(self, t2: FiniteMonoid) -> None:
        """Test the node budget is enforced."""
        with pytest.raises(SearchBudgetExceeded):
            find_isomorphism(t2.mul, None, t2.mul, None, budget=0)


class TestCheckMap:
    """Tests for check_map."""

    def test_identity(self, t2: FiniteMonoid) -> None:
        """Test the identity map is an automorphism."""
        report = check_map(t2.mul, None, t2.mul, None, list(range(t2.size)))
        assert report.passed
        assert "unary" not in report

    def test_not_bijective(self, t2: FiniteMonoid) -> None:
        """Test a constant map is flagged as not bijective at the first element."""
        report = check_map(t2.mul, None, t2.mul, None, [0, 0, 0, 0])
        assert not report["bijective"].passed
        assert report["bijective"].witness == (0,)

    def test_surjective_mode(self) -> None:
        """Test the quotient map of a semilattice onto {1} is surjective."""
        a = np.array([[0, 0], [0, 1]])
        b = np.array([[0]])
        report = check_map(a, None, b, None, [0, 0], bijective=False)
        assert report.passed
        assert "surjective" in report

    def test_products(self, t2: FiniteMonoid) -> None:
        """Test swapping e and 1 breaks products with the least witness."""
        report = check_map(t2.mul, None, t2.mul, None, [1, 0, 2, 3])
        assert report["bijective"].passed
        assert not report["products"].passed
        assert report["products"].witness == (0, 1)
