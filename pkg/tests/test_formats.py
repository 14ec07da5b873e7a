"""Tests for the JSON, TSV and DOT formats."""

import json
from pathlib import Path

import numpy as np
import pytest

from constella.constellation import UNDEFINED, CompletionElement, c_E
from constella.families import (
    BinaryRelation,
    PartialTransformation,
    Transformation,
    partial_transformation_monoid,
)
from constella.formats import (
    constellation_from_dict,
    decode_element,
    dump_constellation,
    dump_monoid,
    dumps,
    encode_element,
    hasse_dot,
    is_constellation_data,
    load_constellation,
    load_monoid,
    monoid_from_dict,
    monoid_to_dict,
    read_json,
    table_tsv,
)
from constella.idempotents import IdempotentSet
from constella.monoid import FiniteMonoid, UnaryAlgebra


class TestJson:
    """Tests for JSON files."""

    def test_monoid_file(self, tmp_path: Path, t2zero: FiniteMonoid) -> None:
        """Test a written monoid reads back with the same text."""
        path = tmp_path / "t2zero.json"
        dump_monoid(t2zero, path)
        loaded = load_monoid(path)
        assert isinstance(loaded, FiniteMonoid)
        assert loaded.one == t2zero.one
        assert loaded.zero == t2zero.zero
        assert dumps(monoid_to_dict(loaded)) == path.read_text(encoding="utf-8")

    def test_unary_algebra(self, tmp_path: Path) -> None:
        """Test PT_2 keeps its domain map and its partial maps."""
        pt2 = partial_transformation_monoid(2)
        path = tmp_path / "pt2.json"
        dump_monoid(pt2, path)
        loaded = load_monoid(path)
        assert isinstance(loaded, UnaryAlgebra)
        assert np.array_equal(loaded.unary, pt2.unary)
        assert loaded.base.elements == pt2.base.elements

    def test_fixture(self, example5_path: Path, small5: FiniteMonoid) -> None:
        """Test the five-element fixture matches the built-in table."""
        loaded = load_monoid(example5_path)
        assert np.array_equal(loaded.mul, small5.mul)
        assert loaded.all_labels == small5.all_labels

    def test_missing_table(self) -> None:
        """Test a document without 'mul' is rejected."""
        with pytest.raises(ValueError, match="mul"):
            monoid_from_dict({"one": 0})

    def test_not_an_object(self, tmp_path: Path) -> None:
        """Test a JSON list is rejected."""
        path = tmp_path / "list.json"
        path.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(ValueError):
            read_json(path)

    def test_unvalidated(self, broken_path: Path) -> None:
        """Test a law-breaking algebra loads when validation is off."""
        data = read_json(broken_path)
        algebra = monoid_from_dict(data, validate=False)
        assert isinstance(algebra, UnaryAlgebra)
        assert algebra.unary.tolist() == [0, 1, 1, 1]

    def test_bad_unary_range(self, broken_path: Path) -> None:
        """Test an out-of-range unary map is rejected even unvalidated."""
        data = read_json(broken_path)
        data["unary"]["map"] = [0, 1, 7, 1]
        with pytest.raises(ValueError):
            monoid_from_dict(data, validate=False)

    def test_constellation_file(
        self, tmp_path: Path, t2zero: FiniteMonoid, t2zero_e: IdempotentSet
    ) -> None:
        """Test a constellation keeps partiality, domains and pairs."""
        p = c_E(t2zero, t2zero_e)
        path = tmp_path / "c.json"
        dump_constellation(p, path)
        assert is_constellation_data(read_json(path))
        loaded = load_constellation(path)
        assert np.array_equal(loaded.product, p.product)
        assert np.array_equal(loaded.dmap, p.dmap)
        assert loaded.elements == p.elements
        assert dumps(constellation_from_dict(json.loads(path.read_text())).to_dict()) == (
            path.read_text(encoding="utf-8")
        )


class TestElements:
    """Tests for the element codec."""

    @pytest.mark.parametrize(
        "element",
        [
            None,
            CompletionElement(1, 2),
            Transformation((0, 0)),
            PartialTransformation((1, None)),
            BinaryRelation.from_pairs(2, [(0, 1), (1, 1)]),
        ],
    )
    def test_codec(self, element: object) -> None:
        """Test each element type survives JSON."""
        text = json.dumps(encode_element(element))
        assert decode_element(json.loads(text)) == element

    def test_unknown(self) -> None:
        """Test unknown element types are refused both ways."""
        with pytest.raises(TypeError):
            encode_element(3.5)
        with pytest.raises(ValueError):
            decode_element({"type": "matrix"})


class TestText:
    """Tests for TSV and DOT output."""

    def test_tsv(self) -> None:
        """Test undefined products print as '-'."""
        table = np.array([[0, UNDEFINED], [UNDEFINED, 1]])
        assert table_tsv(table, ("a", "b")) == "\ta\tb\na\ta\t-\nb\t-\tb\n"

    def test_hasse(self) -> None:
        """Test only cover relations of a chain are drawn."""
        le = np.triu(np.ones((3, 3), dtype=bool))
        dot = hasse_dot(le, ("x", "y", "z"), name="chain")
        assert dot.startswith('digraph "chain" {')
        assert "  0 -> 1;" in dot
        assert "  1 -> 2;" in dot
        assert "0 -> 2" not in dot

    def test_hasse_rejects_preorder(self) -> None:
        """Test a non-antisymmetric relation is rejected."""
        with pytest.raises(ValueError):
            hasse_dot(np.ones((2, 2), dtype=bool), ("x", "y"))
