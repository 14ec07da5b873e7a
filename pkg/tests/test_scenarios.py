"""Tests for the worked examples."""

import pytest

from constella.scenarios import ExampleId, Provenance, run_scenario


@pytest.mark.parametrize("example_id", list(ExampleId), ids=lambda e: e.value)
def test_scenario_passes(example_id: ExampleId) -> None:
    """Test every golden value of a worked example is reproduced."""
    result = run_scenario(example_id)
    failed = [c.name for c in result.checks if not c.passed]
    assert failed == []
    assert result.checks


class TestScenarioResult:
    """Tests for transcripts and reports."""

    def test_by_string(self) -> None:
        """Test examples can be named by their id."""
        assert run_scenario("band-0ef1").example_id is ExampleId.BAND_0EF1

    def test_transcript(self) -> None:
        """Test each check gets one transcript line."""
        result = run_scenario(ExampleId.MONOID_01A)
        lines = result.transcript()
        assert lines[0].startswith("monoid-01a:")
        assert len(lines) == 1 + len(result.notes) + len(result.checks)

    def test_to_dict(self) -> None:
        """Test sets are reported as sorted lists."""
        data = run_scenario(ExampleId.MONOID_01A).to_dict()
        eq = next(c for c in data["checks"] if c["name"] == "Eq(a, 0)")
        assert eq["expected"] == ["0", "a"]
        assert eq["provenance"] == Provenance.PUBLISHED.value

    def test_demonic_protomodal_derived(self) -> None:
        """Test TRel_2⁰ is recorded as protomodal, a derived value."""
        data = run_scenario(ExampleId.DEMONIC_N2).to_dict()
        check = next(c for c in data["checks"] if c["name"] == "protomodal")
        assert check["actual"] is True
        assert check["provenance"] == Provenance.DERIVED.value

    def test_small5_carrier_witness(self) -> None:
        """Test the five-element example reports where ⊗ leaves the Rest carrier."""
        data = run_scenario(ExampleId.SMALL_5ELT).to_dict()
        check = next(c for c in data["checks"] if c["name"] == "⊗ leaves the Rest carrier at")
        assert check["passed"] is True
        assert check["actual"] == ["(f,f)", "(e,e)"]

    def test_unknown(self) -> None:
        """Test an unknown id is rejected."""
        with pytest.raises(ValueError):
            run_scenario("no-such-example")
