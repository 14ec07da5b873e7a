"""Tests for CLI commands."""

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from constella.cli import app, resolve_e_set
from constella.monoid import FiniteMonoid

runner = CliRunner()


@pytest.fixture
def t2zero_file(tmp_path: Path) -> Path:
    """T_2⁰ written by the build command."""
    path = tmp_path / "t2zero.json"
    result = runner.invoke(app, ["build", "ttransf", "2", "--adjoin-zero", "-o", str(path)])
    assert result.exit_code == 0
    return path


class TestBuildCommand:
    """Tests for the build command."""

    def test_ttransf_with_zero(self) -> None:
        """Test T_2⁰ has five elements and a zero."""
        result = runner.invoke(app, ["build", "ttransf", "2", "--adjoin-zero"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["size"] == 5
        assert data["zero"] is not None

    def test_demonic_relations(self) -> None:
        """Test demonic Rel_2 is written with its domain map."""
        result = runner.invoke(app, ["build", "rel", "2", "--composition", "demonic"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["size"] == 16
        assert data["unary"]["kind"] == "D"

    def test_named(self) -> None:
        """Test a built-in monoid by name."""
        result = runner.invoke(app, ["build", "named", "small-5elt"])

        assert result.exit_code == 0
        assert json.loads(result.stdout)["labels"] == ["e", "1", "f", "g", "s"]

    def test_unknown_name(self) -> None:
        """Test an unknown built-in name is a usage error."""
        result = runner.invoke(app, ["build", "named", "nonsense"])

        assert result.exit_code == 2
        assert "unknown named monoid" in result.stdout

    def test_bad_degree(self) -> None:
        """Test a non-numeric degree is a usage error."""
        result = runner.invoke(app, ["build", "ttransf", "two"])

        assert result.exit_code == 2

    def test_zero_on_unary_family(self) -> None:
        """Test --adjoin-zero is refused for families with a unary map."""
        result = runner.invoke(app, ["build", "ptransf", "2", "--adjoin-zero"])

        assert result.exit_code == 2

    def test_size_cap(self) -> None:
        """Test CONSTELLA_MAX_SIZE caps enumeration with exit code 3."""
        result = runner.invoke(app, ["build", "ttransf", "3"], env={"CONSTELLA_MAX_SIZE": "10"})

        assert result.exit_code == 3

    def test_writes_file(self, tmp_path: Path) -> None:
        """Test --output writes the JSON to a file."""
        path = tmp_path / "pt2.json"
        result = runner.invoke(app, ["build", "ptransf", "2", "-o", str(path)])

        assert result.exit_code == 0
        assert "Wrote" in result.stdout
        assert json.loads(path.read_text(encoding="utf-8"))["size"] == 9


class TestAnalyzeCommand:
    """Tests for the analyze command."""

    def test_json(self, monoid_01a_path: Path) -> None:
        """Test {0, 1, a} is reported as not protomodal with Eq(a, 0)."""
        result = runner.invoke(app, ["analyze", str(monoid_01a_path), "--format", "json"])

        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["protomodal"]["holds"] is False
        assert report["protomodal"]["witness"] == ["a", "0"]
        assert report["protomodal"]["equalizer"] == ["0", "a"]
        assert report["largest_protomodal"] == ["1"]

    def test_text(self, example5_path: Path) -> None:
        """Test the text report shows the modal action table."""
        result = runner.invoke(app, ["analyze", str(example5_path), "-e", "1,e,f,g"])

        assert result.exit_code == 0
        assert "Idempotent analysis" in result.stdout
        assert "Modal action" in result.stdout

    def test_missing_file(self, tmp_path: Path) -> None:
        """Test a missing file is a usage error."""
        result = runner.invoke(app, ["analyze", str(tmp_path / "missing.json")])

        assert result.exit_code == 2
        assert "Error" in result.stdout

    def test_unknown_label(self, example5_path: Path) -> None:
        """Test an unknown label in --e-set is a usage error."""
        result = runner.invoke(app, ["analyze", str(example5_path), "-e", "1,q"])

        assert result.exit_code == 2


class TestCompleteCommand:
    """Tests for the complete command."""

    def test_constellation(self, example5_path: Path) -> None:
        """Test C_E of the five-element monoid has ten elements."""
        result = runner.invoke(app, ["complete", str(example5_path), "-e", "1,e,f,g"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["size"] == 10
        assert "product" in data

    def test_rest0(self, t2zero_file: Path) -> None:
        """Test Rest₀(E, T_2⁰) has nine elements."""
        result = runner.invoke(
            app, ["complete", str(t2zero_file), "--variant", "rest0", "-e", "all"]
        )

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["size"] == 9
        assert data["unary"]["kind"] == "D"

    def test_tsv(self, t2zero_file: Path) -> None:
        """Test the constellation table marks undefined products."""
        result = runner.invoke(
            app, ["complete", str(t2zero_file), "-e", "all", "--format", "tsv"]
        )

        assert result.exit_code == 0
        assert "-" in result.stdout
        assert len(result.stdout.splitlines()) == 13

    def test_dot(self, t2zero_file: Path) -> None:
        """Test the natural order is drawn as DOT."""
        result = runner.invoke(
            app, ["complete", str(t2zero_file), "--variant", "rest0", "-e", "all", "-f", "dot"]
        )

        assert result.exit_code == 0
        assert result.stdout.startswith('digraph "rest0" {')

    def test_not_inductive(self, monoid_01a_path: Path) -> None:
        """Test a failed precondition exits with code 1."""
        result = runner.invoke(app, ["complete", str(monoid_01a_path), "--variant", "rest"])

        assert result.exit_code == 1
        assert "Error" in result.stdout

    def test_cd_needs_unary(self, example5_path: Path) -> None:
        """Test the demigroup completion needs a unary map."""
        result = runner.invoke(app, ["complete", str(example5_path), "--variant", "cd"])

        assert result.exit_code == 2


class TestVerifyCommand:
    """Tests for the verify command."""

    def test_broken(self, broken_path: Path) -> None:
        """Test a broken domain map fails (R3) with a labelled witness."""
        result = runner.invoke(app, ["verify", str(broken_path)])

        assert result.exit_code == 1
        report = json.loads(result.stdout)
        laws = {law["law"]: law for law in report["laws"]}
        assert report["passed"] is False
        assert laws["R1"]["passed"] is True
        assert laws["R3"]["passed"] is False
        assert laws["R3"]["witness"] == ["e", "i"]

    def test_not_associative(self, tmp_path: Path) -> None:
        """Test a non-associative table is reported as JSON with the least triple."""
        path = tmp_path / "bad.json"
        table = {"mul": [[0, 1, 2], [1, 2, 1], [2, 1, 1]], "one": 0, "labels": ["1", "a", "b"]}
        path.write_text(json.dumps(table))
        result = runner.invoke(app, ["verify", str(path)])

        assert result.exit_code == 1
        report = json.loads(result.stdout)
        assert report["subject"] == "associativity"
        assert report["passed"] is False
        assert report["laws"][0]["witness"] == ["a", "a", "b"]

    def test_ordinary_relations(self, tmp_path: Path) -> None:
        """Test ordinary Rel_2 fails (R4)."""
        path = tmp_path / "rel2.json"
        runner.invoke(app, ["build", "rel", "2", "-o", str(path)])
        result = runner.invoke(app, ["verify", str(path)])

        assert result.exit_code == 1
        laws = {law["law"]: law["passed"] for law in json.loads(result.stdout)["laws"]}
        assert laws["R4"] is False

    def test_demonic_relations(self, tmp_path: Path) -> None:
        """Test demonic Rel_2 passes."""
        path = tmp_path / "rel2.json"
        runner.invoke(app, ["build", "rel", "2", "--composition", "demonic", "-o", str(path)])
        result = runner.invoke(app, ["verify", str(path)])

        assert result.exit_code == 0
        assert json.loads(result.stdout)["passed"] is True

    def test_constellation(self, tmp_path: Path, t2zero_file: Path) -> None:
        """Test a completion file satisfies the constellation laws."""
        path = tmp_path / "c.json"
        runner.invoke(app, ["complete", str(t2zero_file), "-e", "all", "-o", str(path)])
        result = runner.invoke(app, ["verify", str(path), "--laws", "constellation"])

        assert result.exit_code == 0

    def test_constellation_needs_file(self, trivial_path: Path) -> None:
        """Test a plain table cannot be checked as a constellation."""
        result = runner.invoke(app, ["verify", str(trivial_path), "--laws", "constellation"])

        assert result.exit_code == 2

    def test_modal_missing(self, monoid_01a_path: Path) -> None:
        """Test a missing modal action is reported as a failure."""
        result = runner.invoke(app, ["verify", str(monoid_01a_path), "--laws", "modal"])

        assert result.exit_code == 1
        report = json.loads(result.stdout)
        assert report["laws"][0]["law"] == "exists"

    def test_zs(self, t2zero_file: Path) -> None:
        """Test E(T_2⁰) satisfies the Zappa-Szép laws."""
        result = runner.invoke(app, ["verify", str(t2zero_file), "--laws", "zs", "-e", "all"])

        assert result.exit_code == 0

    def test_zs_fails(self, example5_path: Path) -> None:
        """Test the five-element monoid fails (ZS3)."""
        result = runner.invoke(
            app, ["verify", str(example5_path), "--laws", "zs", "-e", "1,e,f,g"]
        )

        assert result.exit_code == 1
        laws = {law["law"]: law["passed"] for law in json.loads(result.stdout)["laws"]}
        assert laws["ZS3"] is False


class TestReproduceCommand:
    """Tests for the reproduce command."""

    def test_text(self) -> None:
        """Test a worked example prints its transcript."""
        result = runner.invoke(app, ["reproduce", "ptx-n2"])

        assert result.exit_code == 0
        assert "all checks passed" in result.stdout

    def test_json(self) -> None:
        """Test the JSON form lists the checks."""
        result = runner.invoke(app, ["reproduce", "band-0ef1", "--format", "json"])

        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["passed"] is True
        assert data["example"] == "band-0ef1"

    def test_unknown(self) -> None:
        """Test an unknown example id is rejected by the parser."""
        result = runner.invoke(app, ["reproduce", "nothing"])

        assert result.exit_code == 2


class TestResolveESet:
    """Tests for --e-set values."""

    def test_one(self, small5: FiniteMonoid) -> None:
        """Test 'one' selects {1}."""
        assert resolve_e_set(small5, "one").labels() == ["1"]

    def test_labels(self, small5: FiniteMonoid) -> None:
        """Test comma-separated labels are trimmed."""
        assert set(resolve_e_set(small5, " 1, e ,f").labels()) == {"1", "e", "f"}

    def test_all(self, t2zero: FiniteMonoid) -> None:
        """Test 'all' selects every idempotent."""
        assert len(resolve_e_set(t2zero, "all")) == 4
