"""Law reports and the vectorised checks shared by unary algebras."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np


@dataclass
class LawResult:
    """Outcome of checking a single law."""

    law: str
    passed: bool
    witness: tuple[int, ...] | None = None
    applicable: bool = True

    def to_dict(self, labels: tuple[str, ...] | None = None) -> dict[str, Any]:
        witness: list[Any] | None = None
        if self.witness is not None:
            witness = [labels[w] if labels is not None else w for w in self.witness]
        return {
            "law": self.law,
            "passed": self.passed,
            "applicable": self.applicable,
            "witness": witness,
        }


@dataclass
class LawReport:
    """Per-law results with the least failing witness for each law."""

    subject: str
    results: list[LawResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results if r.applicable)

    def __getitem__(self, law: str) -> LawResult:
        for result in self.results:
            if result.law == law:
                return result
        raise KeyError(law)

    def __contains__(self, law: object) -> bool:
        return any(r.law == law for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if r.applicable and not r.passed]

    def first_failure(self) -> LawResult | None:
        failed = self.failures()
        return failed[0] if failed else None

    def add(self, law: str, violations: np.ndarray | bool) -> LawResult:
        """Record a law from a boolean violation mask (True marks a counterexample)."""
        witness = first_witness(violations)
        result = LawResult(law=law, passed=witness is None, witness=witness)
        self.results.append(result)
        return result

    def add_least(self, law: str, witnesses: list[tuple[int, ...]]) -> LawResult:
        """Record a law from collected counterexamples, keeping the least."""
        witness = min(witnesses) if witnesses else None
        result = LawResult(law=law, passed=witness is None, witness=witness)
        self.results.append(result)
        return result

    def skip(self, law: str) -> LawResult:
        result = LawResult(law=law, passed=True, applicable=False)
        self.results.append(result)
        return result

    def to_dict(self, labels: tuple[str, ...] | None = None) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "laws": [r.to_dict(labels) for r in self.results],
        }


def first_witness(violations: np.ndarray | bool) -> tuple[int, ...] | None:
    """Lexicographically least index where the mask is True, or None."""
    mask = np.asarray(violations, dtype=bool)
    if mask.ndim == 0:
        return () if bool(mask) else None
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def left_restriction_report(mul: np.ndarray, unary: np.ndarray, subject: str) -> LawReport:
    """Check D(x)x=x, commuting domains, D(D(x)y)=D(x)D(y), xD(y)=D(xy)x, D(xy)=D(xD(y))."""
    n = len(unary)
    idx = np.arange(n)
    d_mul = mul[np.ix_(unary, unary)]
    report = LawReport(subject=subject)
    report.add("R1", mul[unary, idx] != idx)
    report.add("R2", d_mul != d_mul.T)
    report.add("R3", unary[mul[unary, :]] != d_mul)
    report.add("R4", mul[:, unary] != mul[unary[mul], idx[:, None]])
    report.add("R5", unary[mul] != unary[mul[:, unary]])
    return report


def right_restriction_report(mul: np.ndarray, unary: np.ndarray, subject: str) -> LawReport:
    """Left-right duals of the restriction laws, checked on the opposite table."""
    dual = left_restriction_report(mul.T, unary, subject)
    for result in dual.results:
        result.law = f"{result.law}*"
    return dual


def demigroup_report(mul: np.ndarray, unary: np.ndarray, subject: str) -> LawReport:
    """Check d(x)x=x, d(xy)=d(xd(y)) and that d lands in idempotents."""
    n = len(unary)
    idx = np.arange(n)
    report = LawReport(subject=subject)
    report.add("D1", mul[unary, idx] != idx)
    report.add("D2", unary[mul] != unary[mul[:, unary]])
    report.add("D3", mul[unary, unary] != unary)
    return report
