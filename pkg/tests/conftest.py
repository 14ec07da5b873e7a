"""Shared pytest fixtures for constella tests."""

from pathlib import Path

import pytest

from constella.families import full_transformation_monoid, named_monoid
from constella.idempotents import IdempotentSet, idempotent_set, idempotents
from constella.monoid import FiniteMonoid

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    """Directory holding the JSON fixtures."""
    return FIXTURES


@pytest.fixture
def example5_path() -> Path:
    """Five-element monoid e, 1, f, g, s as a JSON table."""
    return FIXTURES / "example5.json"


@pytest.fixture
def monoid_01a_path() -> Path:
    """{0, 1, a} with a² = 0 as a JSON table."""
    return FIXTURES / "monoid-01a.json"


@pytest.fixture
def trivial_path() -> Path:
    """One-element monoid as a JSON table."""
    return FIXTURES / "trivial.json"


@pytest.fixture
def broken_path() -> Path:
    """T_2 with a domain map that breaks (R3)."""
    return FIXTURES / "broken-restriction.json"


@pytest.fixture
def t2() -> FiniteMonoid:
    """T_2 labelled e, 1, i, f."""
    return full_transformation_monoid(2)


@pytest.fixture
def t2zero() -> FiniteMonoid:
    """T_2 with an adjoined zero."""
    return full_transformation_monoid(2, with_zero=True)


@pytest.fixture
def t2zero_e(t2zero: FiniteMonoid) -> IdempotentSet:
    """E(T_2⁰) = {0, 1, e, f}."""
    return idempotents(t2zero)


@pytest.fixture
def small5() -> FiniteMonoid:
    return named_monoid("small-5elt")


@pytest.fixture
def small5_e(small5: FiniteMonoid) -> IdempotentSet:
    """{1, e, f, g}: inductive but without definable meets."""
    return idempotent_set(small5, ["1", "e", "f", "g"])


@pytest.fixture
def band() -> FiniteMonoid:
    return named_monoid("band-0ef1")


@pytest.fixture
def monoid_01a() -> FiniteMonoid:
    return named_monoid("monoid-01a")
