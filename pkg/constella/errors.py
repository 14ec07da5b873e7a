"""Exceptions raised by constella.

Validation and precondition failures derive from ``AlgebraError`` (a ``ValueError``),
resource caps from ``ResourceLimitError``. Every error keeps its witness so callers
can render it with element labels.
"""

from typing import Any


class ConstellaError(Exception):
    """Base class for all constella errors."""


class AlgebraError(ConstellaError, ValueError):
    """A structure failed validation or an operation's precondition."""


class ResourceLimitError(ConstellaError):
    """A configured size or search budget was exceeded."""


class InvariantViolation(ConstellaError, RuntimeError):
    """A post-verification of a computed result failed."""


class NotAssociative(AlgebraError):
    def __init__(self, x: int, y: int, z: int):
        self.witness = (x, y, z)
        super().__init__(f"table is not associative: (xy)z != x(yz) at {self.witness}")


class BadIdentity(AlgebraError):
    def __init__(self, element: int, other: int):
        self.witness = (element, other)
        super().__init__(f"element {element} is not a two-sided identity (fails at {other})")


class BadZero(AlgebraError):
    def __init__(self, element: int, other: int):
        self.witness = (element, other)
        super().__init__(f"element {element} is not a two-sided zero (fails at {other})")


class NotIdempotent(AlgebraError):
    def __init__(self, element: int):
        self.witness = (element,)
        super().__init__(f"element {element} is not idempotent")


class LawViolated(AlgebraError):
    def __init__(self, law: str, witness: tuple[int, ...] | None):
        self.law = law
        self.witness = witness
        super().__init__(f"law {law} violated at {witness}")


class SelectorInapplicable(AlgebraError):
    def __init__(self, selector: str, reason: str):
        self.selector = selector
        super().__init__(f"selector {selector!r} cannot be used here: {reason}")


class NotEDemigroup(AlgebraError):
    def __init__(self, reason: str, witness: tuple[int, ...]):
        self.witness = witness
        super().__init__(f"not a left E-demigroup: {reason} at {witness}")


class NotIntegral(AlgebraError):
    def __init__(self, witness: tuple[int, ...] | None, reason: str = "zero divisors"):
        self.witness = witness
        super().__init__(f"monoid is not integral with zero: {reason} at {witness}")


class NotProtomodal(AlgebraError):
    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        super().__init__(
            f"Eq(s, se) is not generated by an idempotent for (s, e) = {witness}"
        )


class NotInductive(AlgebraError):
    def __init__(self, condition: str, witness: Any):
        self.condition = condition
        self.witness = witness
        super().__init__(f"not an inductive left E-monoid: {condition} fails at {witness}")


class NotEnoughLargeIdempotents(AlgebraError):
    def __init__(self, element: int):
        self.witness = (element,)
        super().__init__(
            f"domain element {element} has no right-equivalent idempotent of D(s)=1 part"
        )


class ZSLawFails(AlgebraError):
    def __init__(self, law: str, witness: tuple[int, ...] | None):
        self.law = law
        self.witness = witness
        super().__init__(f"Zappa-Szep law {law} fails at {witness}")


class TooLarge(ResourceLimitError):
    def __init__(self, family: str, n: int, size: int, cap: int):
        self.family = family
        self.n = n
        self.size = size
        self.cap = cap
        super().__init__(
            f"{family} at n={n} has {size} elements, above the cap of {cap}"
        )


class SearchBudgetExceeded(ResourceLimitError):
    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"isomorphism search exceeded its budget of {budget} nodes")
