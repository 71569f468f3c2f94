"""Exception types shared across the package."""

from __future__ import annotations


class RinglabError(Exception):
    """Base class for every error raised by ringlab."""


class AxiomViolation(RinglabError):
    """A structure failed one of its defining laws.

    Carries the short name of the violated law and the element indices
    witnessing the failure, so reports can be replayed against the tables.
    """

    def __init__(self, axiom: str, witness: tuple[int, ...], detail: str = ""):
        self.axiom = axiom
        self.witness = witness
        msg = f"axiom {axiom!r} fails at witness {witness}"
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg)


class IdentityEqualsZero(RinglabError):
    """The multiplicative identity coincides with zero (order-1 collapse)."""


class CapExceeded(RinglabError):
    """A construction or search would exceed the configured order cap."""


class ImproperIdeal(RinglabError):
    """The ideal contains 1, so the quotient would collapse."""


class IdealNotStarClosed(RinglabError):
    """The ideal is not stable under the involution."""

    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"element {witness} lies in the ideal but its star does not")


class NotIdempotent(RinglabError):
    """The supplied element is not idempotent."""

    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} is not idempotent")


class PreconditionUnitFails(RinglabError):
    """The correction element 1 + (e-e*)*(e-e*) is not a unit."""

    def __init__(self, x: int):
        self.x = x
        super().__init__(f"correction element {x} is not a unit")


class HypothesisFails(RinglabError):
    """e - e* lies neither in the radical nor among the nilpotents."""

    def __init__(self, element: int, displacement: int):
        self.element = element
        self.displacement = displacement
        super().__init__(
            f"displacement {displacement} of idempotent {element} is neither "
            "in the radical nor nilpotent"
        )


class NotProjectionInQuotient(RinglabError):
    """The quotient element to lift is not a projection there."""


class NotApplicable(RinglabError):
    """The named involution does not apply to this construction."""


class EquivalenceBreach(RinglabError):
    """Independently computed equivalent conditions disagreed.

    This signals an implementation defect, never a ring property; the
    attached report says which conditions diverged on which ring.
    """

    def __init__(self, message: str, report: dict | None = None):
        self.report = report or {}
        super().__init__(message)


class ConsistencyError(RinglabError):
    """An internally guaranteed invariant failed (implementation defect)."""


class IoFailure(RinglabError):
    """Reading or writing an atlas sink failed."""


class ReplayMismatch(RinglabError):
    """A persisted record disagrees with its recomputation."""

    def __init__(self, index: int, detail: str):
        self.index = index
        self.detail = detail
        super().__init__(f"record {index} failed replay: {detail}")
