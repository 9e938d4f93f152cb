from ..core.subspace import Subspace

from dataclasses import dataclass, replace
from enum import Enum


class RecoveryStatus(Enum):
    """Result class of a support recovery

    Attributes
    ----------
    SUCCESS: int
        A subspace of the target rank was recovered (0)
    WRONG_SUPPORT: int
        A subspace of the target rank was recovered but it is not the planted one (1)
    FAILURE: int
        No support was recovered; the outcome carries a FailureReason (2)

    Methods
    -------
    __str__() -> str
        Convert the Enum to a string message
    """

    SUCCESS: int = 0  # type: ignore
    WRONG_SUPPORT: int = 1  # type: ignore
    FAILURE: int = 2  # type: ignore

    def __str__(self) -> str:
        match self:
            case RecoveryStatus.SUCCESS:
                return "success"
            case RecoveryStatus.WRONG_SUPPORT:
                return "wrong_support"
            case _:
                return "failure"


class FailureReason(Enum):
    """Why a decoder gave up

    Attributes
    ----------
    GUARD: str
        The codimension is outside the range the decoder supports
    DIMENSION: str
        The recovered space does not have the target dimension
    FILTER_STUCK: str
        No candidate shrinks the filtered set any further
    NOT_A_SUBSPACE: str
        The filtered candidate set is not the element set of a subspace
    STRAY: str
        The accumulated space grew past the target dimension
    BUDGET: str
        The round budget ran out
    """

    GUARD = "guard"
    DIMENSION = "dimension"
    FILTER_STUCK = "filter-stuck"
    NOT_A_SUBSPACE = "not-a-subspace"
    STRAY = "stray"
    BUDGET = "budget"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RecoveryOutcome:
    """The output of every support recovery decoder

    Attributes
    ----------
    status: RecoveryStatus
        Success, wrong support or failure
    reason: FailureReason | None
        Set exactly when status is FAILURE
    support: Subspace | None
        The recovered support, when one was produced
    iterations: int
        Number of rounds run (intersect decoder)
    candidates_examined: int
        Number of distinct candidates considered (multiset decoder)
    round_dims: tuple[int, ...]
        Dimension of the space produced by each round (intersect decoder)

    Methods
    -------
    success(support, **kwargs) -> RecoveryOutcome
        Build a successful outcome
    failure(reason, support=None, **kwargs) -> RecoveryOutcome
        Build a failed outcome
    checked_against(planted: Subspace) -> RecoveryOutcome
        Downgrade a success whose support differs from the planted one
    """

    status: RecoveryStatus
    reason: FailureReason | None = None
    support: Subspace | None = None
    iterations: int = 0
    candidates_examined: int = 0
    round_dims: tuple[int, ...] = ()

    @classmethod
    def success(cls, support: Subspace, **kwargs) -> "RecoveryOutcome":
        return cls(RecoveryStatus.SUCCESS, None, support, **kwargs)

    @classmethod
    def failure(
        cls, reason: FailureReason, support: Subspace | None = None, **kwargs
    ) -> "RecoveryOutcome":
        return cls(RecoveryStatus.FAILURE, reason, support, **kwargs)

    @property
    def succeeded(self) -> bool:
        return self.status == RecoveryStatus.SUCCESS

    def checked_against(self, planted: Subspace) -> "RecoveryOutcome":
        if self.status == RecoveryStatus.SUCCESS and self.support != planted:
            return replace(self, status=RecoveryStatus.WRONG_SUPPORT)
        return self

    def label(self) -> str:
        """One word description, e.g. success or failure:stray"""
        if self.reason is None:
            return str(self.status)
        return f"{self.status}:{self.reason}"
