"""Exception types shared across the engine."""


class GroupError(Exception):
    """Base class for engine errors."""


class CapExceededError(GroupError):
    """Closure enumeration ran past the configured element cap."""

    def __init__(self, cap: int, partial_count: int):
        self.cap = cap
        self.partial_count = partial_count
        super().__init__(
            f"element cap {cap} exceeded (closure reached {partial_count} elements)"
        )


class HallSearchError(GroupError):
    """The randomized Hall-subgroup search ran out of attempts."""

    def __init__(self, attempts: int, message: str = ""):
        self.attempts = attempts
        super().__init__(message or f"Hall subgroup not found after {attempts} attempts")


class LiftWitnessError(GroupError):
    """No star-commutator witness was found in the required coset.

    The lifting property is guaranteed for the sets this engine computes,
    so raising this signals a defect rather than a legitimate outcome.
    """


class GroupFileError(GroupError):
    """A group file did not parse or failed load-time validation."""
