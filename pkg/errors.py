# errors.py
"""Exceptions raised by the ring engine and the exit codes the CLI maps them to."""

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


class RingError(Exception):
    exit_code = EXIT_INVALID

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


class RingAxiomError(RingError):
    """A ring or bimodule law failed; `witness` names the offending elements."""

    def __init__(self, message, witness=None, **details):
        super().__init__(message, **details)
        self.witness = witness or {}

    def __str__(self):
        base = super().__str__()
        if not self.witness:
            return base
        shown = ", ".join(f"{k}={v!r}" for k, v in self.witness.items())
        return f"{base} [{shown}]"


class AdditionAxiomError(RingAxiomError):
    pass


class AssociativityError(RingAxiomError):
    pass


class DistributivityError(RingAxiomError):
    pass


class IdentityError(RingAxiomError):
    pass


class BimoduleAxiomError(RingAxiomError):
    pass


class BalanceError(RingAxiomError):
    pass


class ContainmentError(RingAxiomError):
    pass


class NotAnIdealError(RingError):
    pass


class NotIdempotentError(RingError):
    pass


class IncompleteSetError(RingError):
    pass


class NotInTnError(RingError):
    pass


class ZeroRingError(RingError):
    pass


class SpecError(RingError):
    """Malformed ring specification; `path` locates the bad node."""

    def __init__(self, message, path="$", **details):
        super().__init__(f"{path}: {message}", **details)
        self.path = path


class BudgetExceeded(RingError):
    exit_code = EXIT_BUDGET


class TierExceededError(BudgetExceeded):
    pass


class CapExceededError(BudgetExceeded):
    pass
