"""Exception hierarchy shared by all modules."""


class NLError(Exception):
    """Base class for every error raised by :mod:`nldilation`."""


class UsageError(NLError, ValueError):
    """Events, partitions or models built over different sample spaces, or malformed input."""


class InvalidParameterError(NLError, ValueError):
    pass


class CapacityError(NLError):
    """An exhaustive scan would exceed its configured size cap."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class UnsupportedModelError(NLError):
    """The operation is not defined for this model family (e.g. non-coherent models)."""


class PreconditionError(NLError):
    pass


class AssumptionError(PreconditionError):
    """A named standing assumption (A1)-(A4) does not hold.

    ``assumption`` holds the short name, e.g. ``"A2"``.
    """

    def __init__(self, assumption, message):
        super().__init__(f"assumption ({assumption}) failed: {message}")
        self.assumption = assumption


class NotApplicableError(PreconditionError):
    pass


class InternalInconsistencyError(NLError):
    """Two derivations that must agree exactly did not."""
