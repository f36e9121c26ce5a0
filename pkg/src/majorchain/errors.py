"""Exception types shared across the package."""


class MajorchainError(Exception):
    """Base class for every error raised by this package."""


class NotAPartition(MajorchainError, ValueError):
    """A sequence is not a non-increasing run of nonnegative integers."""


class DominanceViolation(MajorchainError, ValueError):
    """A componentwise order required by an operation does not hold."""


class LengthMismatch(MajorchainError, ValueError):
    """Two chains (or a chain and a certificate) have incompatible lengths."""


class IndexOutOfRange(MajorchainError, IndexError):
    """A chain position past the end was read.

    Entries past the end of a chain stand for the zero polynomial, whose
    degree is infinite; no finite answer exists, so the read fails loudly
    instead of inventing one.
    """


class InterlaceViolation(MajorchainError, ValueError):
    """A chain pair does not satisfy the divisibility sandwich required here."""


class PremiseViolation(MajorchainError, ValueError):
    """An operation was called on an instance whose premises do not hold."""


class NonLinearFactor(MajorchainError, ValueError):
    """A translation that requires degree-1 factors met a larger degree."""


class LengthOverflow(MajorchainError, ValueError):
    """A partition has more parts than the chain being built has positions."""


class ConclusionViolation(MajorchainError, ValueError):
    """A certificate failed verification where a verified one was required."""


class InputError(MajorchainError, ValueError):
    """Malformed JSON input; ``path`` points at the offending element."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
