"""v6forge exception types.

All exceptions inherit from V6ForgeError for easy catching.
Diagnostic values are attached to exceptions where relevant.
"""

from typing import Optional, Tuple


class V6ForgeError(Exception):
    """Base exception for all v6forge errors."""

    pass


class MalformedAddress(V6ForgeError):
    """Text could not be parsed as an IPv6 address.

    Attributes:
        reason: Short description of the syntactic violation.
        text: The offending input, if known.
    """

    def __init__(self, reason: str, text: Optional[str] = None):
        message = f"{reason}: {text!r}" if text is not None else reason
        super().__init__(message)
        self.reason = reason
        self.text = text


class EmptySet(V6ForgeError):
    """An operation needs at least one address."""

    def __init__(self, message: str = "Address set is empty"):
        super().__init__(message)


class BadRange(V6ForgeError):
    """Nybble index range is outside 1..32 or inverted."""

    def __init__(self, message: str, a: Optional[int] = None, b: Optional[int] = None):
        super().__init__(message)
        self.a = a
        self.b = b


class TooFewGroups(V6ForgeError):
    """Fewer fingerprints than requested clusters."""

    def __init__(self, groups: int, k: int):
        super().__init__(f"Cannot form {k} clusters from {groups} groups")
        self.groups = groups
        self.k = k


class ShapeMismatch(V6ForgeError):
    """Array shapes do not agree."""

    def __init__(
        self,
        message: str,
        expected: Optional[Tuple[int, ...]] = None,
        got: Optional[Tuple[int, ...]] = None,
    ):
        super().__init__(message)
        self.expected = expected
        self.got = got


class UnsupportedComposition(V6ForgeError):
    """A loss was built from something other than kernel primitives."""

    pass


class DomainError(V6ForgeError):
    """Input lies outside the domain of a numeric function."""

    pass


class EmptySeedSet(V6ForgeError):
    """Training was requested on an empty seed set."""

    def __init__(self, message: str = "Cannot train on an empty seed set"):
        super().__init__(message)


class ModelError(V6ForgeError):
    """Model file could not be used."""

    pass


class CorruptModel(ModelError):
    """Model file is truncated, has a bad magic or a bad checksum."""

    pass


class VersionMismatch(ModelError):
    """Model file was written by an incompatible format version."""

    def __init__(self, expected: int, got: int):
        super().__init__(f"Model format version {got} is not supported (expected {expected})")
        self.expected = expected
        self.got = got


class EvaluationError(V6ForgeError):
    """Candidate evaluation or budget allocation failed."""

    pass


class EmptyCandidates(EvaluationError):
    """No candidates to evaluate; rates are undefined."""

    def __init__(self, message: str = "Candidate set is empty"):
        super().__init__(message)


class AllRatesZero(EvaluationError):
    """Budget allocation needs at least one positive rate."""

    def __init__(self, message: str = "All category rates are zero"):
        super().__init__(message)


class SampleExceedsUniverse(V6ForgeError):
    """Requested seed sample is larger than the synthetic universe."""

    def __init__(self, sample: int, universe: int):
        super().__init__(f"Seed sample of {sample} exceeds universe of {universe}")
        self.sample = sample
        self.universe = universe


class ConfigError(V6ForgeError):
    """Pipeline configuration is invalid.

    Attributes:
        key: Configuration key at fault, if any.
    """

    def __init__(self, message: str, key: Optional[str] = None):
        super().__init__(message)
        self.key = key
