"""Exception types shared across the package."""


class FacePropError(Exception):
    """Base class for all faceprop errors."""


class ContractError(FacePropError):
    """An operation was invoked with arguments that violate its contract."""


class EmptyWindowError(ContractError):
    """A window has no area, or an intersection came up empty."""


class PartMismatchError(ContractError):
    """A spatial config was applied to a map of a different part."""


class NoScoresError(ContractError):
    """Combined faceness requested with no part scores present."""


class DegenerateLabelsError(ContractError):
    """Band learning needs both positive and negative samples."""


class EmptySearchSpaceError(ContractError):
    """Template tuning was given an empty parameter grid."""


class NoMapsError(ContractError):
    """The proposal pipeline needs at least one partness map."""


class OutOfRangeError(ContractError):
    """A regression target fell outside the [-1, 1] range."""


class InvalidTargetError(ContractError):
    """Attempted to decode a non-face sentinel target."""


class NoGroundTruthError(ContractError):
    """Ground-truth boxes are required but none were supplied."""


class FileFormatError(FacePropError):
    """Unreadable or malformed input file."""


class BadMagicError(FileFormatError):
    """A map file does not start with the expected magic bytes."""


class TruncatedError(FileFormatError):
    """A map file payload is shorter than its header promises."""
