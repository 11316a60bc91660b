"""Exception types shared across the package."""


class SLabelError(Exception):
    """Base class for all errors raised by slabelcol."""


class SizeError(SLabelError, ValueError):
    """Alphabet sizes disagree, or a size is not positive."""


class CycleParseError(SLabelError, ValueError):
    """Malformed cycle notation.

    Attributes:
        position: 0-based character offset of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ResourceLimitError(SLabelError, ValueError):
    """A request would exceed a fixed enumeration or size guard."""


class EmbeddingError(SLabelError, ValueError):
    """Inconsistent rotation system or a non-simple/disconnected plane graph."""


class ShapeError(SLabelError, ValueError):
    """An operation needs a triangular face and got something else."""


class ColouringError(SLabelError, ValueError):
    """A colouring is partial or uses colours outside [k]."""


class LabelingError(SLabelError, ValueError):
    """Malformed S-labeled graph (unknown edge, duplicate arc, bad label size)."""


class NoWitnessError(SLabelError, ValueError):
    """No construction or representative exists for the identity permutation."""


class CertificateError(SLabelError):
    """Certificate cannot be produced or fails verification."""


class FormatError(SLabelError, ValueError):
    """A serialized document cannot be decoded.

    Attributes:
        offset: byte offset of a JSON syntax error, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset
