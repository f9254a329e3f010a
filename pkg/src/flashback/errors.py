"""Exception hierarchy shared by every flashback module."""


class FlashbackError(ValueError):
    """Base class; ``code`` is the stable machine-readable error name."""

    code = "FLASHBACK_ERROR"


class MalformedSequenceError(FlashbackError):
    code = "MALFORMED_SEQUENCE"


class NotInImageError(FlashbackError):
    code = "NOT_IN_IMAGE"


class EmptyInputError(FlashbackError):
    code = "EMPTY_INPUT"


class SearchTooLargeError(FlashbackError):
    code = "SEARCH_TOO_LARGE"


class SkeletonMismatchError(FlashbackError):
    code = "SKELETON_MISMATCH"


class PositionOutOfRangeError(FlashbackError):
    code = "POSITION_OUT_OF_RANGE"


class ParamOutOfRangeError(FlashbackError):
    code = "PARAM_OUT_OF_RANGE"


class ParseError(FlashbackError):
    code = "PARSE_ERROR"

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
