"""Exception types shared across the package."""


class QxpressError(Exception):
    """Base class for every error this package raises on purpose."""


class ProfileLookupError(QxpressError):
    """An unknown language profile id was requested."""

    def __init__(self, profile_id: str, known: tuple[str, ...]):
        self.profile_id = profile_id
        self.known = tuple(known)
        super().__init__(
            f"unknown language profile {profile_id!r} (known: {', '.join(self.known)})"
        )


class AmbiguousExtensionError(QxpressError):
    """A file extension maps to more than one language profile."""

    def __init__(self, extension: str, candidates: tuple[str, ...]):
        self.extension = extension
        self.candidates = tuple(candidates)
        super().__init__(
            f"extension {extension!r} is ambiguous between {', '.join(self.candidates)}; "
            "pass an explicit language id"
        )


class UnknownExtensionError(QxpressError):
    """A file extension matches no registered language profile."""


class ProfileOverrideError(QxpressError):
    """A profile override document is malformed."""


class EncodingError(QxpressError):
    """A source file is not valid UTF-8."""


class LexicalError(QxpressError):
    """Tokenization failed at a specific source location."""

    def __init__(self, message: str, file: str, line: int, column: int):
        self.file = file
        self.line = line
        self.column = column
        super().__init__(f"{file}:{line}:{column}: {message}")


class ManifestError(QxpressError):
    """A corpus manifest is malformed or references bad paths."""


class ReportError(QxpressError):
    """Aggregating metric reports into tables failed."""


class ChartError(QxpressError):
    """A chart asks for data the tables do not have."""
