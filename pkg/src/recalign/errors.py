"""Exception types shared across the package."""


class RecalignError(Exception):
    """Base class for all recalign-specific errors."""


class DecodeError(RecalignError):
    """Input bytes are not valid text in the declared encoding."""

    def __init__(self, encoding: str, offset: int):
        self.encoding = encoding
        self.offset = offset
        super().__init__(
            f"input is not valid {encoding}: undecodable byte at offset {offset}"
        )


class EmptyCorpusError(RecalignError):
    """Tokenization produced no tokens."""


class ConfigError(RecalignError):
    """A configuration value is outside its legal range."""


class DegenerateSignalError(RecalignError):
    """A word with fewer than two occurrences has no interval signal."""


class MissingSignalError(RecalignError):
    """A lexicon entry references a word with no stored signal."""
