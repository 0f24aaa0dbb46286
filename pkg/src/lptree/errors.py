"""Exception hierarchy shared by every module of the package."""


class LinkPatternError(Exception):
    """Base class for all errors raised by lptree."""


class NotAMatching(LinkPatternError, ValueError):
    """A pair set does not cover each point exactly once."""


class Crossing(LinkPatternError, ValueError):
    """Two chords of a would-be link pattern cross."""


class IndexOutOfRange(LinkPatternError, IndexError):
    pass


class NoSuchStrand(LinkPatternError, ValueError):
    """Deletion requested at a gap that carries no short link."""


class MissingLink(LinkPatternError, ValueError):
    """An operation needs the link (i, i+1) and the pattern lacks it."""


class RankOutOfRange(LinkPatternError, IndexError):
    pass


class AtRoot(LinkPatternError, ValueError):
    """The root of a generating tree has no parent and no rank."""


class InvalidCode(LinkPatternError, ValueError):
    """A path code violates r_1 <= 2 or r_{t+1} <= r_t + 1."""


class InvalidPath(LinkPatternError, ValueError):
    pass


class InvalidPermutation(LinkPatternError, ValueError):
    pass


class DomainError(LinkPatternError, ValueError):
    pass


class SizeLimit(LinkPatternError, ValueError):
    """Brute-force oracles refuse sizes they cannot enumerate in memory."""


class UnknownFormat(LinkPatternError, ValueError):
    pass


class ParseError(LinkPatternError, ValueError):
    """Malformed record text; ``column`` is the 1-based offending column."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column
