"""Exception hierarchy shared by every module of the package."""


class ContextTreeError(ValueError):
    """Base class for all errors raised by pmtree."""


class InvalidSymbol(ContextTreeError):
    pass


class PostfixViolation(ContextTreeError):
    def __init__(self, shorter, longer, message=None):
        self.shorter = shorter
        self.longer = longer
        super().__init__(message or f"context {shorter!r} is a proper postfix of {longer!r}")


class EmptyTree(ContextTreeError):
    pass


class NotComplete(ContextTreeError):
    pass


class AlphabetMismatch(ContextTreeError):
    pass


class NotPerfectMemory(ContextTreeError):
    pass


class NotContained(ContextTreeError):
    pass


class UnknownContext(ContextTreeError):
    pass


class NonConvergence(ContextTreeError):
    pass


class IncompleteTable(ContextTreeError):
    pass


class BadParams(ContextTreeError):
    pass


class InvalidDistribution(ContextTreeError):
    pass


class ParseError(ContextTreeError):
    """A malformed input file; ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
