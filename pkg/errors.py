"""
Exception hierarchy shared by the period and pseudo-power modules.

Library code raises these; the CLI maps them to exit codes.
"""


class PeriodToolError(ValueError):
    """Base class for every error raised by this package."""


class UnknownLetter(PeriodToolError):
    """A letter has no entry in the alphabet or in the involution map."""

    def __init__(self, letter, context: str = ""):
        self.letter = letter
        self.context = context
        where = f" ({context})" if context else ""
        super().__init__(f"Unknown letter {letter!r}{where}")

    def __reduce__(self):
        # rebuilt from its fields when it crosses a process pool
        return type(self), (self.letter, self.context)


class AlphabetTooLarge(PeriodToolError):
    """More distinct symbols than the suffix tree link tables allow."""


class EmptyWord(PeriodToolError):
    """An operation that needs at least one letter got an empty word."""


class InvalidParameter(PeriodToolError):
    """k, s or a position outside the allowed range."""


class WindowOutOfRange(PeriodToolError):
    """A suffix tree window does not fit inside its word."""


class NotPreviousWindow(PeriodToolError):
    """A suffix tree was extended by anything other than start - 1."""


class NodeNotInTree(PeriodToolError):
    """A node id does not belong to the tree."""


class NodeNotInIndex(PeriodToolError):
    """An LCA query named a node outside the indexed subtree."""


class InvariantViolation(PeriodToolError):
    """A debug-mode invariant check failed."""


class EmptyInput(PeriodToolError):
    """The input file or inline word held no letters."""


class MalformedFasta(PeriodToolError):
    """FASTA text that does not follow the header/sequence layout."""


class MorphismFormatError(PeriodToolError):
    """A morphism file line is not a pair of symbols, or the map is not an involution."""
