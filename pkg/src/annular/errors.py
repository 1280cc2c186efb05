"""Exception types shared across the package."""


class AnnularError(Exception):
    """Base class for domain errors; the CLI maps these to exit code 1."""


class InvalidEntryError(AnnularError):
    """An intermediate weight entry left the allowed range 0..n."""

    def __init__(self, position, upright, value, n):
        self.position = position
        self.upright = upright
        self.value = value
        self.n = n
        super().__init__(
            f"weight entry {value} at upright {upright} after letter {position} "
            f"is outside 0..{n}"
        )


class NotClosedError(AnnularError):
    """The final weight of a word differs from its base weight."""

    def __init__(self, base, final):
        self.base = tuple(base)
        self.final = tuple(final)
        super().__init__(f"word does not close up: base {self.base}, final {self.final}")


class ColorMismatchError(AnnularError):
    """A braid closure would glue strands of different colors."""


class NonTerminatingError(AnnularError):
    """The rewrite step budget was exceeded; signals an implementation bug."""


class UnsupportedColoredCrossingError(AnnularError):
    """A crossing configuration outside the supported resolution patterns."""


class NegativeMultiplicityError(AnnularError):
    """A homology weight decomposition produced a negative multiplicity."""
