"""Exception types shared across the package."""


class StrictGamesError(Exception):
    """Base class for all errors raised by this package."""


class EmptyGame(StrictGamesError):
    """A payoff matrix has zero rows or zero columns."""


class ShapeMismatch(StrictGamesError):
    """The two payoff matrices do not have identical dimensions."""


class DimensionMismatch(StrictGamesError):
    """A strategy or profile does not match the game's action counts."""


class WeightOutOfRange(StrictGamesError):
    """A mixture weight lies outside [0, 1]."""


class AlphaNonpositiveError(StrictGamesError):
    """A scaling coefficient that must be positive is zero or negative."""


class NotZeroSum(StrictGamesError):
    """The game handed to the minimax solver is not zero-sum entrywise."""


class TooLarge(StrictGamesError):
    """Game dimensions exceed the support-enumeration size cap."""


class BadSpec(StrictGamesError):
    """A generator specification is invalid or unsatisfiable."""


class FormatError(StrictGamesError):
    """A game file or rational literal is malformed."""
