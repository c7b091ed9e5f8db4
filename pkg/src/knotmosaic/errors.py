class KnotMosaicError(ValueError):
    """Base class for domain errors (bad input, violated preconditions)."""


class InvalidGridError(KnotMosaicError):
    pass


class MoveError(KnotMosaicError):
    """A grid move was refused because its precondition does not hold."""


class InvalidMosaicError(KnotMosaicError):
    pass


class ReductionError(KnotMosaicError):
    pass


class TooManyCrossingsError(KnotMosaicError):
    pass
