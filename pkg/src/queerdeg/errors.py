"""Exception types shared across the package."""


class EmptyInputError(ValueError):
    pass


class InvalidShapeError(ValueError):
    pass


class InvalidWordError(ValueError):
    pass


class TableauParseError(ValueError):
    """Malformed tableau text, or a filling that violates a tableau invariant."""


class InvariantViolation(RuntimeError):
    """An involution produced an invalid tableau. Always an implementation bug."""


class IndexRangeError(ValueError):
    pass


class NotDefinedError(ValueError):
    pass


class GraphConstructionError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownLabelError(KeyError):
    pass


class MalformedGraphError(ValueError):
    pass


class NotInSpanError(ValueError):
    pass


class NotQueerDEGError(ValueError):
    pass


class CapacityError(ValueError):
    pass
