"""Exception hierarchy shared by all branecalc modules."""


class BranecalcError(Exception):
    """Base class for domain errors (CLI exit code 2)."""


class OrderMismatch(BranecalcError, ValueError):
    pass


class ParityError(BranecalcError, ValueError):
    """Odd r-slots survived where an integer g-power was required."""


class MissingRelations(BranecalcError):
    pass


class LabelError(BranecalcError, ValueError):
    """A Cardy label or representation label is out of range."""


class ModelError(BranecalcError):
    """Invalid model definition; carries optional line/field diagnostics."""

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)


class ConstraintError(BranecalcError, ValueError):
    """A charge or geometric precondition does not hold."""
