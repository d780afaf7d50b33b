"""Exception hierarchy shared by the whole package."""


class IsoprodError(Exception):
    """Base class for all errors raised by isoprod."""


class ResourceError(IsoprodError):
    """A configured size cap (group order, coset count, ...) was exceeded."""


class UsageError(IsoprodError, ValueError):
    """Arguments violate a documented precondition."""


class InconsistentDatumError(IsoprodError, ValueError):
    """Numerical data that cannot come from a genuine covering."""


class ParseError(IsoprodError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
