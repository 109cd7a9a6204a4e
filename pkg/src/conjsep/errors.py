class InputError(ValueError):
    """Invalid user-supplied data (bad generator index, malformed file, ...)."""


class ParseError(InputError):
    """Parse failure carrying enough context to point at the offending token."""

    def __init__(self, message, filename=None, line=None, token=None):
        self.filename = filename
        self.line = line
        self.token = token
        where = []
        if filename is not None:
            where.append(str(filename))
        if line is not None:
            where.append(f"line {line}")
        if token is not None:
            where.append(f"token {token!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
