"""Exception hierarchy. Every user-input problem derives from ``RoughKitError``."""


class RoughKitError(ValueError):
    """Base class for errors caused by bad input."""


class TableFormatError(RoughKitError):
    """Malformed table or context file. Carries 1-based row and column."""

    def __init__(self, message: str, row: int | None = None, column: int | None = None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{message} at {', '.join(where)}" if where else message)


class UnknownAttributeError(RoughKitError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown attribute {name!r}")


class UnknownObjectError(RoughKitError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown object {name!r}")


class EmptyAttributeSetError(RoughKitError):
    def __init__(self):
        super().__init__("attribute subset must be nonempty")


class ParseError(RoughKitError):
    """Formula syntax error; ``offset`` is the byte offset into the UTF-8 input."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


class BoundExceededError(RoughKitError):
    pass
