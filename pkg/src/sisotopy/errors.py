"""Exception hierarchy.

Everything raised on purpose by the package derives from :class:`SisotopyError`
so callers (and the CLI) can tell input problems from programming errors.
"""


class SisotopyError(Exception):
    pass


class TableError(SisotopyError, ValueError):
    """Malformed table or permutation input.

    ``row`` and ``col`` are 0-based positions of the offending entry when known.
    """

    def __init__(self, message, row=None, col=None):
        where = []
        if row is not None:
            where.append(f"row {row}")
        if col is not None:
            where.append(f"column {col}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.row = row
        self.col = col


class NotQuasigroupError(SisotopyError, ValueError):
    pass


class NotLoopError(SisotopyError, ValueError):
    pass


class SPairError(SisotopyError, ValueError):
    """A subset cannot serve as the designated S-substructure."""


class NotApplicableError(SisotopyError, ValueError):
    """An identity uses inverses or the unit on a table that is not a loop."""


class SearchBoundError(SisotopyError):
    """A search was refused because the order exceeds the configured bound."""

    def __init__(self, what, order, bound):
        super().__init__(
            f"{what}: order {order} exceeds bound {bound} (raise it with max_order)"
        )
        self.order = order
        self.bound = bound
