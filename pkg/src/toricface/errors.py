"""Exception hierarchy.

``InputError`` subclasses describe malformed or invalid input (CLI exit 1).
``VerdictError`` subclasses are mathematical outcomes that a caller asked to be
raised rather than returned (for instance a Gorenstein query on a ring that is
not Cohen-Macaulay).
"""


class ToricFaceError(Exception):
    pass


class InputError(ToricFaceError):
    pass


class DimensionMismatch(InputError):
    pass


class NotPointed(InputError):
    pass


class NotAFan(InputError):
    def __init__(self, first, second, message=None):
        self.first = first
        self.second = second
        super().__init__(
            message or f"cones {first.generators} and {second.generators} do not meet in a common face"
        )


class NotPure(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, locus=None):
        self.locus = locus
        super().__init__(f"{locus}: {message}" if locus else message)


class VerdictError(ToricFaceError):
    pass


class NotCohenMacaulay(VerdictError):
    def __init__(self, witness=None):
        self.witness = witness
        msg = "K[fan] is not Cohen-Macaulay"
        if witness is not None:
            msg += f" (non-vanishing star cohomology at cone {witness[0]}, degree {witness[1]})"
        super().__init__(msg)


class SearchBudgetExceeded(ToricFaceError):
    """A backtracking search ran out of nodes; the verdict is Unknown, never No."""
