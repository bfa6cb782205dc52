"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed TGF/APX input or certificate text."""


class UndeclaredArgumentError(ParseError):
    """An attack fact references an argument name that is never declared."""


class NotConflictFreeError(ValueError):
    """A set of arguments contains an internal attack."""


class NotAdmissibleError(ValueError):
    """A labelling violates one of the two admissibility clauses."""


class MismatchedFrameworkError(ValueError):
    """Two labellings over different frameworks were combined."""


class NotInGroundedError(ValueError):
    """The query argument is not in the grounded extension."""

    def __init__(self, name):
        super().__init__(f"argument {name!r} is not in the grounded extension")
        self.name = name


class PreconditionError(ValueError):
    """A checked entry point rejected its input; the message names the clause."""


class OracleTooLargeError(ValueError):
    """The framework exceeds the brute-force enumeration limit."""

    def __init__(self, n, limit, kind="subset enumeration"):
        super().__init__(
            f"framework has {n} arguments; brute-force {kind} is capped at {limit}"
        )
        self.n = n
        self.limit = limit
