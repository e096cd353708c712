"""Exception hierarchy shared by every module of the package."""


class GroupError(Exception):
    """Base class for all errors raised by gqbreak."""


class EmptyDomain(GroupError, ValueError):
    pass


class CapExceeded(GroupError):
    def __init__(self, cap, what="elements"):
        super().__init__(f"more than {cap} {what}")
        self.cap = cap


class NotClosed(GroupError, ValueError):
    pass


class IndexOutOfRange(GroupError, IndexError):
    pass


class BadParameter(GroupError, ValueError):
    pass


class TrivialGroup(GroupError, ValueError):
    pass


class NotAPartialOrder(GroupError, ValueError):
    def __init__(self, message, witness):
        super().__init__(f"{message}: witness {witness}")
        self.witness = witness


class ParseError(GroupError, ValueError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownGenerator(ParseError):
    pass


class EmptyGeneratorList(ParseError):
    pass


class CosetLimitExceeded(GroupError):
    def __init__(self, max_cosets):
        super().__init__(
            f"coset enumeration exceeded {max_cosets} cosets "
            "(group may be infinite or larger than the budget)"
        )
        self.max_cosets = max_cosets
