"""Exception types raised across the package."""


class InvalidInput(ValueError):
    """Malformed or out-of-range argument."""


class DivisionByZero(ZeroDivisionError):
    pass


class NotRational(ArithmeticError):
    """A cyclotomic value expected to be rational has irrational coordinates."""


class NotInteger(ArithmeticError):
    """A count came out fractional or negative."""


class GroupTooLarge(ValueError):
    pass


class UnknownClass(KeyError):
    pass


class ZeroConstant(ValueError):
    """Type I prescription with constant term 0; no such class exists."""


class BudgetExceeded(RuntimeError):
    pass
