"""Exception hierarchy shared by all modules."""


class BiospError(Exception):
    """Base class for every error raised by the package."""


class ParseError(BiospError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownIdentifier(ParseError):
    pass


class NegativeExponent(ParseError):
    pass


class WindowOverflow(BiospError):
    """The image of basis monomial ``x**column`` has a term outside the window."""

    def __init__(self, column, exponent):
        super().__init__(f"image of x^{column} has a term x^{exponent} outside the window")
        self.column = column
        self.exponent = exponent


class ZeroDenominator(BiospError):
    def __init__(self, n, what="recurrence coefficient"):
        super().__init__(f"zero denominator in {what} at n={n}")
        self.n = n


class DomainError(BiospError):
    pass


class NegativeExponentPoly(BiospError):
    """A Laurent polynomial with negative powers was passed where a polynomial is required."""


class TruncationRequired(BiospError):
    pass


class DegenerateNorm(BiospError):
    pass


class MismatchError(BiospError):
    pass


class ZeroB0(BiospError):
    def __init__(self, k):
        super().__init__(f"B_0({k}) vanishes; the integral formula is undefined for k={k}")
        self.k = k
