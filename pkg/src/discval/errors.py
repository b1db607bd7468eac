"""Exception hierarchy.  Every mathematical failure derives from ``ArithmeticError``."""


class PrecisionError(ArithmeticError):
    """The available precision cannot decide the requested result."""


class ZeroIndistinguishableError(PrecisionError, ZeroDivisionError):
    """Division by an element whose known digits all vanish."""


class UndefinedPowerError(ArithmeticError):
    pass


class ZeroInversionError(ZeroDivisionError):
    pass


class NotAUniformizerError(ArithmeticError):
    def __init__(self, element, valuation):
        super().__init__(f"{element} has valuation {valuation}, not of_add(-1)")
        self.element = element
        self.valuation = valuation


class NotInUnitBallError(ArithmeticError):
    pass


class NotInMaximalIdealError(ArithmeticError):
    pass


class NotIntegralError(NotInUnitBallError):
    pass


class NoCertificateError(ArithmeticError):
    pass


class ContextMismatchError(ValueError):
    pass
