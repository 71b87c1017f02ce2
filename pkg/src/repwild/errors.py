"""Exception hierarchy shared by all repwild modules."""


class RepWildError(Exception):
    """Base class for every error raised by repwild."""


class NonPrimeCharacteristic(RepWildError):
    pass


class ReducibleModulus(RepWildError):
    pass


class NoSuchRoot(RepWildError):
    pass


class FieldMismatch(RepWildError):
    pass


class CharacteristicMismatch(RepWildError):
    pass


class NotSplit(RepWildError):
    """A computation needed a split semisimple quotient and did not get one."""


class UnsupportedCharacteristic(RepWildError):
    pass


class AlgebraMismatch(RepWildError):
    pass


class ResourceBudgetExceeded(RepWildError):
    pass


# the zoo constructors use the shorter name
BudgetExceeded = ResourceBudgetExceeded


class NotComposable(RepWildError):
    pass


class OracleTooLarge(RepWildError):
    pass


class WindowTooShort(RepWildError):
    pass


class InvalidRestrictedData(RepWildError):
    pass


class NotAutomorphism(RepWildError):
    pass


class BadOrder(RepWildError):
    pass


class EvenEll(RepWildError):
    pass


class BadOrderHypothesis(RepWildError):
    pass


class InvalidDatum(RepWildError):
    pass


class ValidationError(RepWildError):
    """Raised when an input object fails its structural invariants."""

    def __init__(self, message, witnesses=None):
        super().__init__(message)
        self.witnesses = list(witnesses or [])


class SchemaError(RepWildError):
    """Malformed file; ``pointer`` is a JSON pointer to the offending location."""

    def __init__(self, message, pointer=""):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
