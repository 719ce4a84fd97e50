"""Domain exceptions.

Every error carries a stable machine-readable ``code`` so the HTTP service
and the CLI can surface it without string matching.
"""


class BreakfastError(Exception):
    """Base class for all domain errors."""

    code = "BreakfastError"


class DuplicateNameError(BreakfastError):
    code = "DuplicateName"


class UnknownObjectError(BreakfastError):
    code = "UnknownObject"


class DimensionMismatchError(BreakfastError):
    code = "DimensionMismatch"


class DuplicateSetupError(BreakfastError):
    code = "DuplicateSetup"


class NoFoodItemError(BreakfastError):
    code = "NoFoodItem"


class UnknownEntryError(BreakfastError):
    code = "UnknownEntry"


class UnknownBreakfastError(BreakfastError):
    code = "UnknownBreakfast"


class EmptyMemoryError(BreakfastError):
    code = "EmptyMemory"


class SameItemError(BreakfastError):
    code = "SameItem"


class FoodUnseenError(BreakfastError):
    code = "FoodUnseen"


class UnsatisfiableError(BreakfastError):
    code = "Unsatisfiable"


class AttemptsExhaustedError(BreakfastError):
    code = "AttemptsExhausted"


class FactorizationFailureError(BreakfastError):
    code = "FactorizationFailure"


class StateLockedError(BreakfastError):
    code = "StateLocked"


class StateFormatError(BreakfastError):
    code = "StateFormat"
