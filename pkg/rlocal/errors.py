class RLocalError(Exception):
    """Base class for every error raised by the rlocal package."""


class GraphParseError(RLocalError):
    def __init__(self, line_number, message):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class EmptyGraphError(RLocalError):
    pass


class DisconnectedGraphError(RLocalError):
    pass


class CapExceededError(RLocalError):
    def __init__(self, cap_name, cap_value, partial=None):
        super().__init__(f"{cap_name} cap of {cap_value} exceeded")
        self.cap_name = cap_name
        self.cap_value = cap_value
        self.partial = partial


class ContractViolation(RLocalError):
    pass


class LiftError(RLocalError):
    pass


class WindowInsufficientError(RLocalError):
    pass


class ValidationFailure(RLocalError):
    def __init__(self, axiom, witness=None, message=""):
        super().__init__(message or f"{axiom} violated (witness: {witness})")
        self.axiom = axiom
        self.witness = witness
