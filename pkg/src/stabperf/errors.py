"""Exception types shared across the package."""


class StabperfError(Exception):
    """Base class for all stabperf errors."""


class PauliParseError(StabperfError, ValueError):
    """Raised when a Pauli string contains an invalid character."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class CodeValidationError(StabperfError, ValueError):
    """Raised when a stabilizer code fails its structural checks."""


class CodeFileError(StabperfError, ValueError):
    """Raised on malformed .stab files; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class EnumerationCapError(StabperfError, ValueError):
    """Raised when a group enumeration would exceed the configured cap."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


class BudgetError(StabperfError, ValueError):
    """Raised when an exhaustive sweep exceeds its decode budget."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


class GeometryError(StabperfError, ValueError):
    """Raised when a decoder needs lattice geometry the code does not carry."""


class ConsistencyError(StabperfError, ArithmeticError):
    """Raised when exact arithmetic detects inconsistent inputs."""
