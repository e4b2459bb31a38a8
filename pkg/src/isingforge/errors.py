"""Exception types shared across the toolchain."""


class IsingForgeError(Exception):
    """Base class for all isingforge errors."""


class InvalidSize(IsingForgeError, ValueError):
    """Qubit count out of range for the requested topology or operation."""


class DimensionMismatch(IsingForgeError, ValueError):
    """Configuration, state, or parameter length does not match the model."""


class TooLarge(IsingForgeError, ValueError):
    """Problem size exceeds the desk-scale enumeration or simulation bound."""


class ModelSyntaxError(IsingForgeError, ValueError):
    """Malformed document text; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class ValidationError(IsingForgeError, ValueError):
    """A document or model value violates its contract."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message


class UnknownTopology(IsingForgeError, ValueError):
    """An edge set matches none of the known entanglement patterns."""

    def __init__(self, edges):
        self.edges = frozenset(edges)
        super().__init__(f"edge set matches no known topology: {sorted(self.edges)}")


class NotRepresentable(IsingForgeError, ValueError):
    """A PSM cannot be lifted to the uniform-constant PIM form."""


class MissingFieldTerm(NotRepresentable):
    """A gate PSM lacks an explicit Z term for some qubit."""

    def __init__(self, qubit: int):
        self.qubit = qubit
        super().__init__(
            f"no Z term for qubit {qubit}; zero fields must be written explicitly"
        )


class EmptySampleSet(IsingForgeError, ValueError):
    """Asked for the best record of a sample set with no records."""
