"""Exception types shared across the package.

The split matters to callers: :class:`DomainError` and its subclasses mean
the request itself is invalid (CLI exit code 1), while
:class:`ResourceLimitError` means the request is well-formed but would blow
past a hard size guard (CLI exit code 2).
"""


class DomainError(ValueError):
    """An argument lies outside the supported domain."""


class DimensionMismatchError(DomainError):
    """Two operands act on different qubit counts."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a hard size or memory guard."""


class PauliParseError(DomainError):
    """A Pauli string label contains invalid characters.

    ``positions`` holds the zero-based offsets of every offending character.
    """

    def __init__(self, message: str, positions: tuple[int, ...] = ()):
        super().__init__(message)
        self.positions = positions


class HamiltonianParseError(DomainError):
    """A Hamiltonian document failed to parse; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line
