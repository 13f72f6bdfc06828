from typing import Any, Dict, Optional


class StochTmplError(Exception):
    """Base class for every error raised by the package."""

    exit_code = 1

    def to_dict(self) -> Dict[str, Any]:
        return {"error": type(self).__name__, "message": str(self)}


class GameSyntaxError(StochTmplError):
    exit_code = 2

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column

    def to_dict(self) -> Dict[str, Any]:
        return {**super().to_dict(), "line": self.line, "column": self.column}


class SemanticError(StochTmplError):
    exit_code = 3

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class StructuralError(SemanticError):
    """A lasso or edge that does not exist in the game."""


class TemplateInconsistencyError(SemanticError):
    """An Even vertex of the winning set has no move left after extraction."""

    def __init__(self, message: str, vertex: int):
        super().__init__(message)
        self.vertex = vertex

    def to_dict(self) -> Dict[str, Any]:
        return {**super().to_dict(), "vertex": self.vertex}


class ParameterError(SemanticError):
    pass


class TemplateConflictError(StochTmplError):
    exit_code = 4

    def __init__(self, message: str, witness: Any):
        super().__init__(message)
        self.witness = witness

    def to_dict(self) -> Dict[str, Any]:
        witness = self.witness
        if isinstance(witness, (set, frozenset)):
            witness = sorted(list(e) for e in witness)
        elif isinstance(witness, tuple):
            witness = list(witness)
        return {**super().to_dict(), "witness": witness}


class ResourceBudgetError(StochTmplError):
    exit_code = 5
