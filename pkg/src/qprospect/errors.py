"""Exception hierarchy shared across the engine."""


class QProspectError(Exception):
    """Base class for all engine errors."""


class ValidationError(QProspectError):
    """Bad user input: out-of-range index, wrong length, zero vector, ..."""


class StructureError(QProspectError):
    """Objects from incompatible structures were combined (ring/space mismatch)."""


class DegenerateLatticeError(QProspectError):
    """Strategic state is orthogonal to every prospect in the lattice."""


class ProblemSyntaxError(ValidationError):
    """Problem document is not well-formed JSON."""

    def __init__(self, msg, line=None, column=None):
        super().__init__(msg)
        self.line = line
        self.column = column


class ProblemSemanticError(ValidationError):
    """Problem document parsed but failed semantic validation.

    `path` locates the offending field, e.g. "prospects[1].amplitudes".
    """

    def __init__(self, msg, path):
        super().__init__(f"{path}: {msg}")
        self.path = path
