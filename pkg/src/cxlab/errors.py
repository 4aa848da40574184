"""Exception taxonomy shared by the library and the CLI exit codes."""


class CxlabError(Exception):
    """Base class for all library errors."""


class InputError(CxlabError, ValueError):
    """Malformed input: empty simplex, unknown vertex, bad matrix, ..."""


class FaceCapExceeded(CxlabError):
    """An enumeration would exceed the configured face-count cap."""

    def __init__(self, what, cap):
        super().__init__(f"{what} exceeds the face cap of {cap}")
        self.cap = cap


class ConditionFailure(CxlabError):
    """The input does not satisfy a hypothesis the operation needs.

    ``witness`` is a JSON-friendly description that can be re-checked.
    """

    def __init__(self, condition, witness):
        super().__init__(f"{condition} condition fails: {witness}")
        self.condition = condition
        self.witness = witness


class TheoremViolation(CxlabError):
    """A property that holds for every finite complex was observed to fail.

    Always indicates a bug in this package.
    """

    def __init__(self, statement, witness):
        super().__init__(f"violated: {statement}; witness {witness}")
        self.statement = statement
        self.witness = witness
