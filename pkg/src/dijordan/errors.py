class DialgebraError(ValueError):
    """Base class for invalid input to the algebra routines."""


class NotLinearError(DialgebraError):
    """A polynomial is not of degree one in the required variable."""


class NotMultilinearError(DialgebraError):
    pass


class DegreeBoundError(DialgebraError):
    """A requested component exceeds the configured degree bound."""


class IdentityFailure(DialgebraError):
    """A structure algebra violates identities required by an operation."""


class ParseError(DialgebraError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"column {position + 1}: {message}")

    def pointer(self) -> str:
        return f"{self.text}\n{' ' * self.position}^ {self.message}"
