"""Exception hierarchy shared by every module."""


class RaagError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class GraphError(RaagError):
    pass


class WordError(RaagError):
    pass


class PreconditionError(RaagError):
    pass


class CapExceeded(RaagError):
    """A radius or dimension exceeded the configured cap."""


class NonGeodesicRay(RaagError):
    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"ray prefix is not geodesic at vertex {index}")


class HorizonInsufficient(RaagError):
    """The configured horizon cannot settle the question (CLI exit status 2)."""


class ComplexError(RaagError):
    pass


class NotNPC(ComplexError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("complex is not nonpositively curved: " + "; ".join(self.problems))


class NotSpecial(ComplexError):
    pass


class MapError(ComplexError):
    pass


class MalformedInput(Exception):
    """Input file or argument could not be parsed (CLI exit status 3)."""
