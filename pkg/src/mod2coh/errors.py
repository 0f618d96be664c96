"""Exception hierarchy shared by the algebra, catalog and DSL layers."""


class Mod2CohError(Exception):
    """Base class for every error raised by this package."""


class PresentationMismatch(Mod2CohError, ValueError):
    """Elements from different rings were combined, or an unknown generator was named."""


class InvalidPresentation(Mod2CohError, ValueError):
    """A ring presentation violates its invariants (bad truncation, illegal sq-rule, ...)."""


class RequiresHomogeneous(Mod2CohError, ValueError):
    """An operation defined on homogeneous classes received a mixed-degree element."""


class DegreeError(Mod2CohError, ValueError):
    """An element has the wrong cohomological degree for the requested operation."""


class ConfigurationError(Mod2CohError, ValueError):
    """Catalog data is inconsistent: non-surjective pullback in mode (a), rank/codim mismatch, ..."""


class ParseError(Mod2CohError):
    """Lexical or grammatical error in a task file or element literal."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
