class OntoMatchError(Exception):
    """Base class for every error raised by the package."""


class ParseError(OntoMatchError):
    """Input text does not follow the expected grammar.

    ``lineno`` is set for line-oriented formats.
    """

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class MalformedXml(ParseError):
    pass


class MissingOntologyUri(ParseError):
    pass


class DuplicateIri(ParseError):
    pass


class DanglingEdge(ParseError):
    pass


class UnknownSynset(ParseError):
    pass


class CyclicHierarchy(ParseError):
    pass


class MissingField(ParseError):
    pass


class KindMismatch(OntoMatchError):
    pass


class EmptyMatrix(OntoMatchError):
    pass
