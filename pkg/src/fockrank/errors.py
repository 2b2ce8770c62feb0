"""Exception hierarchy shared across the package.

CLI exit-code mapping: query/usage problems exit 2, corpus/data problems
exit 3 (see cli.py).
"""


class FockrankError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------- corpus

class EmptyCorpus(FockrankError):
    """No documents were supplied."""


class EmptyVocabulary(FockrankError):
    """The supplied documents contain no tokens."""


class DuplicateDocId(FockrankError):
    """Two documents share the same id."""


class CorpusFormatError(FockrankError):
    """A corpus file could not be parsed."""


# ------------------------------------------------------------- boolquery

class QuerySyntaxError(FockrankError):
    """A query string violates the boolean grammar.

    ``offset`` is the byte offset of the offending position in the
    lowercased UTF-8 encoding of the input.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"syntax error at byte {offset}: {message}")
        self.offset = offset


class ClauseExplosion(FockrankError):
    """DNF conversion would exceed the clause budget."""


# -------------------------------------------------------------- eigenkit

class NoConvergence(FockrankError):
    """The eigensolver did not reach its tolerance within the sweep cap."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class RankDeficient(FockrankError):
    """No eigenvalue survived the zero cutoff (e.g. a zero matrix)."""


class BadRank(FockrankError):
    """A requested rank is outside the valid range."""


# --------------------------------------------------------------- rankers

class DegenerateQuery(FockrankError):
    """The query carries no usable weight on this corpus."""


class EmptyDocument(FockrankError):
    """A document with zero length reached a length-normalized model."""


class UnsupportedQueryShape(FockrankError):
    """The extended-boolean model only accepts flat positive AND/OR queries."""


class BadP(FockrankError):
    """The Minkowski order p must satisfy p >= 1."""


# ------------------------------------------------------------- lsimetric

class NullVector(FockrankError):
    """A vector has zero norm under the metric (lies in its null space)."""


class DimensionMismatch(FockrankError):
    """Operands do not share the required dimensions."""
