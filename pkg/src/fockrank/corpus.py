"""Corpus ingestion and occupation-number document vectors.

A document is a bag of term counts written as the state |N1, N2, ..., Nt>
over a sorted vocabulary of t terms.  Building an index derives, once,
the collection statistics every retrieval model needs: term frequencies,
document frequencies n_i, document lengths dl, idf = log10(N / n_i), and
the t x N term-document count matrix A.  The index is immutable after
construction and safe to share between threads.

Ladder operators (creation / annihilation) act on single occupation
vectors at toy scale: "boson" vectors accept any natural count, "fermion"
vectors are restricted to counts 0 and 1.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from functools import cached_property
from math import log10, sqrt
from typing import Iterable, Optional

import numpy as np

from fockrank.errors import DuplicateDocId, EmptyCorpus, EmptyVocabulary

#: 0-based index into the sorted vocabulary.
TermId = int

BOSON = "boson"
FERMION = "fermion"

_TOKEN_RE = re.compile(r"[a-z0-9]+")


class UnknownTermWarning(UserWarning):
    """A query token absent from the corpus vocabulary was ignored."""


def tokenize(text: str) -> list[str]:
    """Lowercase ``text`` and split it on runs of non-alphanumeric characters.

    No stemming and no stopword removal: the models here rely on function
    words ("a", "of", "in") staying in the vocabulary.
    """
    return _TOKEN_RE.findall(text.lower())


@dataclass(frozen=True)
class VocabularyEntry:
    term: str
    doc_count: int  # n_i, number of documents containing the term
    idf: float      # log10(N / n_i); zero exactly when n_i == N


@dataclass(frozen=True)
class OccupationVector:
    """Term-count state |N1, ..., Nt>.

    ``kind`` selects the occupancy rule: BOSON counts are any natural
    number, FERMION counts are restricted to 0 and 1.
    """

    counts: tuple[int, ...]
    kind: str = BOSON

    def __post_init__(self):
        if self.kind not in (BOSON, FERMION):
            raise ValueError(f"unknown occupation kind: {self.kind!r}")
        if any(c < 0 for c in self.counts):
            raise ValueError("occupation counts must be non-negative")
        if self.kind == FERMION and any(c > 1 for c in self.counts):
            raise ValueError("fermion occupation counts must be 0 or 1")

    @property
    def dl(self) -> int:
        """Document length: the total token count."""
        return sum(self.counts)

    def to_array(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=np.int64)


@dataclass(frozen=True)
class LadderResult:
    """Outcome of applying a creation or annihilation operator.

    ``state`` is ``None`` when the operator annihilated the input, in
    which case the coefficient is exactly 0.
    """

    coefficient: float
    state: Optional[OccupationVector]

    @property
    def annihilated(self) -> bool:
        return self.state is None


@dataclass(frozen=True, eq=False)
class CorpusIndex:
    """Immutable corpus snapshot: vocabulary, documents and count matrix."""

    vocabulary: tuple[VocabularyEntry, ...]
    docs: tuple[tuple[str, OccupationVector], ...]
    A: np.ndarray  # t x N term-document count matrix, read-only

    @property
    def t(self) -> int:
        """Vocabulary size."""
        return len(self.vocabulary)

    @property
    def N(self) -> int:
        """Document count."""
        return len(self.docs)

    @cached_property
    def term_ids(self) -> dict[str, TermId]:
        return {entry.term: i for i, entry in enumerate(self.vocabulary)}

    @cached_property
    def idf(self) -> np.ndarray:
        arr = np.array([entry.idf for entry in self.vocabulary])
        arr.setflags(write=False)
        return arr

    @cached_property
    def doc_counts(self) -> np.ndarray:
        """n_i for every term, aligned with the vocabulary."""
        arr = np.array([entry.doc_count for entry in self.vocabulary], dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def doc_ids(self) -> tuple[str, ...]:
        return tuple(doc_id for doc_id, _ in self.docs)

    @cached_property
    def doc_lengths(self) -> tuple[int, ...]:
        return tuple(vector.dl for _, vector in self.docs)

    def term_id(self, term: str) -> Optional[TermId]:
        return self.term_ids.get(term)


def build_index(docs: Iterable[tuple[str, str]]) -> CorpusIndex:
    """Tokenize ``docs`` (pairs of id and raw text) into a CorpusIndex.

    The vocabulary is the sorted set of all tokens, which fixes a stable
    TermId for every term.  Raises EmptyCorpus, EmptyVocabulary or
    DuplicateDocId on malformed input.
    """
    pairs = [(doc_id, tokenize(text)) for doc_id, text in docs]
    if not pairs:
        raise EmptyCorpus("no documents supplied")
    seen: set[str] = set()
    for doc_id, _ in pairs:
        if doc_id in seen:
            raise DuplicateDocId(f"duplicate document id: {doc_id!r}")
        seen.add(doc_id)

    terms = sorted({tok for _, tokens in pairs for tok in tokens})
    if not terms:
        raise EmptyVocabulary("documents contain no tokens")
    ids = {term: i for i, term in enumerate(terms)}

    t, n_docs = len(terms), len(pairs)
    A = np.zeros((t, n_docs), dtype=np.int64)
    for col, (_, tokens) in enumerate(pairs):
        for tok in tokens:
            A[ids[tok], col] += 1
    A.setflags(write=False)

    doc_count = (A > 0).sum(axis=1)
    vocabulary = tuple(
        VocabularyEntry(term, int(doc_count[i]), log10(n_docs / doc_count[i]))
        for i, term in enumerate(terms)
    )
    documents = tuple(
        (doc_id, OccupationVector(tuple(int(c) for c in A[:, col])))
        for col, (doc_id, _) in enumerate(pairs)
    )
    return CorpusIndex(vocabulary=vocabulary, docs=documents, A=A)


def query_vector(index: CorpusIndex, text: str) -> OccupationVector:
    """Map query text onto the corpus vocabulary.

    Tokens outside the vocabulary are dropped; each distinct unknown token
    raises one UnknownTermWarning.
    """
    counts = [0] * index.t
    unknown: set[str] = set()
    for tok in tokenize(text):
        i = index.term_ids.get(tok)
        if i is None:
            unknown.add(tok)
        else:
            counts[i] += 1
    for tok in sorted(unknown):
        warnings.warn(f"query token {tok!r} is not in the vocabulary",
                      UnknownTermWarning, stacklevel=2)
    return OccupationVector(tuple(counts))


def left_matrix(index: CorpusIndex) -> np.ndarray:
    """Term-term Gram matrix A @ A.T (t x t, exact integers)."""
    return index.A @ index.A.T


def right_matrix(index: CorpusIndex) -> np.ndarray:
    """Document-document Gram matrix A.T @ A (N x N, exact integers)."""
    return index.A.T @ index.A


def _check_term(v: OccupationVector, i: TermId) -> None:
    if not 0 <= i < len(v.counts):
        raise IndexError(f"term id {i} out of range for a {len(v.counts)}-term state")


def _replace_count(v: OccupationVector, i: TermId, value: int) -> OccupationVector:
    counts = list(v.counts)
    counts[i] = value
    return OccupationVector(tuple(counts), v.kind)


def apply_creation(v: OccupationVector, i: TermId) -> LadderResult:
    """Add one occupation of term ``i``.

    Boson: coefficient sqrt(N_i + 1).  Fermion: coefficient sqrt(1 - N_i),
    so creating on an occupied fermion slot annihilates the state.
    """
    _check_term(v, i)
    n = v.counts[i]
    if v.kind == FERMION and n >= 1:
        return LadderResult(0.0, None)
    coefficient = 1.0 if v.kind == FERMION else sqrt(n + 1.0)
    return LadderResult(coefficient, _replace_count(v, i, n + 1))


def apply_annihilation(v: OccupationVector, i: TermId) -> LadderResult:
    """Remove one occupation of term ``i`` with coefficient sqrt(N_i).

    Annihilating an empty slot yields the annihilated marker.
    """
    _check_term(v, i)
    n = v.counts[i]
    if n == 0:
        return LadderResult(0.0, None)
    return LadderResult(sqrt(float(n)), _replace_count(v, i, n - 1))


def occupation_number(v: OccupationVector, i: TermId) -> int:
    """Return N_i, the count of term ``i`` (the number-operator eigenvalue)."""
    _check_term(v, i)
    return v.counts[i]
