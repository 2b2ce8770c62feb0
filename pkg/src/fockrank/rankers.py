"""Retrieval models over a CorpusIndex: classical vector space, boolean,
probabilistic, fuzzy (min/max and algebraic), extended boolean, and
document-space expansion.

All functions are pure; every ranking comes back as a RankedList sorted by
descending score with ties broken by ascending doc id, so identical inputs
always produce identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

import numpy as np

from fockrank import boolquery
from fockrank.boolquery import And, Node, Not, Or, Term, to_dnf
from fockrank.corpus import CorpusIndex, query_vector
from fockrank.errors import (
    BadP,
    DegenerateQuery,
    EmptyDocument,
    UnsupportedQueryShape,
)

TF_IDF = "tf_idf"
GOOD_PERFORMER = "good_performer"
BINARY = "binary"

#: clamp applied to probabilities before taking log-odds
PROB_CLAMP = (0.01, 0.99)


@dataclass(frozen=True)
class RankedList:
    """Deterministically ordered (doc_id, score) pairs."""

    entries: tuple[tuple[str, float], ...]

    @classmethod
    def from_scores(cls, scores: Union[Mapping[str, float], Iterable[tuple[str, float]]]) -> "RankedList":
        items = scores.items() if isinstance(scores, Mapping) else scores
        ordered = sorted(items, key=lambda kv: (-kv[1], kv[0]))
        return cls(tuple((doc_id, float(s)) for doc_id, s in ordered))

    @property
    def doc_ids(self) -> tuple[str, ...]:
        return tuple(doc_id for doc_id, _ in self.entries)

    def score(self, doc_id: str) -> float:
        for d, s in self.entries:
            if d == doc_id:
                return s
        raise KeyError(doc_id)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True, eq=False)
class MembershipMatrix:
    """Fuzzy memberships mu[i, beta] in [0, 1], terms by documents."""

    mu: np.ndarray


@dataclass(frozen=True, eq=False)
class CorrelationMatrix:
    """Symmetric term-term correlations; ``source`` names the recipe."""

    c: np.ndarray
    source: str


@dataclass(frozen=True)
class RelevancePriors:
    """Per-term probabilities of appearing in relevant / irrelevant documents.

    Terms missing from either map fall back to the standard starting
    estimates: P(term | relevant) = 0.5 and P(term | irrelevant) = n_i / N.
    """

    p_rel: Mapping[str, float]
    p_irrel: Mapping[str, float]

    @classmethod
    def defaults(cls, index: CorpusIndex) -> "RelevancePriors":
        p_rel = {e.term: 0.5 for e in index.vocabulary}
        p_irrel = {e.term: e.doc_count / index.N for e in index.vocabulary}
        return cls(p_rel=p_rel, p_irrel=p_irrel)


# ------------------------------------------------------------ weighting

def doc_weight_matrix(index: CorpusIndex, scheme: str) -> np.ndarray:
    """Term-document weights (t x N) under the named scheme.

    tf_idf:          w = tf * idf
    good_performer:  w = (log10(tf) + 1) * idf, cosine-normalized per
                     document; terms with tf = 0 contribute nothing
    binary:          w = 1 where tf > 0
    """
    A = index.A
    if scheme == BINARY:
        return (A > 0).astype(np.float64)
    if scheme == TF_IDF:
        return A.astype(np.float64) * index.idf[:, None]
    if scheme == GOOD_PERFORMER:
        base = _log_tf(A.astype(np.float64)) * index.idf[:, None]
        norms = np.sqrt((base ** 2).sum(axis=0))
        return np.divide(base, norms[None, :],
                         out=np.zeros_like(base), where=norms > 0)
    raise ValueError(f"unknown weighting scheme: {scheme!r}")


def query_weight_vector(index: CorpusIndex, counts: np.ndarray, scheme: str) -> np.ndarray:
    """Query-side weights under the same schemes, the query treated as a
    pseudo-document for normalization."""
    counts = np.asarray(counts, dtype=np.float64)
    if scheme == BINARY:
        return (counts > 0).astype(np.float64)
    if scheme == TF_IDF:
        return counts * index.idf
    if scheme == GOOD_PERFORMER:
        base = _log_tf(counts) * index.idf
        norm = float(np.sqrt((base ** 2).sum()))
        return base / norm if norm > 0 else base
    raise ValueError(f"unknown weighting scheme: {scheme!r}")


def _log_tf(tf: np.ndarray) -> np.ndarray:
    out = np.zeros_like(tf)
    mask = tf > 0
    out[mask] = np.log10(tf[mask]) + 1.0
    return out


# ----------------------------------------------------- vector space model

def vsm_rank(index: CorpusIndex, query_text: str, scheme: str = TF_IDF,
             measure: str = "cosine") -> RankedList:
    """Cosine ranking in the weighted term space.

    SC(d, q) = sum_i w_{i,d} w_{i,q} / (|w_d| |w_q|); the cosine_squared
    measure squares that value.  Documents whose weight vector vanishes
    score 0; a query whose weights all vanish raises DegenerateQuery.
    """
    if measure not in ("cosine", "cosine_squared"):
        raise ValueError(f"unknown measure: {measure!r}")
    wq = query_weight_vector(index, query_vector(index, query_text).to_array(), scheme)
    qn = float(np.linalg.norm(wq))
    if qn == 0.0:
        raise DegenerateQuery("every query term has zero weight on this corpus")
    W = doc_weight_matrix(index, scheme)
    scores = []
    for col, doc_id in enumerate(index.doc_ids):
        d = W[:, col]
        dn = float(np.linalg.norm(d))
        sc = float(d @ wq) / (dn * qn) if dn > 0 else 0.0
        if measure == "cosine_squared":
            sc *= sc
        scores.append((doc_id, sc))
    return RankedList.from_scores(scores)


# ---------------------------------------------------------- boolean model

def boolean_select(index: CorpusIndex, ast: Node) -> list[str]:
    """Documents satisfying the boolean query over term presence (tf > 0),
    sorted by doc id."""
    selected = []
    for col, doc_id in enumerate(index.doc_ids):
        def present(term: str, _col=col) -> bool:
            i = index.term_id(term)
            return i is not None and index.A[i, _col] > 0

        if boolquery.eval_boolean(ast, present):
            selected.append(doc_id)
    return sorted(selected)


# ----------------------------------------------------- probabilistic model

def prob_rank(index: CorpusIndex, query_text: str,
              priors: Optional[RelevancePriors] = None) -> RankedList:
    """Binary-independence ranking restricted to the query's terms.

    Each query term contributes its log-odds gap
    log10(p/(1-p)) - log10(p'/(1-p')) when present in the document, with
    probabilities clamped into [0.01, 0.99] so the odds stay finite.
    """
    if priors is None:
        priors = RelevancePriors.defaults(index)
    counts = query_vector(index, query_text).to_array()
    q_terms = [int(i) for i in np.nonzero(counts)[0]]
    if not q_terms:
        raise DegenerateQuery("no query term is in the vocabulary")

    lo, hi = PROB_CLAMP
    gaps = {}
    for i in q_terms:
        entry = index.vocabulary[i]
        p_rel = min(max(priors.p_rel.get(entry.term, 0.5), lo), hi)
        p_irr = min(max(priors.p_irrel.get(entry.term, entry.doc_count / index.N), lo), hi)
        gaps[i] = math.log10(p_rel / (1.0 - p_rel)) - math.log10(p_irr / (1.0 - p_irr))

    scores = []
    for col, doc_id in enumerate(index.doc_ids):
        sc = sum(gaps[i] for i in q_terms if index.A[i, col] > 0)
        scores.append((doc_id, float(sc)))
    return RankedList.from_scores(scores)


# ------------------------------------------------------------ fuzzy model

def fuzzy_membership(index: CorpusIndex) -> MembershipMatrix:
    """Length-normalized memberships mu[i, beta] = tf / dl."""
    dl = np.array(index.doc_lengths, dtype=np.float64)
    if (dl == 0).any():
        empty = index.doc_ids[int(np.argmax(dl == 0))]
        raise EmptyDocument(f"document {empty!r} has no tokens")
    mu = index.A / dl[None, :]
    mu.setflags(write=False)
    return MembershipMatrix(mu=mu)


def keyword_correlation(index: CorpusIndex) -> CorrelationMatrix:
    """Jaccard-style keyword connections c = n_both / (n_i + n_l - n_both)."""
    present = (index.A > 0).astype(np.int64)
    both = present @ present.T
    n = index.doc_counts
    c = both / (n[:, None] + n[None, :] - both)
    c.setflags(write=False)
    return CorrelationMatrix(c=c, source="keyword_connection")


def fuzzy_membership_corr(index: CorpusIndex, corr: CorrelationMatrix) -> MembershipMatrix:
    """Correlation-propagated memberships.

    mu[i, beta] = 1 - prod over terms l present in beta of (1 - c[i, l]);
    a term present in the document gets membership exactly 1.
    """
    c = corr.c
    mu = np.empty((index.t, index.N))
    for col in range(index.N):
        present = index.A[:, col] > 0
        mu[:, col] = 1.0 - (1.0 - c[:, present]).prod(axis=1)
    mu.setflags(write=False)
    return MembershipMatrix(mu=mu)


def _membership_of(index: CorpusIndex, mu: np.ndarray, term: str, col: int) -> float:
    i = index.term_id(term)
    return float(mu[i, col]) if i is not None else 0.0


def _minmax_eval(index: CorpusIndex, mu: np.ndarray, node: Node, col: int) -> float:
    if isinstance(node, Term):
        return _membership_of(index, mu, node.name, col)
    if isinstance(node, Not):
        return 1.0 - _minmax_eval(index, mu, node.child, col)
    if isinstance(node, And):
        return min(_minmax_eval(index, mu, c, col) for c in node.children)
    if isinstance(node, Or):
        return max(_minmax_eval(index, mu, c, col) for c in node.children)
    raise TypeError(f"not a query node: {node!r}")


def fuzzy_rank_minmax(index: CorpusIndex, ast: Node,
                      mu: Optional[MembershipMatrix] = None) -> RankedList:
    """Fuzzy-set ranking with union = max, intersection = min and
    complement = 1 - mu, evaluated recursively over the query AST."""
    if mu is None:
        mu = fuzzy_membership(index)
    scores = [
        (doc_id, _minmax_eval(index, mu.mu, ast, col))
        for col, doc_id in enumerate(index.doc_ids)
    ]
    return RankedList.from_scores(scores)


def fuzzy_rank_algebraic(index: CorpusIndex, ast: Node, mu: MembershipMatrix) -> RankedList:
    """Fuzzy ranking with algebraic connectives over the query's DNF.

    Each clause scores the product of its literal memberships (negated
    literals use 1 - mu); clauses combine by the algebraic sum
    1 - prod(1 - clause).  An unsatisfiable query scores 0 everywhere.
    """
    dnf = to_dnf(ast)
    scores = []
    for col, doc_id in enumerate(index.doc_ids):
        miss = 1.0
        for clause in dnf.clauses:
            val = 1.0
            for lit in clause:
                m = _membership_of(index, mu.mu, lit.term, col)
                val *= (1.0 - m) if lit.negated else m
            miss *= 1.0 - val
        scores.append((doc_id, 1.0 - miss))
    return RankedList.from_scores(scores)


# ------------------------------------------------- extended boolean model

def _flat_terms(ast: Node) -> tuple[str, list[str]]:
    """Classify the query as a flat disjunction or conjunction of positive
    terms; anything nested or negated is unsupported."""
    if isinstance(ast, Term):
        return "or", [ast.name]
    if isinstance(ast, (And, Or)):
        names = []
        for child in ast.children:
            if not isinstance(child, Term):
                raise UnsupportedQueryShape(
                    "extended boolean queries must be a flat AND or OR of plain terms")
        names = [child.name for child in ast.children]
        return ("and" if isinstance(ast, And) else "or"), names
    raise UnsupportedQueryShape(
        "extended boolean queries must be a flat AND or OR of plain terms")


def _power_mean(values: list[float], p: float) -> float:
    # numerically stable (sum(v^p)/m)^(1/p), factoring out the maximum
    if p == math.inf:
        return max(values)
    top = max(values)
    if top == 0.0:
        return 0.0
    return top * (sum((v / top) ** p for v in values) / len(values)) ** (1.0 / p)


def extbool_rank(index: CorpusIndex, ast: Node, p: float,
                 scheme: str = BINARY) -> RankedList:
    """Extended boolean (p-norm) ranking of a flat query of m terms.

    Disjunction scores the normalized distance from the all-zeros point,
    (sum w^p / m)^(1/p); conjunction scores one minus the distance from
    the all-ones point, 1 - (sum (1-w)^p / m)^(1/p).  p = inf recovers
    plain boolean max/min.  Scheme weights are rescaled into [0, 1] by
    the corpus-wide maximum weight.
    """
    if math.isnan(p) or p < 1:
        raise BadP(f"p must be >= 1 (or inf), got {p!r}")
    mode, names = _flat_terms(ast)

    W = doc_weight_matrix(index, scheme)
    if scheme != BINARY:
        top = float(W.max())
        if top > 0:
            W = W / top

    scores = []
    for col, doc_id in enumerate(index.doc_ids):
        weights = []
        for name in names:
            i = index.term_id(name)
            weights.append(float(W[i, col]) if i is not None else 0.0)
        if mode == "or":
            sc = _power_mean(weights, p)
        else:
            sc = 1.0 - _power_mean([1.0 - w for w in weights], p)
        scores.append((doc_id, sc))
    return RankedList.from_scores(scores)


# -------------------------------------------- document-space expansion

def docspace_weights(index: CorpusIndex) -> np.ndarray:
    """Document-occupation weights for the expansion model.

    w[i, beta] = (0.5 + 0.5 tf/maxtf_i) * itf_beta, normalized so that
    sum over documents of w[i, .]^2 equals 1 for every term; itf_beta is
    log10(t / t_beta) with t_beta the document's distinct term count.
    """
    A = index.A.astype(np.float64)
    distinct = (index.A > 0).sum(axis=0)
    if (distinct == 0).any():
        empty = index.doc_ids[int(np.argmax(distinct == 0))]
        raise EmptyDocument(f"document {empty!r} has no tokens")
    itf = np.log10(index.t / distinct.astype(np.float64))
    max_tf = A.max(axis=1)
    base = (0.5 + 0.5 * A / max_tf[:, None]) * itf[None, :]
    norms = np.sqrt((base ** 2).sum(axis=1))
    return np.divide(base, norms[:, None], out=np.zeros_like(base), where=norms[:, None] > 0)


def docspace_correlation(index: CorpusIndex) -> CorrelationMatrix:
    """Term-term correlations as inner products of document-occupation
    weight rows: c = W W^T, unit diagonal by construction."""
    W = docspace_weights(index)
    c = W @ W.T
    c.setflags(write=False)
    return CorrelationMatrix(c=c, source="docspace")


def docspace_rank(index: CorpusIndex, query_text: str) -> RankedList:
    """Rank by expanding query terms through document-space correlations.

    SC(q, d) = sum over query terms u of (sum over query terms v of
    w_{v,q} c[v, u]) * w[u, d], the query weighted as a pseudo-document:
    w_{u,q} = (0.5 + 0.5 tf_q/maxtf_q) * log10(t / t_q).
    """
    counts = query_vector(index, query_text).to_array().astype(np.float64)
    q_ids = np.nonzero(counts)[0]
    if q_ids.size == 0:
        raise DegenerateQuery("no query term is in the vocabulary")

    itf_q = math.log10(index.t / q_ids.size)
    max_tf_q = float(counts[q_ids].max())
    wq = (0.5 + 0.5 * counts[q_ids] / max_tf_q) * itf_q

    W = docspace_weights(index)
    c = docspace_correlation(index).c
    expanded = wq @ c[np.ix_(q_ids, q_ids)]  # query-term inner products
    sc = expanded @ W[q_ids, :]
    scores = [(doc_id, float(sc[col])) for col, doc_id in enumerate(index.doc_ids)]
    return RankedList.from_scores(scores)
