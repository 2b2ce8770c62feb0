"""SVD-derived metric tensor: latent-semantic ranking, unit-sphere
distances, and radius-based clustering.

From the reduced factors of the term-document matrix, the metric

    g = sum over retained factors a of  (1 / S_a^2) u_a u_a^T

turns raw occupation vectors into latent-space geometry: x^T g y equals
the Euclidean inner product of the rank-reduced vectors whose a-th
component is <x, u_a> / S_a.  Ranking uses the metric cosine, which can
be negative.  For clustering, vectors are rescaled to unit metric norm,
placing them on a sphere where the chord distance
sqrt(2 - 2 x^T g y) = 2 |sin(theta / 2)| applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from typing import Optional, Sequence, Union

import numpy as np

from fockrank.corpus import CorpusIndex, OccupationVector, query_vector
from fockrank.eigenkit import SvdFactors, svd_via_gram
from fockrank.errors import BadRank, DegenerateQuery, DimensionMismatch, NullVector
from fockrank.rankers import RankedList


@dataclass(frozen=True, eq=False)
class MetricTensor:
    """Symmetric positive-semidefinite t x t metric built from SVD factors."""

    g: np.ndarray
    rank: int
    singular_values: tuple[float, ...]


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Labeled, exactly symmetric matrix of unit-sphere chord distances."""

    labels: tuple[str, ...]
    d: np.ndarray

    def value(self, x: str, y: str) -> float:
        i, j = self.labels.index(x), self.labels.index(y)
        return float(self.d[i, j])


@dataclass(frozen=True)
class ClusterAssignment:
    """Partition of point labels into neighborhood-connected components."""

    clusters: tuple[tuple[str, ...], ...]
    ron: float


def metric_tensor(factors: SvdFactors, r: Optional[int] = None) -> MetricTensor:
    """Build g = sum_a (1/S_a^2) u_a u_a^T from the first ``r`` factors."""
    if r is None:
        r = factors.r
    if not isinstance(r, (int, np.integer)) or not 1 <= r <= factors.r:
        raise BadRank(f"rank must lie in [1, {factors.r}], got {r!r}")
    r = int(r)
    U = factors.U[:, :r]
    S = factors.S[:r]
    g = (U / S ** 2) @ U.T
    g = (g + g.T) * 0.5  # exact symmetry
    g.setflags(write=False)
    return MetricTensor(g=g, rank=r, singular_values=tuple(float(s) for s in S))


def _as_vector(x: Union[OccupationVector, np.ndarray, Sequence[float]]) -> np.ndarray:
    if isinstance(x, OccupationVector):
        return x.to_array().astype(np.float64)
    return np.asarray(x, dtype=np.float64)


def _tensor(g: Union[MetricTensor, np.ndarray]) -> np.ndarray:
    return g.g if isinstance(g, MetricTensor) else np.asarray(g, dtype=np.float64)


def metric_inner(g: Union[MetricTensor, np.ndarray], x, y) -> float:
    """Inner product x^T g y."""
    G = _tensor(g)
    xv, yv = _as_vector(x), _as_vector(y)
    if xv.shape != yv.shape or xv.shape[0] != G.shape[0]:
        raise DimensionMismatch(
            f"metric of order {G.shape[0]} cannot pair vectors of shapes "
            f"{xv.shape} and {yv.shape}")
    return float(xv @ G @ yv)


def lsi_sc(g: Union[MetricTensor, np.ndarray], d, q) -> float:
    """Metric cosine SC = x^T g y / sqrt(x^T g x) / sqrt(y^T g y).

    May be negative; raises NullVector when either argument has no mass
    under the metric.
    """
    dd = metric_inner(g, d, d)
    qq = metric_inner(g, q, q)
    if dd <= 0.0 or qq <= 0.0:
        raise NullVector("vector has zero norm under the metric")
    return metric_inner(g, d, q) / (sqrt(dd) * sqrt(qq))


def reduced_vector(factors: SvdFactors, x, r: Optional[int] = None) -> np.ndarray:
    """Rank-reduced coordinates: component a is <x, u_a> / S_a.

    Euclidean inner products of these vectors reproduce metric_inner of
    the originals, which is the property tests pin down.
    """
    if r is None:
        r = factors.r
    if not 1 <= r <= factors.r:
        raise BadRank(f"rank must lie in [1, {factors.r}], got {r!r}")
    xv = _as_vector(x)
    return (factors.U[:, :r].T @ xv) / factors.S[:r]


def lsi_rank(index: CorpusIndex, query_text: str,
             r: Union[int, str] = "auto") -> RankedList:
    """Full pipeline: count matrix, Gram-side SVD, metric tensor, metric
    cosine per document."""
    q = query_vector(index, query_text).to_array()
    if not q.any():
        raise DegenerateQuery("no query term is in the vocabulary")
    factors = svd_via_gram(index.A, r)
    g = metric_tensor(factors)
    scores = [
        (doc_id, lsi_sc(g, index.A[:, col], q))
        for col, doc_id in enumerate(index.doc_ids)
    ]
    return RankedList.from_scores(scores)


def sphere_map(g: Union[MetricTensor, np.ndarray], vectors) -> list[np.ndarray]:
    """Rescale each vector to unit metric norm, v = x / sqrt(x^T g x)."""
    out = []
    for x in vectors:
        xv = _as_vector(x)
        norm_sq = metric_inner(g, xv, xv)
        if norm_sq <= 0.0:
            raise NullVector("vector has zero norm under the metric")
        out.append(xv / sqrt(norm_sq))
    return out


def sphere_distance(g: Union[MetricTensor, np.ndarray], v1, v2) -> float:
    """Chord distance sqrt(2 - 2 v1^T g v2) between unit-norm points.

    The inner product is clamped to [-1, 1] so rounding noise cannot push
    the result outside [0, 2].
    """
    inner = metric_inner(g, v1, v2)
    inner = min(1.0, max(-1.0, inner))
    return sqrt(2.0 - 2.0 * inner)


def distance_matrix(g: Union[MetricTensor, np.ndarray],
                    labeled_vectors: Sequence[tuple[str, object]]) -> DistanceMatrix:
    """Map labeled vectors to the unit sphere and tabulate pairwise chord
    distances; the result is bitwise symmetric with a zero diagonal."""
    labels = tuple(label for label, _ in labeled_vectors)
    points = sphere_map(g, [vec for _, vec in labeled_vectors])
    n = len(points)
    d = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            dist = sphere_distance(g, points[i], points[j])
            d[i, j] = dist
            d[j, i] = dist
    d.setflags(write=False)
    return DistanceMatrix(labels=labels, d=d)


def cluster_by_ron(dm: DistanceMatrix, ron: float) -> ClusterAssignment:
    """Group points whose radius-``ron`` neighborhoods intersect.

    Two balls of radius ron intersect exactly when their centers are at
    most 2 * ron apart, so clusters are the connected components of that
    graph.  Components are listed by their smallest member label.
    """
    if ron < 0:
        raise ValueError(f"ron must be non-negative, got {ron!r}")
    n = len(dm.labels)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if dm.d[i, j] <= 2.0 * ron:
                parent[find(i)] = find(j)

    groups: dict[int, list[str]] = {}
    for i, label in enumerate(dm.labels):
        groups.setdefault(find(i), []).append(label)
    clusters = sorted((tuple(sorted(members)) for members in groups.values()),
                      key=lambda c: c[0])
    return ClusterAssignment(clusters=tuple(clusters), ron=float(ron))
