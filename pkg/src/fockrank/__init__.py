"""fockrank: occupation-number document vectors ranked under classical,
fuzzy, extended-boolean, probabilistic, document-space and latent-semantic
retrieval models, with an SVD-derived metric tensor for ranking, distances
and clustering."""

__version__ = "0.1.0"

from fockrank._jacobi import JACOBI_BACKEND
from fockrank.boolquery import DnfQuery, eval_boolean, parse, print_query, to_dnf
from fockrank.corpus import (
    CorpusIndex,
    OccupationVector,
    apply_annihilation,
    apply_creation,
    build_index,
    left_matrix,
    occupation_number,
    query_vector,
    right_matrix,
    tokenize,
)
from fockrank.eigenkit import (
    EigenDecomposition,
    SvdFactors,
    SymmetricMatrix,
    jacobi_eigen,
    svd_via_gram,
    truncate,
)
from fockrank.lsimetric import (
    ClusterAssignment,
    DistanceMatrix,
    MetricTensor,
    cluster_by_ron,
    distance_matrix,
    lsi_rank,
    lsi_sc,
    metric_inner,
    metric_tensor,
    sphere_distance,
    sphere_map,
)
from fockrank.rankers import (
    MembershipMatrix,
    RankedList,
    RelevancePriors,
    boolean_select,
    docspace_rank,
    extbool_rank,
    fuzzy_membership,
    fuzzy_membership_corr,
    fuzzy_rank_algebraic,
    fuzzy_rank_minmax,
    keyword_correlation,
    prob_rank,
    vsm_rank,
)

__all__ = [
    "JACOBI_BACKEND",
    "__version__",
    # corpus
    "CorpusIndex", "OccupationVector", "build_index", "tokenize", "query_vector",
    "left_matrix", "right_matrix", "apply_creation", "apply_annihilation",
    "occupation_number",
    # boolquery
    "parse", "print_query", "eval_boolean", "to_dnf", "DnfQuery",
    # eigenkit
    "SymmetricMatrix", "EigenDecomposition", "SvdFactors",
    "jacobi_eigen", "svd_via_gram", "truncate",
    # rankers
    "RankedList", "RelevancePriors", "MembershipMatrix",
    "vsm_rank", "boolean_select", "prob_rank", "fuzzy_membership",
    "fuzzy_rank_minmax", "keyword_correlation", "fuzzy_membership_corr",
    "fuzzy_rank_algebraic", "extbool_rank", "docspace_rank",
    # lsimetric
    "MetricTensor", "DistanceMatrix", "ClusterAssignment",
    "metric_tensor", "metric_inner", "lsi_sc", "lsi_rank",
    "sphere_map", "sphere_distance", "distance_matrix", "cluster_by_ron",
]
