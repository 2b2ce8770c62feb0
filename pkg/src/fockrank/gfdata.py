"""The bundled worked example: the three-document "shipment of gold"
collection of Grossman and Frieder, plus the reference values the
``reproduce-gf`` command checks against.

Reference matrices are quoted at the 4-decimal precision of their source;
the comparison tolerances in cli.reproduce live alongside the checks.
"""

GF_DOCS: tuple[tuple[str, str], ...] = (
    ("d1", "Shipment of gold damaged in a fire"),
    ("d2", "Delivery of silver arrived in a silver truck"),
    ("d3", "Shipment of gold arrived in a truck"),
)

GF_QUERY = "gold silver truck"

GF_BOOLEAN_QUERY = "gold & shipment & !fire"

GF_FUZZY_QUERY = "(gold | silver) & truck"

GF_VOCABULARY = (
    "a", "arrived", "damaged", "delivery", "fire", "gold",
    "in", "of", "shipment", "silver", "truck",
)

#: idf per vocabulary term, rounded to 3 decimals
GF_IDF_3DP = (0.0, 0.176, 0.477, 0.477, 0.477, 0.176, 0.0, 0.0, 0.176, 0.477, 0.176)

#: fuzzy membership mu = tf / dl per document, rounded to 3 decimals
GF_MEMBERSHIP_3DP = {
    "d1": (0.143, 0.0, 0.143, 0.0, 0.143, 0.143, 0.143, 0.143, 0.143, 0.0, 0.0),
    "d2": (0.125, 0.125, 0.0, 0.125, 0.0, 0.0, 0.125, 0.125, 0.0, 0.25, 0.125),
    "d3": (0.143, 0.143, 0.0, 0.0, 0.0, 0.143, 0.143, 0.143, 0.143, 0.0, 0.143),
}

#: min/max fuzzy scores for GF_FUZZY_QUERY, rounded to 3 decimals
GF_FUZZY_SCORES_3DP = {"d1": 0.0, "d2": 0.125, "d3": 0.143}

GF_LEFT_MATRIX = (
    (3, 2, 1, 1, 1, 2, 3, 3, 2, 2, 2),
    (2, 2, 0, 1, 0, 1, 2, 2, 1, 2, 2),
    (1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 0),
    (1, 1, 0, 1, 0, 0, 1, 1, 0, 2, 1),
    (1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 0),
    (2, 1, 1, 0, 1, 2, 2, 2, 2, 0, 1),
    (3, 2, 1, 1, 1, 2, 3, 3, 2, 2, 2),
    (3, 2, 1, 1, 1, 2, 3, 3, 2, 2, 2),
    (2, 1, 1, 0, 1, 2, 2, 2, 2, 0, 1),
    (2, 2, 0, 2, 0, 0, 2, 2, 0, 4, 2),
    (2, 2, 0, 1, 0, 1, 2, 2, 1, 2, 2),
)

GF_SINGULAR_VALUES = (4.0989, 2.3616, 1.2737)

GF_METRIC_R3 = (
    (0.0127, -0.0067, 0.0195, 0.0055, 0.0195, 0.0072, 0.0127, 0.0127, 0.0072, 0.011, -0.0067),
    (-0.0067, 0.1149, -0.1217, -0.0366, -0.1217, 0.0299, -0.0067, -0.0067, 0.0299, -0.0733, 0.1149),
    (0.0195, -0.1217, 0.1412, 0.0421, 0.1412, -0.0226, 0.0195, 0.0195, -0.0226, 0.0844, -0.1217),
    (0.0055, -0.0366, 0.0421, 0.0428, 0.0421, -0.0373, 0.0055, 0.0055, -0.0373, 0.0857, -0.0366),
    (0.0195, -0.1217, 0.1412, 0.0421, 0.1412, -0.0226, 0.0195, 0.0195, -0.0226, 0.0844, -0.1217),
    (0.0072, 0.0299, -0.0226, -0.0373, -0.0226, 0.0446, 0.0072, 0.0072, 0.0446, -0.0747, 0.0299),
    (0.0127, -0.0067, 0.0195, 0.0055, 0.0195, 0.0072, 0.0127, 0.0127, 0.0072, 0.011, -0.0067),
    (0.0127, -0.0067, 0.0195, 0.0055, 0.0195, 0.0072, 0.0127, 0.0127, 0.0072, 0.011, -0.0067),
    (0.0072, 0.0299, -0.0226, -0.0373, -0.0226, 0.0446, 0.0072, 0.0072, 0.0446, -0.0747, 0.0299),
    (0.011, -0.0733, 0.0844, 0.0857, 0.0844, -0.0747, 0.011, 0.011, -0.0747, 0.1716, -0.0733),
    (-0.0067, 0.1149, -0.1217, -0.0366, -0.1217, 0.0299, -0.0067, -0.0067, 0.0299, -0.0733, 0.1149),
)

GF_METRIC_R2 = (
    (0.0114, 0.0047, 0.0066, -0.0001, 0.0066, 0.0116, 0.0114, 0.0114, 0.0116, -0.0002, 0.0047),
    (0.0047, 0.0125, -0.0077, 0.0137, -0.0077, -0.0089, 0.0047, 0.0047, -0.0089, 0.0274, 0.0125),
    (0.0066, -0.0077, 0.0144, -0.0138, 0.0144, 0.0205, 0.0066, 0.0066, 0.0205, -0.0277, -0.0077),
    (-0.0001, 0.0137, -0.0138, 0.018, -0.0138, -0.0182, -0.0001, -0.0001, -0.0182, 0.0361, 0.0137),
    (0.0066, -0.0077, 0.0144, -0.0138, 0.0144, 0.0205, 0.0066, 0.0066, 0.0205, -0.0277, -0.0077),
    (0.0116, -0.0089, 0.0205, -0.0182, 0.0205, 0.0298, 0.0116, 0.0116, 0.0298, -0.0365, -0.0089),
    (0.0114, 0.0047, 0.0066, -0.0001, 0.0066, 0.0116, 0.0114, 0.0114, 0.0116, -0.0002, 0.0047),
    (0.0114, 0.0047, 0.0066, -0.0001, 0.0066, 0.0116, 0.0114, 0.0114, 0.0116, -0.0002, 0.0047),
    (0.0116, -0.0089, 0.0205, -0.0182, 0.0205, 0.0298, 0.0116, 0.0116, 0.0298, -0.0365, -0.0089),
    (-0.0002, 0.0274, -0.0277, 0.0362, -0.0277, -0.0365, -0.0002, -0.0002, -0.0365, 0.0724, 0.0274),
    (0.0047, 0.0125, -0.0077, 0.0137, -0.0077, -0.0089, 0.0047, 0.0047, -0.0089, 0.0274, 0.0125),
)

#: reference left eigenvector components (absolute values compared)
GF_TERM_FACTOR_1 = (
    0.4201, 0.2995, 0.1206, 0.1576, 0.1206, 0.2626, 0.4201, 0.4201, 0.2626, 0.3151, 0.2995,
)

GF_LSI_SC_R3 = {"d1": -0.2787, "d2": 0.7690, "d3": 0.5756}
GF_LSI_SC_R2 = {"d1": -0.0552, "d2": 0.9912, "d3": 0.4480}
GF_LSI_ORDER = ("d2", "d3", "d1")

#: unit-sphere chord distances at rank 2; the q-d1 entry is internally
#: inconsistent with the reference similarity values (see README)
GF_DISTANCES_R2 = {
    ("q", "d1"): 1.4547,
    ("q", "d2"): 0.1326,
    ("q", "d3"): 1.0507,
    ("d1", "d2"): 1.5422,
    ("d1", "d3"): 0.5140,
    ("d2", "d3"): 1.1638,
}

GF_CLUSTERS_RON_052 = (("d1", "d3"), ("d2", "q"))
GF_CLUSTERS_RON_02 = (("d1",), ("d2", "q"), ("d3",))
