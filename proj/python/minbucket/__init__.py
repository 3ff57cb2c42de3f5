"""MinBucket triangle enumeration on random power-law graphs."""

from ._core import (
    DegreeSequence,
    Graph,
    IoError,
    ParameterError,
    ParseError,
    ResourceError,
    TruncationError,
    UsageError,
    enumerate_triangles,
    generate_graph,
    limit_constant,
    minbucket_bound,
    oracle_triangles,
    power_law_sequence,
    run_experiment,
    sample_iid_degrees,
    trivial_bound,
)

__all__ = [
    "DegreeSequence",
    "Graph",
    "IoError",
    "ParameterError",
    "ParseError",
    "ResourceError",
    "TruncationError",
    "UsageError",
    "enumerate_triangles",
    "generate_graph",
    "limit_constant",
    "minbucket_bound",
    "oracle_triangles",
    "power_law_sequence",
    "run_experiment",
    "sample_iid_degrees",
    "trivial_bound",
]
