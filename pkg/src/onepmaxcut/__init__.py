"""Exact maximum cuts of embedded 1-planar graphs by branching on crossings."""

from .graph import (
    ContractionRecord,
    GraphError,
    WeightedGraph,
    WeightOverflowError,
    blocks,
    contract,
    cut_value,
    delete_edge,
    split,
)
from .instance_io import InstanceParseError, parse_instance, read_instance, serialize_instance, write_instance
from .generate import GenerationError, GenParams, SplitMix64, gen_one_planar, gen_planar
from .matching import MatchingProblem, NoPerfectMatchingError, min_weight_perfect_matching
from .onep import (
    BranchTrace,
    Crossing,
    CrossingError,
    OnePlanarInstance,
    ValidationReport,
    branch,
    select_crossing,
    update,
    validate,
)
from .oracle import InstanceTooLargeError, brute_force_max_cut, classify_partition
from .planar import NonPlanarError, planar_embedding, planar_max_cut
from .solution import CutSolution, SearchStats
from .solver import InconsistentEmbeddingError, solve

__version__ = "0.1.0"

__all__ = [
    "BranchTrace",
    "ContractionRecord",
    "Crossing",
    "CrossingError",
    "CutSolution",
    "GenParams",
    "GenerationError",
    "GraphError",
    "InconsistentEmbeddingError",
    "InstanceParseError",
    "InstanceTooLargeError",
    "MatchingProblem",
    "NoPerfectMatchingError",
    "NonPlanarError",
    "OnePlanarInstance",
    "SearchStats",
    "SplitMix64",
    "ValidationReport",
    "WeightOverflowError",
    "WeightedGraph",
    "blocks",
    "branch",
    "brute_force_max_cut",
    "classify_partition",
    "contract",
    "cut_value",
    "delete_edge",
    "gen_one_planar",
    "gen_planar",
    "min_weight_perfect_matching",
    "parse_instance",
    "planar_embedding",
    "planar_max_cut",
    "read_instance",
    "select_crossing",
    "serialize_instance",
    "solve",
    "split",
    "update",
    "validate",
    "write_instance",
]
