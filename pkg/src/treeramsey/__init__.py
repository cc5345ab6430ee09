"""Monochromatic tree replicas, claws and regular polygons in Z2*Z2*Z2."""

from .bounds import Order, Overflow, Tower, compare_tower, m_bound, n_bound, tower_upper_bound
from .claws import ClawCertificate, UnsupportedCase, find_mono_claw
from .colorings import Coloring, ColoringError, parse_coloring, serialize_coloring
from .oracle import exhaustive_find_replica, min_n_oracle
from .polygon import Polygon, construct_gon, validate_polygon
from .search import (
    BudgetExhausted,
    PreconditionError,
    ReplicaCertificate,
    SearchBudget,
    SearchError,
    find_mono_binary_replica,
)
from .trees import Claw, FiniteTree, ReplicaMap, TreeKind, make_tree, validate_claw, validate_replica

__version__ = "0.1.0"
