"""Disjoint long-cycle packing: minimal minors, an improvement engine and exact checks."""

from .certificate import PackingCertificate, verify_certificate
from .collection import CycleCollection, potential, seed_collection, validate
from .engine import Move, MoveKind, PackConfig, PackResult, apply_move, find_move, pack
from .graph import Graph, GraphError, parse_edge_list, stats
from .minimalize import ContractionHistory, lift_packing, minimalize
from .oracle import OracleBudget, Verdict, exact_pack
from .pipeline import SolveResult, solve

__version__ = "0.1.0"
