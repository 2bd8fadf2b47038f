"""Mostar index laboratory: exact computation, extremal families and exhaustive claim checks."""

__version__ = "0.1.0"

from .errors import (DegenerateFamily, EmptyClass, Graph6Error, InvalidEdge, InvalidMove, MostarLabError,
                     NotABridge, NotAnEdge, NotConnected, NotPendant, OutOfRange, PendantBridge)
from .graph import (INFINITE, Edge, Graph, bridges, cyclomatic_number, decode_graph6, distances_from,
                    encode_graph6, graph_from_edges, is_connected, pendant_vertices)
from .mostar import BridgeBalance, EdgeContribution, bridge_balance, contribution_profile, edge_contribution, mostar_index
