"""
Integer difference constraints x - y <= c, decided with networkx.

A system is feasible iff its constraint graph (edge y -> x of weight c for
each x - y <= c) has no negative cycle; with integer constants a feasible
system always has an integer solution, read off from shortest distances.
"""

import logging
from typing import Dict, List, Optional, Tuple

import networkx as nx

# Initialize logger for this module
logger = logging.getLogger("constraints")

ZERO = "zero"
_SOURCE = ("__source__",)


class DifferenceSystem:
    """Collects constraints over named integer variables.

    The distinguished variable ZERO anchors absolute bounds.
    """

    def __init__(self):
        self.graph = nx.DiGraph()
        self.graph.add_node(ZERO)

    def add(self, x: str, y: str, c: int) -> None:
        """Require x - y <= c."""
        if self.graph.has_edge(y, x):
            if self.graph[y][x]["weight"] <= c:
                return
        self.graph.add_edge(y, x, weight=c)

    def lower(self, x: str, lo: Optional[int]) -> None:
        if lo is not None:
            self.add(ZERO, x, -lo)

    def upper(self, x: str, hi: Optional[int]) -> None:
        if hi is not None:
            self.add(x, ZERO, hi)

    def bounds(self, x: str, lo: Optional[int], hi: Optional[int]) -> None:
        self.graph.add_node(x)
        self.lower(x, lo)
        self.upper(x, hi)

    def gap(self, earlier: str, later: str, at_least: int) -> None:
        """Require later - earlier >= at_least."""
        self.add(earlier, later, -at_least)

    def feasible(self) -> bool:
        return not nx.negative_edge_cycle(self.graph, weight="weight")

    def solve(self) -> Optional[Dict[str, int]]:
        """An integer solution with ZERO = 0, or None if infeasible."""
        if not self.feasible():
            return None
        graph = self.graph.copy()
        for node in list(graph.nodes):
            graph.add_edge(_SOURCE, node, weight=0)
        dist = nx.single_source_bellman_ford_path_length(graph, _SOURCE, weight="weight")
        base = dist[ZERO]
        return {node: int(value - base) for node, value in dist.items()
                if node not in (_SOURCE, ZERO)}


def solve_system(constraints: List[Tuple[str, str, int]]) -> Optional[Dict[str, int]]:
    """Solve a list of (x, y, c) meaning x - y <= c."""
    system = DifferenceSystem()
    for x, y, c in constraints:
        system.add(x, y, c)
    return system.solve()
