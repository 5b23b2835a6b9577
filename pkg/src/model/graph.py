"""
Graph views of an interpretation: the undirected Gaifman graph and the
directed role graph, with reachability and shortest-path distances.
"""
from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, Optional

import networkx as nx

from model.interpretation import Element, Interpretation


def gaifman_graph(i: Interpretation) -> nx.Graph:
    """Undirected graph on the domain; an edge joins any two elements some role connects."""
    g = nx.Graph()
    g.add_nodes_from(i.domain)
    for ext in i.role_ext.values():
        g.add_edges_from(ext)
    return g


def role_graph(i: Interpretation, roles: Optional[Iterable[str]] = None) -> nx.DiGraph:
    """Directed graph on the domain over the given roles (all roles when omitted)."""
    selected = i.role_ext.keys() if roles is None else roles
    g = nx.DiGraph()
    g.add_nodes_from(i.domain)
    for role in selected:
        g.add_edges_from(i.role_ext.get(role, ()))
    return g


def reachable(i: Interpretation, start: Element) -> FrozenSet[Element]:
    """Elements connected to `start` in the Gaifman graph, including `start`."""
    i.require_element(start)
    return frozenset(nx.node_connected_component(gaifman_graph(i), start))


def forward_reachable(i: Interpretation, start: Element,
                      roles: Optional[Iterable[str]] = None) -> FrozenSet[Element]:
    """Elements reachable from `start` along directed role edges, including `start`."""
    i.require_element(start)
    return frozenset(nx.descendants(role_graph(i, roles), start) | {start})


def gaifman_distances(i: Interpretation, start: Element) -> Dict[Element, int]:
    i.require_element(start)
    return dict(nx.single_source_shortest_path_length(gaifman_graph(i), start))


def forward_distances(i: Interpretation, start: Element,
                      roles: Optional[Iterable[str]] = None) -> Dict[Element, int]:
    i.require_element(start)
    return dict(nx.single_source_shortest_path_length(role_graph(i, roles), start))
