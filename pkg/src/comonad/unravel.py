"""
Depth-k unravelling of a pointed interpretation.

Nodes are the alternating sequences [a0, r0, a1, ..., rn-1, an] with a0 the
point, (a_i, a_{i+1}) in r_i and n <= k. A node inherits the concept names
of its last element; the only role edges join a node to its one-step
extensions. The tree order is the prefix order.

Node identifiers in the induced interpretation are the path strings
`a0/r0/a1/...`; '/' and '%' inside names are percent-escaped.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from errors import UnboundedDepthError
from model.interpretation import Element, Interpretation, PointedInterpretation, reduct
from model.vocabulary import Vocabulary
from utils.tracing import span

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class UnravelNode:
    seq: Tuple[str, ...]

    @property
    def last(self) -> Element:
        return self.seq[-1]

    @property
    def first(self) -> Element:
        return self.seq[0]

    @property
    def depth(self) -> int:
        return (len(self.seq) - 1) // 2

    @property
    def roles(self) -> Tuple[str, ...]:
        return self.seq[1::2]

    @property
    def elements(self) -> Tuple[Element, ...]:
        return self.seq[0::2]

    @property
    def parent(self) -> Optional["UnravelNode"]:
        return UnravelNode(self.seq[:-2]) if len(self.seq) > 1 else None

    @property
    def incoming_role(self) -> Optional[str]:
        return self.seq[-2] if len(self.seq) > 1 else None

    def extend(self, role: str, element: Element) -> "UnravelNode":
        return UnravelNode(self.seq + (role, element))

    def prefixes(self) -> List["UnravelNode"]:
        """Every alternating prefix, root first, the node itself last."""
        return [UnravelNode(self.seq[:n]) for n in range(1, len(self.seq) + 1, 2)]

    def is_prefix_of(self, other: "UnravelNode") -> bool:
        return other.seq[:len(self.seq)] == self.seq


def _escape(part: str) -> str:
    return part.replace("%", "%25").replace("/", "%2F")


def render_node_id(node: UnravelNode) -> str:
    return "/".join(_escape(x) for x in node.seq)


def parse_node_id(text: str) -> UnravelNode:
    return UnravelNode(tuple(x.replace("%2F", "/").replace("%25", "%") for x in text.split("/")))


@dataclass(frozen=True)
class UnravelTree:
    source: PointedInterpretation
    depth: int
    nodes: Tuple[UnravelNode, ...]
    children: Dict[UnravelNode, Tuple[UnravelNode, ...]] = field(compare=False)

    @property
    def root(self) -> UnravelNode:
        return UnravelNode((self.source.point,))

    @property
    def point(self) -> UnravelNode:
        return self.root

    @cached_property
    def node_set(self) -> FrozenSet[UnravelNode]:
        return frozenset(self.nodes)

    def __contains__(self, node: UnravelNode) -> bool:
        return node in self.node_set

    def __len__(self) -> int:
        return len(self.nodes)

    def successors(self, node: UnravelNode) -> Tuple[UnravelNode, ...]:
        return self.children.get(node, ())

    def precedes(self, s: UnravelNode, t: UnravelNode) -> bool:
        """Prefix order: s <= t."""
        return s.is_prefix_of(t)

    def branches(self) -> Iterator[UnravelNode]:
        """Maximal nodes."""
        return (n for n in self.nodes if not self.children.get(n))

    @cached_property
    def interp(self) -> Interpretation:
        src = self.source.interp
        ids = {n: render_node_id(n) for n in self.nodes}
        concepts: Dict[str, set] = {c: set() for c in src.vocab.concepts}
        roles: Dict[str, set] = {r: set() for r in src.vocab.roles}
        for n in self.nodes:
            for c in src.labels(n.last):
                concepts.setdefault(c, set()).add(ids[n])
            parent = n.parent
            if parent is not None:
                roles[n.incoming_role].add((ids[parent], ids[n]))
        # individuals are not carried into the tree
        vocab = Vocabulary(frozenset(), src.vocab.concepts, src.vocab.roles)
        return Interpretation(frozenset(ids.values()), {}, concepts, roles, vocab)

    def as_pointed(self) -> PointedInterpretation:
        return PointedInterpretation(self.interp, render_node_id(self.root))

    def source_reduct(self) -> PointedInterpretation:
        """The source forgotten down to the tree vocabulary, at its point."""
        return PointedInterpretation(reduct(self.source.interp, self.interp.vocab), self.source.point)


def unravel(p: PointedInterpretation, k: int) -> UnravelTree:
    if not isinstance(k, int) or isinstance(k, bool):
        raise UnboundedDepthError("unravelling needs a finite depth")
    if k < 0:
        raise UnboundedDepthError("depth must be a natural number")
    i = p.interp
    role_names = sorted(r for r in i.role_ext if r in i.vocab.roles)
    with span("unravel", depth=k) as s:
        root = UnravelNode((p.point,))
        nodes = [root]
        children: Dict[UnravelNode, Tuple[UnravelNode, ...]] = {}
        frontier = [root]
        for _ in range(k):
            nxt = []
            for node in frontier:
                kids = tuple(node.extend(r, e) for r in role_names
                             for e in sorted(i.successors(r, node.last)))
                if kids:
                    children[node] = kids
                    nxt.extend(kids)
            nodes.extend(nxt)
            frontier = nxt
        s.set_attribute("nodes", len(nodes))
    logger.debug("unravel depth %d from %s: %d nodes", k, p.point, len(nodes))
    return UnravelTree(p, k, tuple(nodes), children)


def tree_violations(t: UnravelTree) -> List[str]:
    """Structural invariants of an unravelling, as messages."""
    problems = []
    i = t.source.interp
    for n in t.nodes:
        if n.first != t.source.point:
            problems.append(f"node {render_node_id(n)} does not start at the point")
        if n.depth > t.depth:
            problems.append(f"node {render_node_id(n)} is deeper than {t.depth}")
        for prefix in n.prefixes()[:-1]:
            if prefix not in t:
                problems.append(f"prefix {render_node_id(prefix)} of {render_node_id(n)} is missing")
        for a, r, b in zip(n.seq[0::2], n.seq[1::2], n.seq[2::2]):
            if (a, b) not in i.role_ext.get(r, ()):
                problems.append(f"node {render_node_id(n)} uses a missing {r}-edge {a}->{b}")

    tree = t.interp
    covering: Dict[Tuple[str, str], List[str]] = {}
    for r, ext in tree.role_ext.items():
        for pair in ext:
            covering.setdefault(pair, []).append(r)
    ids = {render_node_id(n): n for n in t.nodes}
    for (a, b), rs in covering.items():
        if len(rs) != 1:
            problems.append(f"pair {a} -> {b} is covered by {len(rs)} roles")
        if ids[b].parent != ids[a]:
            problems.append(f"edge {a} -> {b} is not a one-step extension")
    for n in t.nodes:
        if n.parent is not None and (render_node_id(n.parent), render_node_id(n)) not in covering:
            problems.append(f"node {render_node_id(n)} has no edge from its parent")
        labels = tree.labels(render_node_id(n))
        if labels != i.labels(n.last) & i.vocab.concepts:
            problems.append(f"node {render_node_id(n)} does not carry the labels of {n.last}")
    return problems
