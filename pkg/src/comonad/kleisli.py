"""
The unravelling comonad in Kleisli form.

A co-Kleisli map from p to q sends every node of the depth-k unravelling
of p to an element of q, homomorphically and point to point. Its
coextension f* is the tree map

    f*[d] = [e]
    f*(s[r, d']) = f*(s)[r, f(s[r, d'])]

and co-Kleisli composition is g • f = g ∘ f*.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Mapping, Optional

from comonad.unravel import UnravelNode, UnravelTree, render_node_id, unravel
from errors import InvalidCoKleisliError, InvalidMorphismError
from model.interpretation import Element, PointedInterpretation
from model.morphism import MorphismKind, MorphismWitness, check_morphism

TreeMap = Dict[UnravelNode, UnravelNode]


@dataclass(frozen=True)
class CoKleisliMap:
    source: UnravelTree
    target: PointedInterpretation
    mapping: Mapping[UnravelNode, Element]

    def __call__(self, node: UnravelNode) -> Element:
        return self.mapping[node]

    def as_witness(self) -> MorphismWitness:
        return MorphismWitness({render_node_id(n): e for n, e in self.mapping.items()},
                               MorphismKind.HOMOMORPHISM)

    def is_valid(self) -> bool:
        if set(self.mapping) != set(self.source.nodes):
            return False
        return check_morphism(self.as_witness(), self.source.as_pointed(), self.target)

    def validate(self) -> "CoKleisliMap":
        if not self.is_valid():
            raise InvalidCoKleisliError("map is not a point-preserving homomorphism out of the unravelling")
        return self


def counit(t: UnravelTree) -> CoKleisliMap:
    """Send every node to its last element."""
    return CoKleisliMap(t, t.source, {n: n.last for n in t.nodes})


def lift(h: MorphismWitness, p: PointedInterpretation, q: PointedInterpretation, k: int) -> TreeMap:
    """Apply h element-wise: [a0, r0, a1, ...] -> [h a0, r0, h a1, ...]."""
    if not check_morphism(MorphismWitness(h.mapping, MorphismKind.HOMOMORPHISM), p, q):
        raise InvalidMorphismError("lift needs a point-preserving homomorphism")
    source = unravel(p, k)
    out: TreeMap = {}
    for n in source.nodes:
        out[n] = UnravelNode(tuple(x if idx % 2 else h.mapping[x] for idx, x in enumerate(n.seq)))
    return out


def coextend(f: CoKleisliMap, k: Optional[int] = None) -> TreeMap:
    """The Kleisli coextension f*, from unravel(p, k) to unravel(q, k)."""
    f.validate()
    if k is not None and k != f.source.depth:
        raise InvalidCoKleisliError(f"map is defined on depth {f.source.depth}, not {k}")
    out: TreeMap = {}
    for n in f.source.nodes:
        parent = n.parent
        if parent is None:
            out[n] = UnravelNode((f.target.point,))
        else:
            out[n] = out[parent].extend(n.incoming_role, f.mapping[n])
    return out


def cokleisli_compose(g: CoKleisliMap, f: CoKleisliMap, k: Optional[int] = None,
                      coextension: Optional[Callable[[CoKleisliMap], TreeMap]] = None) -> CoKleisliMap:
    """g • f = g ∘ f*."""
    if g.source.source != f.target or g.source.depth != f.source.depth:
        raise InvalidCoKleisliError("g must be defined on the unravelling of the target of f at the same depth")
    if k is not None and k != f.source.depth:
        raise InvalidCoKleisliError(f"maps are defined on depth {f.source.depth}, not {k}")
    star = (coextension or coextend)(f)
    stray = [n for n in f.source.nodes if star[n] not in g.mapping]
    if stray:
        raise InvalidCoKleisliError(f"coextension sends {render_node_id(stray[0])} outside the domain of g")
    return CoKleisliMap(f.source, g.target, {n: g.mapping[star[n]] for n in f.source.nodes})


def tree_map_witness(m: TreeMap) -> MorphismWitness:
    return MorphismWitness({render_node_id(a): render_node_id(b) for a, b in m.items()},
                           MorphismKind.HOMOMORPHISM)
