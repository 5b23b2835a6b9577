"""
Composed reduction τ_Φ and its report.

Stages run in the fixed order Self, I, b, O, so that b sees the inverse
roles and O sees every role it must plant trampolines for. The nominal
stage measures reachability along role edges (see reductions.nominals).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from concepts.logic import Extension, LogicSelector
from errors import FreshNameCollisionError, PreconditionError
from model.interpretation import PointedInterpretation
from model.morphism import MorphismKind, MorphismWitness, check_morphism
from model.vocabulary import Vocabulary
from reductions.enrich import Manifest, boolean_enrichment, inverse_enrichment, self_enrichment
from reductions.nominals import nominal_reduction
from reductions.vocab_maps import reserved_names
from utils.tracing import span

logger = logging.getLogger(__name__)

MANIFEST_KINDS = ("concepts", "roles", "trampolines", "dummies", "copies")


@dataclass
class ReductionReport:
    logic: LogicSelector
    input_vocab: Vocabulary
    output_vocab: Vocabulary
    input_elements: int
    output_elements: int
    stages: List[str] = field(default_factory=list)
    manifest: Dict[str, List[str]] = field(default_factory=dict)

    @property
    def element_delta(self) -> int:
        return self.output_elements - self.input_elements

    def generated_names(self) -> List[str]:
        return [n for kind in MANIFEST_KINDS for n in self.manifest.get(kind, [])]

    def to_dict(self) -> dict:
        def vocab(v: Vocabulary) -> dict:
            return {"individuals": sorted(v.individuals), "concepts": sorted(v.concepts),
                    "roles": sorted(v.roles)}
        return {
            "logic": self.logic.render(),
            "stages": list(self.stages),
            "input_vocabulary": vocab(self.input_vocab),
            "output_vocabulary": vocab(self.output_vocab),
            "elements": {"input": self.input_elements, "output": self.output_elements,
                         "delta": self.element_delta},
            "manifest": {kind: list(self.manifest.get(kind, [])) for kind in MANIFEST_KINDS},
        }


def reduce_with_report(p: PointedInterpretation, logic: LogicSelector) -> Tuple[PointedInterpretation, ReductionReport]:
    reserved = reserved_names(p.vocab)
    if reserved:
        raise FreshNameCollisionError(f"input names may not start with '@': {', '.join(reserved)}")
    report = ReductionReport(logic, p.vocab, p.vocab, len(p.domain), len(p.domain))
    stages = [
        (Extension.SELF, self_enrichment),
        (Extension.INV, inverse_enrichment),
        (Extension.B, boolean_enrichment),
        (Extension.O, lambda x: nominal_reduction(x, reach="forward")),
    ]
    current = p
    with span("tau_phi", logic=logic.render()) as s:
        for tag, stage in stages:
            if tag not in logic:
                continue
            current, manifest = stage(current)
            report.stages.append(tag.value)
            for kind, names in manifest.items():
                report.manifest.setdefault(kind, []).extend(names)
        s.set_attribute("elements", len(current.domain))
    report.output_vocab = current.vocab
    report.output_elements = len(current.domain)
    for kind in report.manifest:
        report.manifest[kind] = sorted(set(report.manifest[kind]))
    logger.info("tau_phi %s: %d -> %d elements", logic.render(), report.input_elements,
                report.output_elements)
    return current, report


def tau_phi(p: PointedInterpretation, logic: LogicSelector) -> PointedInterpretation:
    return reduce_with_report(p, logic)[0]


def phi_homomorphism(h: MorphismWitness, p: PointedInterpretation, q: PointedInterpretation,
                     logic: LogicSelector) -> bool:
    """Whether h is a morphism of the Φ-subcategory, i.e. a homomorphism between reduced images.

    Defined for Φ ⊆ {Self, I, b}, where the reductions keep the domain.
    """
    if logic.nominals:
        raise PreconditionError("Φ-morphisms through the nominal reduction change the domain")
    witness = MorphismWitness(h.mapping, MorphismKind.HOMOMORPHISM)
    return check_morphism(witness, tau_phi(p, logic), tau_phi(q, logic))
