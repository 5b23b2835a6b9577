"""
Check definitions for Then clauses.

Each check reads the merged stage results and scores 1.0 or 0.0. Checks
are matched by assertion prefix, longest pattern first, so "the verdicts
should agree" never falls through to "the verdict should be".

Metric categories:
  - verdict: a single engine's answer against the expected one
  - agreement: two or more engines answering alike
  - concept: characteristic and sampled concepts against the game
  - law: comonad law reports
  - structure: unravelling shape and invariants
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List

from suite.dsl import CheckResult


@dataclass
class CaseOutput:
    """Merged results of a case's stages, plus the spans they emitted."""
    values: Dict[str, Any] = field(default_factory=dict)
    spans: List[str] = field(default_factory=list)
    elapsed: float = 0.0


# ── Check registry ───────────────────────────────────────────────────

_CHECK_DEFS: list = []  # [(pattern, fn)]


def check(pattern: str):
    """Register a check definition."""
    def decorator(fn):
        _CHECK_DEFS.append((pattern, fn))
        return fn
    return decorator


def match_check(assertion: str, args: tuple, output: CaseOutput) -> CheckResult:
    """Run the check whose pattern is the longest prefix of `assertion`."""
    matches = [(p, fn) for p, fn in _CHECK_DEFS if assertion.lower().startswith(p.lower())]
    if matches:
        _, fn = max(matches, key=lambda m: len(m[0]))
        try:
            return fn(assertion, args, output)
        except KeyError as e:
            return CheckResult(_format_step(assertion, args), 0.0,
                               detail=f"no stage produced {e}")
    return CheckResult(
        step_text=_format_step(assertion, args),
        score=0.0,
        detail=f"No check definition found for: {assertion}",
    )


def _format_step(assertion: str, args: tuple) -> str:
    if args:
        return f"{assertion} {', '.join(str(a) for a in args)}"
    return assertion


def _result(assertion: str, args: tuple, ok: bool, metric: str, detail: str = "") -> CheckResult:
    return CheckResult(_format_step(assertion, args), 1.0 if ok else 0.0, metric, "" if ok else detail)


# ── Verdict checks ───────────────────────────────────────────────────

@check("the verdict should be")
def _verdict_is(assertion, args, output) -> CheckResult:
    expected = str(args[0])
    got = output.values["verdict"]
    return _result(assertion, args, got == expected, "verdict", f"got {got}")


@check("the distinguishing round should be")
def _distinguishing_round(assertion, args, output) -> CheckResult:
    got = output.values["distinguishing_round"]
    return _result(assertion, args, got == args[0], "verdict", f"got {got}")


@check("the verdicts should agree")
def _verdicts_agree(assertion, args, output) -> CheckResult:
    verdicts = output.values["verdicts"]
    ok = len(set(verdicts.values())) == 1
    return _result(assertion, args, ok, "agreement",
                   ", ".join(f"{k}={v}" for k, v in sorted(verdicts.items())))


@check("no logic should disagree")
def _no_mismatch(assertion, args, output) -> CheckResult:
    mismatches = output.values["mismatches"]
    return _result(assertion, args, not mismatches, "agreement", "; ".join(mismatches))


# ── Concept checks ───────────────────────────────────────────────────

@check("the characteristic concept should match the verdict")
def _characteristic_matches(assertion, args, output) -> CheckResult:
    satisfied = output.values["characteristic"]
    duplicator = output.values["verdicts"]["stratified"] == "duplicator"
    return _result(assertion, args, satisfied == duplicator, "concept",
                   f"characteristic concept {'holds' if satisfied else 'fails'} "
                   f"but the solver says {output.values['verdicts']['stratified']}")


@check("sampled concepts should respect the verdict")
def _sampled_respect(assertion, args, output) -> CheckResult:
    count = output.values["distinguishing_concepts"]
    duplicator = output.values["verdicts"]["stratified"] == "duplicator"
    ok = count == 0 if duplicator else True
    return _result(assertion, args, ok, "concept", f"{count} sampled concepts separate a Duplicator pair")


@check("some concept should separate the pair")
def _some_concept(assertion, args, output) -> CheckResult:
    values = output.values
    ok = values["distinguishing_concepts"] > 0 or not values["characteristic"]
    return _result(assertion, args, ok, "concept", "neither sampled nor characteristic concepts separate it")


# ── Comonad checks ───────────────────────────────────────────────────

@check("the laws should hold")
def _laws_hold(assertion, args, output) -> CheckResult:
    report = output.values["law_report"]
    detail = "; ".join(f"law {r.name}: {r.counterexample}" for r in report.failures())
    return _result(assertion, args, report.passed, "law", detail)


@check("the node count should be")
def _node_count(assertion, args, output) -> CheckResult:
    got = output.values["nodes"]
    return _result(assertion, args, got == args[0], "structure", f"got {got}")


@check("the node count should match the enumeration")
def _node_count_enumerated(assertion, args, output) -> CheckResult:
    got, expected = output.values["nodes"], output.values["enumerated"]
    return _result(assertion, args, got == expected, "structure", f"{got} nodes, {expected} sequences")


@check("the tree should satisfy its invariants")
def _tree_invariants(assertion, args, output) -> CheckResult:
    problems = output.values["tree_violations"]
    return _result(assertion, args, not problems, "structure", "; ".join(problems[:3]))


# ── Tracing ──────────────────────────────────────────────────────────

@check("the span should be recorded")
def _span_recorded(assertion, args, output) -> CheckResult:
    name = str(args[0])
    if not output.spans:
        return CheckResult(_format_step(assertion, args), 0.0, "structure", "No spans captured (tracing off)")
    return _result(assertion, args, name in output.spans, "structure",
                   f"spans: {', '.join(sorted(set(output.spans)))}")
