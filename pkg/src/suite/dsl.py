"""
Given/When/Then DSL for property cases.

A case fixes its inputs with given(), runs one or more engines with
when(), and states expectations with then(). Each when() starts a stage;
the thens that follow grade that stage's subject. Every check scores 1.0
or 0.0 and a case passes only when all of its checks do.

Usage:
    from suite.dsl import case

    @case("path fixture apart at two rounds", category="ladder")
    def path_two_rounds(s):
        s.given("fixture", "path")
        s.given("logic", "")
        s.given("rounds", 2)
        s.when("the stratified solver decides")
        s.then("the verdict should be", "spoiler")
        s.when("the search oracle decides")
        s.then("the verdicts should agree")
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional


# ── Metric categories ────────────────────────────────────────────────

METRIC_CATEGORIES = {
    "verdict": "⚖️",
    "agreement": "🔁",
    "concept": "🔤",
    "law": "📐",
    "structure": "🌳",
}


# ── Result types ──────────────────────────────────────────────────────

@dataclass
class CheckResult:
    """Result of a single Then check."""
    step_text: str
    score: float
    metric: str = ""
    detail: str = ""
    stage: str = ""

    @property
    def passed(self) -> bool:
        return self.score >= 1.0


@dataclass
class CaseResult:
    case_id: str
    case_name: str
    category: str
    checks: List[CheckResult] = field(default_factory=list)
    completion_time: float = 0.0
    spans: List[str] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def overall_score(self) -> float:
        if not self.checks:
            return 0.0
        return sum(c.score for c in self.checks) / len(self.checks)


# ── Case builder ─────────────────────────────────────────────────────

class CaseBuilder:
    """Collects Given/When/Then steps during case definition."""

    def __init__(self, case_id: str, name: str, category: str):
        self.case_id = case_id
        self.name = name
        self.category = category
        self.context: Dict[str, Any] = {}
        self._stages: List[tuple] = []  # [(action_text, [(assertion_text, args)])]
        self._current_stage: Optional[int] = None

    def given(self, key: str, value: Any = None):
        self.context[key] = value
        return self

    def when(self, action: str):
        """Starts a new stage."""
        self._stages.append((action, []))
        self._current_stage = len(self._stages) - 1
        return self

    def then(self, assertion: str, *args):
        if self._current_stage is None:
            self._stages.append(("", []))
            self._current_stage = 0
        self._stages[self._current_stage][1].append((assertion, args))
        return self

    @property
    def stages(self) -> List[tuple]:
        return self._stages

    def describe_inputs(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.context.items())


# ── Case registry ────────────────────────────────────────────────────

_CASES: List[CaseBuilder] = []


def case(name: str, category: str = "general") -> Callable:
    """Register a single case; the function name becomes its id."""
    def decorator(fn: Callable) -> Callable:
        sid = fn.__name__
        if sid.startswith("test_"):
            sid = sid[5:]
        builder = CaseBuilder(case_id=sid, name=name, category=category)
        fn(builder)
        _CASES.append(builder)
        return fn
    return decorator


def template(name: str, category: str = "general") -> Callable:
    """Register a case template; call .cases(dataset) to generate one case per row.

        @template("reduction agrees", category="reductions")
        def reduction_agrees(s, data):
            s.given("fixture", data["fixture"])
            ...

        reduction_agrees.cases([{"fixture": "path"}, {"fixture": "sink"}], id_field="fixture")
    """
    def decorator(fn: Callable) -> Callable:
        def cases(dataset: List[dict], id_field: str = "id") -> None:
            for i, data in enumerate(dataset):
                label = str(data.get(id_field, f"case_{i}"))
                if len(label) > 60:
                    label = label[:57] + "..."
                sid = re.sub(r"[^a-z0-9]+", "_", label.lower()).strip("_")
                builder = CaseBuilder(
                    case_id=f"{fn.__name__}_{sid}",
                    name=f"{name}: {label}",
                    category=category,
                )
                fn(builder, data)
                _CASES.append(builder)

        fn.cases = cases
        return fn
    return decorator


def get_all_cases() -> List[CaseBuilder]:
    return list(_CASES)


def get_cases_by_category(category: str) -> List[CaseBuilder]:
    return [c for c in _CASES if c.category == category]
