"""
Property suite runner.

Executes registered cases, collects per-check scores, prints a scorecard
with a per-category breakdown and saves the results as JSON.
"""
import json
import logging
import time
from datetime import datetime
from pathlib import Path
from typing import List, Optional

import pandas as pd

from suite.actions import SuiteOptions, match_action
from suite.checks import CaseOutput, match_check
from suite.dsl import METRIC_CATEGORIES, CaseBuilder, CaseResult, CheckResult, get_all_cases
from utils.tracing import get_span_capture, setup_tracing

logger = logging.getLogger(__name__)


class SuiteRunner:
    """Runs property cases and collects scored results."""

    def __init__(self, output_dir: str = "suite_results", options: Optional[SuiteOptions] = None,
                 trace: bool = True):
        self.output_dir = output_dir
        self.options = options or SuiteOptions()
        if trace:
            setup_tracing()

    def run_case(self, case: CaseBuilder) -> CaseResult:
        logger.info("Running case: %s (%s)", case.name, case.case_id)

        capture = get_span_capture()
        if capture:
            capture.clear()

        output = CaseOutput()
        start = time.time()
        check_results: List[CheckResult] = []

        for stage_action, stage_thens in case.stages:
            handler = match_action(stage_action)
            if handler is None:
                logger.warning("No action handler for: %s", stage_action)
                for assertion, args in stage_thens:
                    check_results.append(CheckResult(
                        step_text=f"{assertion} {', '.join(str(a) for a in args)}".strip(),
                        score=0.0,
                        detail=f"No action handler registered for: {stage_action}",
                        stage=stage_action,
                    ))
                continue

            try:
                produced = handler(case.context, output.values, self.options)
            except Exception as e:
                logger.error("Stage '%s' failed: %s", stage_action, e)
                return CaseResult(case.case_id, case.name, case.category,
                                  checks=check_results, completion_time=time.time() - start,
                                  error=f"Stage '{stage_action}' failed: {type(e).__name__}: {e}")

            output.values.update(produced)
            if capture:
                output.spans = [s.name for s in capture.get_finished_spans()]

            for assertion, args in stage_thens:
                cr = match_check(assertion, args, output)
                cr.stage = stage_action
                check_results.append(cr)

        output.elapsed = time.time() - start
        return CaseResult(case.case_id, case.name, case.category, checks=check_results,
                          completion_time=output.elapsed, spans=sorted(set(output.spans)))

    def run_all(self, cases: Optional[List[CaseBuilder]] = None, quiet: bool = False) -> List[CaseResult]:
        if cases is None:
            cases = get_all_cases()
        results = []
        for i, c in enumerate(cases, 1):
            if not quiet:
                print(f"\n  [{i}/{len(cases)}] {c.name}")
                print(f"    Inputs: {c.describe_inputs()}")
            result = self.run_case(c)
            results.append(result)
            if not quiet:
                _print_case_result(result)
        return results

    def summary_frame(self, results: List[CaseResult]) -> pd.DataFrame:
        """One row per case: category, score, pass flag, time."""
        return pd.DataFrame(
            [{"case": r.case_id, "category": r.category, "score": r.overall_score,
              "passed": r.passed, "errored": r.error is not None, "time": r.completion_time}
             for r in results],
            columns=["case", "category", "score", "passed", "errored", "time"],
        )

    def print_summary(self, results: List[CaseResult]):
        frame = self.summary_frame(results)
        passed = int(frame["passed"].sum()) if len(frame) else 0
        total = len(frame)

        print(f"\n{'=' * 70}")
        print("  PROPERTY SUITE")
        print(f"{'=' * 70}")
        print(f"  Passed: {passed}/{total} cases")
        errored = int(frame["errored"].sum()) if len(frame) else 0
        if errored:
            print(f"  ⚠ {errored} case(s) errored")

        if total:
            by_category = frame.groupby("category").agg(
                cases=("case", "count"), passed=("passed", "sum"), score=("score", "mean"))
            print(f"\n  {'Category':<15} {'Score':>7} {'Passed':>8}")
            print(f"  {'-' * 40}")
            for category, row in by_category.iterrows():
                bar = _score_bar(row["score"])
                print(f"  {category:<15} {row['score']:>6.2f} {bar}  {int(row['passed'])}/{int(row['cases'])}")

            metric_scores: dict = {}
            for r in results:
                for c in r.checks:
                    metric_scores.setdefault(c.metric or "other", []).append(c.score)
            print(f"\n  {'Metric':<15} {'Score':>7} {'Checks':>7}")
            print(f"  {'-' * 32}")
            for metric, scores in metric_scores.items():
                icon = METRIC_CATEGORIES.get(metric, "")
                avg = sum(scores) / len(scores)
                print(f"  {icon} {metric:<13} {avg:>6.2f} {_score_bar(avg)}  ({len(scores)})")

        failing = [r for r in results if not r.passed]
        if failing:
            print(f"\n  {'Failing case':<40} {'Score':>7}")
            print(f"  {'-' * 48}")
            for r in failing:
                print(f"  {r.case_name[:39]:<40} {r.overall_score:>6.2f}")

        print(f"\n  Total time: {frame['time'].sum() if total else 0.0:.1f}s")
        print(f"{'=' * 70}")

    def save_results(self, results: List[CaseResult], path: Optional[str] = None) -> Path:
        if path is None:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            target = Path(self.output_dir) / f"suite_{timestamp}.json"
        else:
            target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)

        frame = self.summary_frame(results)
        output = {
            "timestamp": datetime.now().isoformat(),
            "options": {"samples": self.options.samples, "law_samples": self.options.law_samples,
                        "seed": self.options.seed},
            "summary": {
                "passed": int(frame["passed"].sum()) if len(frame) else 0,
                "failed": int((~frame["passed"]).sum()) if len(frame) else 0,
                "total": len(results),
                "categories": {
                    k: round(float(v), 3)
                    for k, v in (frame.groupby("category")["score"].mean().items() if len(frame) else [])
                },
            },
            "cases": [
                {
                    "id": r.case_id,
                    "name": r.case_name,
                    "category": r.category,
                    "overall_score": round(r.overall_score, 3),
                    "passed": r.passed,
                    "time": round(r.completion_time, 3),
                    "spans": r.spans,
                    "error": r.error,
                    "checks": [
                        {"check": c.step_text, "score": c.score, "metric": c.metric,
                         "passed": c.passed, "detail": c.detail, "stage": c.stage}
                        for c in r.checks
                    ],
                }
                for r in results
            ],
        }
        with open(target, "w", encoding="utf-8") as f:
            json.dump(output, f, indent=2)
        print(f"\n  💾 Results saved to: {target}")
        return target


# ── Helpers ───────────────────────────────────────────────────────────

def _score_bar(score: float, width: int = 10) -> str:
    """Render a visual score bar like [████████░░]."""
    filled = round(score * width)
    return f"[{'█' * filled}{'░' * (width - filled)}]"


def _print_case_result(r: CaseResult):
    status = "✓" if r.passed else "✗"
    print(f"    {status} {r.case_name} — score: {r.overall_score:.2f} ({r.completion_time:.2f}s)")
    if r.error:
        print(f"      ❌ Error: {r.error}")
        return
    current_stage = None
    for c in r.checks:
        if c.stage and c.stage != current_stage:
            current_stage = c.stage
            print(f"      ── {current_stage} ──")
        icon = "✓" if c.passed else "✗"
        cat = f"[{c.metric}]" if c.metric else ""
        detail = f" — {c.detail}" if c.detail else ""
        print(f"      {icon} {c.score:.1f}  {cat:<12} {c.step_text}{detail}")
