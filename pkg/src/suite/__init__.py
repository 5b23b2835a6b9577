"""Given/When/Then property suite for the game engines, reductions and comonad."""
from suite.dsl import case, template, get_all_cases, get_cases_by_category
from suite.actions import SuiteOptions
from suite.runner import SuiteRunner

__all__ = [
    "case",
    "template",
    "get_all_cases",
    "get_cases_by_category",
    "SuiteOptions",
    "SuiteRunner",
]
