"""
Concrete syntax for concepts: a lark grammar, the AST transformer, and the
canonical printer.

    C ::= name | '{' name '}' | '!' C | C '&' C | 'exists' R '.' C
        | 'exists' R '.' 'Self' | '(' C ')'
    R ::= name | name '-' | R '&' R | R '|' R | R '\\' R | '(' R ')'

`!` and `exists ... .` bind tighter than concept `&`. The role operators
are left-associative with equal precedence; mixing them without
parentheses is rejected. Names that are not plain identifiers (or that
collide with `exists` / `Self`) are written as double-quoted strings.
"""
from __future__ import annotations

import json
import re
from functools import reduce

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from concepts.ast import (
    And,
    Atomic,
    Concept,
    Difference,
    Exists,
    ExistsSelf,
    Intersection,
    Inverse,
    Name,
    Nominal,
    Not,
    Role,
    ROLE_OPERATORS,
    Union,
)
from errors import ConceptSyntaxError, DLGamesError, GrammarViolationError

GRAMMAR = r"""
?start: concept

?concept: concept "&" unary      -> and_
        | unary

?unary: "!" unary                -> not_
      | "exists" role "." "Self" -> exists_self
      | "exists" role "." unary  -> exists
      | "{" name "}"             -> nominal
      | name                     -> concept_name
      | "(" concept ")"

role: role_term (role_op role_term)*

!role_op: "&" | "|" | "\\"

?role_term: name                 -> atomic
          | name "-"             -> inverse
          | "(" role ")"         -> group
          | "(" role ")" "-"     -> inverse_group

name: NAME | STRING

NAME: /[A-Za-z_][A-Za-z0-9_]*/
STRING: ESCAPED_STRING

%import common.ESCAPED_STRING
%import common.WS
%ignore WS
"""

KEYWORDS = frozenset({"exists", "Self"})
_PLAIN_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_OPERATOR_CLASSES = {"&": Intersection, "|": Union, "\\": Difference}


class _ToAst(Transformer):
    def name(self, items):
        token: Token = items[0]
        if token.type == "STRING":
            return json.loads(token)
        return str(token)

    def concept_name(self, items):
        return Name(items[0])

    def nominal(self, items):
        return Nominal(items[0])

    def not_(self, items):
        return Not(items[0])

    def and_(self, items):
        return And(items[0], items[1])

    def exists(self, items):
        return Exists(items[0], items[1])

    def exists_self(self, items):
        return ExistsSelf(items[0])

    def atomic(self, items):
        return Atomic(items[0])

    def inverse(self, items):
        return Inverse(Atomic(items[0]))

    def group(self, items):
        return items[0]

    @v_args(meta=True)
    def inverse_group(self, meta, items):
        inner = items[0]
        if isinstance(inner, Atomic):
            return Inverse(inner)
        raise GrammarViolationError("inverse applies to atomic roles only",
                                    getattr(meta, "line", None), getattr(meta, "column", None))

    def role_op(self, items):
        return str(items[0])

    @v_args(meta=True)
    def role(self, meta, items):
        operands = items[0::2]
        operators = set(items[1::2])
        if len(operators) > 1:
            raise GrammarViolationError("mixed role operators require parentheses",
                                        getattr(meta, "line", None), getattr(meta, "column", None))
        if not operators:
            return operands[0]
        cls = _OPERATOR_CLASSES[operators.pop()]
        return reduce(cls, operands)


_parser = Lark(GRAMMAR, parser="lalr", propagate_positions=True, maybe_placeholders=False)


def parse(text: str) -> Concept:
    """Parse concept text into its AST.

    Raises ConceptSyntaxError with the line and column of the offending
    token, or GrammarViolationError for text outside the grammar.
    """
    try:
        tree = _parser.parse(text)
    except UnexpectedCharacters as e:
        raise ConceptSyntaxError(f"unexpected character {text[e.pos_in_stream]!r}", e.line, e.column) from None
    except UnexpectedEOF as e:
        raise ConceptSyntaxError("unexpected end of input", getattr(e, "line", None),
                                 getattr(e, "column", None)) from None
    except UnexpectedInput as e:
        token = getattr(e, "token", None)
        shown = repr(str(token)) if token else "input"
        raise ConceptSyntaxError(f"unexpected {shown}", e.line, e.column) from None
    try:
        return _ToAst().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, DLGamesError):
            raise e.orig_exc from None
        raise


# ── Printer ──────────────────────────────────────────────────────────

def quote_name(name: str) -> str:
    if _PLAIN_NAME.match(name) and name not in KEYWORDS:
        return name
    return json.dumps(name, ensure_ascii=False)


def role_to_text(r: Role) -> str:
    if isinstance(r, Atomic):
        return quote_name(r.name)
    if isinstance(r, Inverse):
        return quote_name(r.role.name) + "-"
    op = ROLE_OPERATORS[type(r)]
    left = role_to_text(r.left)
    if type(r.left) in ROLE_OPERATORS and type(r.left) is not type(r):
        left = f"({left})"
    right = role_to_text(r.right)
    if type(r.right) in ROLE_OPERATORS:
        right = f"({right})"
    return f"{left} {op} {right}"


def to_text(c: Concept) -> str:
    """Canonical text for `c`; parse(to_text(c)) == c."""
    if isinstance(c, Name):
        return quote_name(c.name)
    if isinstance(c, Nominal):
        return "{" + quote_name(c.name) + "}"
    if isinstance(c, Not):
        return "!" + _unary_text(c.arg)
    if isinstance(c, And):
        return f"{to_text(c.left)} & {_unary_text(c.right)}"
    if isinstance(c, Exists):
        return f"exists {role_to_text(c.role)} . {_unary_text(c.concept)}"
    if isinstance(c, ExistsSelf):
        return f"exists {role_to_text(c.role)} . Self"
    raise TypeError(f"not a concept: {c!r}")


def _unary_text(c: Concept) -> str:
    text = to_text(c)
    return f"({text})" if isinstance(c, And) else text
