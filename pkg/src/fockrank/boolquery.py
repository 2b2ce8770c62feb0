"""Boolean query language: lexer, recursive-descent parser, DNF conversion.

Grammar (whitespace insignificant, precedence ! > & > |):

    expr  := or
    or    := and ('|' and)*
    and   := unary ('&' unary)*
    unary := '!' unary | '(' expr ')' | TERM
    TERM  := [a-z0-9]+          (input is lowercased before lexing)

Syntax errors carry the byte offset of the offending position in the
lowercased UTF-8 input.  ASTs are immutable; evaluation and DNF conversion
are pure functions over them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional, Union

from fockrank.errors import ClauseExplosion, QuerySyntaxError

MAX_DNF_CLAUSES = 4096


@dataclass(frozen=True)
class Term:
    name: str


@dataclass(frozen=True)
class Not:
    child: "Node"


@dataclass(frozen=True)
class And:
    children: tuple["Node", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("And requires at least two children")


@dataclass(frozen=True)
class Or:
    children: tuple["Node", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("Or requires at least two children")


Node = Union[Term, Not, And, Or]


@dataclass(frozen=True)
class Literal:
    term: str
    negated: bool = False


@dataclass(frozen=True)
class DnfQuery:
    """Disjunction of conjunctive clauses; an empty clause list means
    the query is unsatisfiable."""

    clauses: tuple[tuple[Literal, ...], ...]

    def to_ast(self) -> Optional[Node]:
        """Re-express the DNF as an AST, or None when unsatisfiable."""
        if not self.clauses:
            return None
        parts: list[Node] = []
        for clause in self.clauses:
            lits: list[Node] = [
                Not(Term(l.term)) if l.negated else Term(l.term) for l in clause
            ]
            parts.append(lits[0] if len(lits) == 1 else And(tuple(lits)))
        return parts[0] if len(parts) == 1 else Or(tuple(parts))


# ------------------------------------------------------------------ lexer

_TERM_RE = re.compile(rb"[a-z0-9]+")
_SPACE_RE = re.compile(rb"\s+")
_PUNCT = frozenset(b"&|!()")


def _lex(data: bytes) -> list[tuple[str, str, int]]:
    """Produce (kind, text, byte offset) triples; kind is the literal
    punctuation character or "TERM"."""
    tokens = []
    pos = 0
    while pos < len(data):
        ws = _SPACE_RE.match(data, pos)
        if ws:
            pos = ws.end()
            continue
        if data[pos] in _PUNCT:
            ch = chr(data[pos])
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        m = _TERM_RE.match(data, pos)
        if m:
            tokens.append(("TERM", m.group().decode(), pos))
            pos = m.end()
            continue
        raise QuerySyntaxError(f"illegal character {data[pos:pos + 1]!r}", pos)
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]], length: int):
        self.tokens = tokens
        self.pos = 0
        self.length = length  # byte length, used as the EOF offset

    def _peek(self) -> Optional[tuple[str, str, int]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _offset(self) -> int:
        tok = self._peek()
        return tok[2] if tok else self.length

    def parse(self) -> Node:
        node = self.expr()
        tok = self._peek()
        if tok is not None:
            raise QuerySyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self) -> Node:
        return self.disjunction()

    def disjunction(self) -> Node:
        parts = [self.conjunction()]
        while self._peek() and self._peek()[0] == "|":
            self.pos += 1
            parts.append(self.conjunction())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conjunction(self) -> Node:
        parts = [self.unary()]
        while self._peek() and self._peek()[0] == "&":
            self.pos += 1
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def unary(self) -> Node:
        tok = self._peek()
        if tok is None:
            raise QuerySyntaxError("unexpected end of query", self.length)
        kind, text, offset = tok
        if kind == "!":
            self.pos += 1
            return Not(self.unary())
        if kind == "(":
            self.pos += 1
            inner = self.expr()
            closing = self._peek()
            if closing is None or closing[0] != ")":
                raise QuerySyntaxError("expected ')'", self._offset())
            self.pos += 1
            return inner
        if kind == "TERM":
            self.pos += 1
            return Term(text)
        raise QuerySyntaxError(f"unexpected {text!r}", offset)


def parse(query: str) -> Node:
    """Parse a query string into an AST, raising QuerySyntaxError with a
    byte offset on any input outside the grammar."""
    data = query.lower().encode("utf-8")
    return _Parser(_lex(data), len(data)).parse()


# ---------------------------------------------------------------- printer

def _binding(node: Node) -> int:
    if isinstance(node, Or):
        return 0
    if isinstance(node, And):
        return 1
    if isinstance(node, Not):
        return 2
    return 3


def print_query(node: Node) -> str:
    """Canonical printer: parse(print_query(ast)) reproduces ast exactly.

    Children binding no tighter than their parent are parenthesized, which
    preserves deliberate groupings such as (a & b) & c.
    """
    def wrap(child: Node, level: int) -> str:
        text = print_query(child)
        return f"({text})" if _binding(child) <= level else text

    if isinstance(node, Term):
        return node.name
    if isinstance(node, Not):
        inner = print_query(node.child)
        if _binding(node.child) < 2:
            inner = f"({inner})"
        return "!" + inner
    if isinstance(node, And):
        return " & ".join(wrap(c, 1) for c in node.children)
    if isinstance(node, Or):
        return " | ".join(wrap(c, 0) for c in node.children)
    raise TypeError(f"not a query node: {node!r}")


# ------------------------------------------------------------- evaluation

def eval_boolean(node: Node, membership: Callable[[str], object]) -> bool:
    """Standard boolean semantics over a term-presence predicate.

    ``membership`` maps a term name to a truthy/falsy presence value;
    callers resolve unknown terms to absent.
    """
    if isinstance(node, Term):
        return bool(membership(node.name))
    if isinstance(node, Not):
        return not eval_boolean(node.child, membership)
    if isinstance(node, And):
        return all(eval_boolean(c, membership) for c in node.children)
    if isinstance(node, Or):
        return any(eval_boolean(c, membership) for c in node.children)
    raise TypeError(f"not a query node: {node!r}")


# ------------------------------------------------------------------- DNF

def _cross(groups: list[list[frozenset[Literal]]], limit: int) -> list[frozenset[Literal]]:
    acc: list[frozenset[Literal]] = [frozenset()]
    for group in groups:
        if len(acc) * len(group) > limit:
            raise ClauseExplosion(
                f"DNF would exceed {limit} clauses")
        acc = [a | b for a in acc for b in group]
    return acc


def _clauses(node: Node, negated: bool, limit: int) -> list[frozenset[Literal]]:
    if isinstance(node, Term):
        return [frozenset({Literal(node.name, negated)})]
    if isinstance(node, Not):
        return _clauses(node.child, not negated, limit)
    # De Morgan: a negated And distributes like an Or and vice versa
    disjunctive = isinstance(node, Or) != negated
    child_groups = [_clauses(c, negated, limit) for c in node.children]
    if disjunctive:
        merged = [cl for group in child_groups for cl in group]
        if len(merged) > limit:
            raise ClauseExplosion(f"DNF would exceed {limit} clauses")
        return merged
    return _cross(child_groups, limit)


def to_dnf(node: Node, max_clauses: int = MAX_DNF_CLAUSES) -> DnfQuery:
    """Convert an AST to disjunctive normal form.

    Negations are pushed down to literals, conjunctions distributed over
    disjunctions, clauses containing a literal and its complement dropped,
    and both literal and clause order made deterministic (lexicographic).
    Raises ClauseExplosion beyond ``max_clauses`` clauses.
    """
    raw = _clauses(node, negated=False, limit=max_clauses)
    kept: set[frozenset[Literal]] = set()
    for clause in raw:
        terms = {lit.term for lit in clause}
        if len(terms) < len(clause):  # both polarities of some term
            continue
        kept.add(clause)
    ordered = [
        tuple(sorted(clause, key=lambda lit: (lit.term, lit.negated)))
        for clause in kept
    ]
    ordered.sort(key=lambda clause: [(lit.term, lit.negated) for lit in clause])
    return DnfQuery(tuple(ordered))
