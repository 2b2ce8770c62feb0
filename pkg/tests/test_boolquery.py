import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockrank.boolquery import (
    And,
    DnfQuery,
    Literal,
    Not,
    Or,
    Term,
    eval_boolean,
    parse,
    print_query,
    to_dnf,
)
from fockrank.errors import ClauseExplosion, QuerySyntaxError


class TestParse:
    def test_paper_query_with_parens(self):
        assert parse("(gold | silver) & truck") == And((
            Or((Term("gold"), Term("silver"))), Term("truck")))

    def test_conjunction_with_negation(self):
        assert parse("gold & shipment & !fire") == And((
            Term("gold"), Term("shipment"), Not(Term("fire"))))

    def test_single_term(self):
        assert parse("gold") == Term("gold")

    def test_lowercasing(self):
        assert parse("Gold & TRUCK") == And((Term("gold"), Term("truck")))

    def test_precedence_or_binds_loosest(self):
        assert parse("a | b & c") == Or((Term("a"), And((Term("b"), Term("c")))))
        assert parse("!a | b") == Or((Not(Term("a")), Term("b")))

    def test_double_negation_preserved(self):
        assert parse("!!a") == Not(Not(Term("a")))

    def test_parenthesized_groups_preserved(self):
        assert parse("(a & b) & c") == And((And((Term("a"), Term("b"))), Term("c")))

    def test_whitespace_insignificant(self):
        assert parse(" a&b ") == parse("a & b")

    @pytest.mark.parametrize("query,offset", [
        ("", 0),                # empty input
        ("a &", 3),             # dangling operator
        ("(a | b", 6),          # unbalanced parenthesis
        ("a ^ b", 2),           # illegal character
        ("a b", 2),             # trailing garbage
        (")", 0),
    ])
    def test_errors_carry_byte_offsets(self, query, offset):
        with pytest.raises(QuerySyntaxError) as err:
            parse(query)
        assert err.value.offset == offset


class TestPrinter:
    def test_round_trips_groupings(self):
        for text in ["(a & b) & c", "a & (b | c)", "!(a | b)", "!!a", "a | b | c"]:
            ast = parse(text)
            assert parse(print_query(ast)) == ast

    def test_canonical_form(self):
        assert print_query(parse("(gold|silver)&truck")) == "(gold | silver) & truck"


class TestToDnf:
    def test_distribution(self):
        dnf = to_dnf(parse("(a | b) & c"))
        assert dnf.clauses == (
            (Literal("a"), Literal("c")),
            (Literal("b"), Literal("c")),
        )

    def test_de_morgan(self):
        dnf = to_dnf(parse("!(a | b)"))
        assert dnf.clauses == ((Literal("a", True), Literal("b", True)),)

    def test_contradiction_drops_clause(self):
        assert to_dnf(parse("a & !a")).clauses == ()
        assert to_dnf(parse("a & !a")).to_ast() is None

    def test_duplicate_literals_collapse(self):
        assert to_dnf(parse("a & a")).clauses == ((Literal("a"),),)

    def test_clause_explosion_guard(self):
        big = " & ".join(f"(a{i} | b{i})" for i in range(13))  # 2^13 clauses
        with pytest.raises(ClauseExplosion):
            to_dnf(parse(big))

    def test_structure_is_flat(self):
        ast = to_dnf(parse("!(a & (b | !c)) | (d & e)")).to_ast()
        clauses = ast.children if isinstance(ast, Or) else (ast,)
        for clause in clauses:
            literals = clause.children if isinstance(clause, And) else (clause,)
            for lit in literals:
                if isinstance(lit, Not):
                    assert isinstance(lit.child, Term)
                else:
                    assert isinstance(lit, Term)


class TestEvalBoolean:
    GF_PRESENCE = {
        "d1": {"a", "damaged", "fire", "gold", "in", "of", "shipment"},
        "d2": {"a", "arrived", "delivery", "in", "of", "silver", "truck"},
        "d3": {"a", "arrived", "gold", "in", "of", "shipment", "truck"},
    }

    def membership(self, doc):
        return lambda term: term in self.GF_PRESENCE[doc]

    def test_gold_shipment_not_fire(self):
        ast = parse("gold & shipment & !fire")
        assert not eval_boolean(ast, self.membership("d1"))
        assert not eval_boolean(ast, self.membership("d2"))
        assert eval_boolean(ast, self.membership("d3"))

    def test_ubiquitous_term(self):
        for doc in self.GF_PRESENCE:
            assert eval_boolean(parse("a"), self.membership(doc))

    def test_unsatisfied_conjunction(self):
        ast = parse("fire & delivery")
        for doc in self.GF_PRESENCE:
            assert not eval_boolean(ast, self.membership(doc))

    def test_unknown_terms_are_absent(self):
        assert not eval_boolean(parse("platinum"), self.membership("d1"))
        assert eval_boolean(parse("!platinum"), self.membership("d1"))


# ---------------------------------------------------------------- property

_VARS = [f"v{i}" for i in range(12)]


def _asts():
    leaves = st.sampled_from(_VARS).map(Term)
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            inner.map(Not),
            st.lists(inner, min_size=2, max_size=3).map(lambda cs: And(tuple(cs))),
            st.lists(inner, min_size=2, max_size=3).map(lambda cs: Or(tuple(cs))),
        ),
        max_leaves=12,
    )


def _terms_of(node):
    if isinstance(node, Term):
        return {node.name}
    if isinstance(node, Not):
        return _terms_of(node.child)
    return set().union(*(_terms_of(c) for c in node.children))


@given(_asts())
@settings(max_examples=150, deadline=None)
def test_printer_round_trip(ast):
    assert parse(print_query(ast)) == ast


@given(_asts())
@settings(max_examples=100, deadline=None)
def test_dnf_preserves_semantics_exhaustively(ast):
    names = sorted(_terms_of(ast))
    dnf_ast = to_dnf(ast).to_ast()
    for values in itertools.product((False, True), repeat=len(names)):
        env = dict(zip(names, values))
        expected = eval_boolean(ast, lambda t: env.get(t, False))
        got = dnf_ast is not None and eval_boolean(dnf_ast, lambda t: env.get(t, False))
        assert got == expected


@given(_asts())
@settings(max_examples=100, deadline=None)
def test_dnf_shape_invariants(ast):
    dnf = to_dnf(ast)
    for clause in dnf.clauses:
        keys = [(lit.term, lit.negated) for lit in clause]
        assert keys == sorted(keys)
        terms = [lit.term for lit in clause]
        assert len(set(terms)) == len(terms)  # no complementary or duplicate literals
    keys = [[(lit.term, lit.negated) for lit in clause] for clause in dnf.clauses]
    assert keys == sorted(keys)
