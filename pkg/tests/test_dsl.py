"""Lexer, parser, printer, and evaluator of the expression language."""

import pytest
from hypothesis import given, strategies as st

from btlogic import (
    Binary,
    BinaryOp,
    F,
    Ident,
    Literal,
    SourceError,
    T,
    Task,
    U,
    Unary,
    UnaryOp,
    evaluate,
    parse,
    pretty_print,
    tokenize,
)
from btlogic.dsl import RESERVED_WORDS, TokKind
from oracle_tables import BINARY_TABLES, UNARY_TABLE

BY_LETTER = {"F": F, "U": U, "T": T}


class TestTokenizer:
    def test_kinds_and_positions(self):
        kinds = [t.kind for t in tokenize("a && b")]
        assert kinds == [TokKind.IDENT, TokKind.ANDAND, TokKind.IDENT, TokKind.EOF]
        cols = [t.col for t in tokenize("a && b")][:3]
        assert cols == [1, 3, 6]

    def test_unary_symbols(self):
        kinds = [t.kind for t in tokenize("!x || ~y")][:-1]
        assert kinds == [TokKind.BANG, TokKind.IDENT, TokKind.OROR, TokKind.TILDE, TokKind.IDENT]

    def test_literal_words(self):
        for word in ("F", "U", "T", "failing", "running", "complete"):
            tok = tokenize(word)[0]
            assert tok.kind is TokKind.LIT
            assert tok.value is not None

    def test_identifiers_may_contain_digits_and_underscores(self):
        tok = tokenize("kettle_on2")[0]
        assert tok.kind is TokKind.IDENT and tok.text == "kettle_on2"

    def test_comments_and_blank_lines_skipped(self):
        toks = tokenize("a # first operand\n  && b # rest\n")
        assert [t.text for t in toks[:-1]] == ["a", "&&", "b"]
        assert toks[2].line == 2

    def test_unknown_character_positioned(self):
        with pytest.raises(SourceError) as exc:
            tokenize("a ? b")
        assert exc.value.kind == "lex"
        assert (exc.value.line, exc.value.col) == (1, 3)

    def test_single_ampersand_rejected(self):
        with pytest.raises(SourceError):
            tokenize("a & b")


class TestParser:
    def test_and_binds_tighter_than_or(self):
        assert parse("a || b && c") == Binary(
            BinaryOp.DISJ, Ident("a"), Binary(BinaryOp.CONJ, Ident("b"), Ident("c"))
        )

    def test_or_chain_groups_left(self):
        assert parse("a && b || c || d") == Binary(
            BinaryOp.DISJ,
            Binary(BinaryOp.DISJ, Binary(BinaryOp.CONJ, Ident("a"), Ident("b")), Ident("c")),
            Ident("d"),
        )

    def test_strict_binds_tighter_than_lenient(self):
        assert parse("x * y + z") == Binary(
            BinaryOp.LENIENT, Binary(BinaryOp.STRICT, Ident("x"), Ident("y")), Ident("z")
        )

    def test_disregard_peers_with_strict(self):
        assert parse("a % b * c") == Binary(
            BinaryOp.STRICT, Binary(BinaryOp.DISREGARD, Ident("a"), Ident("b")), Ident("c")
        )

    def test_parentheses_override(self):
        assert parse("(a || b) && c") == Binary(
            BinaryOp.CONJ, Binary(BinaryOp.DISJ, Ident("a"), Ident("b")), Ident("c")
        )

    def test_prefix_operators(self):
        assert parse("!a && ~b") == Binary(
            BinaryOp.CONJ, Unary(UnaryOp.NOT, Ident("a")), Unary(UnaryOp.CONDONE, Ident("b"))
        )
        assert parse("+U") == parse("+(U)") == Unary(UnaryOp.PROMOTE, Literal(U))
        assert parse("-x") == Unary(UnaryOp.DEMOTE, Ident("x"))
        assert parse("a + -b") == Binary(
            BinaryOp.LENIENT, Ident("a"), Unary(UnaryOp.DEMOTE, Ident("b"))
        )

    def test_literals(self):
        assert parse("running") == parse("U") == Literal(U)

    @pytest.mark.parametrize(
        "source",
        ["a - b", "a &&", "(a", ")", "", "a b", "&& a", "a || || b"],
    )
    def test_malformed_input_rejected(self, source):
        with pytest.raises(SourceError) as exc:
            parse(source)
        assert exc.value.kind == "parse"

    def test_binary_minus_error_position(self):
        with pytest.raises(SourceError) as exc:
            parse("a - b")
        assert (exc.value.line, exc.value.col) == (1, 3)

    def test_error_position_spans_lines(self):
        with pytest.raises(SourceError) as exc:
            parse("a &&\n  )")
        assert (exc.value.line, exc.value.col) == (2, 3)


class TestPrettyPrint:
    def test_omits_redundant_parens(self):
        e = Binary(BinaryOp.DISJ, Ident("a"), Binary(BinaryOp.CONJ, Ident("b"), Ident("c")))
        assert pretty_print(e) == "a || b && c"

    def test_parenthesizes_loose_subtrees(self):
        e = Binary(BinaryOp.CONJ, Binary(BinaryOp.DISJ, Ident("a"), Ident("b")), Ident("c"))
        assert pretty_print(e) == "(a || b) && c"

    def test_unary(self):
        assert pretty_print(Unary(UnaryOp.NOT, Ident("x"))) == "!x"
        e = Unary(UnaryOp.PROMOTE, Binary(BinaryOp.CONJ, Ident("a"), Ident("b")))
        assert pretty_print(e) == "+(a && b)"

    def test_right_association_keeps_parens(self):
        e = Binary(BinaryOp.STRICT, Ident("a"), Binary(BinaryOp.STRICT, Ident("b"), Ident("c")))
        assert pretty_print(e) == "a * (b * c)"


_names = st.from_regex(r"[a-z][a-z0-9_]{0,6}", fullmatch=True).filter(
    lambda s: s not in RESERVED_WORDS
)
_leaves = st.one_of(
    st.sampled_from([F, U, T]).map(Literal),
    _names.map(Ident),
)
_exprs = st.recursive(
    _leaves,
    lambda sub: st.one_of(
        st.builds(Unary, st.sampled_from(list(UnaryOp)), sub),
        st.builds(Binary, st.sampled_from(list(BinaryOp)), sub, sub),
    ),
    max_leaves=25,
)
_literal_exprs = st.recursive(
    st.sampled_from([F, U, T]).map(Literal),
    lambda sub: st.one_of(
        st.builds(Unary, st.sampled_from(list(UnaryOp)), sub),
        st.builds(Binary, st.sampled_from(list(BinaryOp)), sub, sub),
    ),
    max_leaves=25,
)


@given(_exprs)
def test_print_parse_round_trip(expr):
    assert parse(pretty_print(expr)) == expr


_UNARY_NAMES = {
    UnaryOp.NOT: "negate",
    UnaryOp.PROMOTE: "promote",
    UnaryOp.DEMOTE: "demote",
    UnaryOp.CONDONE: "condone",
}


def table_eval(expr) -> str:
    """Independent evaluator: structural recursion over the frozen tables."""
    if isinstance(expr, Literal):
        return expr.value.letter
    if isinstance(expr, Unary):
        return UNARY_TABLE[_UNARY_NAMES[expr.op]][table_eval(expr.operand)]
    return BINARY_TABLES[expr.op.name.lower()][table_eval(expr.left), table_eval(expr.right)]


@given(_literal_exprs)
def test_evaluator_agrees_with_table_fold_on_literal_trees(expr):
    assert evaluate(expr, {}) == BY_LETTER[table_eval(expr)]


def _probe(name, status):
    """Task returning a fixed status, recording each tick."""
    log = []

    def fn(world):
        log.append(name)
        return status

    return Task(name, fn), log


class TestEvaluate:
    def test_literal_expressions(self):
        assert evaluate(parse("F || T"), {}) == T
        assert evaluate(parse("U && T"), {}) == U
        assert evaluate(parse("+(U)"), {}) == T
        assert evaluate(parse("!F"), {}) == T

    def test_bool_variables_embed(self):
        env = {"cold_water": True, "kettle_on": False}
        assert evaluate(parse("cold_water && kettle_on"), env) == F

    def test_status_constants_and_callables(self):
        env = {"a": U, "b": lambda world: True}
        assert evaluate(parse("a || b"), env) == U
        assert evaluate(parse("b"), env) == T

    def test_conj_skips_right_task_unless_left_complete(self):
        task, log = _probe("t", T)
        assert evaluate(parse("F && t"), {"t": task}) == F
        assert log == []
        assert evaluate(parse("T && t"), {"t": task}) == T
        assert log == ["t"]

    def test_disj_skips_right_task_unless_left_failing(self):
        task, log = _probe("t", T)
        assert evaluate(parse("T || t"), {"t": task}) == T
        assert log == []

    def test_disregard_runs_both_and_keeps_left(self):
        task, log = _probe("t", F)
        assert evaluate(parse("U % t"), {"t": task}) == U
        assert log == ["t"]

    def test_task_runs_at_most_once_per_evaluation(self):
        task, log = _probe("a", T)
        assert evaluate(parse("a + a"), {"a": task}) == T
        assert log == ["a"]
        log.clear()
        assert evaluate(parse("a && a"), {"a": task}) == T
        assert log == ["a"]

    def test_unbound_identifier(self):
        with pytest.raises(SourceError) as exc:
            evaluate(parse("x && y"), {"x": T})
        assert exc.value.kind == "unbound-identifier"
        assert "y" in str(exc.value)
        assert (exc.value.line, exc.value.col) == (1, 6)

    def test_unsupported_binding_type(self):
        with pytest.raises(TypeError):
            evaluate(parse("n"), {"n": 3})
