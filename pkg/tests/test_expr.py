"""The group-expression language: grammar, errors, evaluation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupkit.construct import dihedral
from groupkit.core import SizeCapError
from groupkit.expr import (
    Cyclic,
    CyclicPower,
    Dihedral,
    ExprError,
    ExprEvalError,
    ExprSyntaxError,
    Holomorph,
    Index,
    MAX_NESTING_DEPTH,
    Product,
    Semidirect,
    eval_expr,
    parse_and_eval,
    parse_expr,
)
from groupkit.iso import are_isomorphic, identify


class TestParse:
    def test_direct_product(self):
        assert parse_expr("Z8 x Z2") == Product(Cyclic(8), Cyclic(2))

    def test_semidirect_with_power_action(self):
        assert parse_expr("Z8 : Z2 [r^3]") == Semidirect(
            Cyclic(8), Cyclic(2), CyclicPower(3))

    def test_semidirect_with_indexed_action(self):
        assert parse_expr("(Z2 x D4) : Z2 [#1]") == Semidirect(
            Product(Cyclic(2), Dihedral(4)), Cyclic(2), Index(1))

    def test_leaves(self):
        assert parse_expr("D6") == Dihedral(6)
        assert parse_expr("Hol 8") == Holomorph(8)
        assert parse_expr("Hol8") == Holomorph(8)

    def test_product_associates_left(self):
        assert parse_expr("Z2 x Z3 x Z4") == Product(
            Product(Cyclic(2), Cyclic(3)), Cyclic(4))

    def test_semidirect_chains_left(self):
        e = parse_expr("Z7 : Z3 [#0] : Z2 [#0]")
        assert isinstance(e, Semidirect)
        assert isinstance(e.k_expr, Semidirect)

    def test_colon_binds_tighter_than_product(self):
        e = parse_expr("Z3 x Z8 : Z2 [r^3]")
        assert e == Product(Cyclic(3), Semidirect(Cyclic(8), Cyclic(2), CyclicPower(3)))

    def test_whitespace_insensitive(self):
        assert parse_expr("Z8:Z2[r^3]") == parse_expr("  Z 8 :\tZ2\n[ r^ 3 ]")

    def test_parentheses_regroup(self):
        grouped = parse_expr("(Z2 x Z3) x Z4")
        plain = parse_expr("Z2 x (Z3 x Z4)")
        assert grouped == Product(Product(Cyclic(2), Cyclic(3)), Cyclic(4))
        assert plain == Product(Cyclic(2), Product(Cyclic(3), Cyclic(4)))


class TestSyntaxErrors:
    @pytest.mark.parametrize(
        "text, position, expected_member",
        [
            ("Z8 : Z2 [q^3]", 9, "'r^'"),
            ("Z", 1, "integer"),
            ("Z0", 1, "positive integer"),
            ("Z2 &", 3, "'Z'"),
            ("Z2 x", 4, "'('"),
            ("(Z2 x Z3", 8, "')'"),
            ("Z2 Z3", 3, "end of input"),
            ("", 0, "'Hol'"),
            ("Z8 : Z2 r^3]", 8, "'['"),
            ("Z8 : Z2 []", 9, "'#'"),
            ("Z8 : Z2 [#1", 11, "']'"),
        ],
    )
    def test_position_and_expected_set(self, text, position, expected_member):
        with pytest.raises(ExprSyntaxError) as exc:
            parse_expr(text)
        assert exc.value.position == position
        assert expected_member in exc.value.expected

    def test_message_mentions_offset_and_expectation(self):
        with pytest.raises(ExprSyntaxError) as exc:
            parse_expr("Z2 x x Z3")
        message = str(exc.value)
        assert "offset 5" in message
        assert "expected" in message

    def test_nesting_cap(self):
        ok = "(" * MAX_NESTING_DEPTH + "Z2" + ")" * MAX_NESTING_DEPTH
        assert parse_expr(ok) == Cyclic(2)
        too_deep = "(" * (MAX_NESTING_DEPTH + 1) + "Z2" + ")" * (MAX_NESTING_DEPTH + 1)
        with pytest.raises(ExprSyntaxError):
            parse_expr(too_deep)

    def test_syntax_error_is_expr_error(self):
        with pytest.raises(ExprError):
            parse_expr("{}")


class TestEval:
    def test_power_action_builds_dihedral(self):
        g = parse_and_eval("Z8 : Z2 [r^7]")
        assert are_isomorphic(g, dihedral(8)) is not None

    def test_indexed_actions_enumerate_deterministically(self):
        displays = [identify(parse_and_eval(f"Z8 : Z2 [#{j}]")).display
                    for j in range(4)]
        assert displays == ["Z2 x Z8", "Z8 : Z2 [r^3]", "Z8 : Z2 [r^5]", "D8"]

    def test_exponent_not_coprime(self):
        with pytest.raises(ExprEvalError) as exc:
            parse_and_eval("Z8 : Z2 [r^2]")
        assert "gcd" in str(exc.value)

    def test_exponent_order_must_divide_acting_order(self):
        # 2 has multiplicative order 6 modulo 9, and 6 does not divide 2
        with pytest.raises(ExprEvalError) as exc:
            parse_and_eval("Z9 : Z2 [r^2]")
        assert "order 6" in str(exc.value)

    def test_index_out_of_range(self):
        with pytest.raises(ExprEvalError) as exc:
            parse_and_eval("Z8 : Z2 [#4]")
        assert "4 actions" in str(exc.value)

    def test_power_action_requires_cyclic_operands(self):
        with pytest.raises(ExprEvalError):
            parse_and_eval("D3 : Z2 [r^2]")
        with pytest.raises(ExprEvalError):
            parse_and_eval("(Z2 x Z2) : Z2 [r^1]")

    def test_size_cap_propagates(self):
        with pytest.raises(SizeCapError):
            parse_and_eval("Z9999")

    def test_trivial_power_action_matches_direct_product(self):
        g1 = parse_and_eval("Z5 : Z4 [r^1]")
        g2 = parse_and_eval("Z5 x Z4")
        assert g1.mul == g2.mul

    def test_exponent_reduces_modulo_order(self):
        g1 = parse_and_eval("Z8 : Z2 [r^3]")
        g2 = parse_and_eval("Z8 : Z2 [r^11]")
        assert g1.mul == g2.mul

    def test_generator_letters_assigned_in_parse_order(self):
        g = parse_and_eval("Z4 x Z3")
        assert g.elem_names[:4] == ("e", "s", "s^2", "r")
        assert g.name_of(3 * 3 + 1) == "r^3·s"

    def test_holomorph_leaf(self):
        assert parse_and_eval("Hol 5").order == 20
        assert parse_and_eval("Hol 1").order == 1


def _expr_strategy(max_leaves: int = 6):
    leaves = st.one_of(
        st.integers(1, 9).map(Cyclic),
        st.integers(1, 6).map(Dihedral),
        st.integers(1, 6).map(Holomorph),
    )

    def extend(children):
        products = st.tuples(children, children).map(lambda kv: Product(*kv))
        semis = st.tuples(
            children, children,
            st.one_of(st.integers(0, 9).map(CyclicPower), st.integers(0, 5).map(Index)),
        ).map(lambda kha: Semidirect(kha[0], kha[1], kha[2]))
        return st.one_of(products, semis)

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def _small_expr_strategy():
    leaves = st.one_of(
        st.integers(1, 6).map(Cyclic),
        st.integers(1, 3).map(Dihedral),
        st.integers(1, 5).map(Holomorph),
    )

    def extend(children):
        products = st.tuples(children, children).map(lambda kv: Product(*kv))
        semis = st.tuples(
            children, children,
            st.one_of(st.integers(0, 7).map(CyclicPower), st.integers(0, 3).map(Index)),
        ).map(lambda kha: Semidirect(kha[0], kha[1], kha[2]))
        return st.one_of(products, semis)

    return st.recursive(leaves, extend, max_leaves=3)


def _render(e) -> str:
    """Fully parenthesized canonical text for an AST node."""
    if isinstance(e, Cyclic):
        return f"Z{e.n}"
    if isinstance(e, Dihedral):
        return f"D{e.n}"
    if isinstance(e, Holomorph):
        return f"Hol {e.n}"
    if isinstance(e, Product):
        return f"({_render(e.left)} x {_render(e.right)})"
    action = (f"r^{e.action.i}" if isinstance(e.action, CyclicPower)
              else f"#{e.action.j}")
    return f"({_render(e.k_expr)} : {_render(e.h_expr)} [{action}])"


class TestParserProperties:
    @settings(max_examples=200)
    @given(_expr_strategy())
    def test_render_parse_round_trip(self, e):
        assert parse_expr(_render(e)) == e

    @settings(max_examples=400)
    @given(st.text(alphabet="ZDHolrx:[]()#^ 0123456789q&", max_size=24))
    def test_fuzz_never_crashes(self, text):
        try:
            parse_expr(text)
        except ExprSyntaxError:
            pass

    @settings(max_examples=50, deadline=None)
    @given(_small_expr_strategy())
    def test_eval_raises_only_documented_errors(self, e):
        try:
            g = eval_expr(e)
        except (ExprEvalError, SizeCapError):
            return
        assert g.order >= 1
