import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_terms, wildcard_free_patterns
from termpatch.engine import (
    Innermost, OnceTopDown, RewriteRule, TopDownAll, instantiate, match, replay, rewrite,
)
from termpatch.exceptions import StepLimitExceeded, UnboundMetavariableError, WildcardOnRhsError
from termpatch.term import (
    Appl, Metavar, Wildcard, normalize_locations, parse_pattern, parse_term, subterm_at,
)

R1 = RewriteRule(
    "R1",
    parse_pattern("multiply_op(T_1,add_op(T_2,T_3,T_4,_),T_4,_)"),
    parse_pattern("add_op(multiply_op(T_1,T_2,T_4,gen_info()),"
                  "multiply_op(T_1,T_3,T_4,gen_info()),T_4,gen_info())"),
)


def ref(name, col=1):
    return f'var_ref_exp(var_ref_annotation(type_int(),"{name}"),file_info("t.c",1,{col}))'


class TestMatch:
    def test_wildcard(self):
        assert match(Wildcard(), parse_term("f(g(1))")) == {}

    def test_nonlinear_failure(self):
        assert match(parse_pattern("f(T_1,T_1)"), parse_term("f(a(),b())")) is None
        assert match(parse_pattern("f(T_1,T_1)"), parse_term("f(a(),a())")) == {"T_1": parse_term("a()")}

    def test_arity_and_label(self):
        assert match(parse_pattern("f(_)"), parse_term("f(1,2)")) is None
        assert match(parse_pattern("f(_)"), parse_term("g(1)")) is None
        assert match(parse_pattern('f("1")'), parse_term("f(1)")) is None
        assert match(parse_pattern("[T_1,_]"), parse_term("f(1,2)")) is None

    def test_r1_on_fixture(self, distributive):
        expr = subterm_at(distributive.before, (0, 1))
        s = match(R1.lhs, expr)
        assert s is not None
        assert s["T_1"] == expr.children[0]
        assert s["T_2"] == expr.children[1].children[0]
        assert s["T_3"] == expr.children[1].children[1]
        assert s["T_4"] == parse_term("binary_op_annotation(type_int())")


class TestInstantiate:
    def test_metavar(self):
        assert instantiate(Metavar("T_1"), {"T_1": parse_term("x()")}) == parse_term("x()")

    def test_r1_rhs(self, distributive):
        s = match(R1.lhs, subterm_at(distributive.before, (0, 1)))
        got = instantiate(R1.rhs, s)
        assert normalize_locations(got) == normalize_locations(subterm_at(distributive.after, (0, 1)))

    def test_unbound(self):
        with pytest.raises(UnboundMetavariableError):
            instantiate(Metavar("T_2"), {"T_1": parse_term("x()")})

    def test_wildcard(self):
        with pytest.raises(WildcardOnRhsError):
            instantiate(parse_pattern("f(_)"), {})


class TestRewrite:
    def test_no_match(self):
        t = parse_term("f(g())")
        assert rewrite(t, [R1], TopDownAll()) == (t, [])

    def test_topdown_distributes_fresh_names(self):
        ann = "binary_op_annotation(type_double())"
        before = parse_term(
            f"assign_op({ref('w')},multiply_op({ref('b')},add_op({ref('c')},{ref('d')},{ann},"
            f'file_info("t.c",1,9)),{ann},file_info("t.c",1,5)),{ann},file_info("t.c",1,3))')
        # distributive law applied by hand: b*(c+d) = b*c + b*d
        expected = parse_term(
            f"assign_op({ref('w')},add_op(multiply_op({ref('b')},{ref('c')},{ann},gen_info()),"
            f"multiply_op({ref('b')},{ref('d')},{ann},gen_info()),{ann},gen_info()),"
            f'{ann},file_info("t.c",1,3))')
        got, trace = rewrite(before, [R1], TopDownAll())
        assert normalize_locations(got) == normalize_locations(expected)
        assert trace == [("R1", (1,))]

    def test_innermost_step_limit(self):
        rule = RewriteRule("R1", parse_pattern("f(T_1)"), parse_pattern("f(f(T_1))"))
        with pytest.raises(StepLimitExceeded):
            rewrite(parse_term("f(a())"), [rule], Innermost(10))

    def test_innermost_normal_form(self):
        rules = [RewriteRule("R1", parse_pattern("s(z())"), parse_pattern("one()")),
                 RewriteRule("R2", parse_pattern("p(one(),one())"), parse_pattern("two()"))]
        got, trace = rewrite(parse_term("g(p(s(z()),s(z())))"), rules, Innermost(10))
        assert got == parse_term("g(two())")
        assert trace == [("R1", (0, 0)), ("R1", (0, 1)), ("R2", (0,))]

    def test_innermost_max_steps_validated(self):
        with pytest.raises(ValueError):
            Innermost(0)

    def test_once_stops_after_first(self):
        rule = RewriteRule("R1", parse_pattern("a()"), parse_pattern("b()"))
        got, trace = rewrite(parse_term("f(a(),a())"), [rule], OnceTopDown())
        assert got == parse_term("f(b(),a())")
        assert trace == [("R1", (0,))]

    def test_topdown_continues_into_replacement(self):
        rule = RewriteRule("R1", parse_pattern("a(T_1)"), parse_pattern("b(T_1,T_1)"))
        got, trace = rewrite(parse_term("a(a(c()))"), [rule], TopDownAll())
        # outer rewritten once, then both copies of the inner a(...) are visited
        assert got == parse_term("b(b(c(),c()),b(c(),c()))")
        assert trace == [("R1", ()), ("R1", (0,)), ("R1", (1,))]

    def test_rule_order_within_node(self):
        rules = [RewriteRule("R1", parse_pattern("a()"), parse_pattern("x()")),
                 RewriteRule("R2", parse_pattern("_"), parse_pattern("y()"))]
        got, trace = rewrite(parse_term("a()"), rules, TopDownAll())
        assert got == parse_term("x()") and trace == [("R1", ())]


@settings(max_examples=200)
@given(wildcard_free_patterns(), st.data())
def test_match_instantiate_inverse(p, data):
    s = {name: data.draw(small_terms()) for name in ("T_1", "T_2", "T_3")}
    t = instantiate(p, s)
    got = match(p, t)
    assert got is not None
    assert instantiate(p, got) == t


@settings(max_examples=100)
@given(small_terms())
def test_trace_replay(t):
    rules = [RewriteRule("R1", parse_pattern("a(T_1)"), parse_pattern("b(T_1)")),
             RewriteRule("R2", parse_pattern("c(T_1,_)"), parse_pattern("a(T_1)"))]
    for strategy in (OnceTopDown(), TopDownAll(), Innermost(1000)):
        got, trace = rewrite(t, rules, strategy)
        assert replay(t, rules, trace) == got
