import re

import pytest

from termpatch.config import parse_config
from termpatch.engine import TopDownAll, rewrite
from termpatch.exceptions import ArityConflictError, ClosednessError, InputError
from termpatch.pipeline import infer, weave_pair
from termpatch.rulegen import build_rules, emit_str, infer_signature, parse_str
from termpatch.term import (
    Appl, normalize_locations, parse_pattern, parse_term, print_term,
)

PAPER_R1 = """rules
R1 : multiply_op(
        T_1, add_op(T_2, T_3, T_4, _),
        T_4, _)
     ->
     add_op(
        multiply_op(T_1, T_2, T_4, gen_info()),
        multiply_op(T_1, T_3, T_4, gen_info()),
        T_4, gen_info())
"""


def test_distributive_reproduces_r1(distributive):
    _, w = weave_pair(distributive.before, distributive.after, distributive.config)
    cfg = distributive.config
    rules = build_rules(w, cfg.generalization, cfg.context, cfg.locations)
    assert rules == parse_str(PAPER_R1)


def test_identical_terms_give_no_rules(distributive):
    assert infer(distributive.before, distributive.before, distributive.config).rules == ()


def test_add_argument_two_rules(add_argument):
    result = infer(add_argument.before, add_argument.after, add_argument.config)
    assert [r.name for r in result.rules] == ["R1", "R2"]
    assert [r.lhs.label for r in result.rules] == ["variable_declaration_list", "function_call_exp"]
    # each rule alone rewrites exactly its own site
    for rule in result.rules:
        _, trace = rewrite(add_argument.before, [rule], TopDownAll())
        assert len(trace) == 1


def test_closedness_violation_is_an_error():
    before = parse_term("call(f(),[v(1)])")
    after = parse_term("call(f(),[v(1),v(2)])")
    cfg = parse_config("context call\ngeneralize roots=call replace=v\n")
    with pytest.raises(ClosednessError, match="T_2"):
        infer(before, after, cfg)


class TestSignature:
    def test_gen_info(self):
        assert infer_signature([parse_term("gen_info()")]).constructors == {("gen_info", 0)}

    def test_empty(self):
        assert infer_signature([]).constructors == {("gen_info", 0)}

    def test_dedupe(self):
        t = parse_term("add_op(a(),b(),c(),d())")
        sig = infer_signature([t, t])
        assert ("add_op", 4) in sig.constructors
        assert sum(1 for n, _ in sig.constructors if n == "add_op") == 1

    def test_lists_and_metavariables_excluded(self):
        sig = infer_signature([parse_pattern("f([T_1,_],1)")])
        assert sig.constructors == {("f", 2), ("gen_info", 0)}

    def test_arity_conflict(self):
        with pytest.raises(ArityConflictError):
            infer_signature([parse_term("f(g(),g(1))")])


class TestEmit:
    def test_layout(self, distributive):
        result = infer(distributive.before, distributive.after, distributive.config)
        text = result.to_str()
        lines = text.splitlines()
        assert lines[0] == "module generated-rules"
        assert "signature" in lines and "  constructors" in lines and "rules" in lines
        assert "    file_info : Term * Term * Term -> Term" in lines
        assert "    gen_info : Term" in lines
        assert "    add_op : Term * Term * Term * Term -> Term" in lines
        rule_lines = [l for l in lines if re.match(r"\s+R\d+ : ", l)]
        assert rule_lines == [
            "  R1 : multiply_op(T_1,add_op(T_2,T_3,T_4,_),T_4,_) -> "
            "add_op(multiply_op(T_1,T_2,T_4,gen_info()),multiply_op(T_1,T_3,T_4,gen_info()),"
            "T_4,gen_info())"]
        assert text.endswith("\n") and "\r" not in text

    def test_zero_rules(self):
        text = emit_str([], infer_signature([]))
        assert text.splitlines()[-1] == "rules"
        assert parse_str(text) == []

    def test_two_rules_in_order(self, add_argument):
        result = infer(add_argument.before, add_argument.after, add_argument.config)
        rule_lines = [l.strip() for l in result.to_str().splitlines() if re.match(r"\s+R\d", l)]
        assert [l.split(" :")[0] for l in rule_lines] == ["R1", "R2"]

    @pytest.mark.parametrize("name", ["distributive", "add_argument"])
    def test_parse_back(self, name, request):
        fx = request.getfixturevalue(name)
        result = infer(fx.before, fx.after, fx.config)
        assert tuple(parse_str(result.to_str())) == result.rules

    def test_quoted_constructor(self):
        sig = infer_signature([Appl("a b", (Appl("c"),))])
        assert '    "a b" : Term -> Term' in emit_str([], sig).splitlines()


class TestParseStr:
    def test_missing_rules_section(self):
        with pytest.raises(InputError):
            parse_str("module x\n")

    def test_missing_arrow(self):
        with pytest.raises(InputError):
            parse_str("rules\n  R1 : f() g()\n")

    def test_wildcard_rhs_rejected(self):
        with pytest.raises(ClosednessError):
            parse_str("rules\n  R1 : f(T_1) -> g(_)\n")

    def test_negative_integers_next_to_arrow(self):
        (rule,) = parse_str("rules\n R1 : f(-1)->f(-2)\n")
        assert print_term(rule.rhs) == "f(-2)"


@pytest.mark.parametrize("name", ["distributive", "add_argument"])
def test_master_round_trip(name, request):
    fx = request.getfixturevalue(name)
    rules = parse_str(infer(fx.before, fx.after, fx.config).to_str())
    got, _ = rewrite(fx.before, rules, TopDownAll())
    assert normalize_locations(got) == normalize_locations(fx.after)


def test_determinism(add_argument):
    texts = {infer(add_argument.before, add_argument.after, add_argument.config).to_str()
             for _ in range(3)}
    assert len(texts) == 1
