"""Infer generalized term rewriting rules from a before/after example pair.

Typical use::

    from termpatch import RuleInferrer, load_fixture

    fx = load_fixture("distributive")
    est = RuleInferrer.from_config(fx.config_text).fit(fx.before, fx.after)
    print(est.to_stratego())
"""
from .config import Config, parse_config
from .context import ContextSpec, RuleSite, select_rule_sites, site_terms
from .corpus import FIXTURE_NAMES, load_fixture
from .diff import CompSpec, DiffResult, EditOp, ELeaf, ENode, comparable, diff
from .engine import (
    Innermost, OnceTopDown, RewriteRule, TopDownAll, instantiate, match, rewrite,
)
from .estimator import RuleInferrer
from .generalize import (
    GeneralizationSpec, GeneralizationStep, MetavarTable, generalize_pair,
    generalize_term,
)
from .pipeline import Inference, check_rules, infer, weave_pair
from .rulegen import Signature, build_rules, emit_str, infer_signature, parse_str
from .term import (
    Appl, Int, List, LocationLabels, Metavar, Side, Str, Wildcard,
    normalize_locations, parse_pattern, parse_term, print_term, terms_equal,
)
from .weave import change_points, project, weave

__version__ = "0.1.0"
