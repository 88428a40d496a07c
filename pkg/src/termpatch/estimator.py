"""Scikit-learn style front end.

``fit`` learns rewrite rules from before/after term pairs; ``transform``
rewrites new terms with them.  Hyperparameters mirror the config file
directives so estimators can be cloned, grid-searched and pickled like any
other transformer.
"""
from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .config import Config, parse_config
from .context import ContextSpec
from .diff import CompSpec
from .engine import RewriteRule, rewrite
from .generalize import GeneralizationSpec, GeneralizationStep
from .pipeline import infer
from .rulegen import emit_str, infer_signature
from .term import LocationLabels, normalize_locations
from .validation import check_strategy, check_term_pairs, check_terms

__all__ = ["RuleInferrer"]


class RuleInferrer(TransformerMixin, BaseEstimator):
    """Rewrite-rule inference from example pairs.

    Parameters
    ----------
    generalize : sequence of (roots, replace) pairs, default=()
        Ordered generalization steps.  Under every subtree whose label is in
        ``roots``, subtrees labeled in ``replace`` become metavariables.
    context : iterable of str, default=()
        Labels of interest used to anchor insertions and deletions.
    locations : iterable of str, default=("file_info",)
        Labels of source-location subterms.
    comparable : sequence of iterables of str, default=()
        Classes of labels the diff treats as interchangeable.
    strategy : {"topdown", "once", "innermost"}, default="topdown"
        Rewriting strategy used by :meth:`transform`.
    max_steps : int, default=10000
        Step bound for the ``"innermost"`` strategy.

    Attributes
    ----------
    rules_ : list of RewriteRule
        Inferred rules, named ``R1, R2, ...`` in generation order.
    signature_ : Signature
        Constructors observed in the training terms and the rules.
    config_ : Config
        Validated configuration built from the parameters.
    n_rules_ : int
    """

    def __init__(self, generalize=(), context=(), locations=("file_info",),
                 comparable=(), strategy="topdown", max_steps=10000):
        self.generalize = generalize
        self.context = context
        self.locations = locations
        self.comparable = comparable
        self.strategy = strategy
        self.max_steps = max_steps

    @classmethod
    def from_config(cls, text, **kwargs):
        """Build an estimator from config-file text."""
        cfg = parse_config(text)
        params = dict(
            generalize=tuple((tuple(sorted(s.roots)), tuple(sorted(s.replace)))
                             for s in cfg.generalization.steps),
            context=tuple(sorted(cfg.context.labels)),
            locations=tuple(sorted(cfg.locations.labels)),
            comparable=tuple(tuple(sorted(c)) for c in cfg.comparable.classes),
        )
        params.update(kwargs)
        return cls(**params)

    def _make_config(self):
        steps = tuple(GeneralizationStep(roots, replace) for roots, replace in self.generalize)
        return Config(
            generalization=GeneralizationSpec(steps),
            context=ContextSpec(self.context),
            locations=LocationLabels(self.locations),
            comparable=CompSpec(tuple(self.comparable)),
        )

    def fit(self, X, y):
        """Infer rules from before terms ``X`` and after terms ``y``.

        Each may be a single term (or aterm text) or a sequence of them.
        Rules from several pairs are concatenated and renumbered.
        """
        before, after = check_term_pairs(X, y)
        check_strategy(self.strategy, self.max_steps)
        self.config_ = self._make_config()
        rules = []
        for b, a in zip(before, after):
            rules.extend(infer(b, a, self.config_).rules)
        self.rules_ = [RewriteRule(f"R{k}", r.lhs, r.rhs) for k, r in enumerate(rules, 1)]
        patterns = [p for r in self.rules_ for p in (r.lhs, r.rhs)]
        self.signature_ = infer_signature([*before, *after, *patterns])
        self.n_rules_ = len(self.rules_)
        return self

    def transform(self, X):
        """Rewrite each term of ``X``; returns a list of terms."""
        check_is_fitted(self, "rules_")
        strategy = check_strategy(self.strategy, self.max_steps)
        return [rewrite(t, self.rules_, strategy)[0] for t in check_terms(X)]

    def score(self, X, y):
        """Fraction of terms whose rewrite equals the target modulo locations."""
        targets = check_terms(y)
        results = self.transform(X)
        if len(results) != len(targets):
            raise ValueError("X and y have different lengths")
        loc = self.config_.locations
        hits = sum(normalize_locations(r, loc) == normalize_locations(t, loc)
                   for r, t in zip(results, targets))
        return hits / len(targets)

    def to_stratego(self):
        """The fitted rules as Stratego ``.str`` source text."""
        check_is_fitted(self, "rules_")
        return emit_str(self.rules_, self.signature_)
