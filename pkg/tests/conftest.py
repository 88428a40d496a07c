import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from termpatch import load_fixture  # noqa: E402
from termpatch.term import Appl, Int, List, Metavar, Str  # noqa: E402

LABELS = st.sampled_from(["a", "b", "f", "add_op", "file_info", "x y", 'q"uote', "é"])
LEAVES = st.one_of(
    st.builds(Int, st.integers(min_value=-10**30, max_value=10**30)),
    st.builds(Str, st.text(max_size=6)),
    st.builds(Appl, LABELS),
)


def terms(max_leaves=30):
    return st.recursive(
        LEAVES,
        lambda kids: st.one_of(
            st.builds(lambda lab, cs: Appl(lab, tuple(cs)), LABELS, st.lists(kids, max_size=4)),
            st.builds(List, st.lists(kids, max_size=4)),
        ),
        max_leaves=max_leaves,
    )


def small_terms():
    """Terms over a tiny alphabet so random pairs share structure."""
    leaf = st.one_of(st.builds(Appl, st.sampled_from("ab")), st.builds(Int, st.integers(0, 1)))
    return st.recursive(
        leaf,
        lambda kids: st.builds(lambda lab, cs: Appl(lab, tuple(cs)),
                               st.sampled_from("abc"), st.lists(kids, max_size=3)),
        max_leaves=12,
    )


def wildcard_free_patterns():
    leaf = st.one_of(
        st.builds(Appl, st.sampled_from("abc")),
        st.builds(Int, st.integers(0, 3)),
        st.builds(Metavar, st.sampled_from(["T_1", "T_2", "T_3"])),
    )
    return st.recursive(
        leaf,
        lambda kids: st.builds(lambda lab, cs: Appl(lab, tuple(cs)),
                               st.sampled_from("fg"), st.lists(kids, max_size=3)),
        max_leaves=10,
    )


@pytest.fixture(scope="session")
def distributive():
    return load_fixture("distributive")


@pytest.fixture(scope="session")
def add_argument():
    return load_fixture("add_argument")
