import hypothesis
import hypothesis.strategies as st
import pytest

from amiable.core import MulTable
from amiable.enumeration import census

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@st.composite
def tables(draw, min_order=1, max_order=8):
    """Arbitrary magmas; almost never associative past order 2."""
    n = draw(st.integers(min_order, max_order))
    entries = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    return MulTable(n, tuple(entries))


def small_semigroups(max_order=4):
    return [t for n in range(1, max_order + 1) for t in census(n)]


@st.composite
def semigroups(draw, max_order=4):
    """A census representative of order <= max_order under a random relabelling."""
    t = draw(st.sampled_from(small_semigroups(max_order)))
    perm = draw(st.permutations(range(t.order)))
    return t.relabel(perm)


@pytest.fixture(scope="session")
def census_upto5():
    return [t for n in range(1, 6) for t in census(n)]
