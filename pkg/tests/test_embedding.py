from itertools import permutations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from amiable.core import MulTable, adjoin_identity, adjoin_zero, opposite
from amiable.embedding import (contains_M, embeddings, find_embedding, generated_subsemigroup,
                               is_homomorphism, is_isomorphic, m_copies, noncommuting_idempotent_pairs,
                               pair_generates_M)
from amiable.enumeration import census
from amiable.fixtures import M, TABLE3, TABLE_V

from conftest import semigroups


def names(t, xs):
    return {t.name(x) for x in xs}


def brute_isomorphisms(t1, t2):
    n = t1.order
    return [p for p in permutations(range(n)) if is_homomorphism(t1, t2, p)]


def test_isomorphic_to_self_is_identity():
    assert is_isomorphic(M, M).map == (0, 1, 2, 3)


def test_M_isomorphic_to_opposite():
    iso = is_isomorphic(M, opposite(M))
    assert iso is not None
    assert iso.map == min(brute_isomorphisms(M, opposite(M)))


def test_M1_not_isomorphic_to_M0():
    assert is_isomorphic(adjoin_identity(M), adjoin_zero(M)) is None
    assert brute_isomorphisms(adjoin_identity(M), adjoin_zero(M)) == []


@given(semigroups(max_order=4), st.data())
def test_isomorphism_is_least_witness(t, data):
    perm = data.draw(st.permutations(range(t.order)))
    u = t.relabel(perm)
    iso = is_isomorphic(t, u)
    assert iso is not None
    assert iso.map == min(brute_isomorphisms(t, u))


@given(semigroups(max_order=3), semigroups(max_order=3), semigroups(max_order=3))
def test_isomorphism_is_equivalence(s, t, u):
    assert is_isomorphic(s, s) is not None
    assert (is_isomorphic(s, t) is None) == (is_isomorphic(t, s) is None)
    if is_isomorphic(s, t) and is_isomorphic(t, u):
        assert is_isomorphic(s, u) is not None


def test_generated_subsemigroup():
    assert generated_subsemigroup(M, {0, 1}) == {0, 1, 2, 3}
    sub = generated_subsemigroup(TABLE3, {TABLE3.index("a"), TABLE3.index("e")})
    assert names(TABLE3, sub) == set("aefdcg")
    assert generated_subsemigroup(M, {0}) == {0}
    with pytest.raises(ValueError):
        generated_subsemigroup(M, set())


def test_noncommuting_pairs():
    assert noncommuting_idempotent_pairs(M) == [(0, 1)]
    pairs = {frozenset(names(TABLE3, p)) for p in noncommuting_idempotent_pairs(TABLE3)}
    assert {frozenset("ae"), frozenset("ha")} <= pairs
    semilattice = MulTable(2, (0, 1, 1, 1))
    assert noncommuting_idempotent_pairs(semilattice) == []


def test_pair_generates_M():
    assert pair_generates_M(M, 0, 1)
    t = TABLE3
    assert not pair_generates_M(t, t.index("a"), t.index("e"))
    assert pair_generates_M(t, t.index("h"), t.index("a"))
    with pytest.raises(ValueError):
        pair_generates_M(M, 0, 3)
    with pytest.raises(ValueError):
        pair_generates_M(M, 0, 2)


def test_contains_M():
    emb = contains_M(TABLE3)
    assert names(TABLE3, emb.map) == set("abcd")
    images = [names(TABLE3, e.map) for e in m_copies(TABLE3)]
    assert set("abcd") in images and set("hacf") in images
    emb = contains_M(TABLE_V)
    assert emb.map == (0, 1, 2, 3)
    assert contains_M(MulTable(2, (0, 1, 1, 1))) is None


def test_pair_search_matches_general_embedding_search():
    for n in range(1, 6):
        for t in census(n, "amiable"):
            pair = contains_M(t)
            general = find_embedding(M, t)
            assert (pair is None) == (general is None)
            if pair:
                assert pair.map == general.map
                assert [e.map for e in m_copies(t)] == [e.map for e in embeddings(M, t)]


@given(semigroups(max_order=4), st.data())
def test_contains_M_invariant_under_relabeling(t, data):
    for host in (t, M, TABLE3, adjoin_zero(M)):
        perm = data.draw(st.permutations(range(host.order)))
        assert (contains_M(host) is None) == (contains_M(host.relabel(perm)) is None)
