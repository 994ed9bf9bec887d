from itertools import product

import pytest
from hypothesis import given
import hypothesis.strategies as st

from amiable.core import (MulTable, TableFormatError, adjoin_identity, adjoin_zero, associativity_violation,
                          find_identity, find_zero, format_table, idempotents, is_associative,
                          is_associative_by_translations, opposite, parse_table, with_one)
from amiable.embedding import is_isomorphic
from amiable.fixtures import M, TABLE2, TABLE3
from amiable.oracles import backtrack_labeled

from conftest import semigroups, tables

M_TEXT = "4\n0 2 2 2\n3 1 2 3\n2 2 2 2\n3 2 2 2\n"


def test_parse_M():
    t = parse_table(M_TEXT)
    assert t == M
    assert [t.name(i) for i in range(4)] == ["a", "b", "c", "d"]
    assert t.mul(t.index("a"), t.index("b")) == t.index("c")


def test_parse_trivial():
    t = parse_table("1\n0")
    assert t.order == 1 and t.entries == (0,)


def test_parse_comments_and_blank_lines():
    t = parse_table("# M\n\n4\n0 2 2 2\n# row b\n3 1 2 3\n2 2 2 2\n3 2 2 2\n")
    assert t == M


@pytest.mark.parametrize("text, line", [
    ("2\n0 0\n0 1\n1 1\n", 4),
    ("2\n0 0\n0 2\n", 3),
    ("2\n0 0\n0\n", 3),
    ("x\n0\n", 1),
    ("3\n0 0 0\n", 3),
    ("", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(TableFormatError) as info:
        parse_table(text)
    assert info.value.line == line


def test_format_is_canonical():
    assert format_table(M) == M_TEXT


@given(tables(max_order=6))
def test_parse_format_roundtrip(t):
    text = format_table(t)
    assert parse_table(text) == t
    assert format_table(parse_table(text)) == text


def test_names_must_be_distinct():
    with pytest.raises(ValueError):
        MulTable(2, (0, 0, 0, 0), ("a", "a"))
    with pytest.raises(ValueError):
        MulTable(2, (0, 0, 0, 2))


def test_fixtures_associative():
    for t in (M, TABLE2, TABLE3):
        assert is_associative(t)
        assert is_associative_by_translations(t)


def test_cyclic_group_of_order_two_is_associative():
    # 0*0 = 1, 0*1 = 0, 1*0 = 0, 1*1 = 1: the group of order 2 with identity 1
    t = MulTable(2, (1, 0, 0, 1))
    bad = [(x, y, z) for x, y, z in product(range(2), repeat=3)
           if t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z))]
    assert bad == []
    assert is_associative(t)


def test_nonassociative_order_two():
    # 0*0 = 1, everything else 0: (00)1 = 0 but 0(01) = 1
    t = MulTable(2, (1, 0, 0, 0))
    assert associativity_violation(t) == (0, 0, 1)
    assert not is_associative(t)
    assert not is_associative_by_translations(t)


def test_associativity_methods_agree_exhaustively_upto_3():
    for n in (1, 2, 3):
        for e in product(range(n), repeat=n * n):
            t = MulTable(n, e)
            assert is_associative(t) == is_associative_by_translations(t)


def test_associativity_methods_on_labeled_order4_semigroups():
    labeled = backtrack_labeled(4)
    assert len(labeled) == 3492
    for e in labeled:
        t = MulTable(4, e)
        assert is_associative_by_translations(t)
        # one changed cell usually breaks associativity; both methods must agree either way
        mutated = list(e)
        mutated[5] = (mutated[5] + 1) % 4
        u = MulTable(4, tuple(mutated))
        assert is_associative(u) == is_associative_by_translations(u)


@given(tables(max_order=8))
def test_associativity_methods_agree_random(t):
    assert is_associative(t) == is_associative_by_translations(t)


def test_idempotents():
    assert idempotents(M) == {0, 1, 2}
    assert idempotents(TABLE3) == {TABLE3.index(x) for x in "abceh"}
    assert idempotents(MulTable(1, (0,))) == {0}


def test_adjoin_identity_and_zero():
    m1 = adjoin_identity(M)
    m0 = adjoin_zero(M)
    assert m1.order == m0.order == 5
    assert find_identity(m1) == 4
    assert find_zero(m0) == 4
    for t in (m1, m0):
        assert is_associative(t)
        assert t.restrict(range(4)) == M
    assert is_isomorphic(m1, m0) is None


def test_adjoin_zero_trivial_is_semilattice():
    t = adjoin_zero(MulTable(1, (0,)))
    assert t.rows() == [[0, 1], [1, 1]]
    assert idempotents(t) == {0, 1}


@given(semigroups(max_order=4))
def test_adjoin_preserves_associativity(t):
    assert is_associative(adjoin_identity(t))
    assert is_associative(adjoin_zero(t))


def test_with_one():
    u, one = with_one(M)
    assert one == 4 and u == adjoin_identity(M)
    m1 = adjoin_identity(M)
    assert with_one(m1) == (m1, 4)
    triv = MulTable(1, (0,))
    assert with_one(triv) == (triv, 0)


@given(semigroups(max_order=4))
def test_with_one_has_identity_and_restricts(t):
    u, one = with_one(t)
    assert find_identity(u) == one
    assert u.restrict(range(t.order)) == t


def test_find_zero():
    assert find_zero(M) == M.index("c")
    assert find_zero(TABLE2) == TABLE2.index("e")
    assert find_zero(adjoin_identity(M)) == M.index("c")
    assert find_zero(MulTable(2, (0, 0, 1, 1))) is None


def test_opposite():
    assert opposite(opposite(M)) == M
    semilattice = MulTable(2, (0, 1, 1, 1))
    assert opposite(semilattice) == semilattice
    assert is_isomorphic(M, opposite(M)) is not None


@given(semigroups(max_order=4))
def test_opposite_of_semigroup_is_semigroup(t):
    assert is_associative(opposite(t))


@given(tables(max_order=4), st.data())
def test_relabel_preserves_products(t, data):
    perm = data.draw(st.permutations(range(t.order)))
    u = t.relabel(perm)
    for i in range(t.order):
        for j in range(t.order):
            assert u.mul(perm[i], perm[j]) == perm[t.mul(i, j)]
