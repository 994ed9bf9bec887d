import pytest
from hypothesis import given
import hypothesis.strategies as st

from amiable.constructions import idempotent_inflation, pseudozero_inflation, star_classes_of_inflation
from amiable.core import MulTable, adjoin_identity, find_zero, idempotents, is_associative
from amiable.embedding import is_homomorphism, is_isomorphic
from amiable.fixtures import M
from amiable.green import green_partitions

from conftest import semigroups


def test_idempotent_inflations_of_M():
    for name in "abc":
        inf = idempotent_inflation(M, M.index(name))
        u = inf.table
        assert u.order == 5 and inf.new_index == 4
        assert is_associative(u)
        assert u.mul(4, 4) == 4
        rep = green_partitions(u)
        assert rep.is_amiable and not rep.is_adequate


def test_inflation_rejects_non_idempotent():
    with pytest.raises(ValueError):
        idempotent_inflation(M, M.index("d"))


def test_inflation_of_trivial():
    inf = idempotent_inflation(MulTable(1, (0,)), 0)
    assert inf.table.rows() == [[0, 0], [0, 1]]
    assert idempotents(inf.table) == {0, 1}


def test_pseudozero_of_M():
    inf = pseudozero_inflation(M)
    u = inf.table
    c = M.index("c")
    assert is_associative(u)
    assert u.mul(4, 4) == c
    assert 4 not in idempotents(u)
    assert is_isomorphic(u, idempotent_inflation(M, c).table) is None


def test_pseudozero_needs_zero():
    left_zero = MulTable(2, (0, 0, 1, 1))
    with pytest.raises(ValueError):
        pseudozero_inflation(left_zero)
    # c stays a zero once an identity is adjoined
    inf = pseudozero_inflation(adjoin_identity(M))
    assert inf.base_element == M.index("c")


def test_star_class_shapes_for_M():
    cert = star_classes_of_inflation(M, idempotent_inflation(M, 0))
    assert cert.holds
    assert sorted(map(sorted, cert.Rstar.blocks())) == [[0], [1, 3], [2], [4]]
    cert = star_classes_of_inflation(M, pseudozero_inflation(M))
    assert cert.holds
    assert sorted(map(sorted, cert.Rstar.blocks())) == [[0], [1, 3], [2, 4]]


def test_pseudozero_of_trivial():
    cert = star_classes_of_inflation(MulTable(1, (0,)), pseudozero_inflation(MulTable(1, (0,))))
    assert cert.holds
    assert cert.Lstar.blocks() == cert.Rstar.blocks() == [[0, 1]]


@given(semigroups(max_order=4), st.data())
def test_retraction_is_idempotent_homomorphism(t, data):
    options = [idempotent_inflation(t, e) for e in sorted(idempotents(t))]
    if find_zero(t) is not None:
        options.append(pseudozero_inflation(t))
    inf = data.draw(st.sampled_from(options))
    u = inf.table
    phi = inf.base_map
    # phi as a self-map of u: idempotent, and a homomorphism onto t
    assert all(phi[phi[x]] == phi[x] for x in range(u.order))
    assert set(phi) == set(range(t.order))
    assert is_homomorphism(u, t, phi)
    assert is_associative(u)
    assert star_classes_of_inflation(t, inf).holds
    assert green_partitions(u).flags() == green_partitions(t).flags()
