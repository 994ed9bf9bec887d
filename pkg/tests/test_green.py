from hypothesis import given

from amiable.core import MulTable, opposite
from amiable.enumeration import census
from amiable.fixtures import M, TABLE2, TABLE3
from amiable.green import (Partition, green_partitions, left_image, left_kernel, report_to_json,
                           right_image, right_kernel)

from conftest import semigroups

a, b, c, d = range(4)


def blocks(p):
    return sorted(sorted(x) for x in p.blocks())


def test_partition_normal_form():
    p = Partition.from_keys(["x", "y", "x", "z"])
    assert p.block_id == (0, 1, 0, 2)
    assert p == Partition.from_keys([5, 3, 5, 1])
    assert p.refines(Partition.from_keys([0, 0, 0, 1]))
    assert not Partition.from_keys([0, 0, 0, 1]).refines(p)


def test_right_image_in_M():
    assert right_image(M, a) == {a, c, d}
    assert right_image(M, c) == {c}


def test_right_image_of_identity_is_everything():
    z3 = MulTable.from_rows([[(i + j) % 3 for j in range(3)] for i in range(3)])
    assert right_image(z3, 0) == {0, 1, 2}


def test_left_kernel_in_M():
    # blocks over S^1 = {a, b, c, d, 1}, with 1 at index 4
    assert blocks(left_kernel(M, c)) == [[0, 1, 2, 3, 4]]
    assert blocks(left_kernel(M, a)) == [[0, 4], [1, 2, 3]]
    z3 = MulTable.from_rows([[(i + j) % 3 for j in range(3)] for i in range(3)])
    assert blocks(left_kernel(z3, 0)) == [[0], [1], [2]]


def test_right_kernel_in_M():
    # column a of M is a, d, c, d and 1*a = a
    assert blocks(right_kernel(M, a)) == [[0, 4], [1, 3], [2]]


def test_M_classes():
    rep = green_partitions(M)
    assert blocks(rep.Lstar) == [[a, d], [b], [c]]
    assert blocks(rep.Rstar) == [[a], [b, d], [c]]
    assert rep.is_abundant and rep.is_amiable and not rep.is_adequate
    assert not rep.is_regular


def test_table2_not_abundant():
    rep = green_partitions(TABLE2)
    dd = TABLE2.index("d")
    assert not set(rep.Lstar.block_of(dd)) & rep.idempotents
    assert not rep.is_abundant


def test_table3_amiable_not_adequate():
    rep = green_partitions(TABLE3)
    assert rep.is_amiable and not rep.is_adequate


def test_group_has_every_property():
    z3 = MulTable.from_rows([[(i + j) % 3 for j in range(3)] for i in range(3)])
    rep = green_partitions(z3)
    assert blocks(rep.L) == blocks(rep.R) == [[0, 1, 2]]
    assert rep.is_regular and rep.is_abundant and rep.is_amiable and rep.is_adequate


def test_report_json_shape():
    js = report_to_json(M, green_partitions(M))
    assert js["Lstar"] == [["a", "d"], ["b"], ["c"]]
    assert js["Rstar"] == [["a"], ["b", "d"], ["c"]]
    assert set(js) == {"order", "idempotents", "L", "R", "Lstar", "Rstar",
                       "regular", "abundant", "amiable", "adequate"}


def test_refinement_and_flag_hierarchy_upto_4():
    for n in range(1, 5):
        for t in census(n):
            rep = green_partitions(t)
            assert rep.L.refines(rep.Lstar)
            assert rep.R.refines(rep.Rstar)
            assert not rep.is_adequate or rep.is_amiable
            assert not rep.is_amiable or rep.is_abundant
            assert not rep.is_regular or rep.is_abundant


def test_idempotent_star_classes_are_plain_classes(census_upto5):
    for t in census_upto5:
        rep = green_partitions(t)
        for e in rep.idempotents:
            for f in rep.idempotents:
                assert rep.Lstar.related(e, f) == rep.L.related(e, f)
                assert rep.Rstar.related(e, f) == rep.R.related(e, f)


def test_adequate_implies_unique_idempotents(census_upto5):
    for t in census_upto5:
        rep = green_partitions(t)
        if rep.is_adequate:
            assert rep.is_amiable


@given(semigroups(max_order=4))
def test_opposite_swaps_sides(t):
    rep, op = green_partitions(t), green_partitions(opposite(t))
    assert rep.L == op.R and rep.R == op.L
    assert rep.Lstar == op.Rstar and rep.Rstar == op.Lstar
    assert rep.flags() == op.flags()
