"""Built-in example tables.

``M`` is the four-element amiable semigroup whose idempotents a, b do not
commute. ``TABLE2`` is the order-5 table forced by assuming an order-5
amiable, non-adequate semigroup avoids M; it is not abundant. ``TABLE3`` is
an order-8 amiable semigroup with a noncommuting idempotent pair (a, e) that
does not generate M. ``TABLE_V`` is the order-5 amiable non-adequate
semigroup that is not a one-point extension of M.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import MulTable

M = MulTable.from_letters([
    "accc",
    "dbcd",
    "cccc",
    "dccc",
])

TABLE2 = MulTable.from_letters([
    "accee",
    "dbede",
    "eceee",
    "deeee",
    "eeeee",
])

TABLE3 = MulTable.from_letters([
    "acccffcf",
    "dbcdbggc",
    "cccccccc",
    "dcccggcg",
    "dbcdeggh",
    "ccccfccf",
    "ccccgccg",
    "cccchcch",
])

TABLE_V = MulTable.from_letters([
    "acccc",
    "dbcde",
    "ccccc",
    "dcccc",
    "ecccc",
])


@dataclass(frozen=True)
class Fixture:
    name: str
    table: MulTable
    expected: dict = field(default_factory=dict)


FIXTURES = {
    "M": Fixture("M", M, {"abundant": True, "amiable": True, "adequate": False}),
    "table2": Fixture("table2", TABLE2, {"abundant": False}),
    "table3": Fixture("table3", TABLE3, {"abundant": True, "amiable": True, "adequate": False}),
    "table_v": Fixture("table_v", TABLE_V, {"abundant": True, "amiable": True, "adequate": False}),
}


def get_fixture(name: str) -> MulTable:
    try:
        return FIXTURES[name].table
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
