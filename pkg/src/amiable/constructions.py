"""One-point inflations: the idempotent inflation S[e] and the pseudozero inflation.

Both place the new element at index ``n`` and come with the retraction onto
``S`` that sends it to its base element (``e`` or the zero).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import MulTable, find_zero
from .green import Partition, green_partitions


@dataclass(frozen=True)
class InflationResult:
    table: MulTable
    new_index: int
    base_map: tuple[int, ...]
    kind: str  # "idempotent" or "pseudozero"
    base_element: int


def idempotent_inflation(t: MulTable, e: int) -> InflationResult:
    n = t.order
    if t.mul(e, e) != e:
        raise ValueError(f"{t.name(e)} is not an idempotent")
    rows = t.rows()
    for x, row in enumerate(rows):
        row.append(t.mul(x, e))
    rows.append([t.mul(e, y) for y in range(n)] + [n])
    eps = "ε" if "ε" not in t.names else f"ε{n}"
    table = MulTable.from_rows(rows, list(t.names) + [eps])
    return InflationResult(table, n, tuple(range(n)) + (e,), "idempotent", e)


def pseudozero_inflation(t: MulTable) -> InflationResult:
    n = t.order
    z = find_zero(t)
    if z is None:
        raise ValueError("pseudozero inflation needs a zero element")
    rows = t.rows()
    for row in rows:
        row.append(n)
    rows.append([n] * n + [z])
    bar = t.name(z) + "̄"
    table = MulTable.from_rows(rows, list(t.names) + [bar if bar not in t.names else f"0̄{n}"])
    return InflationResult(table, n, tuple(range(n)) + (z,), "pseudozero", z)


@dataclass(frozen=True)
class StarClassCertificate:
    base_Lstar: Partition
    base_Rstar: Partition
    Lstar: Partition
    Rstar: Partition
    holds: bool


def _block_sets(p: Partition) -> set[frozenset[int]]:
    return {frozenset(b) for b in p.blocks()}


def star_classes_of_inflation(base: MulTable, inflated: InflationResult) -> StarClassCertificate:
    """Star classes of ``base`` and of the inflation, and whether they have the predicted shape.

    Idempotent inflation: the new element is a class on its own and the other
    classes are those of ``base``. Pseudozero inflation: the zero and its copy
    form one class, the rest are the classes of ``base`` avoiding the zero.
    """
    rb = green_partitions(base)
    ru = green_partitions(inflated.table)
    new = inflated.new_index
    holds = True
    for pb, pu in ((rb.Lstar, ru.Lstar), (rb.Rstar, ru.Rstar)):
        if inflated.kind == "idempotent":
            predicted = _block_sets(pb) | {frozenset({new})}
        else:
            z = inflated.base_element
            predicted = {b for b in _block_sets(pb) if z not in b} | {frozenset({z, new})}
        holds = holds and _block_sets(pu) == predicted
    return StarClassCertificate(rb.Lstar, rb.Rstar, ru.Lstar, ru.Rstar, holds)
