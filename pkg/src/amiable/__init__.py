"""Finite semigroups: Green's and starred Green's relations, amiable and
adequate semigroups, one-point inflations, and small-order enumeration."""

from .core import (MulTable, adjoin_identity, adjoin_zero, find_zero, format_table, idempotents,
                   is_associative, opposite, parse_table, with_one)
from .embedding import contains_M, generated_subsemigroup, is_isomorphic, pair_generates_M
from .enumeration import canonical_form, census, enumerate_semigroups
from .fixtures import M, TABLE2, TABLE3, TABLE_V
from .green import GreenReport, Partition, green_partitions

__all__ = [
    "MulTable", "adjoin_identity", "adjoin_zero", "find_zero", "format_table", "idempotents",
    "is_associative", "opposite", "parse_table", "with_one", "contains_M", "generated_subsemigroup",
    "is_isomorphic", "pair_generates_M", "canonical_form", "census", "enumerate_semigroups",
    "M", "TABLE2", "TABLE3", "TABLE_V", "GreenReport", "Partition", "green_partitions",
]
