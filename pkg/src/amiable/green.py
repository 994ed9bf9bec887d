"""Green's relations L, R and their starred versions L*, R*.

L and R compare principal one-sided ideals (``S^1 s`` and ``s S^1``); L* and
R* compare kernels of the left and right translations over ``S^1``:
``s L* t`` iff ``sx = sy <=> tx = ty`` for all ``x, y`` in ``S^1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .core import MulTable, idempotents, with_one


@dataclass(frozen=True)
class Partition:
    """Equivalence on ``0..m-1`` as first-occurrence-normalized block ids."""

    block_id: tuple[int, ...]

    @classmethod
    def from_keys(cls, keys: Sequence[Hashable]) -> "Partition":
        seen: dict = {}
        return cls(tuple(seen.setdefault(k, len(seen)) for k in keys))

    @property
    def universe_order(self) -> int:
        return len(self.block_id)

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(max(self.block_id, default=-1) + 1)]
        for x, b in enumerate(self.block_id):
            out[b].append(x)
        return out

    def block_of(self, x: int) -> list[int]:
        b = self.block_id[x]
        return [y for y, c in enumerate(self.block_id) if c == b]

    def related(self, x: int, y: int) -> bool:
        return self.block_id[x] == self.block_id[y]

    def refines(self, other: "Partition") -> bool:
        """Every block of ``self`` lies inside a block of ``other``."""
        image: dict[int, int] = {}
        for b, c in zip(self.block_id, other.block_id):
            if image.setdefault(b, c) != c:
                return False
        return True


@dataclass(frozen=True)
class GreenReport:
    L: Partition
    R: Partition
    Lstar: Partition
    Rstar: Partition
    idempotents: frozenset[int]
    is_regular: bool
    is_abundant: bool
    is_amiable: bool
    is_adequate: bool

    def flags(self) -> tuple[bool, bool, bool]:
        """(abundant, amiable, adequate)."""
        return (self.is_abundant, self.is_amiable, self.is_adequate)


def right_image(t: MulTable, s: int) -> frozenset[int]:
    """``S^1 s``, the image of the right translation by ``s``."""
    return frozenset(t.mul(x, s) for x in t.elements()) | {s}


def left_image(t: MulTable, s: int) -> frozenset[int]:
    """``s S^1``."""
    return frozenset(t.mul(s, x) for x in t.elements()) | {s}


def left_kernel(t: MulTable, s: int) -> Partition:
    """Kernel of ``x -> s x`` on ``S^1`` (the elements of ``with_one(t)``)."""
    u, _ = with_one(t)
    return Partition.from_keys([u.mul(s, x) for x in u.elements()])


def right_kernel(t: MulTable, s: int) -> Partition:
    """Kernel of ``x -> x s`` on ``S^1``."""
    u, _ = with_one(t)
    return Partition.from_keys([u.mul(x, s) for x in u.elements()])


def _classes_have_idempotents(p: Partition, idem: frozenset[int]) -> list[int]:
    counts = [0] * len(p.blocks())
    for e in idem:
        counts[p.block_id[e]] += 1
    return counts


def green_partitions(t: MulTable) -> GreenReport:
    n = t.order
    u, _ = with_one(t)
    m = u.order
    ue = u.entries
    L = Partition.from_keys([right_image(t, s) for s in range(n)])
    R = Partition.from_keys([left_image(t, s) for s in range(n)])
    Lstar = Partition.from_keys(
        [Partition.from_keys(ue[s * m:(s + 1) * m]) for s in range(n)])
    Rstar = Partition.from_keys(
        [Partition.from_keys(ue[s::m]) for s in range(n)])
    idem = idempotents(t)
    counts = {name: _classes_have_idempotents(p, idem)
              for name, p in (("L", L), ("R", R), ("Ls", Lstar), ("Rs", Rstar))}
    regular = all(c > 0 for c in counts["L"] + counts["R"])
    abundant = all(c > 0 for c in counts["Ls"] + counts["Rs"])
    amiable = all(c == 1 for c in counts["Ls"] + counts["Rs"])
    commuting = all(t.mul(e, f) == t.mul(f, e) for e in idem for f in idem)
    return GreenReport(L, R, Lstar, Rstar, idem, regular, abundant, amiable,
                       abundant and commuting)


def report_to_json(t: MulTable, rep: GreenReport) -> dict:
    def named(p: Partition) -> list[list[str]]:
        return [[t.name(x) for x in block] for block in p.blocks()]

    return {
        "order": t.order,
        "idempotents": [t.name(x) for x in sorted(rep.idempotents)],
        "L": named(rep.L),
        "R": named(rep.R),
        "Lstar": named(rep.Lstar),
        "Rstar": named(rep.Rstar),
        "regular": rep.is_regular,
        "abundant": rep.is_abundant,
        "amiable": rep.is_amiable,
        "adequate": rep.is_adequate,
    }
