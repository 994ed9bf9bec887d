"""Cayley tables of finite magmas and semigroups.

A table of order ``n`` stores the products of elements ``0..n-1`` row-major:
``entries[i * n + j]`` is ``i*j`` with ``i`` the left factor. Names are for
display only; every algorithm works on indices.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence


class TableFormatError(ValueError):
    """Malformed .cay text. ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def default_names(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True)
class MulTable:
    order: int
    entries: tuple[int, ...]
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise ValueError("order must be positive")
        entries = tuple(self.entries)
        if len(entries) != n * n:
            raise ValueError(f"expected {n * n} entries, got {len(entries)}")
        for v in entries:
            if not 0 <= v < n:
                raise ValueError(f"entry {v} out of range for order {n}")
        object.__setattr__(self, "entries", entries)
        names = tuple(self.names) if self.names else default_names(n)
        if len(names) != n or len(set(names)) != n:
            raise ValueError("names must be n pairwise distinct labels")
        object.__setattr__(self, "names", names)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], names: Sequence[str] = ()) -> "MulTable":
        return cls(len(rows), tuple(v for row in rows for v in row), tuple(names))

    @classmethod
    def from_letters(cls, rows: Sequence[str]) -> "MulTable":
        """Build from rows of single-letter names, e.g. ``["acc", ...]``.

        Letters are ``a, b, c, ...`` in index order.
        """
        n = len(rows)
        names = default_names(n)
        index = {c: i for i, c in enumerate(names)}
        return cls.from_rows([[index[c] for c in row.replace(" ", "")] for row in rows])

    def mul(self, i: int, j: int) -> int:
        return self.entries[i * self.order + j]

    def rows(self) -> list[list[int]]:
        n = self.order
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def elements(self) -> range:
        return range(self.order)

    def name(self, i: int) -> str:
        return self.names[i]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def relabel(self, perm: Sequence[int]) -> "MulTable":
        """Image under the bijection ``x -> perm[x]``."""
        n = self.order
        out = [0] * (n * n)
        e = self.entries
        for i in range(n):
            for j in range(n):
                out[perm[i] * n + perm[j]] = perm[e[i * n + j]]
        names = [""] * n
        for i in range(n):
            names[perm[i]] = self.names[i]
        return MulTable(n, tuple(out), tuple(names))

    def restrict(self, subset: Iterable[int]) -> "MulTable":
        """The subtable on a product-closed subset, relabelled in increasing order."""
        keep = sorted(subset)
        pos = {x: k for k, x in enumerate(keep)}
        rows = []
        for i in keep:
            row = []
            for j in keep:
                p = self.mul(i, j)
                if p not in pos:
                    raise ValueError(f"subset not closed: {self.name(i)}{self.name(j)} = {self.name(p)}")
                row.append(pos[p])
            rows.append(row)
        return MulTable.from_rows(rows, [self.names[i] for i in keep])

    def __str__(self) -> str:
        return format_table(self, names=True)


def parse_table(text: str) -> MulTable:
    """Parse .cay text. Associativity is not checked."""
    data = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data.append((lineno, line.split()))
    if not data:
        raise TableFormatError("missing order header", 1)
    lineno, header = data[0]
    if len(header) != 1 or not header[0].isdigit() or int(header[0]) < 1:
        raise TableFormatError(f"header must be a positive integer, got {' '.join(header)!r}", lineno)
    n = int(header[0])
    rows = data[1:]
    if len(rows) > n:
        raise TableFormatError(f"unexpected row {n + 1} for order {n}", rows[n][0])
    if len(rows) < n:
        last = rows[-1][0] if rows else lineno
        raise TableFormatError(f"expected {n} rows, found {len(rows)}", last + 1)
    entries = []
    for lineno, tokens in rows:
        if len(tokens) != n:
            raise TableFormatError(f"row has {len(tokens)} entries, expected {n}", lineno)
        for tok in tokens:
            if not tok.isdigit() or int(tok) >= n:
                raise TableFormatError(f"entry {tok!r} not in [0, {n})", lineno)
            entries.append(int(tok))
    return MulTable(n, tuple(entries))


def format_table(t: MulTable, names: bool = False) -> str:
    """Serialize to canonical .cay text, or a named grid when ``names`` is set."""
    if names:
        width = max(len(s) for s in t.names)
        head = " " * width + " | " + " ".join(s.rjust(width) for s in t.names)
        lines = [head, "-" * len(head)]
        for i, row in enumerate(t.rows()):
            lines.append(t.names[i].rjust(width) + " | " + " ".join(t.names[v].rjust(width) for v in row))
        return "\n".join(lines) + "\n"
    return f"{t.order}\n" + "".join(" ".join(map(str, row)) + "\n" for row in t.rows())


def associativity_violation(t: MulTable) -> Optional[tuple[int, int, int]]:
    """First triple (x, y, z) with (xy)z != x(yz), or None."""
    n, e = t.order, t.entries
    for x, y, z in product(range(n), repeat=3):
        if e[e[x * n + y] * n + z] != e[x * n + e[y * n + z]]:
            return (x, y, z)
    return None


def is_associative(t: MulTable) -> bool:
    return associativity_violation(t) is None


def is_associative_by_translations(t: MulTable) -> bool:
    """Associativity as ``tau_s tau_t == tau_{st}`` for right translations.

    ``tau_s`` is the column of ``s``; composition is left to right, so
    ``(x) tau_s tau_t = (xs)t``.
    """
    n, e = t.order, t.entries
    cols = [tuple(e[x * n + s] for x in range(n)) for s in range(n)]
    for s in range(n):
        cs = cols[s]
        for u in range(n):
            cu = cols[u]
            if tuple(cu[v] for v in cs) != cols[e[s * n + u]]:
                return False
    return True


def idempotents(t: MulTable) -> frozenset[int]:
    return frozenset(x for x in t.elements() if t.mul(x, x) == x)


def find_identity(t: MulTable) -> Optional[int]:
    n = t.order
    for u in range(n):
        if all(t.mul(u, x) == x and t.mul(x, u) == x for x in range(n)):
            return u
    return None


def find_zero(t: MulTable) -> Optional[int]:
    n = t.order
    for z in range(n):
        if all(t.mul(z, x) == z and t.mul(x, z) == z for x in range(n)):
            return z
    return None


def _adjoin(t: MulTable, name: str, identity: bool) -> MulTable:
    n = t.order
    rows = t.rows()
    for i, row in enumerate(rows):
        row.append(i if identity else n)
    rows.append(list(range(n + 1)) if identity else [n] * (n + 1))
    names = list(t.names)
    names.append(name if name not in names else f"{name}{n}")
    return MulTable.from_rows(rows, names)


def adjoin_identity(t: MulTable) -> MulTable:
    """``t`` with a fresh identity at index ``n``."""
    return _adjoin(t, "1", identity=True)


def adjoin_zero(t: MulTable) -> MulTable:
    """``t`` with a fresh zero at index ``n``."""
    return _adjoin(t, "0", identity=False)


def with_one(t: MulTable) -> tuple[MulTable, int]:
    """S^1: ``t`` itself when it is a monoid, otherwise ``t`` with an identity adjoined."""
    u = find_identity(t)
    if u is not None:
        return t, u
    return adjoin_identity(t), t.order


def opposite(t: MulTable) -> MulTable:
    n = t.order
    return MulTable(n, tuple(t.mul(j, i) for i in range(n) for j in range(n)), t.names)


def is_commutative(t: MulTable) -> bool:
    n = t.order
    return all(t.mul(i, j) == t.mul(j, i) for i in range(n) for j in range(i + 1, n))
