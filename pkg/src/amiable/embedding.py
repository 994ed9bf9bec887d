"""Isomorphisms, embeddings, generated subsemigroups and copies of M."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .core import MulTable, idempotents
from .fixtures import M


@dataclass(frozen=True)
class Embedding:
    source_order: int
    target_order: int
    map: tuple[int, ...]

    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def describe(self, source: MulTable, target: MulTable) -> str:
        return " ".join(f"{source.name(i)}→{target.name(v)}" for i, v in enumerate(self.map))


def is_homomorphism(source: MulTable, target: MulTable, f: Sequence[int]) -> bool:
    n = source.order
    return all(f[source.mul(i, j)] == target.mul(f[i], f[j])
               for i in range(n) for j in range(n))


def _invariant(t: MulTable, x: int) -> tuple:
    n = t.order
    row = [t.mul(x, y) for y in range(n)]
    col = [t.mul(y, x) for y in range(n)]
    xx = t.mul(x, x)
    return (xx == x, t.mul(xx, xx) == xx, len(set(row)), len(set(col)),
            row.count(x), col.count(x), sum(row[y] == y for y in range(n)),
            sum(col[y] == y for y in range(n)))


def _search_maps(source: MulTable, target: MulTable, candidates: list[list[int]],
                 injective: bool) -> Iterator[tuple[int, ...]]:
    """Homomorphisms ``source -> target`` in lexicographic order.

    ``candidates[i]`` lists the allowed images of ``i`` in increasing order.
    """
    n = source.order
    se, te, m = source.entries, target.entries, target.order
    allowed = [set(c) for c in candidates]

    def extend(f: list[int], used: set[int], i: int, v: int):
        f = f[:]
        used = set(used)
        f[i] = v
        used.add(v)
        stack = [i]
        while stack:
            p = stack.pop()
            assigned = [q for q in range(n) if f[q] >= 0]
            for q in assigned:
                for a, b in ((p, q), (q, p)):
                    s = se[a * n + b]
                    val = te[f[a] * m + f[b]]
                    if f[s] < 0:
                        if val not in allowed[s] or (injective and val in used):
                            return None
                        f[s] = val
                        used.add(val)
                        stack.append(s)
                    elif f[s] != val:
                        return None
        return f, used

    def rec(f: list[int], used: set[int], i: int):
        while i < n and f[i] >= 0:
            i += 1
        if i == n:
            yield tuple(f)
            return
        for v in candidates[i]:
            if injective and v in used:
                continue
            ext = extend(f, used, i, v)
            if ext is not None:
                yield from rec(ext[0], ext[1], i + 1)

    yield from rec([-1] * n, set(), 0)


def is_isomorphic(t1: MulTable, t2: MulTable) -> Optional[Embedding]:
    """Lexicographically least isomorphism ``t1 -> t2``, or None."""
    if t1.order != t2.order:
        return None
    n = t1.order
    inv1 = [_invariant(t1, x) for x in range(n)]
    inv2 = [_invariant(t2, x) for x in range(n)]
    if sorted(inv1) != sorted(inv2):
        return None
    cands = [[y for y in range(n) if inv2[y] == inv1[x]] for x in range(n)]
    for f in _search_maps(t1, t2, cands, injective=True):
        return Embedding(n, n, f)
    return None


def embeddings(source: MulTable, target: MulTable) -> Iterator[Embedding]:
    """All injective homomorphisms, in lexicographic order of their maps."""
    idem_t = idempotents(target)
    cands = [[y for y in range(target.order) if (source.mul(x, x) == x) <= (y in idem_t)]
             for x in range(source.order)]
    for f in _search_maps(source, target, cands, injective=True):
        yield Embedding(source.order, target.order, f)


def find_embedding(source: MulTable, target: MulTable) -> Optional[Embedding]:
    return next(embeddings(source, target), None)


def generated_subsemigroup(t: MulTable, gens: Iterable[int]) -> frozenset[int]:
    closed = set(gens)
    if not closed:
        raise ValueError("need at least one generator")
    frontier = list(closed)
    while frontier:
        new = []
        for x in frontier:
            for y in list(closed):
                for p in (t.mul(x, y), t.mul(y, x)):
                    if p not in closed:
                        closed.add(p)
                        new.append(p)
        frontier = new
    return frozenset(closed)


def noncommuting_idempotent_pairs(t: MulTable) -> list[tuple[int, int]]:
    idem = sorted(idempotents(t))
    return [(e, f) for k, e in enumerate(idem) for f in idem[k + 1:]
            if t.mul(e, f) != t.mul(f, e)]


def pair_generates_M(t: MulTable, a: int, b: int) -> bool:
    """Whether the subsemigroup generated by the idempotents a, b is a copy of M.

    Decided by closure and isomorphism, so it does not rely on ``t`` being
    amiable.
    """
    if t.mul(a, a) != a or t.mul(b, b) != b:
        raise ValueError("a and b must be idempotents")
    if t.mul(a, b) == t.mul(b, a):
        raise ValueError("a and b must not commute")
    sub = generated_subsemigroup(t, (a, b))
    return len(sub) == 4 and is_isomorphic(M, t.restrict(sub)) is not None


def _m_map(t: MulTable, a: int, b: int) -> Optional[tuple[int, int, int, int]]:
    f = (a, b, t.mul(a, b), t.mul(b, a))
    if len(set(f)) == 4 and is_homomorphism(M, t, f):
        return f
    return None


def m_copies(t: MulTable) -> list[Embedding]:
    """Every embedding of M into ``t``, least map first.

    An embedding is fixed by the images of M's generators a, b, which must be
    noncommuting idempotents.
    """
    idem = sorted(idempotents(t))
    out = []
    for a in idem:
        for b in idem:
            if a != b and t.mul(a, b) != t.mul(b, a):
                f = _m_map(t, a, b)
                if f is not None:
                    out.append(Embedding(4, t.order, f))
    return out


def contains_M(t: MulTable) -> Optional[Embedding]:
    idem = sorted(idempotents(t))
    for a in idem:
        for b in idem:
            if a != b and t.mul(a, b) != t.mul(b, a):
                f = _m_map(t, a, b)
                if f is not None:
                    return Embedding(4, t.order, f)
    return None
