"""Slow reference enumerations used to cross-check the main search.

Nothing here shares code with ``enumeration``: tables are grouped into
isomorphism classes by brute-force minimization over every permutation.
"""

from __future__ import annotations

from itertools import permutations, product


def _relabel(n: int, e: tuple[int, ...], p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            out[p[i] * n + p[j]] = p[e[i * n + j]]
    return tuple(out)


def orbit_min(n: int, e: tuple[int, ...]) -> tuple[int, ...]:
    return min(_relabel(n, e, p) for p in permutations(range(n)))


def _associative(n: int, e: tuple[int, ...]) -> bool:
    for x, y, z in product(range(n), repeat=3):
        if e[e[x * n + y] * n + z] != e[x * n + e[y * n + z]]:
            return False
    return True


def brute_force_labeled(n: int) -> list[tuple[int, ...]]:
    """Every associative table on ``0..n-1`` among all n^(n*n) tables."""
    return [e for e in product(range(n), repeat=n * n) if _associative(n, e)]


def backtrack_labeled(n: int) -> list[tuple[int, ...]]:
    """Every associative table on ``0..n-1``, filling cells row-major.

    After each assignment all n^3 triples are rechecked wherever the four
    cells involved are set.
    """
    size = n * n
    T = [-1] * size
    out = []
    triples = list(product(range(n), repeat=3))

    def ok() -> bool:
        for x, y, z in triples:
            xy = T[x * n + y]
            yz = T[y * n + z]
            if xy < 0 or yz < 0:
                continue
            a = T[xy * n + z]
            b = T[x * n + yz]
            if a >= 0 and b >= 0 and a != b:
                return False
        return True

    def rec(pos: int) -> None:
        if pos == size:
            out.append(tuple(T))
            return
        for v in range(n):
            T[pos] = v
            if ok():
                rec(pos + 1)
        T[pos] = -1

    rec(0)
    return out


def classes(n: int, labeled: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    return {orbit_min(n, e) for e in labeled}
