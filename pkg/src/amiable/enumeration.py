"""Enumeration of semigroups of order n up to isomorphism.

Search layout:

* The diagonal ``x -> x*x`` is fixed first, one map per conjugacy class
  (conjugating the diagonal is exactly what relabelling does to it).
* The remaining cells are filled row-major. Every assignment checks all
  associativity triples it completes.
* Only the symmetry left after fixing the diagonal, its centralizer in S_n,
  has to be broken. A branch is cut as soon as some centralizer element maps
  the partial table to one that is lexicographically smaller on the cells
  decided so far. Surviving leaves are orbit minima, so each isomorphism
  class is reached exactly once.
* Each leaf is then relabelled to the global canonical form (least
  row-major entry sequence over all n! relabellings) and the output is
  sorted by it.

Each diagonal is an independent subtree, which is the unit of parallel work.
"""

from __future__ import annotations

import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Optional, Sequence

from .constructions import idempotent_inflation, pseudozero_inflation
from .core import MulTable, adjoin_identity, adjoin_zero
from .embedding import contains_M, is_isomorphic
from .fixtures import M, TABLE_V
from .green import green_partitions

MAX_ORDER = 6
MAX_ORDER_EXTENDED = 7

FILTER_MODES = ("all", "amiable", "amiable_not_adequate", "adequate", "abundant")


@dataclass(frozen=True)
class EnumFilter:
    mode: str = "all"

    def __post_init__(self):
        if self.mode not in FILTER_MODES:
            raise ValueError(f"unknown filter {self.mode!r}; choose from {', '.join(FILTER_MODES)}")

    def accepts(self, t: MulTable) -> bool:
        if self.mode == "all":
            return True
        rep = green_partitions(t)
        if self.mode == "amiable":
            return rep.is_amiable
        if self.mode == "amiable_not_adequate":
            return rep.is_amiable and not rep.is_adequate
        if self.mode == "adequate":
            return rep.is_adequate
        return rep.is_abundant


def _as_filter(f) -> EnumFilter:
    return f if isinstance(f, EnumFilter) else EnumFilter(f)


# -- canonical forms ---------------------------------------------------------

def canonical_entries(n: int, e: Sequence[int]) -> tuple[int, ...]:
    """Least row-major entry sequence over all relabellings of the table ``e``.

    Labels are handed out greedily: a product whose element has no label yet
    gets the next free one, which is the only lexicographically optimal
    choice. Branching is needed only when row 0 asks for a column label that
    has not been handed out, i.e. choosing which element becomes label k.
    """
    size = n * n
    lab = [-1] * n
    inv = [-1] * n
    out = [0] * size
    best: list = [None]

    def rec(pos: int, nxt: int, less: bool) -> None:
        assigned = []
        b = best[0]
        while pos < size:
            i, j = divmod(pos, n)
            if j >= nxt:
                for u in range(n):
                    if lab[u] < 0:
                        lab[u] = nxt
                        inv[nxt] = u
                        before = best[0]
                        rec(pos, nxt + 1, less)
                        if best[0] is not before:
                            # the new incumbent shares this prefix
                            less = False
                        lab[u] = -1
                        inv[nxt] = -1
                break
            w = e[inv[i] * n + inv[j]]
            if lab[w] < 0:
                lab[w] = nxt
                inv[nxt] = w
                assigned.append(w)
                nxt += 1
            v = lab[w]
            if not less and b is not None:
                if v > b[pos]:
                    break
                if v < b[pos]:
                    less = True
            out[pos] = v
            pos += 1
        else:
            best[0] = tuple(out)
        for w in assigned:
            inv[lab[w]] = -1
            lab[w] = -1

    rec(0, 0, False)
    return best[0]


def canonical_form(t: MulTable) -> MulTable:
    return MulTable(t.order, canonical_entries(t.order, t.entries))


def canonical_map(f: Sequence[int]) -> tuple[int, ...]:
    """Least conjugate ``s f s^-1`` of a self-map of ``0..n-1``."""
    n = len(f)
    lab = [-1] * n
    inv = [-1] * n
    out = [0] * n
    best: list = [None]

    def rec(pos: int, nxt: int, less: bool) -> None:
        assigned = []
        while pos < n:
            if pos >= nxt:
                for u in range(n):
                    if lab[u] < 0:
                        lab[u] = nxt
                        inv[nxt] = u
                        before = best[0]
                        rec(pos, nxt + 1, less)
                        if best[0] is not before:
                            less = False
                        lab[u] = -1
                        inv[nxt] = -1
                break
            w = f[inv[pos]]
            if lab[w] < 0:
                lab[w] = nxt
                inv[nxt] = w
                assigned.append(w)
                nxt += 1
            v = lab[w]
            b = best[0]
            if not less and b is not None:
                if v > b[pos]:
                    break
                if v < b[pos]:
                    less = True
            out[pos] = v
            pos += 1
        else:
            best[0] = tuple(out)
        for w in assigned:
            inv[lab[w]] = -1
            lab[w] = -1

    rec(0, 0, False)
    return best[0]


@lru_cache(maxsize=None)
def diagonal_classes(n: int) -> tuple[tuple[int, ...], ...]:
    """One self-map of ``0..n-1`` per conjugacy class, ascending."""
    return tuple(sorted({canonical_map(f) for f in product(range(n), repeat=n)}))


def centralizer(f: Sequence[int]) -> list[tuple[int, ...]]:
    n = len(f)
    return [s for s in permutations(range(n)) if all(s[f[x]] == f[s[x]] for x in range(n))]


# -- the search --------------------------------------------------------------

@dataclass
class PartialTable:
    """A search-tree node: cells are ``-1`` when unset.

    ``fill_order`` lists the flat indices of the cells still to be decided,
    in the order the search assigns them.
    """

    order: int
    entries: list[int]
    fill_order: tuple[int, ...] = field(default=())

    @classmethod
    def with_diagonal(cls, diag: Sequence[int]) -> "PartialTable":
        n = len(diag)
        cells = [-1] * (n * n)
        for x in range(n):
            cells[x * n + x] = diag[x]
        fill = tuple(x * n + y for x in range(n) for y in range(n) if x != y)
        return cls(n, cells, fill)


def search_subtree(node: PartialTable, symmetries: Sequence[Sequence[int]] = ()) -> list[tuple[int, ...]]:
    """All associative completions of ``node`` that are minimal under ``symmetries``.

    The permutations in ``symmetries`` must fix every cell already set in
    ``node`` (for a diagonal-only node: permutations commuting with the
    diagonal). Minimality compares the cells of ``fill_order`` in order.
    """
    n = node.order
    T = list(node.entries)
    fill = node.fill_order
    depth_max = len(fill)
    rows = [divmod(c, n) for c in range(n * n)]
    # pre[v]: flat cells currently holding value v
    pre: list[list[int]] = [[] for _ in range(n)]
    for c, v in enumerate(T):
        if v >= 0:
            pre[v].append(c)
    rn = range(n)
    ident = tuple(range(n))
    syms = []
    for s in symmetries:
        s = tuple(s)
        if s == ident:
            continue
        sinv = [0] * n
        for x in rn:
            sinv[s[x]] = x
        pmap = tuple(sinv[rows[c][0]] * n + sinv[rows[c][1]] for c in fill)
        syms.append((s, pmap, 0))
    results: list[tuple[int, ...]] = []

    def consistent(x: int, y: int, v: int) -> bool:
        xn = x * n
        yn = y * n
        vn = v * n
        # cell is the left product: (x y) c = x (y c)
        for c in rn:
            lv = T[vn + c]
            if lv < 0:
                continue
            q = T[yn + c]
            if q < 0:
                continue
            r = T[xn + q]
            if r >= 0 and r != lv:
                return False
        # cell is the right product: (a x) y = a (x y)
        for a in rn:
            an = a * n
            r = T[an + v]
            if r < 0:
                continue
            p = T[an + x]
            if p < 0:
                continue
            lv = T[p * n + y]
            if lv >= 0 and lv != r:
                return False
        # cell is the outer left product: (a b) y with ab = x
        for ab in pre[x]:
            a, b = rows[ab]
            q = T[b * n + y]
            if q < 0:
                continue
            r = T[a * n + q]
            if r >= 0 and r != v:
                return False
        # cell is the outer right product: x (b c) with bc = y
        for bc in pre[y]:
            b, c = rows[bc]
            p = T[xn + b]
            if p < 0:
                continue
            lv = T[p * n + c]
            if lv >= 0 and lv != v:
                return False
        return True

    def rec(d: int, live: list) -> None:
        if d == depth_max:
            results.append(tuple(T))
            return
        cell = fill[d]
        x, y = rows[cell]
        for v in rn:
            T[cell] = v
            pre[v].append(cell)
            if consistent(x, y, v):
                nlive = []
                ok = True
                for s, pmap, pos in live:
                    while pos <= d:
                        w = T[pmap[pos]]
                        if w < 0:
                            break
                        img = s[w]
                        cur = T[fill[pos]]
                        if img < cur:
                            ok = False
                            break
                        if img > cur:
                            pos = -1
                            break
                        pos += 1
                    if not ok:
                        break
                    if pos >= 0:
                        nlive.append((s, pmap, pos))
                if ok:
                    rec(d + 1, nlive)
            pre[v].pop()
        T[cell] = -1

    # cells set in the node itself must already be consistent
    for c, v in enumerate(T):
        if v >= 0 and c not in fill:
            x, y = rows[c]
            if not consistent(x, y, v):
                return results
    rec(0, syms)
    return results


def _run_task(args) -> list[tuple[int, ...]]:
    diag, mode = args
    node = PartialTable.with_diagonal(diag)
    leaves = search_subtree(node, centralizer(diag))
    filt = EnumFilter(mode)
    n = len(diag)
    out = []
    for leaf in leaves:
        t = MulTable(n, leaf)
        if filt.accepts(t):
            out.append(canonical_entries(n, leaf))
    return out


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("AMIABLE_JOBS", "1")))
    except ValueError:
        return 1


def check_order(n: int, extended: bool = False) -> None:
    bound = MAX_ORDER_EXTENDED if extended else MAX_ORDER
    if not 1 <= n <= bound:
        raise ValueError(f"order {n} outside supported range 1..{bound}"
                         + ("" if extended else " (order 7 needs extended=True)"))
    if n == MAX_ORDER_EXTENDED:
        warnings.warn("order 7 enumeration has about 1.6 million classes; expect a very long run",
                      RuntimeWarning, stacklevel=3)


_CENSUS: dict[tuple[int, str], tuple[tuple[int, ...], ...]] = {}


def _search_all(n: int, mode: str, jobs: int) -> tuple[tuple[int, ...], ...]:
    tasks = [(d, mode) for d in diagonal_classes(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_task, tasks))
    else:
        parts = [_run_task(task) for task in tasks]
    return tuple(sorted(e for part in parts for e in part))


def census(n: int, filter="all", jobs: Optional[int] = None,
           extended: bool = False) -> tuple[MulTable, ...]:
    """Sorted canonical representatives of the semigroups of order n passing ``filter``.

    Results are memoized per process; a filtered request reuses an existing
    unfiltered census of the same order.
    """
    check_order(n, extended)
    filt = _as_filter(filter)
    key = (n, filt.mode)
    if key not in _CENSUS:
        if (n, "all") in _CENSUS:
            _CENSUS[key] = tuple(e for e in _CENSUS[(n, "all")] if filt.accepts(MulTable(n, e)))
        else:
            _CENSUS[key] = _search_all(n, filt.mode, default_jobs() if jobs is None else jobs)
    return tuple(MulTable(n, e) for e in _CENSUS[key])


def enumerate_semigroups(n: int, filter="all", jobs: Optional[int] = None,
                         extended: bool = False) -> Iterator[MulTable]:
    """Stream one canonical table per isomorphism class, ascending."""
    yield from census(n, filter, jobs, extended)


def named_order5_examples(m: MulTable = M, v: MulTable = TABLE_V) -> dict[str, MulTable]:
    """The seven order-5 amiable non-adequate semigroups, built from ``m`` and ``v``."""
    a, b, c = (m.index(x) for x in "abc")
    return {
        "M^1": adjoin_identity(m),
        "M^0": adjoin_zero(m),
        "M^c̄": pseudozero_inflation(m).table,
        "M[a]": idempotent_inflation(m, a).table,
        "M[b]": idempotent_inflation(m, b).table,
        "M[c]": idempotent_inflation(m, c).table,
        "(v)": v,
    }


def classify_amiable_not_adequate(n: int, jobs: Optional[int] = None,
                                  extended: bool = False) -> list[tuple[MulTable, list[str]]]:
    """Amiable non-adequate classes of order n, tagged by the named tables they match."""
    named = {"M": M} if n == 4 else named_order5_examples() if n == 5 else {}
    out = []
    for t in census(n, "amiable_not_adequate", jobs, extended):
        tags = [name for name, s in named.items() if is_isomorphic(s, t) is not None]
        out.append((t, tags))
    return out


def check_conjecture(n: int, jobs: Optional[int] = None, extended: bool = False) -> list[MulTable]:
    """Amiable non-adequate semigroups of order n with no subsemigroup isomorphic to M."""
    return [t for t in census(n, "amiable_not_adequate", jobs, extended) if contains_M(t) is None]
