"""Reproduction checks A1-A9 for the classification results.

``run_checks`` returns one ``CheckResult`` per criterion. A criterion whose
slow part was skipped reports status "skip"; any failure reports "fail".
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import fixtures as fx
from .constructions import idempotent_inflation, pseudozero_inflation, star_classes_of_inflation
from .core import MulTable, find_zero, is_associative
from .embedding import (contains_M, generated_subsemigroup, is_homomorphism, is_isomorphic,
                        m_copies, noncommuting_idempotent_pairs, pair_generates_M)
from .enumeration import census, named_order5_examples
from .green import green_partitions
from .oracles import backtrack_labeled, brute_force_labeled, classes
from .quasivariety import all_hold, check_quasi_identities, induced_algebra


@dataclass
class CheckResult:
    code: str
    title: str
    status: str  # "pass", "fail" or "skip"
    detail: str
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class _Fail(Exception):
    pass


class _Skip(Exception):
    pass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise _Fail(msg)


@dataclass
class Context:
    M: MulTable
    table2: MulTable
    table3: MulTable
    table_v: MulTable
    skip_slow: bool = False
    jobs: Optional[int] = None


def check_a1(ctx: Context) -> str:
    found = census(4, "amiable_not_adequate", ctx.jobs)
    _require(len(found) == 1, f"{len(found)} classes at order 4, expected 1")
    _require(is_isomorphic(found[0], ctx.M) is not None, "order-4 class is not isomorphic to M")
    return "1 class, isomorphic to M"


def check_a2(ctx: Context) -> str:
    found = census(5, "amiable_not_adequate", ctx.jobs)
    _require(len(found) == 7, f"{len(found)} classes at order 5, expected 7")
    named = named_order5_examples(ctx.M, ctx.table_v)
    matched = {}
    for name, s in named.items():
        hits = [k for k, t in enumerate(found) if is_isomorphic(s, t) is not None]
        _require(len(hits) == 1, f"{name} matches {len(hits)} enumerated classes")
        matched[name] = hits[0]
    _require(len(set(matched.values())) == 7, "named tables do not match classes bijectively")
    return "7 classes matched bijectively: " + ", ".join(named)


def check_a3(ctx: Context) -> str:
    orders = (4, 5) if ctx.skip_slow else (4, 5, 6)
    counts = []
    for n in orders:
        found = census(n, "amiable_not_adequate", ctx.jobs)
        bad = [t for t in found if contains_M(t) is None]
        _require(not bad, f"order {n}: {len(bad)} counterexamples")
        counts.append(f"n={n}: {len(found)} amiable non-adequate, none avoids M")
    if ctx.skip_slow:
        raise _Skip("; ".join(counts) + "; order 6 skipped")
    return "; ".join(counts)


def check_a4(ctx: Context) -> str:
    t = ctx.table3
    _require(is_associative(t), "table3 not associative")
    rep = green_partitions(t)
    _require(rep.is_amiable and not rep.is_adequate, "table3 should be amiable and not adequate")
    a, e = t.index("a"), t.index("e")
    _require(not pair_generates_M(t, a, e), "pair (a, e) generates M")
    aea = t.mul(t.mul(a, e), a)
    _require(aea not in (t.mul(a, e), t.mul(e, a)), "aea lies in {ae, ea}")
    images = {frozenset(emb.map) for emb in m_copies(t)}
    want = {frozenset(t.index(x) for x in "abcd"), frozenset(t.index(x) for x in "hacf")}
    _require(want <= images, "M copies at {a,b,c,d} and {h,a,c,f} not both found")
    return f"amiable, not adequate, <a,e> has order {len(generated_subsemigroup(t, (a, e)))}, M-copies " \
           + " ".join("{" + ",".join(t.name(x) for x in sorted(s)) + "}" for s in sorted(images, key=sorted))


def check_a5(ctx: Context) -> str:
    t = ctx.table2
    _require(is_associative(t), "table2 not associative")
    rep = green_partitions(t)
    _require(not rep.is_abundant, "table2 should not be abundant")
    d = t.index("d")
    cls = rep.Lstar.block_of(d)
    _require(not set(cls) & rep.idempotents, "L*-class of d contains an idempotent")
    return "not abundant; L*-class of d = {" + ",".join(t.name(x) for x in cls) + "} has no idempotent"


def check_a6(ctx: Context) -> str:
    checked_e = checked_z = 0
    for n in range(1, 5):
        for s in census(n, "all", ctx.jobs):
            flags = green_partitions(s).flags()
            infls = [idempotent_inflation(s, e) for e in sorted(green_partitions(s).idempotents)]
            if find_zero(s) is not None:
                infls.append(pseudozero_inflation(s))
            for inf in infls:
                u = inf.table
                _require(is_associative(u), f"inflation of {s.entries} not associative")
                _require(is_homomorphism(u, s, inf.base_map), "retraction is not a homomorphism")
                _require(green_partitions(u).flags() == flags,
                         f"{inf.kind} inflation changes flags of {s.entries}")
                _require(star_classes_of_inflation(s, inf).holds,
                         f"{inf.kind} inflation star classes of {s.entries} have wrong shape")
                if inf.kind == "idempotent":
                    checked_e += 1
                else:
                    checked_z += 1
    return f"{checked_e} idempotent and {checked_z} pseudozero inflations over orders 1-4"


def check_a7(ctx: Context) -> str:
    total = variant_fail = 0
    for n in range(1, 6):
        for t in census(n, "amiable", ctx.jobs):
            res = check_quasi_identities(induced_algebra(t), include_variant=True)
            _require(all_hold(res), f"quasi-identity fails on {t.entries}")
            total += 1
            variant_fail += not res[-1].holds
    return f"{total} amiable semigroups satisfy all eight; variant (5') fails on {variant_fail}"


def pair_identity_violations(t: MulTable) -> list[str]:
    """Identities every noncommuting idempotent pair of an amiable semigroup obeys, where they fail in ``t``.

    For idempotents a, b with ab != ba: a, b, ab, ba are distinct;
    a(ab) = (ab)b = ab and b(ba) = (ba)a = ba; a(ba) = (ab)a = (ab)(ba) = aba
    lies outside {a, b}, and dually; aba = ab iff bab = ab, and then a, b
    generate a copy of M.
    """
    m = t.mul
    out = []
    for a, b in noncommuting_idempotent_pairs(t):
        for x, y in ((a, b), (b, a)):
            c, d = m(x, y), m(y, x)
            xyx, yxy = m(c, x), m(d, y)
            tag = f"({t.name(x)},{t.name(y)})"
            if len({x, y, c, d}) != 4:
                out.append(f"{tag}: a, b, ab, ba not distinct")
            if not (m(x, c) == c and m(c, y) == c and m(y, d) == d and m(d, x) == d):
                out.append(f"{tag}: a(ab) = (ab)b = ab or b(ba) = (ba)a = ba fails")
            if not (m(x, d) == m(c, x) == m(c, d) == xyx and xyx not in (x, y)):
                out.append(f"{tag}: ad = ca = cd = aba not in {{a, b}} fails")
            if not (m(y, c) == m(d, y) == m(d, c) == yxy and yxy not in (x, y)):
                out.append(f"{tag}: bc = db = dc = bab not in {{a, b}} fails")
            if (xyx == c) != (yxy == c):
                out.append(f"{tag}: aba = ab and bab = ab disagree")
            if xyx == c:
                sub = generated_subsemigroup(t, (x, y))
                if len(sub) != 4 or is_isomorphic(fx.M, t.restrict(sub)) is None:
                    out.append(f"{tag}: aba = ab but <a,b> is not M")
    return out


def check_a8(ctx: Context) -> str:
    pairs = 0
    for n in range(1, 6):
        for t in census(n, "amiable", ctx.jobs):
            bad = pair_identity_violations(t)
            if bad:
                raise _Fail(f"{t.entries}: {bad[0]}")
            pairs += len(noncommuting_idempotent_pairs(t))
    orders = range(1, 6) if ctx.skip_slow else range(1, 7)
    for n in orders:
        for t in census(n, "amiable", ctx.jobs):
            for a, b in noncommuting_idempotent_pairs(t):
                _require(pair_generates_M(t, a, b), f"order {n}: pair does not generate M in {t.entries}")
    msg = f"pair identities hold on {pairs} pairs at orders <= 5; every pair generates M at orders <= {orders[-1]}"
    if ctx.skip_slow:
        raise _Skip(msg + "; order 6 skipped")
    return msg


def check_a9(ctx: Context) -> str:
    expected = {1: 1, 2: 5, 3: 24, 4: 188}
    got = {n: len(census(n, "all", ctx.jobs)) for n in expected}
    _require(got == expected, f"counts {got}")
    for n in (1, 2, 3):
        oracle = classes(n, brute_force_labeled(n))
        _require(len(oracle) == expected[n], f"brute force gives {len(oracle)} at n={n}")
        _require(oracle == {t.entries for t in census(n, "all", ctx.jobs)},
                 f"brute force classes differ at n={n}")
    second = classes(4, backtrack_labeled(4))
    _require(second == {t.entries for t in census(4, "all", ctx.jobs)},
             "row-major labeled traversal disagrees at n=4")
    return "counts 1, 5, 24, 188; brute force agrees at n<=3, labeled traversal agrees at n=4"


CHECKS: list[tuple[str, str, Callable[[Context], str]]] = [
    ("A1", "order-4 classification", check_a1),
    ("A2", "order-5 classification", check_a2),
    ("A3", "amiable non-adequate implies M inside, orders 4-6", check_a3),
    ("A4", "fixture table3", check_a4),
    ("A5", "fixture table2", check_a5),
    ("A6", "inflation preservation", check_a6),
    ("A7", "quasi-identity soundness", check_a7),
    ("A8", "noncommuting pair identities", check_a8),
    ("A9", "enumeration cross-check", check_a9),
]


def default_context(**kw) -> Context:
    return Context(fx.M, fx.TABLE2, fx.TABLE3, fx.TABLE_V, **kw)


def run_check(code: str, ctx: Context) -> CheckResult:
    for c, title, fn in CHECKS:
        if c == code:
            break
    else:
        raise KeyError(code)
    t0 = time.perf_counter()
    try:
        status, detail = "pass", fn(ctx)
    except _Skip as exc:
        status, detail = "skip", str(exc)
    except _Fail as exc:
        status, detail = "fail", str(exc)
    except Exception as exc:  # a corrupted fixture can break constructions
        status, detail = "fail", f"{type(exc).__name__}: {exc}"
    return CheckResult(code, title, status, detail, time.perf_counter() - t0)


def run_checks(ctx: Optional[Context] = None) -> list[CheckResult]:
    ctx = ctx or default_context()
    return [run_check(code, ctx) for code, _, _ in CHECKS]


def format_results(results: list[CheckResult]) -> str:
    lines = [f"{r.code:<3} {r.status.upper():<4} {r.seconds:7.2f}s  {r.title}: {r.detail}" for r in results]
    return "\n".join(lines) + "\n"
