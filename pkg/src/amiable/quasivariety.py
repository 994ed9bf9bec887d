"""Amiable semigroups as algebras of type <2,1,1>.

In an amiable semigroup every element ``x`` has a unique idempotent
``x_l`` in its L*-class and ``x_r`` in its R*-class. The two unary maps
together with the multiplication satisfy eight quasi-identities; conversely
a semigroup carrying idempotent-valued maps that satisfy them is amiable.

Quasi-identity (5) is evaluated as ``xy = xz => x_l y = x_l z``. The
variant ``x_l y = y_l z`` is evaluated alongside it, as (5'), with
``include_variant=True``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .core import MulTable, idempotents
from .green import green_partitions


class NotAmiableError(ValueError):
    pass


@dataclass(frozen=True)
class AmiableAlgebra:
    table: MulTable
    lmap: tuple[int, ...]
    rmap: tuple[int, ...]


@dataclass(frozen=True)
class QuasiIdentityResult:
    label: str
    formula: str
    holds: bool
    witness: Optional[tuple[int, ...]] = None


QUASI_IDENTITIES = (
    ("1", "x_l x_l = x_l"),
    ("2", "x_r x_r = x_r"),
    ("3", "x x_l = x"),
    ("4", "x_r x = x"),
    ("5", "xy = xz => x_l y = x_l z"),
    ("6", "yx = zx => y x_r = z x_r"),
    ("7", "(xx = x & yy = y & xy = x & yx = y) => x = y"),
    ("8", "(xx = x & yy = y & xy = y & yx = x) => x = y"),
)
VARIANT_5 = ("5'", "xy = xz => x_l y = y_l z")


def induced_algebra(t: MulTable) -> AmiableAlgebra:
    rep = green_partitions(t)
    maps = []
    for rel, part in (("L*", rep.Lstar), ("R*", rep.Rstar)):
        rep_of = {}
        for block in part.blocks():
            idem = [x for x in block if x in rep.idempotents]
            if len(idem) != 1:
                names = "{" + ", ".join(t.name(x) for x in block) + "}"
                raise NotAmiableError(f"{rel}-class {names} has {len(idem)} idempotents")
            for x in block:
                rep_of[x] = idem[0]
        maps.append(tuple(rep_of[x] for x in t.elements()))
    return AmiableAlgebra(t, maps[0], maps[1])


def _first(cases) -> Optional[tuple[int, ...]]:
    return next(iter(cases), None)


def check_quasi_identities(alg: AmiableAlgebra, include_variant: bool = False) -> list[QuasiIdentityResult]:
    """Evaluate each quasi-identity over all tuples; witnesses are first falsifying tuples."""
    t, l, r = alg.table, alg.lmap, alg.rmap
    n = t.order
    m = t.mul
    els = range(n)
    pairs = list(product(els, repeat=2))
    triples = list(product(els, repeat=3))
    checks = {
        "1": (((x,) for x in els if m(l[x], l[x]) != l[x])),
        "2": (((x,) for x in els if m(r[x], r[x]) != r[x])),
        "3": (((x,) for x in els if m(x, l[x]) != x)),
        "4": (((x,) for x in els if m(r[x], x) != x)),
        "5": ((x, y, z) for x, y, z in triples
              if m(x, y) == m(x, z) and m(l[x], y) != m(l[x], z)),
        "6": ((x, y, z) for x, y, z in triples
              if m(y, x) == m(z, x) and m(y, r[x]) != m(z, r[x])),
        "7": ((x, y) for x, y in pairs
              if m(x, x) == x and m(y, y) == y and m(x, y) == x and m(y, x) == y and x != y),
        "8": ((x, y) for x, y in pairs
              if m(x, x) == x and m(y, y) == y and m(x, y) == y and m(y, x) == x and x != y),
    }
    out = []
    for label, formula in QUASI_IDENTITIES:
        w = _first(checks[label])
        out.append(QuasiIdentityResult(label, formula, w is None, w))
    if include_variant:
        w = _first((x, y, z) for x, y, z in triples
                   if m(x, y) == m(x, z) and m(l[x], y) != m(l[y], z))
        out.append(QuasiIdentityResult(VARIANT_5[0], VARIANT_5[1], w is None, w))
    return out


def all_hold(results: list[QuasiIdentityResult]) -> bool:
    return all(res.holds for res in results if res.label in {q[0] for q in QUASI_IDENTITIES})


def _candidate_maps(t: MulTable, left: bool) -> list[tuple[int, ...]]:
    """Idempotent-valued maps obeying (3), resp. (4), and then (5), resp. (6)."""
    n = t.order
    idem = sorted(idempotents(t))
    m = t.mul
    if left:
        choices = [[e for e in idem if m(x, e) == x] for x in range(n)]
    else:
        choices = [[e for e in idem if m(e, x) == x] for x in range(n)]
    good = []
    for f in product(*choices):
        if left:
            bad = any(m(x, y) == m(x, z) and m(f[x], y) != m(f[x], z)
                      for x in range(n) for y in range(n) for z in range(n))
        else:
            bad = any(m(y, x) == m(z, x) and m(y, f[x]) != m(z, f[x])
                      for x in range(n) for y in range(n) for z in range(n))
        if not bad:
            good.append(f)
    return good


def find_satisfying_structure(t: MulTable) -> Optional[AmiableAlgebra]:
    """Some idempotent-valued (lmap, rmap) satisfying all eight, or None.

    Each quasi-identity mentions at most one of the two maps, so the search
    runs over left and right candidates independently; it is still exhaustive.
    """
    lefts = _candidate_maps(t, left=True)
    rights = _candidate_maps(t, left=False)
    for lm in lefts:
        for rm in rights:
            alg = AmiableAlgebra(t, lm, rm)
            if all_hold(check_quasi_identities(alg)):
                return alg
    return None


def format_report(results: list[QuasiIdentityResult], t: MulTable) -> str:
    lines = []
    for res in results:
        status = "holds" if res.holds else "FAILS at " + ", ".join(
            f"{v}={t.name(x)}" for v, x in zip("xyz", res.witness))
        lines.append(f"({res.label}) {res.formula}: {status}")
    return "\n".join(lines) + "\n"
