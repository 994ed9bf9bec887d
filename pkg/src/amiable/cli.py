"""Command-line interface: ``python -m amiable <command>``.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from . import fixtures as fx
from .constructions import idempotent_inflation, pseudozero_inflation, star_classes_of_inflation
from .core import MulTable, TableFormatError, associativity_violation, format_table, parse_table
from .embedding import contains_M, embeddings, m_copies
from .enumeration import FILTER_MODES, census, check_conjecture, check_order, classify_amiable_not_adequate
from .green import green_partitions, report_to_json
from .quasivariety import NotAmiableError, all_hold, check_quasi_identities, format_report, induced_algebra
from .verify import default_context, format_results, run_checks


class UsageError(Exception):
    pass


def load_table(source: str, require_semigroup: bool = True) -> MulTable:
    """Read ``fixture:NAME`` or a .cay file."""
    if source.startswith("fixture:"):
        try:
            t = fx.get_fixture(source[len("fixture:"):])
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc.strerror}") from None
        try:
            t = parse_table(text)
        except TableFormatError as exc:
            raise UsageError(f"{source}: {exc}") from None
    if require_semigroup:
        bad = associativity_violation(t)
        if bad is not None:
            x, y, z = (t.name(i) for i in bad)
            raise UsageError(f"{source}: not associative at (x, y, z) = ({x}, {y}, {z})")
    return t


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        sys.stdout.write(text)


def _map_json(t_src: MulTable, t_dst: MulTable, f) -> Optional[dict]:
    if f is None:
        return None
    return {t_src.name(i): t_dst.name(v) for i, v in enumerate(f.map)}


def cmd_analyze(args) -> int:
    t = load_table(args.source)
    rep = green_partitions(t)
    payload = report_to_json(t, rep)
    witness = contains_M(t)
    payload["contains_M"] = _map_json(fx.M, t, witness)
    payload["M_copies"] = [[t.name(v) for v in e.map] for e in m_copies(t)]
    lines = [f"order {t.order}", f"idempotents: {' '.join(payload['idempotents']) or '-'}"]
    for key in ("L", "R", "Lstar", "Rstar"):
        lines.append(f"{key}: " + " ".join("{" + ",".join(b) + "}" for b in payload[key]))
    lines.append(" ".join(f"{k}={str(payload[k]).lower()}" for k in ("regular", "abundant", "amiable", "adequate")))
    lines.append("contains_M: " + (witness.describe(fx.M, t) if witness else "none"))
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def _check_order(args) -> None:
    try:
        check_order(args.order, getattr(args, "allow_order_7", False))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_enumerate(args) -> int:
    _check_order(args)
    tables = census(args.order, args.filter, args.jobs, args.allow_order_7)
    files = []
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for k, t in enumerate(tables):
            name = f"order{args.order}_{args.filter}_{k:06d}.cay"
            (out / name).write_text(format_table(t))
            files.append(name)
        manifest = {"order": args.order, "filter": args.filter, "count": len(tables), "files": files}
        (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    payload = {"order": args.order, "filter": args.filter, "count": len(tables)}
    if not args.out:
        payload["tables"] = [t.rows() for t in tables]
    text = f"{len(tables)} semigroups of order {args.order} (filter {args.filter})\n"
    if args.out:
        text += f"wrote {len(files)} files and manifest.json to {args.out}\n"
    elif args.show:
        text += "".join(format_table(t) + "\n" for t in tables)
    _emit(args, payload, text)
    return 0


def cmd_classify(args) -> int:
    _check_order(args)
    result = classify_amiable_not_adequate(args.order, args.jobs, args.allow_order_7)
    payload = {"order": args.order, "count": len(result),
               "classes": [{"table": t.rows(), "matches": tags} for t, tags in result]}
    text = f"{len(result)} amiable non-adequate semigroups of order {args.order}\n"
    for t, tags in result:
        text += f"\n# matches: {', '.join(tags) or '(none)'}\n" + format_table(t, names=True)
    _emit(args, payload, text)
    return 0


def cmd_check_conjecture(args) -> int:
    _check_order(args)
    bad = check_conjecture(args.order, args.jobs, args.allow_order_7)
    payload = {"order": args.order, "counterexamples": [t.rows() for t in bad]}
    if bad:
        text = f"{len(bad)} counterexamples at order {args.order}:\n" + "".join(
            format_table(t) + "\n" for t in bad)
    else:
        text = f"no counterexamples at order {args.order}\n"
    _emit(args, payload, text)
    return 1 if bad else 0


def cmd_inflate(args) -> int:
    t = load_table(args.source)
    try:
        if args.pseudozero:
            inf = pseudozero_inflation(t)
        else:
            try:
                e = t.index(args.idempotent)
            except ValueError:
                if not args.idempotent.isdigit() or int(args.idempotent) >= t.order:
                    raise UsageError(f"no element {args.idempotent!r}") from None
                e = int(args.idempotent)
            inf = idempotent_inflation(t, e)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cert = star_classes_of_inflation(t, inf)
    u = inf.table
    named = lambda p: [[u.name(x) for x in b] for b in p.blocks()]  # noqa: E731
    certificate = {
        "kind": inf.kind,
        "new_element": u.name(inf.new_index),
        "base_element": t.name(inf.base_element),
        "Lstar": named(cert.Lstar),
        "Rstar": named(cert.Rstar),
        "shape_holds": cert.holds,
    }
    if args.format == "json":
        print(json.dumps({"table": u.rows(), "certificate": certificate}, indent=2, ensure_ascii=False))
    else:
        sys.stdout.write(format_table(u))
        print(json.dumps(certificate, ensure_ascii=False))
    return 0 if cert.holds else 1


def cmd_embed(args) -> int:
    target = load_table(args.target)
    source = load_table(args.source)
    if args.all:
        found = list(embeddings(source, target))
    else:
        first = next(embeddings(source, target), None)
        found = [first] if first else []
    payload = {"embeddings": [_map_json(source, target, e) for e in found]}
    if found:
        text = "".join(e.describe(source, target) + "\n" for e in found)
    else:
        text = "none\n"
    _emit(args, payload, text)
    return 0


def cmd_axioms(args) -> int:
    t = load_table(args.source)
    try:
        alg = induced_algebra(t)
    except NotAmiableError as exc:
        print(f"not amiable: {exc}", file=sys.stderr)
        return 1
    results = check_quasi_identities(alg, include_variant=args.variant)
    payload = {"results": [{"label": r.label, "formula": r.formula, "holds": r.holds,
                            "witness": [t.name(x) for x in r.witness] if r.witness else None}
                           for r in results]}
    _emit(args, payload, format_report(results, t))
    return 0 if all_hold(results) else 1


def cmd_fixtures(args) -> int:
    if args.action == "list":
        payload = {name: f.table.order for name, f in fx.FIXTURES.items()}
        _emit(args, payload, "".join(f"{k}\torder {v}\n" for k, v in payload.items()))
        return 0
    names = [args.name] if args.name else list(fx.FIXTURES)
    for name in names:
        if name not in fx.FIXTURES:
            raise UsageError(f"unknown fixture {name!r}")
    if args.dir:
        out = Path(args.dir)
        out.mkdir(parents=True, exist_ok=True)
        for name in names:
            (out / f"{name}.cay").write_text(f"# {name}\n" + format_table(fx.FIXTURES[name].table))
        print(f"wrote {len(names)} fixtures to {out}")
    else:
        for name in names:
            sys.stdout.write(f"# {name}\n" + format_table(fx.FIXTURES[name].table))
    return 0


def cmd_verify_paper(args) -> int:
    results = run_checks(default_context(skip_slow=args.skip_slow, jobs=args.jobs))
    payload = {"results": [{"code": r.code, "title": r.title, "status": r.status,
                            "detail": r.detail, "seconds": round(r.seconds, 3)} for r in results]}
    _emit(args, payload, format_results(results))
    return 1 if any(r.status == "fail" for r in results) else 0


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="text")
    jobs = argparse.ArgumentParser(add_help=False)
    env_jobs = os.environ.get("AMIABLE_JOBS")
    jobs.add_argument("--jobs", type=int, default=int(env_jobs) if env_jobs and env_jobs.isdigit() else None,
                      help="worker processes (default: $AMIABLE_JOBS or 1)")
    order = argparse.ArgumentParser(add_help=False)
    order.add_argument("--order", type=int, required=True)
    order.add_argument("--allow-order-7", action="store_true", help="permit order 7 (very slow)")

    p = argparse.ArgumentParser(prog="amiable", description="Finite semigroup analysis and enumeration.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[fmt], help="Green's relations and properties of a table")
    s.add_argument("source", help="a .cay file or fixture:NAME")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("enumerate", parents=[fmt, jobs, order], help="semigroups of a given order")
    s.add_argument("--filter", choices=FILTER_MODES, default="all")
    s.add_argument("--out", help="directory for .cay files and manifest.json")
    s.add_argument("--show", action="store_true", help="print the tables (text format)")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("classify", parents=[fmt, jobs, order], help="amiable non-adequate classes, matched to named tables")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("check-conjecture", parents=[fmt, jobs, order], help="amiable non-adequate tables without a copy of M")
    s.set_defaults(func=cmd_check_conjecture)

    s = sub.add_parser("inflate", parents=[fmt], help="one-point inflations")
    s.add_argument("source")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--idempotent", metavar="E", help="element name or index of the inducing idempotent")
    g.add_argument("--pseudozero", action="store_true")
    s.set_defaults(func=cmd_inflate)

    s = sub.add_parser("embed", parents=[fmt], help="embeddings of SOURCE (default M) into TARGET")
    s.add_argument("target")
    s.add_argument("--source", default="fixture:M")
    s.add_argument("--all", action="store_true", help="list every embedding")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("axioms", parents=[fmt], help="check the eight quasi-identities")
    s.add_argument("source")
    s.add_argument("--variant", action="store_true", help="also evaluate the variant x_l y = y_l z of (5)")
    s.set_defaults(func=cmd_axioms)

    s = sub.add_parser("fixtures", parents=[fmt], help="list or dump the built-in tables")
    s.add_argument("action", choices=("list", "dump"))
    s.add_argument("name", nargs="?")
    s.add_argument("--dir")
    s.set_defaults(func=cmd_fixtures)

    s = sub.add_parser("verify-paper", parents=[fmt, jobs], help="run the reproduction checks A1-A9")
    s.add_argument("--skip-slow", action="store_true", help="skip the order-6 parts")
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
