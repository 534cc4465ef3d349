"""Command line: ``ocgroups analyze`` and ``ocgroups verify``.

Exit codes: 0 when everything holds, 1 when a campaign found a
counterexample, 2 for bad input or configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__, lemma24, permgroup, suite
from .analysis import group_report
from .chartable import CHARACTER_CAP, dixon_character_table
from .constructions import BUILTIN_NAMES, ConstructionError, builtin
from .groupfile import GroupFileError, load_group_file
from .permgroup import PermGroup, TooLargeError

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_CONFIG = 0, 1, 2
MAX_SCAN_DEGREE = 7


class ConfigError(Exception):
    pass


def load_source(source: str) -> PermGroup:
    if source.startswith("builtin:"):
        name = source[len("builtin:"):]
        try:
            G = builtin(name)
        except ConstructionError as exc:
            raise ConfigError(f"{exc}; known: {', '.join(BUILTIN_NAMES)}") from None
        G.name = name
        return G
    path = Path(source)
    if not path.is_file():
        raise ConfigError(f"no such group file: {source} (use builtin:<name> for constructions)")
    try:
        return load_group_file(path)
    except GroupFileError as exc:
        raise ConfigError(f"{source}: {exc}") from None


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _document(command: str, groups, counterexamples, start: float, **extra) -> dict:
    doc = {"version": __version__, "command": command, "groups": groups,
           "counterexamples": counterexamples}
    doc.update(extra)
    doc["elapsed_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
    return doc


def _emit_json(doc: dict) -> None:
    json.dump(doc, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


# -- analyze ----------------------------------------------------------------

def cmd_analyze(args) -> int:
    start = time.perf_counter()
    G = load_source(args.source)
    report = group_report(G, args.source)
    table = None
    if args.chartab:
        if G.order() > CHARACTER_CAP:
            raise ConfigError(f"order {G.order()} exceeds the character-table cap {CHARACTER_CAP}")
        table = dixon_character_table(G)
    if args.json:
        extra = {"character_table": table.to_dict()} if table else {}
        _emit_json(_document(f"analyze {args.source}", [report.to_dict()], [], start, **extra))
        return EXIT_OK
    d = report.to_dict()
    print(f"group: {d['label']}")
    print(f"order: {d['order']}")
    print(f"center order: {d['center_order']}")
    print(f"abelian: {_yn(d['abelian'])}")
    print(f"nilpotent: {_yn(d['nilpotent'])}")
    print(f"classes: {len(d['class_sizes'])}")
    print("class sizes (size x element order): "
          + " ".join(f"{s}x{o}" for s, o in d["class_sizes"]))
    print("element orders: " + " ".join(map(str, d["order_spectrum"])))
    print(f"rational: {_yn(d['rational'])}")
    print(f"OC-group: {_yn(d['oc'])}")
    print(f"odd-order conjugate: {_yn(d['odd_order_conjugate'])}")
    print(f"all-order conjugate: {_yn(d['all_order_conjugate'])}")
    if table is not None:
        print()
        print(f"character table (exponent {table.e}, prime {table.prime}):")
        print(table.format_text())
    return EXIT_OK


# -- verify -----------------------------------------------------------------

def _seed_groups(path) -> list[tuple[str, PermGroup]]:
    if path is None:
        return []
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"seed catalog not found: {path}")
    out = []
    for line in p.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            gp = Path(line)
            if not gp.is_absolute():
                gp = p.parent / gp
            out.append((line, load_source(str(gp))))
    return out


def build_catalog(args) -> suite.Catalog:
    degree = args.scan_degree
    if not 0 <= degree <= MAX_SCAN_DEGREE:
        raise ConfigError(f"--scan-degree must be between 0 and {MAX_SCAN_DEGREE}")
    if degree == 7:
        print("warning: scanning S7 builds 11300 subgroups and may take several minutes",
              file=sys.stderr)
    cat = suite.default_catalog(degree or None, named=False)
    for label, G in suite.named_groups() + _seed_groups(args.seed_catalog):
        if G.order() <= args.max_order:
            cat.add(label, G)
    return cat


def _lemma24_campaign() -> tuple[dict, list[str]]:
    start = time.perf_counter()
    ok, table = lemma24.verify()
    cert = lemma24.completeness_bound()
    pairs = sorted(lemma24.admissible_pairs())
    lines = [f"q={q}: r in {{{', '.join(map(str, rs))}}}" for q, rs in table.items()]
    lines.append(f"{len(pairs)} admissible (q, r) pairs: "
                 + " ".join(f"({p.q},{p.r})" for p in pairs))
    for name, good in cert.checks.items():
        lines.append(f"  [{'ok' if good else 'FAIL'}] {name}")
    passed = ok and cert.holds
    lines.insert(0, f"lemma-2-4: {'PASS' if passed else 'FAIL'} (table "
                    f"{'matches' if ok else 'differs from'} the published list)")
    entry = {
        "campaign": "lemma-2-4",
        "passed": passed,
        "pairs": [[p.q, p.r] for p in pairs],
        "checks": dict(cert.checks, **{"table matches published list": ok}),
        "elapsed_ms": round((time.perf_counter() - start) * 1000.0, 3),
    }
    return entry, lines


def _run_campaign(name: str, catalog_fn, args) -> suite.VerificationReport:
    classes_only = args.classes_only
    if name == "theorem-a":
        return suite.run_theorem_a(catalog_fn(), classes_only)
    if name == "syskin":
        return suite.run_syskin(catalog_fn(), classes_only)
    if name == "lemma-2-5":
        return suite.run_lemma_2_5(catalog_fn(), classes_only)
    if name == "theorem-b":
        return suite.run_theorem_b_targets()
    if name == "quotient-closure":
        return suite.run_quotient_closure()
    if name == "paper-facts":
        return suite.paper_fact_suite(args.scan_degree or 6)
    if name == "character-oracle":
        return suite.run_character_oracle(catalog_fn(), representatives_only=classes_only)
    raise ConfigError(f"unknown campaign {name!r}")


def _report_entry(rep: suite.VerificationReport) -> dict:
    return {
        "campaign": rep.campaign,
        "passed": rep.passed,
        "scope": rep.scope,
        "checked": len(rep.verdicts) + len(rep.checks),
        "verdicts": [{"label": v.label, "order": v.order, "passed": v.passed, "note": v.note}
                     for v in rep.verdicts],
        "checks": [{"name": k, "passed": ok, "detail": rep.details.get(k, "")}
                   for k, ok in rep.checks.items()],
        "elapsed_ms": round(rep.elapsed_ms, 3),
    }


def _report_lines(rep: suite.VerificationReport, verbose: bool) -> list[str]:
    lines = [rep.summary()]
    for name, ok in rep.checks.items():
        detail = rep.details.get(name)
        lines.append(f"  [{'ok' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    for v in rep.verdicts:
        if verbose or not v.passed:
            lines.append(f"  [{'ok' if v.passed else 'FAIL'}] {v.label} (order {v.order})"
                         + (f": {v.note}" if v.note else ""))
    return lines


def cmd_verify(args) -> int:
    start = time.perf_counter()
    names = list(suite.CAMPAIGNS) if args.campaign == "all" else [args.campaign]

    catalog = None

    def catalog_fn():
        nonlocal catalog
        if catalog is None:
            catalog = build_catalog(args)
        return catalog

    campaigns, counterexamples, lines = [], [], []
    groups: dict[str, dict] = {}
    for name in names:
        if name == "lemma-2-4":
            entry, text = _lemma24_campaign()
            campaigns.append(entry)
            lines.extend(text)
            if not entry["passed"]:
                counterexamples.append({"campaign": name, "label": "lemma-2-4",
                                        "reason": "pair table differs"})
            continue
        rep = _run_campaign(name, catalog_fn, args)
        campaigns.append(_report_entry(rep))
        lines.extend(_report_lines(rep, args.verbose))
        for c in rep.counterexamples:
            counterexamples.append(dict(c, campaign=name))
            if "report" in c:
                groups.setdefault(c["label"], c["report"])
    passed = not counterexamples
    if args.json:
        _emit_json(_document(f"verify {args.campaign}", list(groups.values()), counterexamples,
                             start, campaigns=campaigns))
    else:
        print("\n".join(lines))
        if len(names) > 1:
            print(f"overall: {'PASS' if passed else 'FAIL'}")
    return EXIT_OK if passed else EXIT_COUNTEREXAMPLE


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ocgroups", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="report conjugacy and rationality data for one group")
    pa.add_argument("source", help="builtin:<name> or a group file")
    pa.add_argument("--chartab", action="store_true", help="also print the character table")
    pa.add_argument("--json", action="store_true", help="structured output")
    pa.add_argument("--max-order", type=int, default=permgroup.DEFAULT_ENUMERATION_CAP,
                    help="element enumeration cap (default %(default)s)")

    pv = sub.add_parser("verify", help="run a verification campaign")
    pv.add_argument("campaign", choices=suite.CAMPAIGNS + ("all",))
    pv.add_argument("--json", action="store_true", help="structured output")
    pv.add_argument("--scan-degree", type=int, default=6,
                    help="scan all subgroups of S_n (0 disables, default %(default)s)")
    pv.add_argument("--max-order", type=int, default=permgroup.DEFAULT_ENUMERATION_CAP,
                    help="element enumeration cap; larger named groups are skipped")
    pv.add_argument("--seed-catalog", metavar="FILE",
                    help="file listing extra group files, one path per line")
    pv.add_argument("--classes-only", action="store_true",
                    help="evaluate one subgroup per conjugacy class of the scan")
    pv.add_argument("-v", "--verbose", action="store_true", help="list every verdict")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    saved_cap = permgroup.ENUMERATION_CAP
    try:
        if args.max_order < 1:
            raise ConfigError("--max-order must be positive")
        permgroup.set_enumeration_cap(args.max_order)
        if args.command == "analyze":
            return cmd_analyze(args)
        return cmd_verify(args)
    except (ConfigError, TooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    finally:
        permgroup.set_enumeration_cap(saved_cap)
