"""Command-line front end for edge-biregular map computations.

Subcommands
-----------
order       print the order of a finitely presented group
invariants  print the invariant record of a map file as JSON
construct   emit the map file of a named family member
classify    write the full catalog of maps with chi = -p as JSON
verify      run a named verification and report PASS or FAIL
export      emit a Cayley-graph or flag-graph view of a map (DOT or JSON)

Exit codes: 0 success or PASS, 1 verification FAIL, 2 input error,
3 resource limit (coset capacity).

All output is deterministic byte-for-byte for fixed inputs and flags.
DOT edge styling encodes the mark that labels each edge: x bold, y solid
(thin), s dashed (long), t dotted (short).  Each undirected Cayley edge
{h, h*g} is emitted once, from its smaller endpoint.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import census, families
from .maps import (
    EdgeBiregularMap,
    MapStructureError,
    flag_structure,
    load_map,
    map_file_text,
    map_invariants,
    strip_mark_lines,
)
from .presentations import (
    DEFAULT_MAX_COSETS,
    CapacityExceeded,
    ParseError,
    group_from_presentation,
    parse_presentation,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3

_MARK_STYLES = {"x": "bold", "y": "solid", "s": "dashed", "t": "dotted"}


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write_out(args: argparse.Namespace, text: str) -> None:
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")


# ---------------------------------------------------------------------------
# subcommands


def cmd_order(args: argparse.Namespace) -> int:
    text = strip_mark_lines(_read_text(args.file))
    pres = parse_presentation(text)
    marked = group_from_presentation(pres, max_cosets=args.max_cosets)
    _write_out(args, f"{marked.group.order}\n")
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace) -> int:
    m = load_map(_read_text(args.file), max_cosets=args.max_cosets)
    _write_out(args, json.dumps(map_invariants(m), indent=2) + "\n")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    def need(flag: str, value) -> None:
        if value is None:
            raise ValueError(f"--family {args.family} requires {flag}")

    if args.family in ("dh1", "dh2"):
        need("--p", args.p)
        if args.family == "dh1":
            m = families.dihedral_family_1(args.p, max_cosets=args.max_cosets)
            text = families.dihedral_family_1_text(args.p)
        else:
            m = families.dihedral_family_2(args.p, max_cosets=args.max_cosets)
            text = families.dihedral_family_2_text(args.p)
    elif args.family == "hpj":
        need("--kappa", args.kappa)
        need("--lambda", args.lam)
        need("--j", args.j)
        params = families.FamilyParams(args.kappa, args.lam, args.j)
        m = families.cyclic_fitting_map(params, max_cosets=args.max_cosets)
        text = families.cyclic_fitting_text(params)
    elif args.family == "hp":
        need("--m", args.m)
        m = families.valency_eight_map(args.m, max_cosets=args.max_cosets)
        text = families.valency_eight_text(args.m)
    elif args.family == "h3":
        m = families.exceptional_order36_map(max_cosets=args.max_cosets)
        text = families.exceptional_order36_text()
    else:  # chi2
        need("--index", args.index)
        text = families.chi_minus_2_text(args.index)
        m = load_map(map_file_text(text, families.MARK_NAMES), max_cosets=args.max_cosets)
    assert m is not None  # construction validated the parameters
    _write_out(args, map_file_text(text, families.MARK_NAMES))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    entries = census.classify(args.p, args.profile, jobs=args.jobs)
    _write_out(args, census.catalog_json(entries))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify targets


def _verify_thm_even(lines: list[str], jobs: int = 1) -> bool:
    rows = census.catalog_rows(census.classify(2, "exhaustive", jobs=jobs))
    expected = []
    for i in range(1, 13):
        k, l = families.CHI2_EXPECTED_TYPES[i - 1]
        expected.append(
            {
                "family": f"chi2({i})",
                "group_order": families.CHI2_EXPECTED_ORDERS[i - 1],
                "type": [min(k, l), max(k, l)],
                "orientable": i in families.CHI2_ORIENTABLE_INDICES,
                "fully_regular": i in families.CHI2_FULLY_REGULAR_INDICES,
            }
        )
    matched = 0
    by_family = {row["family"]: row for row in rows}
    for want in expected:
        row = by_family.get(want["family"])
        ok = row is not None and all(row[key] == want[key] for key in want)
        matched += ok
        lines.append(f"  {want['family']}: {'ok' if ok else 'MISMATCH'}")
    lines.append(f"{matched}/12 matched, {len(rows)} catalog entries")
    return matched == 12 and len(rows) == 12


def _verify_thm_odd(p: int, lines: list[str], jobs: int = 1) -> bool:
    exhaustive = census.classify(p, "exhaustive", jobs=jobs)
    constructive = census.classify(p, "constructive")
    same = census.catalog_json(exhaustive) == census.catalog_json(constructive)
    for row in census.catalog_rows(exhaustive):
        lines.append(
            f"  order {row['group_order']} type {row['type']} family {row['family']}"
        )
    lines.append(
        f"exhaustive: {len(exhaustive)} classes;"
        f" constructive: {len(constructive)}; catalogs identical: {same}"
    )
    return same


_PROBE_GRID = ((3, 5), (5, 3), (7, 3), (7, 5), (5, 4), (5, 6))


def _verify_lemma_4_3(lines: list[str]) -> bool:
    ok = True
    for p, lam in _PROBE_GRID:
        try:
            found = families.cyclic_by_dihedral_probe(p, lam)
        except AssertionError as exc:
            lines.append(f"  p={p} lambda={lam}: COUNTEREXAMPLE ({exc})")
            ok = False
            continue
        lines.append(f"  p={p} lambda={lam}: {len(found)} maps, all conformant")
    return ok


def _verify_lemma_4_2(lines: list[str], jobs: int = 1) -> bool:
    report = census.verify_chi_minus_1_dihedral(jobs=jobs)
    for row in report["groups"]:
        lines.append(
            f"  order {row['order']} group {row['group']}:"
            f" {row['maps_found']} maps ({'ok' if row['ok'] else 'VIOLATION'})"
        )
    return report["passed"]


def _verify_exclusions(p: int, lines: list[str], jobs: int = 1) -> bool:
    report = census.verify_p_divides_exclusions(p, jobs=jobs)
    for row in report["orders"]:
        if row["status"] == "UNSUPPORTED":
            lines.append(f"  order {row['order']}: UNSUPPORTED (no atlas recipes)")
        else:
            lines.append(
                f"  order {row['order']}: {row['maps_found']} maps ({row['status']})"
            )
    return report["passed"]


def cmd_verify(args: argparse.Namespace) -> int:
    lines: list[str] = []
    if args.target == "thm-even":
        passed = _verify_thm_even(lines, jobs=args.jobs)
    elif args.target == "thm-odd":
        if args.p is None:
            raise ValueError("verify thm-odd requires --p")
        passed = _verify_thm_odd(args.p, lines, jobs=args.jobs)
    elif args.target == "lemma-4-2":
        passed = _verify_lemma_4_2(lines, jobs=args.jobs)
    elif args.target == "lemma-4-3":
        passed = _verify_lemma_4_3(lines)
    else:  # exclusions
        if args.p is None:
            raise ValueError("verify exclusions requires --p")
        passed = _verify_exclusions(args.p, lines, jobs=args.jobs)
    verdict = "PASS" if passed else "FAIL"
    _write_out(args, "\n".join([f"verify {args.target}: {verdict}"] + lines) + "\n")
    return EXIT_OK if passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# graph exports


def _cayley_edges(m: EdgeBiregularMap) -> list[tuple[int, int, str]]:
    edges = []
    mul = m.group.mul
    for label, g in zip(("x", "y", "s", "t"), m.marks):
        for h in range(m.group.order):
            other = mul[h][g]
            if h < other:
                edges.append((h, other, label))
    return edges


def _flag_edges(m: EdgeBiregularMap) -> list[tuple[int, int, str]]:
    fs = flag_structure(m)
    edges = []
    for label, rho in (("rho0", fs.rho0), ("rho1", fs.rho1), ("rho2", fs.rho2)):
        for f in range(fs.num_flags):
            if f < rho[f]:
                edges.append((f, rho[f], label))
    return edges


def _dot_graph(name: str, num_nodes: int, edges: list[tuple[int, int, str]]) -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    lines += [f"  {v};" for v in range(num_nodes)]
    for a, b, label in edges:
        style = _MARK_STYLES.get(label, "solid")
        lines.append(f'  {a} -- {b} [label="{label}", style="{style}"];')
    return "\n".join(lines + ["}"]) + "\n"


def _json_graph(num_nodes: int, edges: list[tuple[int, int, str]]) -> str:
    payload = {
        "nodes": list(range(num_nodes)),
        "edges": [{"source": a, "target": b, "label": lbl} for a, b, lbl in edges],
    }
    return json.dumps(payload, indent=2) + "\n"


def cmd_export(args: argparse.Namespace) -> int:
    m = load_map(_read_text(args.file), max_cosets=args.max_cosets)
    if args.what == "cayley":
        num_nodes, edges = m.group.order, _cayley_edges(m)
    else:  # flags
        fs = flag_structure(m)
        num_nodes, edges = fs.num_flags, _flag_edges(m)
    if args.format == "dot":
        _write_out(args, _dot_graph(args.what, num_nodes, edges))
    else:
        _write_out(args, _json_graph(num_nodes, edges))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser and entry point


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="ebrmaps",
        description="Construct, analyze, classify and export edge-biregular maps.",
    )
    sub = top.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
        p.add_argument("--out", default="-", help="output path (default stdout)")

    p_order = sub.add_parser("order", help="order of a finitely presented group")
    p_order.add_argument("file", help="presentation or map file")
    common(p_order)
    p_order.set_defaults(func=cmd_order)

    p_inv = sub.add_parser("invariants", help="map invariants as JSON")
    p_inv.add_argument("file", help="map file")
    common(p_inv)
    p_inv.set_defaults(func=cmd_invariants)

    p_con = sub.add_parser("construct", help="emit a family member's map file")
    p_con.add_argument(
        "--family", required=True, choices=("dh1", "dh2", "hpj", "hp", "h3", "chi2")
    )
    p_con.add_argument("--p", type=int)
    p_con.add_argument("--kappa", type=int)
    p_con.add_argument("--lambda", dest="lam", type=int)
    p_con.add_argument("--j", type=int)
    p_con.add_argument("--m", type=int)
    p_con.add_argument("--index", type=int)
    common(p_con)
    p_con.set_defaults(func=cmd_construct)

    p_cls = sub.add_parser("classify", help="catalog of maps with chi = -p")
    p_cls.add_argument("--p", type=int, required=True)
    p_cls.add_argument(
        "--profile", choices=("exhaustive", "constructive"), default="exhaustive"
    )
    p_cls.add_argument("--jobs", type=int, default=1)
    common(p_cls)
    p_cls.set_defaults(func=cmd_classify)

    p_ver = sub.add_parser("verify", help="run a named verification")
    p_ver.add_argument(
        "target",
        choices=("thm-odd", "thm-even", "lemma-4-2", "lemma-4-3", "exclusions"),
    )
    p_ver.add_argument("--p", type=int)
    p_ver.add_argument("--jobs", type=int, default=1)
    common(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_exp = sub.add_parser("export", help="graph view of a map")
    p_exp.add_argument("what", choices=("cayley", "flags"))
    p_exp.add_argument("file", help="map file")
    p_exp.add_argument("--format", choices=("dot", "json"), default="dot")
    common(p_exp)
    p_exp.set_defaults(func=cmd_export)

    return top


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ParseError, MapStructureError, census.UnsupportedOrder) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        detail = f": {exc}" if str(exc) else ""
        print(f"FAIL: verification assertion failed{detail}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
