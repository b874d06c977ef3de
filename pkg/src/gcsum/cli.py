"""``gcsum`` command line.

Exit status: 0 on success, 1 on bad input, 2 when a ``verify`` sweep records
at least one MISMATCH.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .chromatic import chi_sums, chi_sums_over_extensions, chromatic_number
from .errors import GcsumError
from .extension import (
    bipartite_extension_construct,
    bipartite_preserving_extension,
    bipartite_swap_extension,
    complete_extensions,
    extension_via_partition,
    extension_via_spanning_path,
    incomplete_extension,
    partial_extension,
)
from .graph import BipartitePartition, family, is_bipartite
from .matching import hall_condition_nc, max_bidistinct_pairs
from .patterns import CompositionSpec, build_treelike, verify_treelike_chromatic
from .verify import (
    MISMATCH,
    RUNNERS,
    VerifyReport,
    extended_rows,
    family_rows,
    format_table,
    verify_theorem,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return _int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 2..10, got {text!r}")


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="edge-list or JSON graph file")
    p.add_argument("--family", dest="family_spec", metavar="KIND:P1[,P2]",
                   help="use a named family instead of a file, e.g. path:5 or complete_bipartite:3,3")
    p.add_argument("--dot", metavar="OUT", help="also write the resulting graph as DOT")


def _load(args):
    if bool(args.file) == bool(args.family_spec):
        raise UsageError("give exactly one of FILE or --family")
    if args.file:
        try:
            return io.read_graph(args.file)
        except OSError as exc:
            raise GcsumError(f"cannot read {args.file}: {exc.strerror}", "io_error")
    kind, _, params = args.family_spec.partition(":")
    return family(kind, *_int_list(params))


def _write_dot(args, g) -> None:
    if args.dot:
        Path(args.dot).write_text(io.to_dot(g))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gcsum", description="Exact chromatic sums and degree-extensions of small graphs.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("chi", help="chromatic number")
    _add_input(p)

    p = sub.add_parser("sums", help="min/max colour sums over minimum colourings")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--extensions", action="store_true", help="take the sums over all complete extensions")

    p = sub.add_parser("extend", help="degree-extensions")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true", help="enumerate every complete extension (default)")
    mode.add_argument("--spanning-path", action="store_true")
    mode.add_argument("--partition", metavar="P1/P2/..", help="parts as comma lists separated by '/', e.g. 0,1,2,3/4,5,6,7")
    mode.add_argument("--partial", action="store_true", help="partial extension of an almost-regular graph")
    mode.add_argument("--incomplete", action="store_true", help="incomplete extension of an odd-order graph")
    p.add_argument("--rule", choices=["max", "min"], default="max", help="skipped-vertex rule for --incomplete")

    p = sub.add_parser("bipartite", help="bipartite constructions")
    _add_input(p)
    p.add_argument("--x", type=_int_list, help="vertices of side X (default: BFS two-colouring)")
    p.add_argument("--json", action="store_true")
    op = p.add_mutually_exclusive_group()
    op.add_argument("--construct", action="store_true", help="extension from cross non-edges (default)")
    op.add_argument("--preserve", action="store_true", help="bipartite-preserving extension")
    op.add_argument("--swap", action="store_true", help="swap extension")
    op.add_argument("--ell", action="store_true", help="maximum disjoint non-adjacent cross pairs")
    op.add_argument("--hall", action="store_true", help="Hall condition on non-neighbourhoods")

    p = sub.add_parser("pattern", help="build a composition from a JSON spec")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.add_argument("--verify", action="store_true", help="compare chi(G*) with chi(H)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="OUT")

    p = sub.add_parser("family", help="published values versus exact values for a family")
    p.add_argument("kind", choices=["path", "cycle"])
    p.add_argument("n", type=int)
    p.add_argument("--extended", action="store_true", help="sums over complete extensions")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run a theorem sweep")
    p.add_argument("theorem", choices=sorted(RUNNERS))
    p.add_argument("--n", type=_range, dest="ns", metavar="LO..HI")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--confirm", action="store_true", help="T3.6: re-check exact values with the brute-force oracle")
    p.add_argument("--json", action="store_true")
    return parser


def _emit(out, data, as_json: bool, text: str) -> None:
    out.write((json.dumps(data, indent=2, sort_keys=True) if as_json else text) + "\n")


def cmd_chi(args, out):
    g = _load(args)
    _write_dot(args, g)
    out.write(f"{chromatic_number(g)}\n")


def cmd_sums(args, out):
    g = _load(args)
    _write_dot(args, g)
    if args.extensions:
        ext = complete_extensions(g)
        res = chi_sums_over_extensions(g, ext)
        data = res.to_dict()
        data["extensions"] = len(ext.extensions)
        data["iso_classes"] = len(ext.iso_classes)
        head = ["#", "matching", "class", "χ", "χ′", "χ⁺"]
        body = [[r["index"], r["matching"], r["iso_class"], r["chi"], r["chi_sum_min"], r["chi_sum_max"]] for r in res.table]
        text = (
            f"{len(ext.extensions)} extensions, {len(ext.iso_classes)} isomorphism classes\n"
            f"χ′ over extensions = {res.chi_sum_min_x} (extension #{res.argmin})\n"
            f"χ⁺ over extensions = {res.chi_sum_max_x} (extension #{res.argmax})\n\n"
            + format_table(head, body)
        )
        _emit(out, data, args.json, text)
        return
    rpt = chi_sums(g)
    name = args.file or args.family_spec
    text = format_table(
        ["instance", "n", "χ", "χ′", "χ⁺", "θ(min)", "θ(max)"],
        [[name, g.n, rpt.chi, rpt.chi_sum_min, rpt.chi_sum_max, rpt.witness_min.theta(), rpt.witness_max.theta()]],
    )
    _emit(out, rpt.to_dict(), args.json, text)


def cmd_extend(args, out):
    g = _load(args)
    single = None
    if args.spanning_path:
        single = extension_via_spanning_path(g)
    elif args.partition:
        parts = [_int_list(p) for p in args.partition.split("/")]
        single = extension_via_partition(g, parts)
    elif args.partial:
        single = partial_extension(g)
    elif args.incomplete:
        single = incomplete_extension(g, rule=args.rule)
    else:
        ext = complete_extensions(g)
        if ext.extensions:
            _write_dot(args, ext.extensions[0][1])
        lines = [f"{len(ext.extensions)} extensions, {len(ext.iso_classes)} isomorphism classes"]
        for i, (m, _) in enumerate(ext.extensions):
            cls = next(c for c, members in enumerate(ext.iso_classes) if i in members)
            lines.append(f"#{i} class {cls}: {io.matching_to_json(m)}")
        data = ext.to_dict()
        data["graphs"] = [io.graph_to_dict(e) for _, e in ext.extensions]
        _emit(out, data, args.json, "\n".join(lines))
        return
    if single is None:
        _emit(out, {"graph": None}, args.json, "no extension exists")
        return
    _write_dot(args, single)
    added = sorted(single.edges - g.edges)
    text = f"added {len(added)} edges: {[list(e) for e in added]}\n" + io.format_edge_list(single).rstrip()
    _emit(out, {"graph": io.graph_to_dict(single), "added": [list(e) for e in added]}, args.json, text)


def cmd_bipartite(args, out):
    g = _load(args)
    if args.x is not None:
        xs = set(args.x)
        part = BipartitePartition.of(xs, (v for v in range(g.n) if v not in xs))
    else:
        part = is_bipartite(g)
        if part is None:
            raise GcsumError("graph is not bipartite", "invalid_partition")
    if args.ell:
        pairing = max_bidistinct_pairs(g, part)
        data = {"ell": pairing.ell, "pairs": [list(p) for p in pairing.pairs]}
        _emit(out, data, args.json, f"ell = {pairing.ell}, pairs = {data['pairs']}")
        return
    if args.hall:
        ok = hall_condition_nc(g, part)
        _emit(out, {"hall": ok}, args.json, f"Hall condition on non-neighbourhoods: {'holds' if ok else 'fails'}")
        return
    if args.preserve:
        result, extra = bipartite_preserving_extension(g, part), {}
    elif args.swap:
        result, extra = bipartite_swap_extension(g, part), {}
    else:
        built = bipartite_extension_construct(g, part)
        result, extra = built.graph, {"ell": built.ell, "pairs_used": built.pairs_used}
    _write_dot(args, result)
    rpt = chi_sums(result)
    data = {"graph": io.graph_to_dict(result), "chi": rpt.chi, "chi_sum_min": rpt.chi_sum_min,
            "chi_sum_max": rpt.chi_sum_max, **extra}
    text = (
        "".join(f"{k} = {v}\n" for k, v in extra.items())
        + f"added edges: {[list(e) for e in sorted(result.edges - g.edges)]}\n"
        + f"χ = {rpt.chi}, χ′ = {rpt.chi_sum_min}, χ⁺ = {rpt.chi_sum_max}"
    )
    _emit(out, data, args.json, text)


def cmd_pattern(args, out):
    try:
        raw = json.loads(Path(args.spec).read_text())
    except OSError as exc:
        raise GcsumError(f"cannot read {args.spec}: {exc.strerror}", "io_error")
    except json.JSONDecodeError as exc:
        raise GcsumError(f"{args.spec}: invalid JSON: {exc}", "parse_error")
    try:
        spec = CompositionSpec.from_dict(raw)
    except (KeyError, TypeError) as exc:
        raise GcsumError(f"malformed composition spec: {exc}", "malformed_merge")
    built = build_treelike(spec)
    _write_dot(args, built.graph)
    data = {"graph": io.graph_to_dict(built.graph)}
    text = f"G*: {built.graph.n} vertices, {built.graph.m} edges"
    if args.verify:
        res = verify_treelike_chromatic(spec)
        data.update({k: res[k] for k in ("chi_H", "chi_Gstar", "match", "constructive")})
        data["witness"] = list(res["witness"].assignment) if res["witness"] else None
        text += f"\nχ(H) = {res['chi_H']}, χ(G*) = {res['chi_Gstar']}: {'MATCH' if res['match'] else 'MISMATCH'}"
        if res["witness"]:
            text += f"\ncolouring: {list(res['witness'].assignment)}"
    _emit(out, data, args.json, text)


def cmd_family(args, out):
    build = lambda n: family(args.kind, n)  # noqa: E731
    if args.extended:
        rows = extended_rows(f"extended_{args.kind}", build, [args.n])
        if not rows:
            raise GcsumError("extended families need even n >= 4", "invalid_params")
    else:
        rows = family_rows(args.kind, build, [args.n])
    rpt = VerifyReport(f"family {args.kind}", rows)
    _emit(out, rpt.to_dict(), args.json, rpt.to_table())


def cmd_verify(args, out) -> int:
    opts = {k: getattr(args, k) for k in ("samples", "seed") if getattr(args, k) is not None}
    if args.confirm:
        opts["confirm"] = True
    rpt = verify_theorem(args.theorem, args.ns, **opts)
    _emit(out, rpt.to_dict(), args.json, rpt.to_table() + f"\n{rpt.mismatches} mismatches in {len(rpt.rows)} rows")
    return 2 if any(r.status == MISMATCH for r in rpt.rows) else 0


COMMANDS = {
    "chi": cmd_chi,
    "sums": cmd_sums,
    "extend": cmd_extend,
    "bipartite": cmd_bipartite,
    "pattern": cmd_pattern,
    "family": cmd_family,
    "verify": cmd_verify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.verb](args, out) or 0
    except UsageError as exc:
        err.write(f"gcsum: error: {exc}\n")
        return 1
    except GcsumError as exc:
        err.write(f"gcsum: {exc.code}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
