"""Command-line interface.

Exit codes: 0 proven / success, 1 refuted, 2 unknown, 64 usage error,
65 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import batch
from .certificate import Verdict
from .coxeter import class_profile, spherical_decomposition
from .cover import cliques_cover, cliques_plus_cover, generated_cover, hollow_cover, is_flag, link_complex, validate_cover
from .engine import ALL_RULES, RuleConfig, certify_ah, certify_ic, certify_wm_conjecture, certify_wm_subgroup
from .generators import NamedFamily, generate
from .graph import INF, GraphError, PresentationGraph, parse_graph, parse_json_graph, serialize_graph, serialize_json_graph, vertex_set
from .structure import enumerate_visual_splittings, is_2convex

EXIT_OK, EXIT_REFUTED, EXIT_UNKNOWN, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 64, 65
VERDICT_EXIT = {Verdict.PROVEN: EXIT_OK, Verdict.REFUTED: EXIT_REFUTED, Verdict.UNKNOWN: EXIT_UNKNOWN}


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_graph_document(path: str | Path) -> tuple[PresentationGraph, dict]:
    """Read a ``.artin`` or ``.json`` graph file; also return the raw JSON document."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        if path.suffix == ".json":
            return parse_json_graph(text), json.loads(text)
        return parse_graph(text), {}
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def load_graph(path: str | Path) -> PresentationGraph:
    return load_graph_document(path)[0]


def _vertex_list(G: PresentationGraph, text: str | None, flag: str) -> frozenset[str]:
    if text is None:
        raise UsageError(f"{flag} is required")
    names = [v for v in text.split(",") if v] if text else []
    try:
        return vertex_set(G, names)
    except GraphError as exc:
        raise InputError(str(exc)) from None


def _label(token: str):
    if token.lower() == "inf":
        return INF
    return int(token)


def _labels(text: str | None):
    if text is None:
        return None
    parts = [_label(t) for t in text.split(",") if t]
    return parts[0] if len(parts) == 1 else tuple(parts)


def _config(args) -> RuleConfig:
    disabled = set()
    for item in args.disable_rule or []:
        disabled.update(r for r in item.split(",") if r)
    unknown = disabled - set(ALL_RULES)
    if unknown:
        raise UsageError(f"unknown rule(s): {', '.join(sorted(unknown))}")
    return RuleConfig(disabled=frozenset(disabled), budget=args.budget)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


# -- subcommands -----------------------------------------------------------------


def cmd_classify(args) -> int:
    G = load_graph(args.graph)
    prof = class_profile(G)
    dec = spherical_decomposition(G)
    payload = {
        "vertices": len(G),
        "flags": prof.flags(),
        "dimension": prof.dimension,
        "components": [{"vertices": sorted(c), "type": t.name} for c, t in dec],
    }
    lines = [f"vertices:   {len(G)}", f"flags:      {' '.join(prof.flags()) or '-'}",
             f"dimension:  {prof.dimension}", "components:"]
    lines += [f"  {t.name:<10} {' '.join(sorted(c))}" for c, t in dec]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_splittings(args) -> int:
    G = load_graph(args.graph)
    mode = {"pairs": "pairs", "min-sep": "min-sep", "all": "all"}[args.mode]
    try:
        found = enumerate_visual_splittings(G, mode)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    payload = {"mode": mode, "count": len(found), "splittings": [s.to_dict() for s in found],
               "notes": found.notes}
    lines = [f"{len(found)} visual splitting(s), mode {mode}"]
    for s in found:
        lines.append(f"  omega={{{','.join(sorted(s.omega))}}}  "
                     f"gamma1={{{','.join(sorted(s.gamma1))}}}  gamma2={{{','.join(sorted(s.gamma2))}}}")
    lines += [f"note: {n}" for n in found.notes]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_convex(args) -> int:
    G = load_graph(args.graph)
    omega = _vertex_list(G, args.omega, "--omega")
    ok = is_2convex(G, omega)
    _emit(args, {"omega": sorted(omega), "two_convex": ok},
          f"omega {{{','.join(sorted(omega))}}} is {'' if ok else 'not '}2-convex")
    return EXIT_OK


def cmd_cover(args) -> int:
    G, doc = load_graph_document(args.graph)
    if args.omega is not None:
        U = cliques_plus_cover(G, _vertex_list(G, args.omega, "--omega"))
    elif args.explicit == "hollow":
        U = hollow_cover(G)
    elif args.explicit == "cliques":
        U = cliques_cover(G)
    elif args.explicit is not None:
        U = _generated(G, _cover_list(args.explicit))
    elif "cover" in doc:
        U = _generated(G, doc["cover"])
    else:
        U = cliques_cover(G)
    check = validate_cover(U)
    if not check:
        _emit(args, {"valid": False, "reason": check.reason, "witness": list(check.witness)},
              f"invalid cover: {check.reason}, witness {{{','.join(check.witness)}}}")
        return EXIT_INPUT
    flag = is_flag(link_complex(U))
    payload = {"valid": True, "cover": U.kind, "flag": flag.ok, "witness": list(flag.witness)}
    if flag:
        text = f"cover {U.kind}: flag"
    else:
        text = f"cover {U.kind}: not flag, witness {{{','.join(flag.witness)}}}"
    _emit(args, payload, text)
    return EXIT_OK


def _cover_list(path: str) -> list:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc.msg}") from None
    members = doc.get("cover") if isinstance(doc, dict) else doc
    if not isinstance(members, list):
        raise InputError(f"{path}: expected a list of vertex lists or an object with 'cover'")
    return members


def _generated(G: PresentationGraph, members) -> object:
    try:
        return generated_cover(G, members)
    except (GraphError, TypeError) as exc:
        raise InputError(f"bad cover list: {exc}") from None


def cmd_certify(args) -> int:
    config = _config(args)
    G = load_graph(args.graph)
    try:
        if args.claim == "ah":
            verdict, cert = certify_ah(G, config)
        elif args.claim == "ic":
            verdict, cert = certify_ic(G, config)
        elif args.subset is not None:
            verdict, cert = certify_wm_subgroup(G, _vertex_list(G, args.subset, "--subset"), config)
        else:
            verdict, cert = certify_wm_conjecture(G, config)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        sys.stdout.write(cert.to_json())
    else:
        sys.stdout.write(f"verdict: {verdict}\n{cert.render()}\n")
    if args.output:
        Path(args.output).write_text(cert.to_json())
    return VERDICT_EXIT[verdict]


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "catalog":
        if not args.param:
            raise UsageError("catalog needs a type name, e.g. 'gen catalog E8'")
        family = NamedFamily(f"catalog:{args.param}")
    else:
        try:
            n = int(args.param)
        except (TypeError, ValueError):
            raise UsageError(f"{fam} needs a vertex count") from None
        kw = {}
        if args.labels is not None:
            kw["labels"] = _labels(args.labels)
        if args.rim is not None:
            kw["rim"] = _labels(args.rim)
        if args.spoke is not None:
            kw["spoke"] = _labels(args.spoke)
        if args.choices is not None:
            kw["choices"] = tuple(_label(t) for t in args.choices.split(","))
        family = NamedFamily(fam, n, seed=args.seed, **kw)
    try:
        G = generate(family)
    except (GraphError, ValueError, KeyError) as exc:
        raise UsageError(f"invalid family parameters: {exc}") from None
    text = serialize_json_graph(G) if args.format == "json" else serialize_graph(G)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_batch(args) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise InputError(f"{directory}: not a directory")
    config = _config(args)
    rows = batch.batch_certify(directory, args.claim, config, jobs=args.jobs,
                               write_certificates=not args.no_certificates)
    if args.format == "json":
        sys.stdout.write(batch.rows_to_json(rows))
    else:
        sys.stdout.write(batch.rows_to_text(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="artin-ah", description="Certificates for acylindrical hyperbolicity, "
                "weak malnormality and parabolic intersections of Artin groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, graph=True):
        if graph:
            sp.add_argument("graph", help="graph file (.artin or .json)")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    def rules(sp):
        sp.add_argument("--disable-rule", action="append", metavar="NAME",
                        help=f"disable a rule (repeatable, comma lists ok); one of {', '.join(ALL_RULES)}")
        sp.add_argument("--budget", type=int, default=10_000, help="max candidate splittings")

    sp = sub.add_parser("classify", help="class profile and Coxeter decomposition")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("splittings", help="enumerate visual splittings")
    common(sp)
    sp.add_argument("--mode", choices=("pairs", "min-sep", "all"), default="min-sep")
    sp.set_defaults(func=cmd_splittings)

    sp = sub.add_parser("convex", help="test 2-convexity of --omega")
    common(sp)
    sp.add_argument("--omega", required=True, help="comma-separated vertices")
    sp.set_defaults(func=cmd_convex)

    sp = sub.add_parser("cover", help="complete covers and flagness of the link complex")
    cover_sub = sp.add_subparsers(dest="cover_command", required=True, parser_class=_Parser)
    cp = cover_sub.add_parser("check", help="validate a cover and test flagness")
    common(cp)
    cp.add_argument("--explicit", metavar="hollow|cliques|FILE.json",
                    help="explicit cover: a preset or a JSON file with a 'cover' list")
    cp.add_argument("--omega", help="use the cover of all cliques plus all subsets of omega")
    cp.set_defaults(func=cmd_cover)

    sp = sub.add_parser("certify", help="certify a claim")
    sp.add_argument("claim", choices=("ah", "wm", "ic"))
    common(sp)
    rules(sp)
    sp.add_argument("--subset", help="wm only: certify the standard parabolic on these vertices")
    sp.add_argument("-o", "--output", help="also write the JSON certificate here")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("gen", help="emit a graph from a named family")
    sp.add_argument("family", choices=("path", "cycle", "complete", "wheel", "random", "catalog"))
    sp.add_argument("param", nargs="?", help="vertex count (rim size for wheels) or catalog type")
    sp.add_argument("--labels", help="one label or a comma list in edge order")
    sp.add_argument("--rim", help="wheel rim label(s)")
    sp.add_argument("--spoke", help="wheel spoke label(s)")
    sp.add_argument("--choices", help="random: comma list of labels, e.g. 2,3,inf")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("batch", help="certify every graph file in a directory")
    sp.add_argument("directory")
    sp.add_argument("--claim", choices=("ah", "wm", "ic"), default="ah")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--no-certificates", action="store_true",
                    help="do not write per-file certificate files")
    rules(sp)
    sp.set_defaults(func=cmd_batch)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"artin-ah: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"artin-ah: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
