"""Command-line front end.

Exit codes: 0 for success (or a positive analysis answer), 1 for a negative
analysis answer (not tree-based, property fails, not temporal), 2 for input
or usage errors.  ``--json`` wraps every payload in a fixed envelope whose
schema ships with the package as ``report.schema.json``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__
from .antichains import (
    antichain_to_leaf,
    has_antichain_to_leaf_property,
    is_antichain,
    is_temporal,
    max_antichain,
    temporal_violating_antichain,
)
from .dot import export_dot
from .edgelist import parse_edgelist, serialize_edgelist
from .enewick import ParseError, parse_enewick, serialize_enewick
from .generate import GenerationError, GenSpec, generate
from .network import InvalidNetworkError, PhyloNetwork
from .treebased import (
    BaseTreeCertificate,
    deviation_indices,
    is_tree_based,
    rooted_spanning_tree,
    tree_based_completion,
    vertex_disjoint_paths,
)

EXT_FORMATS = {
    ".nwk": "enewick", ".enwk": "enewick", ".enewick": "enewick", ".newick": "enewick",
    ".edges": "edgelist", ".edgelist": "edgelist",
}


class CliError(Exception):
    """Usage or input problem; maps to exit code 2."""


def _detect_format(path: str, explicit: str | None) -> str:
    if explicit:
        return explicit
    if path == "-":
        return "enewick"
    for ext, fmt in EXT_FORMATS.items():
        if path.endswith(ext):
            return fmt
    raise CliError(
        f"cannot infer format from {path!r}; pass --format enewick|edgelist")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(str(exc)) from exc


def _load(args) -> tuple[PhyloNetwork, str]:
    text = _read_input(args.input)
    digest = hashlib.sha256(text.encode()).hexdigest()
    fmt = _detect_format(args.input, args.format)
    net = parse_enewick(text) if fmt == "enewick" else parse_edgelist(text)
    return net, digest


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit(args, command: str, payload: dict, digest: str | None,
          started: float, human: list[str]) -> None:
    if getattr(args, "json", False):
        envelope = {
            "tool": "tbnet",
            "version": __version__,
            "command": command,
            "input_sha256": digest,
            "elapsed_ms": round((time.perf_counter() - started) * 1000.0, 3),
            "payload": payload,
        }
        print(json.dumps(envelope, indent=2, sort_keys=True))
    else:
        for line in human:
            print(line)


def cmd_check(args) -> int:
    started = time.perf_counter()
    net, digest = _load(args)
    based, cert = is_tree_based(net)
    if based:
        certificate = {"kind": "base_tree",
                       "edges": [list(e) for e in cert.tree.edges]}
        human = ["tree-based: yes",
                 f"base tree edges: {len(cert.tree.edges)}"]
    else:
        certificate = {"kind": "rr_path",
                       "rr_path": list(cert.rr_path),
                       "u1": list(cert.u1),
                       "u2": list(cert.u2)}
        human = ["tree-based: no",
                 f"blocking reticulation path: {list(cert.rr_path)}",
                 f"U1: {list(cert.u1)}  U2: {list(cert.u2)}"]
    payload = {
        "tree_based": based,
        "num_vertices": net.num_vertices,
        "num_leaves": len(net.leaves),
        "num_reticulations": len(net.reticulations),
        "certificate": certificate,
    }
    if args.dot:
        tree = cert.tree if based else None
        _write_text(args.dot, export_dot(net, tree=tree))
    _emit(args, "check", payload, digest, started, human)
    return 0 if based else 1


def cmd_indices(args) -> int:
    started = time.perf_counter()
    net, digest = _load(args)
    report = deviation_indices(net)
    payload = report.as_dict()
    human = [f"{k} = {v}" for k, v in payload.items()]
    _emit(args, "indices", payload, digest, started, human)
    return 0


def cmd_paths(args) -> int:
    started = time.perf_counter()
    net, digest = _load(args)
    partition = vertex_disjoint_paths(net)
    payload = {"count": partition.size,
               "paths": [list(p) for p in partition.paths]}
    human = [f"paths: {partition.size}"] + [
        "  " + " -> ".join(map(str, p)) for p in partition.paths]
    if args.dot:
        _write_text(args.dot, export_dot(net, paths=partition))
    _emit(args, "paths", payload, digest, started, human)
    return 0


def cmd_spanning_tree(args) -> int:
    started = time.perf_counter()
    net, digest = _load(args)
    tree = rooted_spanning_tree(net)
    outside = tree.unlabeled_leaves(net)
    payload = {
        "root": tree.root,
        "edges": [list(e) for e in tree.edges],
        "leaves": list(tree.leaves),
        "unlabeled_leaves": list(outside),
        "unlabeled_leaf_count": len(outside),
    }
    human = [f"spanning tree with {len(tree.edges)} edges, "
             f"{len(outside)} leaf(s) outside the label set"]
    if args.dot:
        _write_text(args.dot, export_dot(net, tree=tree))
    _emit(args, "spanning-tree", payload, digest, started, human)
    return 0


def cmd_complete(args) -> int:
    started = time.perf_counter()
    net, digest = _load(args)
    result = tree_based_completion(net)
    based, _ = is_tree_based(result.network)
    assert based, "completion must be tree-based"
    text = serialize_enewick(result.network)
    payload = {
        "attachments": len(result.attached_edges),
        "attached_edges": [list(e) for e in result.attached_edges],
        "new_labels": list(result.labels),
        "network": text,
    }
    human = [f"attached {len(result.attached_edges)} leaf(s)", text]
    if args.out:
        out_fmt = _detect_format(args.out, args.format)
        _write_text(args.out,
                    text if out_fmt == "enewick" else serialize_edgelist(result.network))
    if args.dot:
        new_leaves = tuple(result.network.vertex_by_label(lab) for lab in result.labels)
        _write_text(args.dot, export_dot(result.network, attached=new_leaves))
    _emit(args, "complete", payload, digest, started, human)
    return 0


def _resolve_vertices(net: PhyloNetwork, spec: str) -> tuple[int, ...]:
    """Tokens are leaf labels when they match one, else integer ids."""
    out = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            vid = net.vertex_by_label(token)
        except KeyError:
            try:
                vid = int(token)
            except ValueError:
                raise CliError(f"unknown vertex {token!r}") from None
            if not 0 <= vid < net.num_vertices:
                raise CliError(f"vertex id {vid} out of range")
        out.append(vid)
    if not out:
        raise CliError("--set needs at least one vertex")
    return tuple(out)


def cmd_antichain(args) -> int:
    started = time.perf_counter()
    net, digest = _load(args)
    if args.max:
        antichain, chains = max_antichain(net)
        payload = {"mode": "max", "antichain": list(antichain),
                   "size": len(antichain),
                   "chain_cover": [list(c) for c in chains]}
        human = [f"maximum antichain (size {len(antichain)}): {list(antichain)}"]
        _emit(args, "antichain", payload, digest, started, human)
        return 0
    if args.set:
        members = _resolve_vertices(net, args.set)
        if not is_antichain(net, members):
            raise CliError(f"{list(members)} is not an antichain")
        routed, witness = antichain_to_leaf(net, members)
        payload = {"mode": "set", "set": list(members),
                   "routes_to_leaves": routed,
                   "paths": [list(p) for p in witness.paths] if witness else None}
        human = [f"disjoint paths to leaves: {'yes' if routed else 'no'}"]
        if witness:
            human += ["  " + " -> ".join(map(str, p)) for p in witness.paths]
        _emit(args, "antichain", payload, digest, started, human)
        return 0 if routed else 1
    # --check-property
    temporal, _ = is_temporal(net)
    strategy = "temporal-shortcut" if temporal else "exhaustive"
    try:
        holds = has_antichain_to_leaf_property(net, mode=strategy)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    payload = {"mode": "check-property", "strategy": strategy, "holds": holds}
    human = [f"antichain-to-leaf property: {'holds' if holds else 'fails'} ({strategy})"]
    _emit(args, "antichain", payload, digest, started, human)
    return 0 if holds else 1


def cmd_temporal(args) -> int:
    started = time.perf_counter()
    net, digest = _load(args)
    temporal, tmap = is_temporal(net)
    payload = {"temporal": temporal,
               "ranks": list(tmap.ranks) if tmap else None,
               "violating_antichain": None}
    human = [f"temporal: {'yes' if temporal else 'no'}"]
    if temporal and deviation_indices(net).p > 0:
        violating = temporal_violating_antichain(net)
        payload["violating_antichain"] = list(violating)
        human.append(f"not tree-based; antichain with no disjoint leaf routing: "
                     f"{list(violating)}")
    _emit(args, "temporal", payload, digest, started, human)
    return 0 if temporal else 1


def cmd_gen(args) -> int:
    started = time.perf_counter()
    spec = GenSpec(args.leaves, args.retics, args.seed, temporal_only=args.temporal)
    net = generate(spec)
    text = serialize_enewick(net)
    payload = {"leaves": args.leaves, "retics": args.retics, "seed": args.seed,
               "temporal_only": args.temporal,
               "num_vertices": net.num_vertices, "network": text}
    digest = hashlib.sha256(text.encode()).hexdigest()
    if args.out:
        out_fmt = _detect_format(args.out, None)
        _write_text(args.out,
                    text if out_fmt == "enewick" else serialize_edgelist(net))
        human = [f"wrote {args.out}"]
    else:
        human = [text]
    _emit(args, "gen", payload, digest, started, human)
    return 0


def cmd_bench(args) -> int:
    started = time.perf_counter()
    t0 = time.perf_counter()
    net = generate(GenSpec(args.leaves, args.retics, args.seed))
    gen_ms = (time.perf_counter() - t0) * 1000.0
    runs = []
    for _ in range(args.repeat):
        t1 = time.perf_counter()
        deviation_indices(net)
        runs.append((time.perf_counter() - t1) * 1000.0)
    payload = {
        "leaves": args.leaves, "retics": args.retics, "seed": args.seed,
        "repeat": args.repeat, "num_vertices": net.num_vertices,
        "generate_ms": round(gen_ms, 3),
        "runs_ms": [round(r, 3) for r in runs],
        "best_ms": round(min(runs), 3),
        "mean_ms": round(sum(runs) / len(runs), 3),
    }
    human = [f"|V| = {net.num_vertices}: generate {gen_ms:.1f} ms, "
             f"indices best {min(runs):.1f} ms over {args.repeat} run(s)"]
    _emit(args, "bench", payload, None, started, human)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tbnet",
        description="Tree-based analysis of rooted binary phylogenetic networks.")
    parser.add_argument("--version", action="version", version=f"tbnet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def io_command(name: str, func, help_: str, dot: bool = False, out: bool = False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("input", help="input file, or - for stdin")
        sp.add_argument("--format", choices=("enewick", "edgelist"),
                        help="input format (default: by file extension)")
        sp.add_argument("--json", action="store_true", help="JSON report envelope")
        if dot:
            sp.add_argument("--dot", metavar="PATH", help="write a DOT rendering")
        if out:
            sp.add_argument("--out", metavar="PATH", help="write the result network")
        sp.set_defaults(func=func)
        return sp

    io_command("check", cmd_check, "decide tree-based and emit a certificate", dot=True)
    io_command("indices", cmd_indices, "deviation indices l, p, t and friends")
    io_command("paths", cmd_paths, "minimum vertex-disjoint path partition", dot=True)
    io_command("spanning-tree", cmd_spanning_tree,
               "rooted spanning tree minimising leaves outside the label set", dot=True)
    io_command("complete", cmd_complete,
               "attach leaves to make the network tree-based", dot=True, out=True)

    anti = io_command("antichain", cmd_antichain, "antichain queries")
    group = anti.add_mutually_exclusive_group(required=True)
    group.add_argument("--max", action="store_true", help="maximum antichain")
    group.add_argument("--set", metavar="V1,V2,...",
                       help="route the given antichain to leaves disjointly")
    group.add_argument("--check-property", action="store_true",
                       help="decide the antichain-to-leaf property")

    io_command("temporal", cmd_temporal, "decide temporality, emit ranks")

    gen = sub.add_parser("gen", help="generate a seeded random network")
    gen.add_argument("--leaves", type=int, required=True)
    gen.add_argument("--retics", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--temporal", action="store_true",
                     help="rejection-sample until temporal")
    gen.add_argument("--out", metavar="PATH", help="write here instead of stdout")
    gen.add_argument("--json", action="store_true")
    gen.set_defaults(func=cmd_gen)

    bench = sub.add_parser("bench", help="time the index pipeline on a generated network")
    bench.add_argument("--leaves", type=int, required=True)
    bench.add_argument("--retics", type=int, required=True)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--repeat", type=int, default=3)
    bench.add_argument("--json", action="store_true")
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ParseError, InvalidNetworkError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
