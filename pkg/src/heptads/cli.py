"""Batch command line: verification, enumeration and mapping reports.

Every command prints one JSON report with the keys ``command``, ``status``,
``metrics``, ``artifacts`` and ``version`` (plus ``result`` for commands that
return data).  Exit code 0 on pass/info, 1 on fail, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from . import export

VERIFY_TARGETS = {
    "all": ["space", "group", "bijection", "pentagrams", "hexagon", "spreads"],
    "group": ["group"],
    "bijection": ["space", "bijection"],
    "pentagrams": ["pentagrams"],
    "hexagon": ["hexagon"],
    "spreads": ["spreads"],
}

_GEN_NAMES = {"a": "α", "alpha": "α", "α": "α", "b": "β", "beta": "β", "β": "β",
              "g": "γ", "gamma": "γ", "γ": "γ"}


class UsageError(Exception):
    pass


def _warn(msg: str) -> None:
    print(f"heptads: warning: {msg}", file=sys.stderr)


def normalize_label(text: str) -> str:
    """Upper-case a label; a sign is dropped (with a warning) since inputs are classes."""
    s = text.strip().upper()
    if s[:1] in "+-" and s:
        if s[0] == "-":
            _warn(f"sign of {text.strip()!r} ignored; operators are taken up to sign")
        s = s[1:]
    if not s or set(s) - set("IXYZ"):
        raise UsageError(f"bad operator label {text!r}")
    return s


def _labels(text: str) -> list[str]:
    return [normalize_label(x) for x in text.split(",") if x.strip()]


def _report(command: str, status: str, metrics=None, artifacts=None, result=None) -> dict:
    rep = {
        "command": command,
        "status": status,
        "metrics": dict(sorted((metrics or {}).items())),
        "artifacts": artifacts or [],
        "version": __version__,
    }
    if result is not None:
        rep["result"] = result
    return rep


def cmd_verify(args) -> dict:
    from .verify import failures, run_checks

    obs, exp = run_checks(VERIFY_TARGETS[args.target], threads=args.threads, timings=args.timings)
    bad = failures(obs, exp)
    return _report(f"verify {args.target}", "fail" if bad else "pass", obs,
                   result={"failures": bad} if bad else None)


def _records(kind: str, symmetric_only: bool, threads: int = 1) -> list[dict]:
    from .pauli import q0

    if kind == "planes":
        from .polar import all_planes

        items = [p for p in all_planes() if not symmetric_only or all(q0(v, 3) == 0 for v in p.points)]
        return [export.plane_record(p) for p in items]
    if kind == "lines":
        from .polar import enumerate_isotropic

        items = [x for x in enumerate_isotropic(2) if not symmetric_only or all(q0(v, 3) == 0 for v in x.points)]
        return [export.line_record(x) for x in items]
    if kind == "edges":
        from .mermin import affine_edges

        items = [e for e in affine_edges() if not symmetric_only or all(q0(v, 3) == 0 for v in e.points)]
        return [export.edge_record(e) for e in items]
    if kind == "pentagrams":
        from .mermin import enumerate_pentagrams

        census = enumerate_pentagrams(threads=threads)
        items = census.symmetric() if symmetric_only else census.magic
        return [export.pentagram_record(p) for p in items]
    if kind == "spreads":
        from .polar import enumerate_spreads

        return [export.spread_record(s) for s in enumerate_spreads()]
    raise UsageError(kind)


def _emit_data(text: str, path: str | None) -> list[str]:
    if path:
        Path(path).write_text(text, encoding="utf-8")
        return [path]
    sys.stdout.write(text)
    return []


def cmd_enumerate(args) -> dict:
    recs = _records(args.kind, args.symmetric_only, args.threads)
    metrics = {"count": len(recs)}
    if args.format == "json" and not args.data:
        return _report(f"enumerate {args.kind}", "info", metrics, result=recs)
    text = export.to_json(recs) if args.format == "json" else export.to_csv(recs)
    arts = _emit_data(text, args.data)
    return _report(f"enumerate {args.kind}", "info", metrics, arts)


def cmd_map(args) -> dict:
    from .clifford7 import classify_plane, label_of
    from .grassmann import four_qubit_label, four_qubit_to_plane, plane_to_four_qubit
    from .polar import plane_from_labels

    try:
        if args.plane is not None:
            p = plane_from_labels(_labels(args.plane))
        else:
            labs = _labels(args.fourqubit)
            if len(labs) != 1 or len(labs[0]) != 4:
                raise UsageError("--fourqubit takes one four-letter label")
            p = four_qubit_to_plane(labs[0])
    except (ValueError, KeyError) as e:
        raise UsageError(str(e)) from e
    result = {
        "plane": p.labels(),
        "clifford": [str(label_of(v)) for v in p.points],
        "four_qubit": four_qubit_label(plane_to_four_qubit(p)),
        "type": classify_plane(p),
    }
    return _report("map", "info", result=result)


def cmd_hexagon(args) -> dict:
    from .hexagon import hexagon_lines, pencil_line, verify_generalized_hexagon
    from .pauli import label

    h = hexagon_lines()
    if args.check:
        rep = verify_generalized_hexagon(h)
        metrics = {"points": rep.points, "lines": rep.lines, "girth": rep.girth or 0,
                   "diameter": rep.diameter or 0}
        return _report("hexagon --check", "pass" if rep.ok else "fail", metrics,
                       result={"failures": rep.failures()} if not rep.ok else None)
    data = h.to_dict()
    data["pencil_lines"] = [[label(v, 3) for v in pencil_line(t)] for t in h.line_vectors()]
    metrics = {"points": len(h.points), "lines": len(h.lines)}
    if args.data:
        return _report("hexagon --export", "info", metrics, _emit_data(export.to_json(data), args.data))
    return _report("hexagon --export", "info", metrics, result=data)


def _gens(text: str, rep: int):
    from .spgroup import generators

    table = generators()
    out = []
    for name in text.split(","):
        key = _GEN_NAMES.get(name.strip().lower())
        if key is None:
            raise UsageError(f"unknown generator {name!r}; use a/b/g or alpha/beta/gamma")
        out.append(table[f"{'D' if rep == 6 else 'R'}({key})"])
    return out


def cmd_group(args) -> dict:
    from .pauli import label, parse_pauli
    from .spgroup import group_closure, orbit

    if args.order is not None:
        g = group_closure(_gens(args.order, args.rep))
        return _report("group --order", "info", {"order": g.order},
                       result={"generators": args.order, "rep": args.rep})
    seed = normalize_label(args.orbit)
    width = len(seed)
    if width not in (3, 4):
        raise UsageError("orbit seeds are three- or four-qubit labels")
    rep = 6 if width == 3 else 8
    pts = orbit(_gens(args.gens, rep), parse_pauli(seed, width).vector)
    return _report("group --orbit", "info", {"size": len(pts)},
                   result={"seed": seed, "generators": args.gens, "orbit": [label(v, width) for v in pts]})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker threads for enumeration (default 1)")
    common.add_argument("--out", help="write the JSON report here instead of stdout")

    p = argparse.ArgumentParser(prog="heptads", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("target", choices=list(VERIFY_TARGETS))
    v.add_argument("--timings", action="store_true", help="add wall-clock metrics (not deterministic)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", parents=[common], help="list planes, lines, edges, pentagrams or spreads")
    e.add_argument("kind", choices=["planes", "lines", "edges", "pentagrams", "spreads"])
    e.add_argument("--format", choices=["json", "csv"], default="json")
    e.add_argument("--symmetric-only", action="store_true")
    e.add_argument("--data", help="write the records to this file")
    e.set_defaults(func=cmd_enumerate)

    m = sub.add_parser("map", parents=[common], help="heptad <-> four-qubit label")
    g = m.add_mutually_exclusive_group(required=True)
    g.add_argument("--plane", help="comma-separated commuting three-qubit labels spanning a heptad")
    g.add_argument("--fourqubit", help="symmetric four-qubit label")
    m.set_defaults(func=cmd_map)

    h = sub.add_parser("hexagon", parents=[common], help="split Cayley hexagon")
    g = h.add_mutually_exclusive_group(required=True)
    g.add_argument("--export", action="store_true")
    g.add_argument("--check", action="store_true")
    h.add_argument("--data", help="with --export, write the hexagon JSON to this file")
    h.set_defaults(func=cmd_hexagon)

    gr = sub.add_parser("group", parents=[common], help="group orders and orbits")
    g = gr.add_mutually_exclusive_group(required=True)
    g.add_argument("--order", metavar="GENS", help="e.g. a,b or alpha,gamma")
    g.add_argument("--orbit", metavar="SEED", help="three- or four-qubit label")
    gr.add_argument("--rep", type=int, choices=[6, 8], default=6, help="representation for --order")
    gr.add_argument("--gens", default="a,b", help="generators for --orbit (default a,b)")
    gr.set_defaults(func=cmd_group)
    return p


def run(argv=None) -> tuple[int, dict | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (0 if e.code == 0 else 2), None
    if args.threads < 1:
        print("heptads: error: --threads must be positive", file=sys.stderr)
        return 2, None
    try:
        rep = args.func(args)
    except UsageError as e:
        print(f"heptads: error: {e}", file=sys.stderr)
        return 2, None
    text = export.to_json(rep)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    elif not (args.command == "enumerate" and args.format == "csv" and not args.data):
        sys.stdout.write(text)
    else:
        sys.stderr.write(text)
    return (1 if rep["status"] == "fail" else 0), rep


def main(argv=None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
