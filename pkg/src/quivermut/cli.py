"""Command-line front end.

Quiver input comes from a file or stdin, as compact JSON
(``{"n": 3, "b": [[0,1,0],[-1,0,1],[0,-1,0]]}``) or as an edge list
(``<from> <to> <multiplicity>`` lines); the format is auto-detected.  All
JSON output is printed compactly with sorted keys, so identical results are
byte-identical across runs.

Exit codes: 0 on success, 1 when the engine rejects the input or a budget is
exhausted, 2 for command-line usage errors.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import __version__
from .blocks import DEFAULT_NODE_BUDGET, decompose, placement_to_dict
from .canon import canonical_form
from .catalog import entries, labels, make
from .mutclass import (
    DEFAULT_BUDGET,
    apply_sequence,
    decide_mutation_finite,
    enumerate_class,
    class_to_json_dict,
)
from .quiver import (
    Quiver,
    QuiverError,
    dumps_edge_list,
    dumps_json,
    from_json_dict,
    full_subquiver,
    loads_auto,
    mutate,
    to_json_dict,
)
from .seeds import (
    DEFAULT_SEED_CAP,
    apply_seed_sequence,
    enumerate_seeds,
    initial_seed,
)
from .verify import run_all

_MAX_REQUEST_BYTES = 10 * 1024 * 1024


def _print_json(obj) -> None:
    print(json.dumps(obj, separators=(",", ":"), sort_keys=True))


def _read_quiver(args) -> Quiver:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    return loads_auto(text)


def _emit_quiver(q: Quiver, args) -> None:
    if args.format == "edges":
        sys.stdout.write(dumps_edge_list(q))
    else:
        print(dumps_json(q))


def _parse_seq(text: str) -> list[int]:
    parts = [p for chunk in text.split(",") for p in chunk.split()]
    if not parts:
        raise QuiverError("empty mutation sequence")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise QuiverError(f"non-integer vertex in sequence: {text!r}") from None


# ---------------------------------------------------------------------------
# commands

def _cmd_mutate(args) -> int:
    q = _read_quiver(args)
    _emit_quiver(mutate(q, args.vertex), args)
    return 0


def _cmd_apply_seq(args) -> int:
    q = _read_quiver(args)
    _emit_quiver(apply_sequence(q, _parse_seq(args.seq)), args)
    return 0


def _cmd_class(args) -> int:
    q = _read_quiver(args)
    mc = enumerate_class(q, budget=args.budget)
    out = class_to_json_dict(mc)
    if args.summary:
        out.pop("representatives", None)
    _print_json(out)
    return 0


def _cmd_finite(args) -> int:
    q = _read_quiver(args)
    verdict = decide_mutation_finite(q, budget=args.budget)
    out = {"finite": verdict.finite}
    if verdict.witness is not None:
        out["witness"] = list(verdict.witness)
    _print_json(out)
    return 0


def _cmd_blockdecomp(args) -> int:
    q = _read_quiver(args)
    placements = decompose(q, node_budget=args.node_budget)
    if placements is None:
        _print_json({"decomposable": False})
    else:
        _print_json(
            {
                "decomposable": True,
                "placements": [placement_to_dict(p) for p in placements],
            }
        )
    return 0


def _cmd_subquiver(args) -> int:
    q = _read_quiver(args)
    _emit_quiver(full_subquiver(q, _parse_seq(args.vertices)), args)
    return 0


def _cmd_canon(args) -> int:
    q = _read_quiver(args)
    cf = canonical_form(q)
    _print_json(
        {
            "matrix": [list(r) for r in cf.matrix],
            "witness": list(cf.witness),
            "hash": f"{cf.hash:016x}",
        }
    )
    return 0


def _cmd_catalog(args) -> int:
    if not args.name:
        _print_json(
            {
                "entries": [
                    {
                        "name": name,
                        "params": nparams,
                        "usage": usage,
                        "description": desc,
                    }
                    for name, nparams, usage, desc in entries()
                ]
            }
        )
        return 0
    q = make(args.name, *args.params)
    if args.format == "edges":
        sys.stdout.write(dumps_edge_list(q))
        return 0
    out = to_json_dict(q)
    lab = labels(args.name)
    if lab:
        out["labels"] = lab
    _print_json(out)
    return 0


def _cmd_seeds(args) -> int:
    q = _read_quiver(args)
    seed = initial_seed(q)
    if args.apply is not None:
        end = apply_seed_sequence(seed, _parse_seq(args.apply))
        _print_json(
            {
                "cluster": [str(p) for p in end.cluster],
                "quiver": to_json_dict(end.quiver),
            }
        )
        return 0
    found = enumerate_seeds(seed, cap=args.cap)
    _print_json({"count": len(found)})
    return 0


def _cmd_verify(args) -> int:
    reports = run_all(include_slow=not args.quick)
    width = max(len(r.claim) for r in reports)
    failures = 0
    for r in reports:
        status = "PASS" if r.ok else "FAIL"
        failures += not r.ok
        print(f"{status}  {r.claim:<{width}}  {r.evidence}")
    print(f"{len(reports) - failures}/{len(reports)} claims hold")
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# serve

def _op_mutate(params: dict) -> dict:
    q = from_json_dict(params.get("quiver"))
    k = params.get("k")
    if not isinstance(k, int):
        raise QuiverError('"k" must be an integer vertex index')
    return {"quiver": to_json_dict(mutate(q, k))}


def _op_apply_seq(params: dict) -> dict:
    q = from_json_dict(params.get("quiver"))
    seq = params.get("seq")
    if not isinstance(seq, list) or not all(isinstance(k, int) for k in seq):
        raise QuiverError('"seq" must be a list of integer vertex indices')
    return {"quiver": to_json_dict(apply_sequence(q, seq))}


def _op_class(params: dict) -> dict:
    q = from_json_dict(params.get("quiver"))
    budget = params.get("budget", DEFAULT_BUDGET)
    if not isinstance(budget, int) or budget <= 0:
        raise QuiverError('"budget" must be a positive integer')
    mc = enumerate_class(q, budget=budget)
    out = class_to_json_dict(mc)
    if not params.get("include_representatives", False):
        out.pop("representatives", None)
    return out


def _op_finite(params: dict) -> dict:
    q = from_json_dict(params.get("quiver"))
    budget = params.get("budget", DEFAULT_BUDGET)
    if not isinstance(budget, int) or budget <= 0:
        raise QuiverError('"budget" must be a positive integer')
    verdict = decide_mutation_finite(q, budget=budget)
    out: dict = {"finite": verdict.finite}
    if verdict.witness is not None:
        out["witness"] = list(verdict.witness)
    return out


def _op_blockdecomp(params: dict) -> dict:
    q = from_json_dict(params.get("quiver"))
    placements = decompose(q)
    if placements is None:
        return {"decomposable": False}
    return {
        "decomposable": True,
        "placements": [placement_to_dict(p) for p in placements],
    }


def _op_canon(params: dict) -> dict:
    q = from_json_dict(params.get("quiver"))
    cf = canonical_form(q)
    return {
        "matrix": [list(r) for r in cf.matrix],
        "witness": list(cf.witness),
        "hash": f"{cf.hash:016x}",
    }


def _op_catalog(params: dict) -> dict:
    name = params.get("name")
    if name is None:
        return {
            "entries": [
                {"name": n, "params": c, "usage": u, "description": d}
                for n, c, u, d in entries()
            ]
        }
    raw = params.get("params", [])
    if not isinstance(raw, list) or not all(isinstance(p, int) for p in raw):
        raise QuiverError('"params" must be a list of integers')
    q = make(name, *raw)
    out: dict = {"quiver": to_json_dict(q)}
    lab = labels(name)
    if lab:
        out["labels"] = lab
    return out


_SERVE_OPS = {
    "mutate": _op_mutate,
    "apply_seq": _op_apply_seq,
    "class": _op_class,
    "finite": _op_finite,
    "blockdecomp": _op_blockdecomp,
    "canon": _op_canon,
    "catalog": _op_catalog,
}


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _send(self, code: int, obj) -> None:
        body = json.dumps(obj, separators=(",", ":"), sort_keys=True).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self._cors()
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self):
        self.send_response(204)
        self._cors()
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        if self.path != "/":
            self._send(404, {"error": "not found"})
            return
        self._send(
            200,
            {
                "service": "quivermut",
                "version": __version__,
                "ops": sorted(_SERVE_OPS),
            },
        )

    def do_POST(self):
        if self.path != "/":
            self._send(404, {"error": "not found"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
        except ValueError:
            self._send(400, {"error": "bad Content-Length"})
            return
        if length <= 0 or length > _MAX_REQUEST_BYTES:
            self._send(400, {"error": "request body missing or too large"})
            return
        raw = self.rfile.read(length)
        try:
            payload = json.loads(raw)
        except json.JSONDecodeError as e:
            self._send(400, {"error": f"invalid JSON: {e}"})
            return
        if not isinstance(payload, dict):
            self._send(400, {"error": "request must be a JSON object"})
            return
        req_id = payload.get("id")
        op = payload.get("op")
        handler = _SERVE_OPS.get(op)
        if handler is None:
            self._send(
                200,
                {"id": req_id, "ok": False, "error": f"unknown op: {op!r}"},
            )
            return
        try:
            result = handler(payload)
        except QuiverError as e:
            self._send(200, {"id": req_id, "ok": False, "error": str(e)})
            return
        self._send(200, {"id": req_id, "ok": True, "result": result})


def _cmd_serve(args) -> int:
    server = ThreadingHTTPServer((args.host, args.port), _Handler)
    server.daemon_threads = True
    host, port = server.server_address[:2]
    print(f"quivermut serve listening on http://{host}:{port}", flush=True)

    def stop(signum, frame):
        raise KeyboardInterrupt

    signal.signal(signal.SIGTERM, stop)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


# ---------------------------------------------------------------------------

def _add_input_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "-i",
        "--input",
        default="-",
        help="quiver file, JSON or edge list; '-' reads stdin (default)",
    )


def _add_format_opt(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("json", "edges"),
        default="json",
        help="output format for quivers (default json)",
    )


def _add_budget_opt(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help=f"search budget in visited quivers (default {DEFAULT_BUDGET})",
    )


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="quivermut",
        description="Mutation engine for skew-symmetric quivers.",
    )
    top.add_argument("--version", action="version", version=f"quivermut {__version__}")
    top.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="accepted for interface stability; the engine runs serially",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="mutate at one vertex")
    p.add_argument("vertex", type=int)
    _add_input_opts(p)
    _add_format_opt(p)
    p.set_defaults(fn=_cmd_mutate)

    p = sub.add_parser("apply-seq", help="apply a mutation sequence")
    p.add_argument("seq", help="comma or space separated vertex indices")
    _add_input_opts(p)
    _add_format_opt(p)
    p.set_defaults(fn=_cmd_apply_seq)

    p = sub.add_parser("class", help="enumerate the mutation class")
    _add_input_opts(p)
    _add_budget_opt(p)
    p.add_argument(
        "--summary",
        action="store_true",
        help="omit the representative matrices from the output",
    )
    p.set_defaults(fn=_cmd_class)

    p = sub.add_parser("finite", help="decide mutation finiteness")
    _add_input_opts(p)
    _add_budget_opt(p)
    p.set_defaults(fn=_cmd_finite)

    p = sub.add_parser("blockdecomp", help="find a block decomposition or prove none")
    _add_input_opts(p)
    p.add_argument(
        "--node-budget",
        type=int,
        default=DEFAULT_NODE_BUDGET,
        help=f"placement search budget (default {DEFAULT_NODE_BUDGET})",
    )
    p.set_defaults(fn=_cmd_blockdecomp)

    p = sub.add_parser("subquiver", help="full subquiver on chosen vertices")
    p.add_argument("vertices", help="comma or space separated vertex indices")
    _add_input_opts(p)
    _add_format_opt(p)
    p.set_defaults(fn=_cmd_subquiver)

    p = sub.add_parser("canon", help="canonical form, relabeling witness and hash")
    _add_input_opts(p)
    p.set_defaults(fn=_cmd_canon)

    p = sub.add_parser("catalog", help="named quiver families")
    p.add_argument("name", nargs="?", help="family name; omit to list all")
    p.add_argument("params", nargs="*", type=int, help="family parameters")
    _add_format_opt(p)
    p.set_defaults(fn=_cmd_catalog)

    p = sub.add_parser("seeds", help="seed mutation and enumeration")
    _add_input_opts(p)
    p.add_argument(
        "--apply",
        metavar="SEQ",
        help="mutate the initial seed along this sequence and print the cluster",
    )
    p.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_SEED_CAP,
        help=f"abort enumeration beyond this many seeds (default {DEFAULT_SEED_CAP})",
    )
    p.set_defaults(fn=_cmd_seeds)

    p = sub.add_parser("verify", help="run the built-in claim battery")
    p.add_argument(
        "--quick",
        action="store_true",
        help="skip the two exhaustive extension sweeps",
    )
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("serve", help="HTTP JSON service (see docs/protocol.md)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8642)
    p.set_defaults(fn=_cmd_serve)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BrokenPipeError:
        return 1
    except (QuiverError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
