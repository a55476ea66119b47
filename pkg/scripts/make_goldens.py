#!/usr/bin/env python3
"""Regenerate the golden files under testdata/.

Class sizes for members with at most 6 vertices are computed by the
brute-force oracle in tests/oracles.py and cross-checked against the
engine; the two must agree or this script aborts. Larger members are
recorded from the engine and act as frozen regression pins from then
on. Rerun only after a deliberate engine change, and review the diff.
"""

import importlib.util
import json
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

_spec = importlib.util.spec_from_file_location("oracles", ROOT / "tests" / "oracles.py")
oracles = importlib.util.module_from_spec(_spec)
_spec.loader.exec_module(oracles)

from quivermut import enumerate_class, make

ORACLE_MAX_VERTICES = 6

ENTRIES = (
    [("A", (n,)) for n in range(2, 10)]
    + [("D", (n,)) for n in range(4, 10)]
    + [("E6", ()), ("E7", ()), ("E8", ())]
    + [("A_pq", (p, q)) for p in range(1, 8) for q in range(1, p + 1) if p + q <= 8]
    + [("A_cycle_uniform", (n,)) for n in range(3, 8)]
    + [("D_hat", (n,)) for n in range(4, 9)]
    + [("E6_hat", ()), ("E7_hat", ()), ("E8_hat", ())]
    + [("E6_11", ()), ("E7_11", ()), ("E8_11", ())]
    + [("Theta", (m,)) for m in range(1, 6)]
    + [("Z3", ()), ("A3_cycle", ()), ("A2_hat", ()), ("X6", ()), ("X7", ())]
)


def class_sizes():
    rows = []
    for name, params in ENTRIES:
        q = make(name, *params)
        n = len(q.b)
        t0 = time.perf_counter()
        cls = enumerate_class(q)
        engine_t = time.perf_counter() - t0
        if not cls.finite:
            raise SystemExit(f"{name}{params}: engine says infinite, golden aborted")
        row = {"name": name, "params": list(params), "vertices": n, "size": cls.size}
        if n <= ORACLE_MAX_VERTICES:
            t0 = time.perf_counter()
            brute = oracles.brute_class_size(q.b)
            oracle_t = time.perf_counter() - t0
            if brute != cls.size:
                raise SystemExit(
                    f"{name}{params}: oracle {brute} != engine {cls.size}, golden aborted"
                )
            row["pinned_by"] = "bruteforce"
            print(
                f"{name}{params}: size {cls.size} (oracle agrees; "
                f"engine {engine_t:.2f}s, oracle {oracle_t:.2f}s)"
            )
        else:
            row["pinned_by"] = "engine"
            print(f"{name}{params}: size {cls.size} (engine only, {engine_t:.2f}s)")
        rows.append(row)
    return rows


def class_dump(name):
    cls = enumerate_class(make(name))
    mats = sorted(cls.representatives)
    return {"name": name, "size": cls.size, "canonical_matrices": [[list(r) for r in m] for m in mats]}


def main():
    out = ROOT / "testdata"
    out.mkdir(exist_ok=True)
    t0 = time.perf_counter()
    sizes = {"entries": class_sizes()}
    (out / "class_sizes.json").write_text(json.dumps(sizes, indent=2) + "\n")
    for name in ("X6", "X7"):
        dump = class_dump(name)
        (out / f"{name.lower()}_class.json").write_text(json.dumps(dump, indent=2) + "\n")
    print(f"goldens written to {out} in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    sys.exit(main())
