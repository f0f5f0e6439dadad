"""Trace runner, workload generator and scaling probe.

Traces are plain text, one operation per line: ``I <id> <xkey> <ykey>``
inserts, ``D <id>`` deletes, ``Qmin`` / ``Qmax`` print the current
answer, ``#`` starts a comment.  Keys parse as int when possible, float
otherwise.  Query output is ``Qmin <id> <product>`` with ``NONE -`` on
the empty set.  Counter rows are written per update, so two runs with
the same seed must produce byte-identical CSVs.
"""

from __future__ import annotations

import argparse
import csv
import math
import random
import sys
from typing import Iterable, Optional, TextIO

from .config import Config, default_subset_target, derive_seed
from .dynamic import DynamicRankProduct
from .oracle import extreme_element

CSV_HEADER = [
    "update_idx",
    "n",
    "dirty_cells",
    "rebuilt_members",
    "cells_queried_min",
    "cells_queried_max",
    "max_pred_depth",
]

WORKLOAD_KINDS = ("random", "ascending", "adversarial-sawtooth", "clustered-duplicates")


class TraceError(Exception):
    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _parse_key(token: str, line_no: int):
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        raise TraceError(line_no, f"bad key {token!r}") from None


def parse_trace(lines: Iterable[str]):
    """Yield (line_no, op_tuple); comments and blanks are dropped."""
    for line_no, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        op = parts[0]
        if op == "I":
            if len(parts) != 4:
                raise TraceError(line_no, "I takes id, xkey, ykey")
            try:
                ident = int(parts[1])
            except ValueError:
                raise TraceError(line_no, f"bad id {parts[1]!r}") from None
            yield line_no, (
                "I",
                ident,
                _parse_key(parts[2], line_no),
                _parse_key(parts[3], line_no),
            )
        elif op == "D":
            if len(parts) != 2:
                raise TraceError(line_no, "D takes id")
            try:
                yield line_no, ("D", int(parts[1]))
            except ValueError:
                raise TraceError(line_no, f"bad id {parts[1]!r}") from None
        elif op in ("Qmin", "Qmax"):
            if len(parts) != 1:
                raise TraceError(line_no, f"{op} takes no arguments")
            yield line_no, (op,)
        else:
            raise TraceError(line_no, f"unknown operation {op!r}")


def _format_query(op: str, result) -> str:
    if result is None:
        return f"{op} NONE -"
    return f"{op} {result[0]} {result[1]}"


def run_trace(
    lines: Iterable[str],
    config: Config,
    *,
    verify: bool = False,
    out: TextIO,
    csv_out: Optional[TextIO] = None,
) -> int:
    """Returns the number of oracle mismatches (0 without --verify)."""
    structure = DynamicRankProduct(config)
    writer = None
    if csv_out is not None:
        writer = csv.writer(csv_out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
    update_idx = 0
    mismatches = 0

    for line_no, op in parse_trace(lines):
        try:
            if op[0] == "I":
                structure.insert(op[1], op[2], op[3])
            elif op[0] == "D":
                structure.delete(op[1])
            else:
                result = (
                    structure.query_min() if op[0] == "Qmin" else structure.query_max()
                )
                print(_format_query(op[0], result), file=out)
                continue
        except TraceError:
            raise
        except Exception as exc:
            raise TraceError(line_no, str(exc)) from exc

        update_idx += 1
        c = structure.last
        if writer is not None:
            writer.writerow(
                [
                    update_idx,
                    c.n,
                    c.dirty_cells,
                    c.rebuilt_members,
                    c.cells_queried_min,
                    c.cells_queried_max,
                    c.max_pred_depth,
                ]
            )
        if verify:
            rows = [(i, x, y) for i, (x, y) in structure.elements.items()]
            pairs = []
            if config.maintain_min:
                pairs.append((structure.query_min(), extreme_element(rows, False)))
            if config.maintain_max:
                pairs.append((structure.query_max(), extreme_element(rows, True)))
            for got, want in pairs:
                if got != want:
                    mismatches += 1
                    print(
                        f"mismatch after update {update_idx}: got {got}, oracle {want}",
                        file=sys.stderr,
                    )
    return mismatches


# -- workload generation --------------------------------------------------


def _emit(out: TextIO, *parts) -> None:
    print(" ".join(str(p) for p in parts), file=out)


def _queries(out: TextIO) -> None:
    _emit(out, "Qmin")
    _emit(out, "Qmax")


def _target_boundary(near: int) -> int:
    """Smallest n >= 4 where the subset target steps, closest to near."""
    best = 4
    prev = default_subset_target(3)
    for m in range(4, max(near, 8) + 64):
        cur = default_subset_target(m)
        if cur != prev and abs(m - near) < abs(best - near):
            best = m
        prev = cur
    return best


def generate(kind: str, n: int, ops: int, seed: int, out: TextIO) -> None:
    if kind not in WORKLOAD_KINDS:
        raise ValueError(f"unknown workload kind {kind!r}")
    rng = random.Random(derive_seed(seed, 101))
    _emit(out, f"# kind={kind} n={n} ops={ops} seed={seed}")
    next_id = 1
    live: list[int] = []
    spread = max(16, 4 * n)

    def insert(xkey: int, ykey: int) -> None:
        nonlocal next_id
        _emit(out, "I", next_id, xkey, ykey)
        live.append(next_id)
        next_id += 1
        _queries(out)

    def delete(index: int) -> None:
        _emit(out, "D", live.pop(index))
        _queries(out)

    if kind == "random":
        for _ in range(ops):
            room = len(live) < n
            if live and (not room or rng.random() < 0.45):
                delete(rng.randrange(len(live)))
            else:
                insert(rng.randint(0, spread), rng.randint(0, spread))
    elif kind == "ascending":
        tick = 0
        for _ in range(ops):
            if len(live) < n:
                tick += 1
                insert(tick, tick)
            else:
                delete(0)
    elif kind == "adversarial-sawtooth":
        center = _target_boundary(n)
        width = 3
        going_up = True
        for _ in range(ops):
            if going_up:
                insert(rng.randint(0, spread), rng.randint(0, spread))
                if len(live) >= center + width:
                    going_up = False
            else:
                delete(rng.randrange(len(live)))
                if len(live) <= max(0, center - width):
                    going_up = True
    else:  # clustered-duplicates
        xpool = [rng.randint(0, spread) for _ in range(5)]
        ypool = [rng.randint(0, spread) for _ in range(5)]
        for _ in range(ops):
            room = len(live) < n
            if live and (not room or rng.random() < 0.45):
                delete(rng.randrange(len(live)))
            else:
                insert(rng.choice(xpool), rng.choice(ypool))


# -- scaling probe --------------------------------------------------------


def scaling_rows(
    sizes: Iterable[int],
    trials: int,
    seed: int,
    config: Optional[Config] = None,
) -> list[dict]:
    """Steady-state per-update means at each size, one shared structure.

    The structure grows between measurement windows; inside a window the
    updates alternate delete and insert so n stays put.
    """
    cfg = config or Config(seed=seed)
    rng = random.Random(derive_seed(seed, 303))
    structure = DynamicRankProduct(cfg)
    live: list[int] = []
    next_id = 1
    spread = 1 << 40
    rows = []

    for size in sorted(set(sizes)):
        while len(live) < size:
            structure.insert(next_id, rng.randint(0, spread), rng.randint(0, spread))
            live.append(next_id)
            next_id += 1

        totals = structure.totals
        base = (
            totals.updates,
            totals.rebuilt_members,
            totals.cells_queried_min,
            totals.cells_queried_max,
            totals.max_depth_spent,
            totals.max_depth_budget,
            totals.min_depth_violations,
        )
        depth_peak = 0
        fanout_ok = True
        for k in range(2 * (trials // 2)):
            if k % 2 == 0:
                victim = live.pop(rng.randrange(len(live)))
                structure.delete(victim)
            else:
                structure.insert(
                    next_id, rng.randint(0, spread), rng.randint(0, spread)
                )
                live.append(next_id)
                next_id += 1
            depth_peak = max(depth_peak, structure.last.max_pred_depth)
            perimeter = len(structure.grid.x_subset_ids()) + len(
                structure.grid.y_subset_ids()
            )
            if (
                structure.last.cells_queried_min > perimeter
                or structure.last.cells_queried_max > perimeter
            ):
                fanout_ok = False

        done = (
            totals.updates,
            totals.rebuilt_members,
            totals.cells_queried_min,
            totals.cells_queried_max,
            totals.max_depth_spent,
            totals.max_depth_budget,
            totals.min_depth_violations,
        )
        window = done[0] - base[0]
        scale = math.sqrt(size * math.log2(size))
        mean_rebuilt = (done[1] - base[1]) / window
        rows.append(
            {
                "n": size,
                "updates": window,
                "mean_rebuilt_members": mean_rebuilt,
                "mean_cells_queried_min": (done[2] - base[2]) / window,
                "mean_cells_queried_max": (done[3] - base[3]) / window,
                "max_pred_depth": depth_peak,
                "sqrt_n_log_n": scale,
                "fit_constant": mean_rebuilt / scale,
                "fanout_ok": fanout_ok,
                "min_depth_violations": done[6] - base[6],
                "max_depth_spent": done[4] - base[4],
                "max_depth_budget": done[5] - base[5],
            }
        )
    return rows


def _print_scaling(rows: list[dict], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    head = [
        "n",
        "updates",
        "mean_rebuilt_members",
        "mean_cells_queried_min",
        "mean_cells_queried_max",
        "max_pred_depth",
        "fit_constant",
    ]
    writer.writerow(head)
    for row in rows:
        writer.writerow(
            [
                row["n"],
                row["updates"],
                f"{row['mean_rebuilt_members']:.3f}",
                f"{row['mean_cells_queried_min']:.3f}",
                f"{row['mean_cells_queried_max']:.3f}",
                row["max_pred_depth"],
                f"{row['fit_constant']:.4f}",
            ]
        )
    if rows:
        fit = max(r["fit_constant"] for r in rows)
        print(f"# mean_rebuilt_members <= {fit:.4f} * sqrt(n*log2(n))", file=out)


# -- CLI ------------------------------------------------------------------


def _config_from_args(args) -> Config:
    return Config(
        seed=args.seed,
        f_const=args.f_const,
        maintain_min=args.engine in ("min", "both"),
        maintain_max=args.engine in ("max", "both"),
        debug_linear_engines=args.debug_linear_engines,
    )


def _add_structure_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="master RNG seed")
    parser.add_argument(
        "--engine",
        choices=("min", "max", "both"),
        default="both",
        help="which answer sides to maintain",
    )
    parser.add_argument(
        "--f-const",
        type=int,
        default=None,
        help="constant subset size target instead of sqrt(n log n)",
    )
    parser.add_argument(
        "--debug-linear-engines",
        action="store_true",
        help="answer every cell by plain scan (slow, for differential runs)",
    )


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="rankproduct-bench",
        description="run operation traces against the rank-product structure",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="replay a trace file")
    p_run.add_argument("trace", help="trace path, or - for stdin")
    p_run.add_argument("--verify", action="store_true", help="oracle after every update")
    p_run.add_argument("--csv", default=None, help="write per-update counters here")
    _add_structure_flags(p_run)

    p_gen = sub.add_parser("generate", help="write a deterministic workload trace")
    p_gen.add_argument("--kind", choices=WORKLOAD_KINDS, required=True)
    p_gen.add_argument("--n", type=int, default=1000, help="target live size")
    p_gen.add_argument("--ops", type=int, default=5000, help="update count")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default=None, help="trace path (default stdout)")

    p_scale = sub.add_parser("scaling", help="steady-state counter means by size")
    p_scale.add_argument(
        "--sizes", default="1024,4096,16384", help="comma-separated n values"
    )
    p_scale.add_argument("--trials", type=int, default=200, help="updates per size")
    _add_structure_flags(p_scale)

    args = parser.parse_args(argv)

    if args.command == "generate":
        if args.out is None:
            generate(args.kind, args.n, args.ops, args.seed, sys.stdout)
        else:
            with open(args.out, "w") as fh:
                generate(args.kind, args.n, args.ops, args.seed, fh)
        return 0

    if args.command == "scaling":
        sizes = [int(tok) for tok in args.sizes.split(",") if tok]
        rows = scaling_rows(sizes, args.trials, args.seed, _config_from_args(args))
        _print_scaling(rows, sys.stdout)
        bad = [r["n"] for r in rows if not r["fanout_ok"] or r["min_depth_violations"]]
        if bad:
            print(f"hard bound broken at sizes {bad}", file=sys.stderr)
            return 1
        return 0

    config = _config_from_args(args)
    csv_fh = open(args.csv, "w", newline="") if args.csv else None
    try:
        if args.trace == "-":
            mismatches = run_trace(
                sys.stdin, config, verify=args.verify, out=sys.stdout, csv_out=csv_fh
            )
        else:
            with open(args.trace) as fh:
                mismatches = run_trace(
                    fh, config, verify=args.verify, out=sys.stdout, csv_out=csv_fh
                )
    except TraceError as exc:
        print(f"trace error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    finally:
        if csv_fh is not None:
            csv_fh.close()
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
