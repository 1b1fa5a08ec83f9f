"""Command-line interface.

Exit codes: 0 ok, 1 a verification disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import dft_a2
from .closedform import count_closed, count_two_row
from .errors import PrecisionBudgetExceeded, SytError
from .graph import young_graph_dot
from .laurent import genfun, render_text, to_records
from .oracle import DEFAULT_CAP, count_oracle, enumerate_tableaux
from .partitions import Partition, parse, partitions_of
from .vertexdp import count_paths

METHODS = ("auto", "dp", "genfun", "closed", "tworow", "dft", "oracle")
TABLE_CAP = 40
GENFUN_CAP_N = 60
GENFUN_CAP_R = 6

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CountReport:
    shape: str
    n: int
    method: str
    count: str
    elapsed: float
    dft_real: float | None = None
    dft_imag: float | None = None
    dft_residual: float | None = None

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


@dataclass
class VerifyReport:
    max_n: int
    max_r: int
    dft_max_n: int
    dft_mode: str
    rows: list[dict] = field(default_factory=list)
    disagreements: list[dict] = field(default_factory=list)
    v0_mode_diff: list[dict] | None = None

    @property
    def exit_code(self) -> int:
        return EXIT_OK if not self.disagreements else EXIT_DISAGREE

    def to_json(self) -> dict:
        out = {
            "range": {"max_n": self.max_n, "max_r": self.max_r, "dft_max_n": self.dft_max_n},
            "dft_mode": self.dft_mode,
            "shapes": self.rows,
            "disagreements": self.disagreements,
        }
        if self.v0_mode_diff is not None:
            out["v0_mode_diff"] = self.v0_mode_diff
        return out


def applicable(method: str, shape: Partition, r: int | None = None,
               dft_max_n: int = dft_a2.DEFAULT_MAX_N, oracle_cap: int = DEFAULT_CAP) -> bool:
    h = shape.height()
    if r is not None and h > r:
        return False
    if method == "tworow":
        return h <= 2
    if method == "dft":
        return h <= 3 and shape.size() <= dft_max_n
    if method == "oracle":
        return shape.size() <= oracle_cap
    return True


def compute(method: str, shape: Partition, r: int | None = None, dft_mode: str = "derived",
            dft_tolerance: float = dft_a2.DEFAULT_TOLERANCE, dft_max_n: int | None = dft_a2.DEFAULT_MAX_N):
    """Return (count, extras) for one method; extras holds DFT audit fields."""
    if r is None:
        r = max(shape.height(), 1)
    if method in ("auto", "closed"):
        return count_closed(shape, r).value, {}
    if method == "dp":
        return count_paths(shape, r).count, {}
    if method == "genfun":
        from .laurent import count_via_genfun
        return count_via_genfun(shape, r), {}
    if method == "tworow":
        k, l = shape.padded(2)
        return count_two_row(k, l).value, {}
    if method == "oracle":
        return count_oracle(shape), {}
    if method == "dft":
        res = dft_a2.count_dft(shape, mode=dft_mode, tolerance=dft_tolerance, max_n=dft_max_n)
        return res.rounded, {"dft_real": res.raw.real, "dft_imag": res.raw.imag, "dft_residual": res.residual}
    raise UsageError(f"unknown method {method!r}")


def cmd_count(shape: Partition, r: int | None = None, method: str = "auto", dft_mode: str = "derived",
              dft_tolerance: float = dft_a2.DEFAULT_TOLERANCE) -> CountReport:
    if method not in METHODS:
        raise UsageError(f"unknown method {method!r}")
    if r is not None and shape.height() > r:
        raise UsageError(f"shape {shape} has height {shape.height()} > r={r}")
    if method == "tworow" and shape.height() > 2:
        raise UsageError("method tworow needs a shape of height <= 2")
    if method == "dft" and shape.height() > 3:
        raise UsageError("method dft needs a shape of height <= 3")
    if method == "oracle" and shape.size() > DEFAULT_CAP:
        raise UsageError(f"oracle is capped at {DEFAULT_CAP} cells")
    t0 = time.perf_counter()
    value, extras = compute(method, shape, r, dft_mode, dft_tolerance)
    elapsed = time.perf_counter() - t0
    return CountReport(str(shape), shape.size(), "closed" if method == "auto" else method,
                       str(value), elapsed, **extras)


def _all_methods(job) -> dict:
    shape, dft_max_n, dft_mode, dft_tolerance = job
    values = {}
    for m in ("dp", "genfun", "closed", "oracle", "tworow", "dft"):
        if not applicable(m, shape, dft_max_n=dft_max_n):
            continue
        try:
            values[m] = compute(m, shape, dft_mode=dft_mode, dft_tolerance=dft_tolerance,
                                dft_max_n=dft_max_n)[0]
        except SytError as exc:
            values[m] = f"error: {exc}"
    return {"shape": str(shape), "n": shape.size(), "values": {k: str(v) for k, v in values.items()},
            "agree": len(set(values.values())) == 1}


def _sweep(shapes: list[Partition], dft_max_n: int, dft_mode: str, dft_tolerance: float, jobs: int) -> list[dict]:
    work = [(s, dft_max_n, dft_mode, dft_tolerance) for s in shapes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_all_methods, work))
    else:
        rows = [_all_methods(w) for w in work]
    # deterministic output regardless of completion order
    return rows


def cmd_table(n: int, max_height: int, dft_mode: str = "derived", jobs: int = 1,
              cap: int = TABLE_CAP) -> list[dict]:
    if n > cap:
        raise UsageError(f"n = {n} exceeds table cap {cap}")
    shapes = partitions_of(n, max_height)
    rows = _sweep(shapes, dft_a2.DEFAULT_MAX_N, dft_mode, dft_a2.DEFAULT_TOLERANCE, jobs)
    for row in rows:
        vals = set(row["values"].values())
        row["count"] = row["values"]["closed"] if len(vals) == 1 else None
    return rows


def cmd_genfun(n: int, r: int, fmt: str = "text") -> str:
    if n > GENFUN_CAP_N or r > GENFUN_CAP_R:
        raise UsageError(f"genfun caps: n <= {GENFUN_CAP_N}, r <= {GENFUN_CAP_R}")
    if n < 0 or r < 1:
        raise UsageError("need n >= 0 and r >= 1")
    p = genfun(n, r)
    if fmt == "json":
        return json.dumps({"n": n, "r": r, "terms": to_records(p)})
    return render_text(p)


def cmd_graph(r: int, max_coordinate: int) -> str:
    try:
        return young_graph_dot(r, max_coordinate)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def v0_mode_diff(max_side: int) -> list[dict]:
    out = []
    for side in range(max_side + 1):
        d = dft_a2.initial_state_verbatim(side).values - dft_a2.initial_state_derived(side).values
        out.append({"side": side, "max_abs_diff": float(abs(d).max())})
    return out


def cmd_verify(max_n: int = 10, max_r: int = 4, dft_max_n: int = 12, dft_mode: str = "derived",
               dft_tolerance: float = dft_a2.DEFAULT_TOLERANCE, jobs: int = 1) -> VerifyReport:
    shapes = [s for n in range(max_n + 1) for s in partitions_of(n, max_r)]
    rows = _sweep(shapes, dft_max_n, dft_mode, dft_tolerance, jobs)
    report = VerifyReport(max_n, max_r, dft_max_n, dft_mode, rows)
    report.disagreements = [row for row in rows if not row["agree"]]
    if dft_mode == "verbatim":
        report.v0_mode_diff = v0_mode_diff(min(max_n, dft_max_n) + 2)
    return report


BENCH_METHODS = ("dp", "genfun", "closed", "oracle", "dft")


def cmd_bench(max_n: int, methods=BENCH_METHODS, max_r: int = 3, repeat: int = 1) -> list[dict]:
    rows = []
    for n in range(max_n + 1):
        shapes = partitions_of(n, max_r)
        for m in methods:
            todo = [s for s in shapes if applicable(m, s)]
            if not todo:
                continue
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                for s in todo:
                    compute(m, s, dft_max_n=None)
                best = min(best, time.perf_counter() - t0)
            rows.append({"method": m, "n": n, "shapes": len(todo), "seconds": f"{best:.6f}"})
    return rows


# ---- argument handling -----------------------------------------------------

def _shape_arg(text: str) -> Partition:
    try:
        return parse(text)
    except SytError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sytcount", description="Count standard Young tableaux.")
    sub = p.add_subparsers(dest="command", required=True)

    def dft_flags(sp):
        sp.add_argument("--dft-mode", choices=dft_a2.MODES, default="derived")
        sp.add_argument("--dft-tolerance", type=float, default=dft_a2.DEFAULT_TOLERANCE)

    c = sub.add_parser("count", help="count tableaux of one shape")
    c.add_argument("--shape", type=_shape_arg, required=True)
    c.add_argument("--r", type=int)
    c.add_argument("--method", choices=METHODS, default="auto")
    c.add_argument("--json", action="store_true")
    dft_flags(c)

    t = sub.add_parser("table", help="all counts for partitions of n")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--max-r", type=int)
    t.add_argument("--json", action="store_true")
    t.add_argument("--jobs", type=int, default=1)
    dft_flags(t)

    g = sub.add_parser("genfun", help="print the generating function F_{n,r}")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--format", choices=("text", "json"), default="text")

    gr = sub.add_parser("graph", help="DOT digraph of the partition lattice with counts")
    gr.add_argument("--r", type=int, required=True)
    gr.add_argument("--max-coordinate", type=int, default=4)
    gr.add_argument("--format", choices=("dot",), default="dot")

    v = sub.add_parser("verify", help="cross-check every method over a range of shapes")
    v.add_argument("--max-n", type=int, default=10)
    v.add_argument("--max-r", type=int, default=4)
    v.add_argument("--dft-max-n", type=int, default=12)
    v.add_argument("--json", action="store_true")
    v.add_argument("--jobs", type=int, default=1)
    dft_flags(v)

    b = sub.add_parser("bench", help="wall time per method per n, as CSV")
    b.add_argument("--max-n", type=int, default=12)
    b.add_argument("--max-r", type=int, default=3)
    b.add_argument("--methods", default=",".join(BENCH_METHODS))
    b.add_argument("--repeat", type=int, default=1)

    e = sub.add_parser("enumerate", help="list every standard tableau of a shape")
    e.add_argument("--shape", type=_shape_arg, required=True)
    e.add_argument("--json", action="store_true")
    return p


def _print_verify(report: VerifyReport, out):
    for row in report.rows:
        flag = "ok" if row["agree"] else "DISAGREE"
        vals = " ".join(f"{k}={v}" for k, v in row["values"].items())
        print(f"{row['shape']:>12}  {flag:8}  {vals}", file=out)
    if report.v0_mode_diff is not None:
        print("# V0 verbatim vs derived, max |diff| per side:", file=out)
        for d in report.v0_mode_diff:
            print(f"#   side={d['side']}: {d['max_abs_diff']:.3g}", file=out)
    print(f"{len(report.rows)} shapes, {len(report.disagreements)} disagreements", file=out)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            rep = cmd_count(args.shape, args.r, args.method, args.dft_mode, args.dft_tolerance)
            if args.json:
                print(json.dumps(rep.to_json()), file=out)
            else:
                line = f"{rep.shape}: {rep.count}  [{rep.method}, {rep.elapsed:.3g}s]"
                if rep.dft_residual is not None:
                    line += f"  raw={rep.dft_real:.6g}{rep.dft_imag:+.3g}j residual={rep.dft_residual:.3g}"
                print(line, file=out)
        elif args.command == "table":
            rows = cmd_table(args.n, args.max_r or max(args.n, 1), args.dft_mode, args.jobs)
            if args.json:
                print(json.dumps(rows), file=out)
            else:
                for row in rows:
                    flag = "ok" if row["agree"] else "DISAGREE"
                    print(f"{row['shape']:>12}  {row['values']['closed']:>10}  {flag}", file=out)
            if not all(row["agree"] for row in rows):
                return EXIT_DISAGREE
        elif args.command == "genfun":
            print(cmd_genfun(args.n, args.r, args.format), file=out)
        elif args.command == "graph":
            out.write(cmd_graph(args.r, args.max_coordinate))
        elif args.command == "verify":
            rep = cmd_verify(args.max_n, args.max_r, args.dft_max_n, args.dft_mode,
                             args.dft_tolerance, args.jobs)
            if args.json:
                print(json.dumps(rep.to_json()), file=out)
            else:
                _print_verify(rep, out)
            return rep.exit_code
        elif args.command == "bench":
            methods = [m for m in args.methods.split(",") if m]
            unknown = set(methods) - set(METHODS)
            if unknown:
                raise UsageError(f"unknown methods {sorted(unknown)}")
            rows = cmd_bench(args.max_n, methods, args.max_r, args.repeat)
            w = csv.DictWriter(out, fieldnames=["method", "n", "shapes", "seconds"], lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        elif args.command == "enumerate":
            tabs = enumerate_tableaux(args.shape)
            if args.json:
                print(json.dumps([t.to_json() for t in tabs]), file=out)
            else:
                print("\n\n".join(str(t) for t in tabs), file=out)
    except (UsageError, SytError, PrecisionBudgetExceeded) as exc:
        print(f"sytcount: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
