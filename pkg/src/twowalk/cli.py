"""Command-line entry point: ``twowalk {graph,simulate,spectrum,feigenbaum,perturb}``.

Exit codes: 0 success, 1 usage error, 2 numeric/validation failure,
3 empty spectrum.
"""

from __future__ import annotations

import argparse
import csv
import math
import re
import sys
from pathlib import Path

import numpy as np

from .graph import CATALOG_NAMES, Graph, GraphError, catalog, format_graph, read_graph_file
from .numkernel import NumericalError
from .observables import record_series
from .spectral import (
    DEFAULT_ALPHA,
    SweepError,
    feigenbaum_sweep,
    power_spectrum,
    tier_bins,
)
from .walk import InteractionScheme, initial_state

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_EMPTY = 0, 1, 2, 3

_PI_RE = re.compile(r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi\s*$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_phi(text: str) -> float:
    """Radians, either raw (``2.356``) or as a multiple of pi (``0.75pi``)."""
    m = _PI_RE.match(text)
    if m:
        coef = m.group(1)
        value = (float(coef) if coef else 1.0) * math.pi
    else:
        try:
            value = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"cannot parse phi {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"phi must be finite, got {text!r}")
    return value


def _fmt(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return repr(float(x))


def _write_csv(path: Path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])


def load_graph(spec: str) -> Graph:
    if spec in CATALOG_NAMES:
        return catalog(spec)
    path = Path(spec)
    if path.is_file():
        return read_graph_file(path)
    raise UsageError(f"unknown graph {spec!r}: not a catalog name ({', '.join(CATALOG_NAMES)}) or a file")


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _initial(args, graph):
    if args.initial == "random" and args.seed is None:
        raise UsageError("--initial random requires --seed")
    return initial_state(graph, args.initial, args.seed)


def _plot_lines(path: Path, t, series: dict, ylabel: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 3))
    for label, y in series.items():
        ax.plot(t, y, lw=0.8, label=label)
    ax.set_xlabel("t (steps)")
    ax.set_ylabel(ylabel)
    if len(series) > 1:
        ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, metadata={"Date": None})
    plt.close(fig)


# -- commands ----------------------------------------------------------------


def cmd_graph(args) -> int:
    text = format_graph(load_graph(args.name))
    if args.export in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.export).write_text(text)
    return EXIT_OK


def cmd_simulate(args) -> int:
    graph = load_graph(args.graph)
    rec = record_series(graph, InteractionScheme(args.phi), _initial(args, graph), args.steps)
    out = _out_dir(args)
    _write_csv(out / "entanglement.csv", ["t", "E_bits"], zip(rec.t, rec.entanglement))
    n = graph.n
    header = ["t"] + [f"P1_v{i}" for i in range(n)] + [f"P2_v{i}" for i in range(n)]
    rows = ([t, *p1, *p2] for t, p1, p2 in zip(rec.t, rec.marginals1, rec.marginals2))
    _write_csv(out / "marginals.csv", header, rows)
    if args.plot:
        _plot_lines(out / "entanglement.svg", rec.t, {"E": rec.entanglement}, "entanglement (bits)")
        _plot_lines(
            out / "marginals.svg", rec.t,
            {f"P1 v{i}": rec.marginals1[:, i] for i in range(n)}, "marginal probability",
        )
    return EXIT_OK


def _read_series(path: Path, column: str | None) -> np.ndarray:
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    if not rows:
        raise UsageError(f"{path} is empty")
    try:
        float(rows[0][-1])
        header, body = None, rows
    except ValueError:
        header, body = rows[0], rows[1:]
    idx = -1
    if column is not None:
        if header is None or column not in header:
            raise UsageError(f"column {column!r} not found in {path}")
        idx = header.index(column)
    try:
        return np.array([float(r[idx]) for r in body])
    except (ValueError, IndexError) as exc:
        raise UsageError(f"bad numeric data in {path}: {exc}") from None


def cmd_spectrum(args) -> int:
    if args.input is not None:
        series = _read_series(Path(args.input), args.column)
    else:
        graph = load_graph(args.graph)
        rec = record_series(graph, InteractionScheme(args.phi), _initial(args, graph), args.steps)
        if args.series == "entanglement":
            series = rec.entanglement
        else:
            m = re.fullmatch(r"p1v(\d+)", args.series)
            if not m or int(m.group(1)) >= graph.n:
                raise UsageError(f"unknown series {args.series!r}")
            series = rec.marginals1[:, int(m.group(1))]
    spec = power_spectrum(series, args.alpha)
    tiers = tier_bins(spec)
    out = _out_dir(args)
    rows = zip(spec.frequencies, spec.power, tiers) if not spec.empty else []
    _write_csv(out / "spectrum.csv", ["freq_cycles_per_step", "power", "tier"], rows)
    if spec.empty:
        print("empty spectrum: detrended series is identically zero", file=sys.stderr)
        return EXIT_EMPTY
    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(8, 3))
        ax.semilogy(spec.frequencies[1:], spec.power[1:], lw=0.8, color="0.3")
        for tier, color in ((1, "k"), (2, "0.6")):
            sel = tiers == tier
            ax.plot(spec.frequencies[sel], spec.power[sel], "o", ms=3, color=color)
        ax.set_xlabel("frequency (cycles/step)")
        ax.set_ylabel("normalised power")
        fig.tight_layout()
        fig.savefig(out / "spectrum.svg", metadata={"Date": None})
        plt.close(fig)
    return EXIT_OK


def cmd_feigenbaum(args) -> int:
    graph = load_graph(args.graph)
    if args.phi_count < 1:
        raise UsageError("--phi-count must be >= 1")
    if args.initial == "random" and args.seed is None:
        raise UsageError("--initial random requires --seed")
    grid = np.linspace(args.phi_min, args.phi_max, args.phi_count)
    data = feigenbaum_sweep(
        graph, grid, args.steps, args.initial, args.seed, args.alpha, workers=args.workers
    )
    out = _out_dir(args)
    _write_csv(out / "feigenbaum.csv", ["phi_radians", "freq_cycles_per_step", "tier"], data.points)
    if args.plot:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        arr = data.as_array()
        fig, ax = plt.subplots(figsize=(7, 4))
        for tier, color in ((2, "0.6"), (1, "k")):
            sel = arr[:, 2] == tier
            ax.plot(arr[sel, 0] / math.pi, arr[sel, 1], ".", ms=2, color=color)
        ax.set_xlabel(r"$\phi/\pi$")
        ax.set_ylabel("frequency (cycles/step)")
        fig.tight_layout()
        fig.savefig(out / "feigenbaum.svg", metadata={"Date": None})
        plt.close(fig)
    return EXIT_OK


def cmd_perturb(args) -> int:
    graph = load_graph(args.graph)
    psi0 = _initial(args, graph)
    a = record_series(graph, InteractionScheme(args.phi), psi0, args.steps)
    b = record_series(graph, InteractionScheme(args.phi2), psi0, args.steps)
    out = _out_dir(args)
    rows = zip(a.t, a.entanglement, b.entanglement, a.marginals1[:, 0], b.marginals1[:, 0])
    _write_csv(out / "perturb.csv", ["t", "E_phi1", "E_phi2", "P1v0_phi1", "P1v0_phi2"], rows)
    d_e = float(np.max(np.abs(a.entanglement - b.entanglement)))
    d_p = float(np.max(np.abs(a.marginals1[:, 0] - b.marginals1[:, 0])))
    print(f"max_t|dE|={d_e!r} max_t|dP1(0)|={d_p!r}", file=sys.stderr)
    if args.plot:
        _plot_lines(out / "perturb_entanglement.svg", a.t,
                    {f"phi={args.phi:.4g}": a.entanglement, f"phi={args.phi2:.4g}": b.entanglement},
                    "entanglement (bits)")
        _plot_lines(out / "perturb_p1v0.svg", a.t,
                    {f"phi={args.phi:.4g}": a.marginals1[:, 0], f"phi={args.phi2:.4g}": b.marginals1[:, 0]},
                    "P1(v0)")
    return EXIT_OK


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _alpha(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad alpha {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError("alpha must lie in [0, 1]")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twowalk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def shared(p):
        p.add_argument("--graph", default="k8", help="catalog name or graph file path")
        p.add_argument("--steps", type=_positive_int, default=500)
        p.add_argument("--initial", choices=("equal", "random"), default="equal")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--alpha", type=_alpha, default=DEFAULT_ALPHA)
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--plot", action="store_true", help="also write SVG plots")

    p = sub.add_parser("graph", help="print or export a catalog graph")
    p.add_argument("name")
    p.add_argument("--export", default=None, help="output path, '-' for stdout")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("simulate", help="entanglement and marginal time series")
    shared(p)
    p.add_argument("--phi", type=parse_phi, default=0.0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("spectrum", help="windowed power spectrum of a series")
    shared(p)
    p.add_argument("--phi", type=parse_phi, default=0.0)
    p.add_argument("--series", default="entanglement", help="'entanglement' or 'p1v<i>'")
    p.add_argument("--input", default=None, help="CSV series to analyse instead of simulating")
    p.add_argument("--column", default=None, help="column of --input (default: last)")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("feigenbaum", help="prominent frequencies versus phi")
    shared(p)
    p.add_argument("--phi-min", type=parse_phi, default=0.0)
    p.add_argument("--phi-max", type=parse_phi, default=math.pi)
    p.add_argument("--phi-count", type=int, default=200)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=cmd_feigenbaum)

    p = sub.add_parser("perturb", help="compare two nearby phi values")
    shared(p)
    p.add_argument("--phi", type=parse_phi, default=0.75 * math.pi)
    p.add_argument("--phi2", type=parse_phi, default=0.76 * math.pi)
    p.set_defaults(func=cmd_perturb)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError) as exc:
        print(f"twowalk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalError, SweepError, ValueError) as exc:
        print(f"twowalk: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
