"""Command-line interface: ``python -m spindec <command> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .partitions import Partition, format_partition, parse_partition, partitions, strict_partitions

FORMATS = ("text", "json", "csv", "latex")


@dataclass
class Config:
    max_n: int = 9
    cache_dir: Path | None = None
    seed: int = 0
    fmt: str = "text"
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.max_n < 1:
            raise ValueError("--max-n must be at least 1")
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1")
        if self.cache_dir is not None:
            self.cache_dir = Path(self.cache_dir).expanduser()
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            if not os.access(self.cache_dir, os.W_OK):
                raise ValueError(f"cache directory {self.cache_dir} is not writable")


def default_cache_dir() -> Path | None:
    env = os.environ.get("SPINDEC_CACHE")
    if env is not None:
        return Path(env) if env else None
    return Path.home() / ".cache" / "spindec"


# -- table rendering ------------------------------------------------------------


def render_table(rows: list[str], cols: list[str], cells: list[list[int]], fmt: str,
                 extra: tuple[str, list[str]] | None = None) -> str:
    """Render an integer matrix with row and column labels.

    ``extra`` is an optional labelled column placed right after the row labels.
    """
    head = ["λ"] + ([extra[0]] if extra else []) + cols
    body = [[r] + ([extra[1][i]] if extra else []) + [str(v) for v in cells[i]] for i, r in enumerate(rows)]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(head)
        w.writerows(body)
        return buf.getvalue()
    if fmt == "latex":
        lines = [" & ".join(head) + r" \\ \hline"]
        lines += [" & ".join(line) + r" \\" for line in body]
        return "\n".join(lines) + "\n"
    widths = [max(len(line[j]) for line in [head] + body) for j in range(len(head))]
    out = []
    for k, line in enumerate([head] + body):
        out.append("  ".join(c.rjust(widths[j]) if j else c.ljust(widths[j]) for j, c in enumerate(line)).rstrip())
        if k == 0:
            out.append("-" * len(out[0]))
    return "\n".join(out) + "\n"


def _labels(ps) -> list[str]:
    return [format_partition(p) for p in ps]


def _check_n(n: int, cfg: Config) -> None:
    if n < 0:
        raise SystemExit("n must be nonnegative")
    if n > cfg.max_n:
        raise SystemExit(f"n={n} exceeds --max-n {cfg.max_n}")


# -- commands ---------------------------------------------------------------------


def cmd_decomp(args, cfg: Config) -> int:
    from .modrep import decomposition_matrix

    _check_n(args.n, cfg)
    dm = decomposition_matrix(args.n, cfg.seed, cfg.cache_dir, cfg.jobs)
    if cfg.fmt == "json":
        sys.stdout.write(dm.to_json())
        return 0
    rows, cols = partitions(args.n), dm.columns
    cells = [[dm.entry(l, m) for m in cols] for l in rows]
    sys.stdout.write(render_table(_labels(rows), _labels(cols), cells, cfg.fmt))
    return 0


def cmd_spindecomp(args, cfg: Config) -> int:
    from .spin import epsilon_label, spin_decomposition_matrix

    _check_n(args.n, cfg)
    sdm = spin_decomposition_matrix(args.n, cfg.seed, cfg.cache_dir, cfg.jobs)
    if cfg.fmt == "json":
        sys.stdout.write(sdm.to_json())
        return 0
    rows = cols = strict_partitions(args.n)
    cells = [[sdm.entry(l, m) for m in cols] for l in rows]
    eps = [epsilon_label(l) for l in rows]
    sys.stdout.write(render_table(_labels(rows), _labels(cols), cells, cfg.fmt, extra=("ε", eps)))
    return 0


def cmd_verify(args, cfg: Config) -> int:
    from .verify import PRIMARY_IDS, REGISTRY, reports_json, run_check

    ids = args.checks or list(PRIMARY_IDS)
    unknown = [c for c in ids if c not in REGISTRY]
    if unknown:
        raise SystemExit(f"unknown check(s): {', '.join(unknown)}; known: {', '.join(REGISTRY)}")
    reports = []
    for cid in ids:
        lo, hi = REGISTRY[cid].default
        if args.n_min is not None:
            lo = args.n_min
        if args.n_max is not None:
            hi = args.n_max
        rep = run_check(cid, (lo, hi), cfg.seed, cfg.cache_dir, cfg.jobs)
        reports.append(rep)
        if cfg.fmt != "json":
            print(rep.summary(), flush=True)
            for f in rep.failures[: args.show]:
                print("   ", json.dumps({k: v for k, v in f.items() if k != "row"}, ensure_ascii=False))
    text = reports_json(reports)
    if cfg.fmt == "json":
        sys.stdout.write(text)
    if args.report:
        from .cache import atomic_write

        atomic_write(Path(args.report), text)
    return 0 if all(r.passed for r in reports) else 1


def cmd_coeff(args, cfg: Config) -> int:
    from .spin import basic_spin_perm_expansion, g_ab
    from .tableaux import lr_coefficient, shifted_coefficient

    kind, vals = args.kind, args.args
    need = {"lr": 3, "shifted": 2, "gab": 2, "bsm": 1}[kind]
    if len(vals) != need:
        raise SystemExit(f"coeff {kind} takes {need} argument(s)")
    if kind == "lr":
        value = lr_coefficient(*(parse_partition(v) for v in vals))
    elif kind == "shifted":
        value = shifted_coefficient(*(parse_partition(v) for v in vals))
    elif kind == "gab":
        value = g_ab(int(vals[0]), int(vals[1]))
    else:
        n = int(vals[0])
        if n < 1:
            raise SystemExit("coeff bsm needs n >= 1")
        exp = basic_spin_perm_expansion(n)
        # sequence in the top-down indexing: entry h sits on the h-th module above the middle
        seq = [exp.t[n // 2 - 1 - h] for h in range(n // 2)] if n % 2 == 0 else [
            exp.t[(n - 1) // 2 - h] for h in range((n - 1) // 2 + 1)
        ]
        terms = {format_partition(Partition((n - h, h))): c for h, c in enumerate(exp.t) if c}
        if cfg.fmt == "json":
            print(json.dumps({"n": n, "sequence": seq, "permutation_modules": terms}))
        else:
            print(" ".join(str(v) for v in seq))
            print(" + ".join(f"{c}*M({k})" for k, c in terms.items()))
        return 0
    print(json.dumps({"kind": kind, "args": vals, "value": value}) if cfg.fmt == "json" else value)
    return 0


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=argparse.SUPPRESS, help="largest n accepted (default 9)")
    common.add_argument("--cache-dir", default=argparse.SUPPRESS,
                        help="on-disk cache (default $SPINDEC_CACHE or ~/.cache/spindec; '' disables)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for the module chopper")
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes")

    p = argparse.ArgumentParser(prog="spindec", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decomp", parents=[common], help="decomposition matrix of S_n in characteristic 2")
    d.add_argument("n", type=int)
    d.set_defaults(func=cmd_decomp)

    s = sub.add_parser("spindecomp", parents=[common], help="spin decomposition matrix in characteristic 2")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_spindecomp)

    from .verify import REGISTRY

    v = sub.add_parser(
        "verify", parents=[common], help="run exhaustive identity checks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="checks:\n" + "\n".join(f"  {cid:<10} n={c.default[0]}..{c.default[1]}  {c.about}"
                                       for cid, c in REGISTRY.items()),
    )
    v.add_argument("checks", nargs="*", help="check ids (default: all)")
    v.add_argument("--n-min", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--report", help="write a JSON report to this path")
    v.add_argument("--show", type=int, default=5, help="failures printed per check")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("coeff", parents=[common], help="single coefficients")
    c.add_argument("kind", choices=("lr", "shifted", "gab", "bsm"))
    c.add_argument("args", nargs="+")
    c.set_defaults(func=cmd_coeff)

    for kind, nargs in (("lr", 3), ("shifted", 2)):
        a = sub.add_parser(kind, parents=[common], help=f"same as 'coeff {kind}'")
        a.add_argument("args", nargs=nargs)
        a.set_defaults(func=cmd_coeff, kind=kind)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cache = getattr(args, "cache_dir", None)
    if cache is None:
        cache = default_cache_dir()
    try:
        cfg = Config(
            max_n=getattr(args, "max_n", 9),
            cache_dir=Path(cache) if cache else None,
            seed=getattr(args, "seed", 0),
            fmt=getattr(args, "format", "text"),
            jobs=getattr(args, "jobs", 1),
        )
    except ValueError as exc:
        print(f"spindec: {exc}", file=sys.stderr)
        return 2
    return args.func(args, cfg)


if __name__ == "__main__":
    raise SystemExit(main())
