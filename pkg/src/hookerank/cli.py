"""Command-line front end: ``hookerank {generate,rank,simulate,evaluate}``.

Every option may also be given through an environment variable named
``HOOKERANK_<OPTION>`` (dashes become underscores), e.g.
``HOOKERANK_RNG_SEED=7``. Command-line flags take precedence.

Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .diffusion import SirParams, sir_node_strength, sir_simulate
from .graph import EdgeListError, IngestOptions, WeightedGraph, generate_ba_weighted, load_edge_list, write_edge_list
from .metrics import avg_spreader_distance, influence_curve, kendall_tau
from .pipeline import METHODS, rank_by, seed_count, seeds_by
from .spring import RankList

_LOG = logging.getLogger("hookerank")

ENV_PREFIX = "HOOKERANK_"
EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_FRACTIONS = (0.02, 0.04, 0.06, 0.08, 0.10)


class UsageError(Exception):
    pass


@dataclass
class ExperimentConfig:
    command: str
    input: str | None = None
    generate: tuple[int, int] | None = None
    methods: list[str] = field(default_factory=lambda: ["kshr"])
    beta: list[float] = field(default_factory=lambda: [0.01])
    gamma: float = 1.0
    runs: int = 100
    max_steps: int = 10_000
    top_k: int | None = None
    fractions: list[float] = field(default_factory=lambda: list(DEFAULT_FRACTIONS))
    seeds_file: str | None = None
    rng_seed: int = 0
    out_dir: str = "out"
    weight_shift: bool = False
    kshr_mean: bool = False
    weighted_sir: bool = False

    def validate(self) -> None:
        if self.command != "generate" and (self.input is None) == (self.generate is None):
            raise UsageError("give exactly one of --input or --generate")
        if self.command == "generate" and self.generate is None:
            raise UsageError("generate needs --generate n,m")
        for m in self.methods:
            if m not in METHODS:
                raise UsageError(f"unknown method {m!r}; choose from {', '.join(METHODS)}")
        if self.generate is not None:
            n, m = self.generate
            if not n > m >= 1:
                raise UsageError(f"--generate needs n > m >= 1, got {n},{m}")
        if not self.beta:
            raise UsageError("at least one --beta value is required")
        for b in self.beta:
            if not 0 <= b <= 1:
                raise UsageError(f"beta must lie in [0, 1], got {b}")
        if not 0 < self.gamma <= 1:
            raise UsageError(f"gamma must lie in (0, 1], got {self.gamma}")
        if self.runs < 1:
            raise UsageError("--runs must be >= 1")
        if self.top_k is not None and self.top_k < 1:
            raise UsageError("--top-k must be >= 1")
        for p in self.fractions:
            if not 0 < p <= 1:
                raise UsageError(f"seed fractions must lie in (0, 1], got {p}")
        if not 0 <= self.rng_seed < 2**64:
            raise UsageError("--rng-seed must be a 64-bit unsigned integer")


def _fmt(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])


def _pair(text: str) -> tuple[int, int]:
    try:
        n, m = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'n,m', got {text!r}") from None
    return n, m


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", help="weighted edge list (u v [w])")
    common.add_argument("--generate", type=_pair, metavar="N,M", help="weighted BA graph instead of --input")
    common.add_argument("--rng-seed", type=int, default=0)
    common.add_argument("--out-dir", default="out")
    common.add_argument("--weight-shift", action="store_true", help="shift weights so the minimum becomes 1")
    common.add_argument("-v", "--verbose", action="store_true")

    algo = _Parser(add_help=False)
    algo.add_argument("--method", action="append", choices=METHODS, help="repeatable; default kshr")
    algo.add_argument("--kshr-mean", action="store_true", help="average KSHR constants instead of summing")

    sir = _Parser(add_help=False)
    sir.add_argument("--beta", type=_floats, default=[0.01], help="comma-separated list allowed")
    sir.add_argument("--gamma", type=float, default=1.0)
    sir.add_argument("--runs", type=int, default=100)
    sir.add_argument("--max-steps", type=int, default=10_000)
    sir.add_argument("--weighted-sir", action="store_true", help="transmission 1-(1-beta)^w per edge")
    sir.add_argument("--top-k", type=int)
    sir.add_argument("--fractions", type=_floats, default=list(DEFAULT_FRACTIONS))

    parser = _Parser(prog="hookerank", description="KSHR influential-spreader ranking and SIR evaluation.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("generate", parents=[common], help="write a weighted BA edge list")
    sub.add_parser("rank", parents=[common, algo], help="rank nodes, one CSV per method")
    simp = sub.add_parser("simulate", parents=[common, algo, sir], help="SIR spread of top-ranked seeds")
    simp.add_argument("--seeds-file", help="node labels, one per line, instead of --method")
    sub.add_parser("evaluate", parents=[common, algo, sir], help="Kendall tau and spreader distance")
    _apply_env_defaults(parser)
    return parser


def _apply_env_defaults(parser: argparse.ArgumentParser) -> None:
    subparsers = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    for sp in subparsers.choices.values():
        for action in sp._actions:
            if not action.option_strings or action.dest == "help":
                continue
            long = max(action.option_strings, key=len).lstrip("-")
            env = os.environ.get(ENV_PREFIX + long.upper().replace("-", "_"))
            if env is None:
                continue
            if isinstance(action, argparse._StoreTrueAction):
                action.default = env.strip().lower() in ("1", "true", "yes", "on")
            elif isinstance(action, argparse._AppendAction):
                continue  # argparse would append flags onto the default; see _env_methods
            else:
                action.default = action.type(env) if action.type else env


def _env_methods() -> list[str] | None:
    env = os.environ.get(ENV_PREFIX + "METHOD")
    return [t.strip() for t in env.split(",") if t.strip()] if env else None


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    get = lambda name, default=None: getattr(args, name, default)  # noqa: E731
    beta = get("beta", [0.01])
    return ExperimentConfig(
        command=args.command,
        input=args.input,
        generate=args.generate,
        methods=list(get("method") or _env_methods() or ["kshr"]),
        beta=list(beta),
        gamma=get("gamma", 1.0),
        runs=get("runs", 100),
        max_steps=get("max_steps", 10_000),
        top_k=get("top_k"),
        fractions=list(get("fractions", DEFAULT_FRACTIONS)),
        seeds_file=get("seeds_file"),
        rng_seed=args.rng_seed,
        out_dir=args.out_dir,
        weight_shift=args.weight_shift,
        kshr_mean=get("kshr_mean", False),
        weighted_sir=get("weighted_sir", False),
    )


def _load_graph(cfg: ExperimentConfig) -> WeightedGraph:
    if cfg.generate is not None:
        return generate_ba_weighted(*cfg.generate, seed=cfg.rng_seed)
    return load_edge_list(cfg.input, IngestOptions(weight_shift=cfg.weight_shift))


def _dataset_name(cfg: ExperimentConfig) -> str:
    if cfg.generate is not None:
        return f"BA-{cfg.generate[0]}-{cfg.generate[1]}"
    return Path(cfg.input).stem


def _seed_sets(g: WeightedGraph, cfg: ExperimentConfig) -> list[tuple[str, float, list[int]]]:
    """(method, fraction, seeds) for every requested method and seed budget."""
    if cfg.seeds_file is not None:
        index = {g.label(u): u for u in range(g.n)}
        with open(cfg.seeds_file, encoding="utf-8") as fh:
            labels = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
        missing = [lab for lab in labels if lab not in index]
        if missing:
            raise EdgeListError(f"seed labels not in graph: {missing[:5]}")
        seeds = [index[lab] for lab in labels]
        return [("seeds_file", len(seeds) / g.n, seeds)]
    budgets = [(cfg.top_k / g.n, cfg.top_k)] if cfg.top_k else [(p, seed_count(g.n, p)) for p in cfg.fractions]
    if any(k > g.n for _, k in budgets):
        raise UsageError(f"seed budget exceeds node count {g.n}")
    out = []
    for method in cfg.methods:
        ranking = None if method == "wvote" else rank_by(g, method, cfg.kshr_mean)
        for p, k in budgets:
            seeds = seeds_by(g, method, k) if ranking is None else ranking.top(k)
            out.append((method, p, seeds))
    return out


def cmd_generate(cfg: ExperimentConfig, out: Path) -> None:
    n, m = cfg.generate
    g = generate_ba_weighted(n, m, cfg.rng_seed)
    header = [f"weighted Barabasi-Albert n={n} m={m} rng_seed={cfg.rng_seed}", f"nodes={g.n} edges={g.n_edges}"]
    write_edge_list(g, out / f"ba_{n}_{m}_seed{cfg.rng_seed}.edges", header)


def _rank_rows(g: WeightedGraph, r: RankList):
    for pos, (u, s) in enumerate(r, start=1):
        yield g.label(u), s, pos


def cmd_rank(cfg: ExperimentConfig, out: Path) -> None:
    g = _load_graph(cfg)
    for method in cfg.methods:
        r = rank_by(g, method, cfg.kshr_mean)
        _write_csv(out / f"rank_{method}.csv", ["node_label", "score", "rank"], _rank_rows(g, r))


def cmd_simulate(cfg: ExperimentConfig, out: Path) -> None:
    g = _load_graph(cfg)
    sets = _seed_sets(g, cfg)
    for beta in cfg.beta:
        params = SirParams(beta, cfg.gamma, cfg.runs, cfg.max_steps, cfg.weighted_sir)
        by_method: dict[str, list] = {}
        for method, p, seeds in sets:
            outcome = sir_simulate(g, seeds, params, cfg.rng_seed)
            by_method.setdefault(method, []).append((p, len(seeds), outcome))
        for method, entries in by_method.items():
            curve = influence_curve([(p, o) for p, _, o in entries])
            _write_csv(
                out / f"scale_vs_p_{method}_beta{beta!r}.csv",
                ["fraction", "n_seeds", "final_scale", "stderr"],
                ((p, k, fs, se) for (p, k, _), (_, fs, se) in zip(entries, curve.rows())),
            )
            width = max(len(s) for s in curve.per_step)
            rows = []
            for t in range(width):
                rows.append([t] + [float(s[min(t, len(s) - 1)]) for s in curve.per_step])
            _write_csv(
                out / f"scale_vs_t_{method}_beta{beta!r}.csv",
                ["step"] + [f"p={p!r}" for p in curve.fractions.tolist()],
                rows,
            )


def cmd_evaluate(cfg: ExperimentConfig, out: Path) -> None:
    g = _load_graph(cfg)
    rankings = {m: rank_by(g, m, cfg.kshr_mean) for m in cfg.methods}
    tau_rows = []
    for beta in cfg.beta:
        params = SirParams(beta, cfg.gamma, cfg.runs, cfg.max_steps, cfg.weighted_sir)
        truth = RankList.from_scores(sir_node_strength(g, params, cfg.rng_seed))
        for method, r in rankings.items():
            res = kendall_tau(r, truth)
            tau_rows.append((method, beta, res.tau, res.tau_b))
    _write_csv(out / "tau.csv", ["method", "beta", "tau", "tau_b"], tau_rows)

    ls_rows = []
    for method, p, seeds in _seed_sets(g, cfg):
        ls_rows.append((method, p, len(seeds)) + (_ls_cell(g, seeds),))
    # Table layout: one row per seed budget, one column per method
    budgets = list(dict.fromkeys((p, k) for _, p, k, _ in ls_rows))
    cells = {(m, p): v for m, p, _, v in ls_rows}
    methods = list(dict.fromkeys(m for m, *_ in ls_rows))
    _write_csv(
        out / "spreader_distance.csv",
        ["dataset", "fraction", "n_seeds"] + [f"L_s({m})" for m in methods],
        ([_dataset_name(cfg), p, k] + [cells[(m, p)] for m in methods] for p, k in budgets),
    )


def _ls_cell(g: WeightedGraph, seeds: list[int]):
    if len(seeds) < 2:
        return "NA"
    return avg_spreader_distance(g, seeds).mean


COMMANDS = {"generate": cmd_generate, "rank": cmd_rank, "simulate": cmd_simulate, "evaluate": cmd_evaluate}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = config_from_args(args)
        cfg.validate()
        out = Path(cfg.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / f"config_{cfg.command}.json", "w", encoding="utf-8", newline="\n") as fh:
            json.dump(asdict(cfg), fh, indent=2, sort_keys=True)
            fh.write("\n")
        COMMANDS[cfg.command](cfg, out)
    except UsageError as exc:
        print(f"hookerank: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EdgeListError, OSError, ValueError) as exc:
        print(f"hookerank: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except Exception as exc:  # pragma: no cover - last-resort guard
        _LOG.exception("internal error")
        print(f"hookerank: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
