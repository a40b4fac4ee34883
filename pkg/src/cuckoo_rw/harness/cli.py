"""``cuckoo-rw`` command line entry point."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from .config import KINDS, ConfigError, ExperimentConfig, parse_grid
from .experiments import run
from .output import render

log = logging.getLogger("cuckoo_rw")

EXIT_OK = 0
EXIT_CONFIG = 2


def _grid(text: str) -> tuple[float, ...]:
    try:
        return parse_grid(text)
    except ConfigError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuckoo-rw",
        description="Experiments on random-walk cuckoo hashing and random k-graphs.",
    )
    parser.add_argument("kind", choices=KINDS)
    # defaults are None so that --config values survive unless overridden
    parser.add_argument("--config", help="JSON file with config values; flags override it")
    parser.add_argument("--k", type=int)
    parser.add_argument("--n", type=int)
    loads = parser.add_mutually_exclusive_group()
    loads.add_argument("--c", type=float)
    loads.add_argument("--c-grid", type=_grid, help="a:b:step (inclusive) or a,b,c")
    parser.add_argument("--m", type=int, help="explicit item count (insert-bench)")
    parser.add_argument("--trials", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--zeta", type=float)
    parser.add_argument("--step-cap", type=int)
    parser.add_argument("--out", help="output path (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"))
    parser.add_argument("--workers", type=int)
    parser.add_argument("--timing", action="store_true", default=None,
                        help="record wall-clock matching times (output is then not reproducible)")
    parser.add_argument("--deltas", type=_grid, help="density parameters for audit")
    parser.add_argument("--samples", type=int, help="expansion samples per audit trial")
    parser.add_argument("--probes", type=int, help="neighbourhood probes per audit trial")
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--fixture", help="hypergraph text file to use instead of sampling")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    values = {
        key: value
        for key, value in vars(args).items()
        if key not in ("config", "verbose") and value is not None
    }
    if args.config:
        config = ExperimentConfig.from_json_file(args.config, **values)
    else:
        config = ExperimentConfig.from_mapping(values)
    if config.kind == "thresholds" and args.format is None:
        config.format = "json"
    return config.validate()


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = config_from_args(args)
    except (ConfigError, TypeError) as exc:
        print(f"cuckoo-rw: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    log.info("running %s", config)
    rows = run(config)
    text = render(rows, config.format, single=config.kind == "thresholds")
    if config.out and config.out != "-":
        with open(config.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
