"""
Command-line interface: `esdkit <command> [flags]`.

Exit codes: 0 success, 2 invalid input or unwritable output, 3 a check command
exceeded its tolerance.
"""
from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from pathlib import Path
from typing import Callable, Optional, Sequence
import argparse
import logging
import sys

import numpy as np

from .config import AXES, FAMILIES, FORMATS, GRIDS, HOLDS, RunConfig, parse_values
from .entanglement import concurrence, factorization_residual, min_pt_eigenvalue, negativity
from .esd import EsdReport, choi_ppt_time, nqubit_esd_certificate
from .output import NEVER, ResultTable, to_writer, write_table
from .states import random_pure

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_TOLERANCE = 3


class CheckFailed(Exception):
    """A check command ran to completion but its result exceeds the tolerance."""


# ======================================================================
# Commands
# ======================================================================

def cmd_choi_dynamics(config: RunConfig) -> ResultTable:
    model = config.model()
    logger.info("Choi dynamics of %s", model.describe())
    columns = ["t", "min_pt_eigenvalue", "separability_margin", "negativity", "concurrence"]
    table = ResultTable(columns, config=config.to_items())
    for t in map(float, config.time_grid()):
        c = model.choi(t)
        # the margin keeps its sign after the PT eigenvalue underflows
        table.add_row(t, min_pt_eigenvalue(c), model.choi_margin(t), negativity(c), concurrence(c))
    return table


REPORT_COLUMNS = [
    "family",
    "transition_time",
    "t_low",
    "t_high",
    "margin_low",
    "margin_high",
    "min_pt_eigenvalue_at_horizon",
    "horizon",
    "iterations",
    "single_crossing",
    "closed_form_time",
    "closed_form_label",
    "printed_threshold_time",
]


def _report_row(report: EsdReport) -> tuple:
    lo, hi = report.bracket or (None, None)
    m_lo, m_hi = report.margins or (None, None)
    return (
        report.family,
        NEVER if report.never else report.transition_time,
        lo,
        hi,
        m_lo,
        m_hi,
        report.min_pt_eigenvalue_at_horizon,
        report.horizon,
        report.iterations,
        report.single_crossing,
        report.closed_form_time,
        report.closed_form_label,
        report.printed_threshold_time,
    )


def cmd_esd_time(config: RunConfig) -> ResultTable:
    model = config.model()
    logger.info("Searching the separability transition of %s", model.describe())
    report = choi_ppt_time(model, config.horizon, config.precision)
    table = ResultTable(list(REPORT_COLUMNS), config=config.to_items())
    table.add_row(*_report_row(report))
    return table


_AXIS_FIELDS = {"N": "n_mean", "N_th": "n_th", "r": "r", "gamma": "gamma"}


def _sweep_point(config: RunConfig, value: float) -> RunConfig:
    point = replace(config, **{_AXIS_FIELDS[config.axis]: value})
    if config.axis == "N":
        point = replace(point, n_th=None)
    elif config.axis == "N_th":
        point = replace(point, n_mean=None)
    elif config.axis == "r":
        point = replace(point, n_mean=None) if config.hold == "n_th" else replace(point, n_th=None)
    return point


def cmd_sweep(config: RunConfig) -> ResultTable:
    if not config.values:
        raise ValueError("sweep needs a grid of values (--values v1,v2,...)")
    points = [_sweep_point(config, v) for v in config.values]
    # build every model up front so invalid points fail before any work starts
    models = [p.model() for p in points]

    def run(model) -> EsdReport:
        return choi_ppt_time(model, config.horizon, config.precision)

    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        reports = list(pool.map(run, models))

    table = ResultTable([config.axis] + REPORT_COLUMNS, config=config.to_items())
    for value, report in zip(config.values, reports):
        table.add_row(value, *_report_row(report))
    return table


def cmd_factorization_check(config: RunConfig) -> ResultTable:
    if config.d not in (2, 3, 4):
        raise ValueError(f"factorization-check needs d in (2, 3, 4), got {config.d}")
    v = config.model().propagator(config.time)
    children = np.random.SeedSequence(config.seed).spawn(config.samples)

    table = ResultTable(["sample", "residual"], config=config.to_items())
    residuals = []
    for k, child in enumerate(children):
        res = factorization_residual(random_pure((config.d, 2), seed=child), v)
        residuals.append(res)
        table.add_row(str(k), res)
    worst = max(residuals)
    table.add_row("max", worst)

    if worst > config.tol:
        raise CheckFailed(table, f"max factorization residual {worst:.3e} exceeds tolerance {config.tol:.3e}")
    return table


def _cut_label(cut: Sequence[int], n: int) -> str:
    rest = [k for k in range(n) if k not in cut]
    return "".join(map(str, cut)) + "|" + "".join(map(str, rest))


def cmd_nqubit_cert(config: RunConfig) -> ResultTable:
    n = config.n_qubits
    if not 2 <= n <= 6:
        raise ValueError(f"nqubit-cert needs 2 <= n-qubits <= 6, got {n}")
    cert = nqubit_esd_certificate(n, config.model(), config.horizon, config.precision, seed=config.seed)

    table = ResultTable(["item", "cut", "value"], config=config.to_items())
    table.add_row("transition_time", "", NEVER if cert.never else cert.report.transition_time)
    table.add_row("certified_time", "", NEVER if cert.never else cert.certified_time)
    if cert.never:
        return table

    table.add_row("entanglement_breaking", "", cert.entanglement_breaking)
    table.add_row("tightness_negativity", _cut_label((0,), n), cert.tightness_negativity)
    for label, negs in cert.cut_negativities.items():
        for cut, neg in zip(cert.cuts, negs):
            table.add_row(label, _cut_label(cut, n), neg)
    table.add_row("max_negativity", "", cert.max_negativity)

    if not cert.passed(config.tol):
        raise CheckFailed(table, f"max cut negativity {cert.max_negativity:.3e} exceeds tolerance {config.tol:.3e}")
    return table


COMMANDS: dict[str, Callable[[RunConfig], ResultTable]] = {
    "choi-dynamics": cmd_choi_dynamics,
    "esd-time": cmd_esd_time,
    "sweep": cmd_sweep,
    "factorization-check": cmd_factorization_check,
    "nqubit-cert": cmd_nqubit_cert,
}


# ======================================================================
# Argument parsing
# ======================================================================

def _common_flags() -> argparse.ArgumentParser:
    # defaults stay None so flags only override what they set
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", type=Path, help="key=value file; flags override it")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--gamma", type=float, help="decay rate")
    p.add_argument("--n-mean", dest="n_mean", type=float, help="effective occupation N")
    p.add_argument("--n-th", dest="n_th", type=float, help="thermal occupation N_th")
    p.add_argument("--r", type=float, help="squeezing magnitude")
    p.add_argument("--phi", type=float, help="squeezing phase")
    p.add_argument("--Phi", dest="big_phi", type=float, help="coherence-mixing phase (defaults to phi)")
    p.add_argument("--omega", type=float, help="qubit frequency")
    p.add_argument("--qnd-scale", dest="qnd_scale", type=float, help="QND g(t) = scale * t**power")
    p.add_argument("--qnd-power", dest="qnd_power", type=float)
    p.add_argument("--t-start", dest="t_start", type=float)
    p.add_argument("--t-stop", dest="t_stop", type=float)
    p.add_argument("--t-points", dest="t_points", type=int)
    p.add_argument("--grid", choices=GRIDS)
    p.add_argument("--horizon", type=float)
    p.add_argument("--precision", type=float)
    p.add_argument("--time", type=float, help="channel time for factorization-check")
    p.add_argument("--d", type=int, help="side-A dimension for factorization-check")
    p.add_argument("--samples", type=int)
    p.add_argument("--n-qubits", dest="n_qubits", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float, help="tolerance of check commands")
    p.add_argument("--axis", choices=AXES)
    p.add_argument("--values", type=parse_values, help="sweep grid, comma separated")
    p.add_argument("--hold", choices=HOLDS, help="occupation held fixed when sweeping r")
    p.add_argument("--workers", type=int)
    p.add_argument("--out", help="output file; standard output when omitted")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="esdkit", description="Entanglement sudden death under local qubit baths.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    settings = {k: v for k, v in vars(args).items() if k not in ("config", "verbose")}
    flags = RunConfig(**settings)
    parent = RunConfig.from_file(args.config) if args.config is not None else None
    return flags.merged(parent).with_defaults().validate()


def _emit(table: ResultTable, config: RunConfig) -> None:
    if config.out is None:
        sys.stdout.write(to_writer(config.format or "csv").render_to_string(table))
        return
    write_table(table, config.out, config.format)
    logger.info("Wrote %d rows to %s", len(table.rows), config.out)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        config = config_from_args(args)
        table = COMMANDS[config.command](config)
    except CheckFailed as e:
        table, message = e.args
        try:
            _emit(table, config)
        except (OSError, NotImplementedError) as err:
            logger.error("%s", err)
            return EXIT_INVALID
        logger.error("%s", message)
        return EXIT_TOLERANCE
    except (ValueError, NotImplementedError, OSError) as e:
        logger.error("%s", e)
        return EXIT_INVALID

    try:
        _emit(table, config)
    except (OSError, NotImplementedError) as e:
        logger.error("%s", e)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
