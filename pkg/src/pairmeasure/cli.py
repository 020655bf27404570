"""Command-line front end.

Three subcommands: ``momentum-scenario`` and ``position-scenario`` run the
built-in lattice setups; ``classify`` reads a state file and a measure file
(format in :mod:`pairmeasure.fileio`) and classifies the measurement.

Text reports name the slots after the two receiving parties, Alice (slot 1)
and Bob (slot 2). JSON reports use stable keys only, floats printed with 17
significant digits, so identical invocations are byte-identical.

Exit codes: 0 success, 2 parse or format error, 3 degenerate input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .entanglement import EntanglementReport, schmidt
from .errors import DegenerateInputError, ParseError
from .fileio import parse_measure_file, parse_state_file
from .hilbert import SpaceSpec, TwoParticleState
from .measurement import (
    EventPair,
    SelectiveMeasure,
    classify,
    collapse,
    events,
    is_projector_valued,
    measure_scale,
)
from .scenarios import (
    PhaseCheck,
    ScenarioResult,
    scenario_momentum_projection,
    scenario_position_windows,
)
from .symmetry import Statistics

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    lattice_size: int = 8
    mode_a: int = 1
    mode_b: int | None = None
    x_a: int = 0
    x_b: int = 0
    width: int = 1
    statistics: Statistics = Statistics.FERMION
    tolerance: float = 1e-10
    output_format: str = "text"
    state_path: str | None = None
    measure_path: str | None = None


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _json_text(value) -> str:
    """Serialize with deterministic key order and fixed float formatting."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_json_text(item) for item in value) + "]"
    if isinstance(value, dict):
        parts = (f"{json.dumps(key)}: {_json_text(item)}" for key, item in value.items())
        return "{" + ", ".join(parts) + "}"
    raise TypeError(f"cannot serialize {type(value)!r}")


@dataclass(frozen=True)
class _Report:
    verdict: str
    tolerance: float
    probability: float
    born_rule: bool
    event_pair: EventPair
    overlap_scale: float
    entanglement: EntanglementReport | None
    phase: PhaseCheck | None
    relabeled: TwoParticleState | None = None


def _report_from_scenario(result: ScenarioResult, tol: float) -> _Report:
    return _Report(
        verdict=result.verdict.tag.value,
        tolerance=tol,
        probability=result.probability,
        born_rule=True,
        event_pair=result.event_pair,
        overlap_scale=1.0,
        entanglement=result.report,
        phase=result.phase_check,
        relabeled=result.relabeled,
    )


def _json_report(report: _Report) -> str:
    phase = None
    if report.phase is not None:
        phase = {
            "measured_re": report.phase.measured.real,
            "measured_im": report.phase.measured.imag,
            "predicted_re": report.phase.predicted.real,
            "predicted_im": report.phase.predicted.imag,
            "deviation": report.phase.deviation,
        }
    ent = report.entanglement
    payload = {
        "verdict": report.verdict,
        "probability": report.probability,
        "singular_values": [] if ent is None else [float(s) for s in ent.singular_values],
        "entropy": None if ent is None else ent.entropy,
        "slater_rank": None if ent is None else ent.slater_rank,
        "phase": phase,
    }
    return _json_text(payload)


def _fmt_complex(value: complex) -> str:
    sign = "+" if value.imag >= 0 else "-"
    return f"{_fmt(value.real)} {sign} {_fmt(abs(value.imag))}i"


def _text_report(report: _Report) -> str:
    pair = report.event_pair
    lines = [
        f"verdict: {report.verdict}",
        f"tolerance: {_fmt(report.tolerance)}",
        "event norms (Alice takes slot 1, Bob slot 2):",
        f"  direct assignment:  {_fmt(pair.norm_direct)}",
        f"  swapped assignment: {_fmt(pair.norm_permuted)}",
        f"  event overlap: {_fmt_complex(pair.event_overlap)}",
    ]
    mismatch = abs(pair.event_overlap - pair.ref_overlap)
    if mismatch >= report.tolerance * report.overlap_scale:
        lines.append(
            "  note: reference overlap "
            f"{_fmt_complex(pair.ref_overlap)} disagrees with the event overlap "
            "(measure is not projector-valued)"
        )
    label = "probability" if report.born_rule else "squared event norm"
    lines.append(f"{label}: {_fmt(report.probability)}")
    ent = report.entanglement
    if ent is None:
        lines.append("post-state: none (outcome impossible)")
    else:
        values = " ".join(_fmt(s) for s in ent.singular_values)
        lines.append(f"post-state singular values: {values}")
        lines.append(f"post-state Schmidt rank: {ent.schmidt_rank}")
        lines.append(f"post-state entropy: {_fmt(ent.entropy)} nats")
        if ent.slater_rank is None:
            lines.append(
                "Slater rank: n/a (state not antisymmetric; "
                "Schmidt data is the slot-bipartition diagnostic only)"
            )
        else:
            lines.append(f"Slater rank: {ent.slater_rank}")
    if report.phase is not None:
        lines.append(
            "phase check: measured "
            f"{_fmt_complex(report.phase.measured)}, predicted "
            f"{_fmt_complex(report.phase.predicted)}, deviation "
            f"{_fmt(report.phase.deviation)}"
        )
    if report.relabeled is not None:
        amps = " ".join(_fmt_complex(a) for a in report.relabeled.amplitudes)
        lines.append(f"spin state handed to (Alice, Bob): {amps}")
    return "\n".join(lines)


def _emit(report: _Report, output_format: str) -> None:
    if output_format == "json":
        print(_json_report(report))
    else:
        print(_text_report(report))


def _run_classify(config: RunConfig) -> _Report:
    state = parse_state_file(config.state_path)
    measure = parse_measure_file(config.measure_path)
    if state.norm == 0.0:
        print("warning: state file lists no amplitudes; using the zero state",
              file=sys.stderr)
        raise DegenerateInputError("cannot classify a measurement on the zero state")
    for tag, factor in (("A", measure.factor_slot1), ("B", measure.factor_slot2)):
        if not np.any(factor.entries):
            print(f"warning: factor {tag} has no entries; the measure annihilates "
                  "every state", file=sys.stderr)
    verdict = classify(measure, state, config.tolerance)
    pair = events(measure, state)
    result = collapse(measure, state, config.statistics, config.tolerance)
    ent = None if result.normalized is None else schmidt(result.normalized)
    scale = measure_scale(measure) * state.norm
    return _Report(
        verdict=verdict.tag.value,
        tolerance=config.tolerance,
        probability=result.probability,
        born_rule=is_projector_valued(measure, config.tolerance),
        event_pair=pair,
        overlap_scale=scale**2,
        entanglement=ent,
        phase=None,
    )


def run(config: RunConfig) -> int:
    """Execute a parsed configuration; returns the process exit code."""
    try:
        if config.command == "momentum-scenario":
            space = SpaceSpec(config.lattice_size, 2)
            mode_b = config.mode_b
            if mode_b is None:
                mode_b = (config.lattice_size - config.mode_a) % config.lattice_size
            result = scenario_momentum_projection(
                space, config.mode_a, mode_b, config.statistics, config.tolerance
            )
            report = _report_from_scenario(result, config.tolerance)
        elif config.command == "position-scenario":
            space = SpaceSpec(config.lattice_size, 2)
            result = scenario_position_windows(
                space,
                config.mode_a,
                config.mode_b,
                config.x_a,
                config.x_b,
                config.width,
                config.statistics,
                config.tolerance,
            )
            report = _report_from_scenario(result, config.tolerance)
        elif config.command == "classify":
            report = _run_classify(config)
        else:
            raise ValueError(f"unknown command {config.command!r}")
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DegenerateInputError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    _emit(report, config.output_format)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--statistics", choices=["fermion", "boson"], default="fermion",
                        help="exchange statistics of the pair")
    parser.add_argument("--tol", type=float, default=1e-10, metavar="REAL",
                        help="relative tolerance for zero tests (default 1e-10)")
    parser.add_argument("--output", choices=["text", "json"], default="text",
                        help="report format")


def _add_lattice(parser: argparse.ArgumentParser, with_mode_b_default: bool) -> None:
    parser.add_argument("--lattice", type=int, default=8, metavar="L",
                        help="number of lattice sites (default 8)")
    parser.add_argument("--mode-a", type=int, default=1, metavar="M",
                        help="momentum mode of the spin-up particle (default 1)")
    mode_b_help = "momentum mode of the spin-down particle"
    if with_mode_b_default:
        mode_b_help += " (default: L - mode_a, the opposite momentum)"
    parser.add_argument("--mode-b", type=int, default=None, metavar="M",
                        help=mode_b_help)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairmeasure",
        description="Classify selective measurements on a pair of identical "
                    "particles as local operations or entanglement by measurement.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    momentum = sub.add_parser(
        "momentum-scenario",
        help="project both slots onto definite momentum modes (a local operation)",
    )
    _add_lattice(momentum, with_mode_b_default=True)
    _add_common(momentum)

    position = sub.add_parser(
        "position-scenario",
        help="project the slots onto disjoint position windows (entangles by "
             "measurement)",
    )
    _add_lattice(position, with_mode_b_default=True)
    position.add_argument("--xa", type=int, default=2, metavar="SITE",
                          help="window center for slot 1 / Alice (default 2)")
    position.add_argument("--xb", type=int, default=5, metavar="SITE",
                          help="window center for slot 2 / Bob (default 5)")
    position.add_argument("--width", type=int, default=1, metavar="SITES",
                          help="window width in sites (default 1)")
    _add_common(position)

    classify_cmd = sub.add_parser(
        "classify",
        help="classify a measure file against a state file",
    )
    classify_cmd.add_argument("--state", required=True, metavar="PATH",
                              help="state file (see the file-format docs)")
    classify_cmd.add_argument("--measure", required=True, metavar="PATH",
                              help="measure file with A and B factor entries")
    _add_common(classify_cmd)
    return parser


def _config_from_args(parser: argparse.ArgumentParser,
                      args: argparse.Namespace) -> RunConfig:
    if args.tol <= 0:
        parser.error("--tol must be positive")
    common = dict(
        command=args.command,
        statistics=Statistics(args.statistics),
        tolerance=args.tol,
        output_format=args.output,
    )
    if args.command == "classify":
        return RunConfig(state_path=args.state, measure_path=args.measure, **common)
    if args.lattice < 2:
        parser.error("--lattice must be at least 2")
    for name in ("mode_a", "mode_b"):
        mode = getattr(args, name)
        if mode is not None and not 0 <= mode < args.lattice:
            parser.error(f"--{name.replace('_', '-')} must lie in [0, L)")
    extra = dict(lattice_size=args.lattice, mode_a=args.mode_a, mode_b=args.mode_b)
    if args.command == "position-scenario":
        for flag in ("xa", "xb"):
            if not 0 <= getattr(args, flag) < args.lattice:
                parser.error(f"--{flag} must lie in [0, L)")
        if args.width < 1:
            parser.error("--width must be at least 1")
        extra.update(x_a=args.xa, x_b=args.xb, width=args.width)
    return RunConfig(**common, **extra)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(_config_from_args(parser, args))


if __name__ == "__main__":
    sys.exit(main())
