"""Command-line front end.

Verbs: `tables`, `sweep`, `simulate`, `layout`; each takes --config <path>,
--out <dir> and --strict.  Exit codes: 0 success, 1 runtime/I-O failure,
2 config/validation error, 3 self-test or strict-DRC failure.

All emitted files are byte-deterministic for a given configuration: no
timestamps, stable orderings, and fixed number formatting (times with one
decimal, lengths and areas in minimal decimal form).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import chainsim, floorplan, physics, qec
from .config import ConfigError, GeometryQuery, RunConfig, load_config

# Communication table: operation label, chain qubit count as cataloged.  The
# cataloged maximum inter-register chain (311 qubits) is odd, which the
# even-chain model cannot produce; verbatim mode reports it as cataloged,
# model mode recomputes counts from the routed distances (matching to +-1).
TABLE2_ROWS = (
    ("Comm. 2 phys. qubits (min)", 12, "phys_min"),
    ("Comm. 2 phys. qubits (max)", 138, "phys_max"),
    ("Comm. 2 log. qubits (min)", 192, "log_min"),
    ("Comm. 2 log. qubits (max)", 311, "log_max"),
)


def _quantize_um(value: float) -> float:
    """Strip routing float dust; 1e-9 um is far below any feature size."""
    return round(value, 9)


def _write_text(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def _fmt_len(value: float) -> str:
    return physics.format_quantity(_quantize_um(value))


def table1_csv(catalog: list[floorplan.ModuleSpec]) -> str:
    lines = ["name,width_um,height_um,area_um2,data_qubits,comm_qubits"]
    for m in catalog:
        lines.append(
            f"{m.name},{physics.format_quantity(m.width_um)},"
            f"{physics.format_quantity(m.height_um)},{physics.format_quantity(m.area_um2)},"
            f"{m.data_qubits},{m.comm_qubits}"
        )
    return "\n".join(lines) + "\n"


def table2_csv(config: RunConfig, mode: str = "verbatim") -> str:
    """Communication table computed from the reference layouts and physics.

    Verbatim mode keeps the cataloged chain qubit counts and prices each
    hop at the reference SWAP time.  Model mode derives the counts from the
    routed channel lengths via the chain model and annotates the cataloged
    count alongside.
    """
    if mode not in ("verbatim", "model"):
        raise ValueError(f"unknown table mode {mode!r}")
    params = config.physics
    channels = floorplan.reference_channel_lengths_um()
    rows: list[str] = []
    if mode == "verbatim":
        header = "operation,qubits,distance_um,time_ns"
        for operation, n_qubits, channel in TABLE2_ROWS:
            distance_um = channels[channel]
            time_ns = (n_qubits - 1) * params.t_swap_ref_ns
            rows.append(f"{operation},{n_qubits},{_fmt_len(distance_um)},{time_ns:.1f}")
    else:
        header = "operation,qubits,qubits_cataloged,distance_um,time_ns"
        for operation, n_cataloged, channel in TABLE2_ROWS:
            distance_um = _quantize_um(channels[channel])
            geom = physics.ChainGeometry(
                d_dq_nm=distance_um * 1000.0, d_id_nm=params.d_ref_nm
            )
            n_model = physics.chain_length(geom)
            time_ns = physics.t_total(params, geom)
            rows.append(
                f"{operation},{n_model},{n_cataloged},{_fmt_len(distance_um)},{time_ns:.1f}"
            )
    for query in config.geometry:
        geom = physics.ChainGeometry(d_dq_nm=query.d_dq_um * 1000.0, d_id_nm=query.d_id_nm)
        n_model = physics.chain_length(geom)
        time_ns = physics.t_total(params, geom)
        label = (
            f"Comm. custom (d_dq={_fmt_len(query.d_dq_um)} um"
            f"; d_id={physics.format_quantity(query.d_id_nm)} nm)"
        )
        if mode == "verbatim":
            rows.append(f"{label},{n_model},{_fmt_len(query.d_dq_um)},{time_ns:.1f}")
        else:
            rows.append(
                f"{label},{n_model},{n_model},{_fmt_len(query.d_dq_um)},{time_ns:.1f}"
            )
    return "\n".join([header] + rows) + "\n"


def cmd_tables(config: RunConfig, out_dir: Path, args) -> int:
    catalog = floorplan.builtin_catalog()
    t1 = table1_csv(catalog)
    t2 = table2_csv(config, mode=args.mode)
    if config.outputs.csv:
        _write_text(out_dir / "table1.csv", t1)
        _write_text(out_dir / "table2.csv", t2)
    if config.outputs.table:
        sys.stdout.write(t1.replace(",", "\t"))
        sys.stdout.write("\n")
        sys.stdout.write(t2.replace(",", "\t"))
    return 0


def cmd_sweep(config: RunConfig, out_dir: Path, args) -> int:
    params = config.physics
    d_dq_values = config.sweep.d_dq_um
    lines: list[str] = []
    if len(d_dq_values) == 1:
        result = physics.sweep_t_total(params, d_dq_values[0] * 1000.0, config.sweep.d_id_nm)
        for d_id_nm in result.skipped:
            sys.stderr.write(
                f"warning: skipping d_id={physics.format_quantity(d_id_nm)} nm for "
                f"d_dq={physics.format_quantity(d_dq_values[0])} um: no valid chain\n"
            )
        text = physics.sweep_csv(result)
    else:
        lines.append("d_dq_um,d_id_nm,t_total_ns")
        for d_dq_um in d_dq_values:
            result = physics.sweep_t_total(params, d_dq_um * 1000.0, config.sweep.d_id_nm)
            for d_id_nm in result.skipped:
                sys.stderr.write(
                    f"warning: skipping d_id={physics.format_quantity(d_id_nm)} nm for "
                    f"d_dq={physics.format_quantity(d_dq_um)} um: no valid chain\n"
                )
            for d_id_nm, t_ns in result.points:
                lines.append(
                    f"{physics.format_quantity(d_dq_um)},"
                    f"{physics.format_quantity(d_id_nm)},{t_ns:.1f}"
                )
        text = "\n".join(lines) + "\n"
    if config.outputs.csv:
        _write_text(out_dir / "sweep.csv", text)
        _write_text(
            out_dir / "qec_sweep.csv",
            qec.threshold_sweep_csv(
                config.qec.p_phys, config.qec.c_inv_threshold, config.qec.k_max
            ),
        )
    if config.outputs.table:
        sys.stdout.write(text.replace(",", "\t"))
    return 0


def cmd_simulate(config: RunConfig, out_dir: Path, args) -> int:
    params = config.physics
    # default: the shortest cataloged communication channel
    queries = config.geometry or (GeometryQuery(d_dq_um=1.0, d_id_nm=40.0),)
    summary = ["index,d_dq_um,d_id_nm,n_qubits,steps,duration_ns,transferred"]
    all_ok = True
    for index, query in enumerate(queries, start=1):
        geom = physics.ChainGeometry(d_dq_nm=query.d_dq_um * 1000.0, d_id_nm=query.d_id_nm)
        n2 = physics.chain_length(geom)
        labels = tuple(f"q{i:02d}" for i in range(1, n2 + 1))
        initial = chainsim.ChainState(payloads=labels)
        schedule = chainsim.make_schedule(n2)
        final = chainsim.run_chain(initial, schedule)
        steps, duration_ns = chainsim.transfer_report(n2, params, query.d_id_nm)
        transferred = (
            final.step == n2 - 1
            and final.payloads[-1] == initial.payloads[0]
            and final.payloads[0] == initial.payloads[-1]
            and sorted(final.payloads) == sorted(initial.payloads)
        )
        all_ok = all_ok and transferred
        if config.outputs.csv:
            _write_text(out_dir / f"trace_{index}.csv", chainsim.trace_csv(initial, schedule))
        summary.append(
            f"{index},{_fmt_len(query.d_dq_um)},{physics.format_quantity(query.d_id_nm)},"
            f"{n2},{steps},{duration_ns:.1f},{'true' if transferred else 'false'}"
        )
    text = "\n".join(summary) + "\n"
    if config.outputs.csv:
        _write_text(out_dir / "simulate_summary.csv", text)
    if config.outputs.table:
        sys.stdout.write(text.replace(",", "\t"))
    if not all_ok:
        sys.stderr.write("error: end-to-end transfer self-test failed\n")
        return 3
    return 0


def _resolve_plan(config: RunConfig) -> floorplan.Floorplan:
    layout = config.layout
    if layout.placements is not None:
        doc = {
            "name": layout.plan if layout.plan != "8 Log. qubits" else "custom",
            "modules": list(layout.modules),
            "placements": list(layout.placements),
        }
        try:
            return floorplan.floorplan_from_json(json.dumps(doc))
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"invalid layout.placements: {exc}") from exc
    if layout.plan == "1 Log. qubit":
        return floorplan.reference_logical_qubit()
    if layout.plan == "8 Log. qubits":
        return floorplan.reference_register()
    catalog = floorplan.catalog_by_name()
    if layout.plan in catalog:
        module = catalog[layout.plan]
        return floorplan.compose(
            [floorplan.Placement(module, 0.0, 0.0, ref=layout.plan)], name=layout.plan
        )
    raise ConfigError(f"unknown layout plan {layout.plan!r}")


def drc_report_csv(violations: list[floorplan.Violation]) -> str:
    lines = ["kind,first,second,separation_nm,limit_nm"]
    for v in sorted(violations, key=lambda v: (v.kind, v.first, v.second or "")):
        lines.append(
            f"{v.kind},{v.first},{v.second or ''},"
            f"{v.separation_nm:.3f},{physics.format_quantity(v.limit_nm)}"
        )
    return "\n".join(lines) + "\n"


def cmd_layout(config: RunConfig, out_dir: Path, args) -> int:
    plan = _resolve_plan(config)
    violations = floorplan.check_design_rules(plan)
    if config.outputs.svg:
        _write_text(out_dir / "layout.svg", floorplan.export_svg(plan))
    if config.outputs.csv:
        _write_text(out_dir / "drc_report.csv", drc_report_csv(violations))
        _write_text(out_dir / "floorplan.json", floorplan.floorplan_to_json(plan))
    if config.outputs.table:
        sys.stdout.write(
            f"plan {plan.name}: {len(plan.placements)} placements, "
            f"{physics.format_quantity(plan.width_um)} x "
            f"{physics.format_quantity(plan.height_um)} um, "
            f"{len(violations)} DRC violation(s)\n"
        )
    if violations and args.strict:
        sys.stderr.write(f"error: {len(violations)} design-rule violation(s) (strict mode)\n")
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hqplan",
        description="Resource estimation and floorplanning for a hybrid-qubit architecture",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", default=None, help="JSON run configuration")
    common.add_argument("--out", metavar="DIR", default=None, help="output directory")
    common.add_argument("--strict", action="store_true", help="fail on design-rule violations")
    sub = parser.add_subparsers(dest="command", required=True)

    p_tables = sub.add_parser("tables", parents=[common], help="emit catalog and timing tables")
    p_tables.add_argument(
        "--mode", choices=("verbatim", "model"), default="verbatim",
        help="verbatim: cataloged chain counts; model: counts derived from geometry",
    )
    p_tables.set_defaults(func=cmd_tables)

    p_sweep = sub.add_parser("sweep", parents=[common], help="sweep transfer time and QEC rates")
    p_sweep.set_defaults(func=cmd_sweep)

    p_sim = sub.add_parser("simulate", parents=[common], help="run SWAP-chain transfer self-tests")
    p_sim.set_defaults(func=cmd_simulate)

    p_layout = sub.add_parser("layout", parents=[common], help="render a floorplan and run DRC")
    p_layout.set_defaults(func=cmd_layout)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        out_dir = Path(args.out) if args.out else Path(config.outputs.directory)
        out_dir.mkdir(parents=True, exist_ok=True)
        return args.func(config, out_dir, args)
    except ConfigError as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"validation error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
