"""Resource estimation and floorplanning for a CMOS hybrid-qubit architecture.

Subsystems:

- `spinspace`: three-electron logical basis and total-spin operators
- `physics`:   exchange coupling, SWAP timing and chain-transfer model
- `chainsim`:  discrete SWAP-chain scheduler and simulator
- `floorplan`: module catalog, composition, DRC, routing and SVG export
- `qec`:       Steane-code concatenation rates and overhead accounting
- `cli`:       `hqplan` command-line front end
"""

from .chainsim import ChainState, SwapSchedule, make_schedule, make_sequential_schedule, run_chain, transfer_report
from .floorplan import (
    Floorplan,
    ModuleSpec,
    Placement,
    RegisterSummary,
    builtin_catalog,
    check_design_rules,
    compose,
    export_svg,
    path_length,
    reference_logical_qubit,
    reference_register,
    summarize,
)
from .physics import ChainGeometry, PhysicsParams, chain_length, exchange_coupling, sweep_t_total, t_swap, t_total
from .qec import QecLevel, SteaneParams, logical_error_rate, overhead, suppression_condition
from .spinspace import LogicalBasis, ThreeSpinState, apply_s_squared, apply_sz, build_logical_basis

__version__ = "0.1.0"

__all__ = [
    "ChainGeometry",
    "ChainState",
    "Floorplan",
    "LogicalBasis",
    "ModuleSpec",
    "PhysicsParams",
    "Placement",
    "QecLevel",
    "RegisterSummary",
    "SteaneParams",
    "SwapSchedule",
    "ThreeSpinState",
    "apply_s_squared",
    "apply_sz",
    "build_logical_basis",
    "builtin_catalog",
    "chain_length",
    "check_design_rules",
    "compose",
    "exchange_coupling",
    "export_svg",
    "logical_error_rate",
    "make_schedule",
    "make_sequential_schedule",
    "overhead",
    "path_length",
    "reference_logical_qubit",
    "reference_register",
    "run_chain",
    "summarize",
    "suppression_condition",
    "sweep_t_total",
    "t_swap",
    "t_total",
    "transfer_report",
]
