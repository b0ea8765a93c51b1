"""Run configuration: strict JSON parsing with units in key names.

Unknown keys anywhere in the document are rejected so that typos surface as
configuration errors instead of silently falling back to defaults.  Every
section is optional; omitted values take the defaults below.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .physics import PhysicsParams

DEFAULT_SWEEP_D_ID_NM = [float(v) for v in range(20, 101, 5)]
DEFAULT_SWEEP_D_DQ_UM = [1.0, 11.0, 24.9]
DEFAULT_LAYOUT_PLAN = "8 Log. qubits"


class ConfigError(ValueError):
    """Invalid run configuration."""


@dataclass(frozen=True)
class GeometryQuery:
    d_dq_um: float
    d_id_nm: float


@dataclass(frozen=True)
class QecConfig:
    p_phys: float = 1e-3
    c_inv_threshold: float = 1e-2
    k_max: int = 4


@dataclass(frozen=True)
class SweepConfig:
    d_id_nm: tuple[float, ...] = tuple(DEFAULT_SWEEP_D_ID_NM)
    d_dq_um: tuple[float, ...] = tuple(DEFAULT_SWEEP_D_DQ_UM)


@dataclass(frozen=True)
class LayoutConfig:
    plan: str = DEFAULT_LAYOUT_PLAN
    placements: tuple[dict, ...] | None = None
    modules: tuple[dict, ...] = ()


@dataclass(frozen=True)
class OutputConfig:
    directory: str = "out"
    csv: bool = True
    svg: bool = True
    table: bool = True


@dataclass(frozen=True)
class RunConfig:
    physics: PhysicsParams = field(default_factory=PhysicsParams)
    geometry: tuple[GeometryQuery, ...] = ()
    sweep: SweepConfig = field(default_factory=SweepConfig)
    qec: QecConfig = field(default_factory=QecConfig)
    layout: LayoutConfig = field(default_factory=LayoutConfig)
    outputs: OutputConfig = field(default_factory=OutputConfig)


def _require_keys(section: str, doc: dict, allowed: set[str]) -> None:
    unknown = set(doc) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) in {section!r}: {', '.join(sorted(unknown))}")


def _number(section: str, key: str, value, positive: bool = True) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ConfigError(f"{section}.{key} must be a number, got {value!r}")
    if positive and not value > 0:
        raise ConfigError(f"{section}.{key} must be strictly positive, got {value!r}")
    return float(value)


def _parse_physics(doc: dict) -> PhysicsParams:
    _require_keys(
        "physics", doc, {"d_ref_nm", "t_swap_ref_ns", "lambda_nm", "t_seq", "delta_e_st_uev"}
    )
    kwargs = {}
    for json_key, attr in (
        ("d_ref_nm", "d_ref_nm"),
        ("t_swap_ref_ns", "t_swap_ref_ns"),
        ("lambda_nm", "lambda_nm"),
        ("t_seq", "t_seq"),
        ("delta_e_st_uev", "delta_e_st_uev"),
    ):
        if json_key in doc:
            kwargs[attr] = _number("physics", json_key, doc[json_key])
    try:
        return PhysicsParams(**kwargs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _parse_geometry(items) -> tuple[GeometryQuery, ...]:
    if not isinstance(items, list):
        raise ConfigError("geometry must be a list of {d_dq_um, d_id_nm} objects")
    queries = []
    for i, item in enumerate(items):
        if not isinstance(item, dict):
            raise ConfigError(f"geometry[{i}] must be an object")
        _require_keys(f"geometry[{i}]", item, {"d_dq_um", "d_id_nm"})
        for key in ("d_dq_um", "d_id_nm"):
            if key not in item:
                raise ConfigError(f"geometry[{i}] is missing {key!r}")
        queries.append(
            GeometryQuery(
                d_dq_um=_number(f"geometry[{i}]", "d_dq_um", item["d_dq_um"]),
                d_id_nm=_number(f"geometry[{i}]", "d_id_nm", item["d_id_nm"]),
            )
        )
    return tuple(queries)


def _parse_number_list(section: str, key: str, values) -> tuple[float, ...]:
    if not isinstance(values, list) or not values:
        raise ConfigError(f"{section}.{key} must be a non-empty list of numbers")
    return tuple(_number(section, f"{key}[{i}]", v) for i, v in enumerate(values))


def _parse_sweep(doc: dict) -> SweepConfig:
    _require_keys("sweep", doc, {"d_id_nm", "d_dq_um"})
    kwargs = {}
    if "d_id_nm" in doc:
        kwargs["d_id_nm"] = _parse_number_list("sweep", "d_id_nm", doc["d_id_nm"])
    if "d_dq_um" in doc:
        kwargs["d_dq_um"] = _parse_number_list("sweep", "d_dq_um", doc["d_dq_um"])
    return SweepConfig(**kwargs)


def _parse_qec(doc: dict) -> QecConfig:
    _require_keys("qec", doc, {"p_phys", "c_inv_threshold", "k_max"})
    kwargs = {}
    if "p_phys" in doc:
        p = _number("qec", "p_phys", doc["p_phys"], positive=False)
        if not 0.0 <= p <= 1.0:
            raise ConfigError(f"qec.p_phys must be in [0, 1], got {p!r}")
        kwargs["p_phys"] = p
    if "c_inv_threshold" in doc:
        kwargs["c_inv_threshold"] = _number("qec", "c_inv_threshold", doc["c_inv_threshold"])
    if "k_max" in doc:
        k_max = doc["k_max"]
        if not isinstance(k_max, int) or isinstance(k_max, bool) or k_max < 0:
            raise ConfigError(f"qec.k_max must be a non-negative integer, got {k_max!r}")
        kwargs["k_max"] = k_max
    return QecConfig(**kwargs)


def _parse_layout(doc: dict) -> LayoutConfig:
    _require_keys("layout", doc, {"plan", "placements", "modules"})
    kwargs = {}
    if "plan" in doc:
        if not isinstance(doc["plan"], str):
            raise ConfigError("layout.plan must be a string")
        kwargs["plan"] = doc["plan"]
    if "placements" in doc:
        if not isinstance(doc["placements"], list):
            raise ConfigError("layout.placements must be a list")
        kwargs["placements"] = tuple(doc["placements"])
    if "modules" in doc:
        if not isinstance(doc["modules"], list):
            raise ConfigError("layout.modules must be a list")
        kwargs["modules"] = tuple(doc["modules"])
    return LayoutConfig(**kwargs)


def _parse_outputs(doc: dict) -> OutputConfig:
    _require_keys("outputs", doc, {"directory", "csv", "svg", "table"})
    kwargs = {}
    if "directory" in doc:
        if not isinstance(doc["directory"], str) or not doc["directory"]:
            raise ConfigError("outputs.directory must be a non-empty string")
        kwargs["directory"] = doc["directory"]
    for flag in ("csv", "svg", "table"):
        if flag in doc:
            if not isinstance(doc[flag], bool):
                raise ConfigError(f"outputs.{flag} must be a boolean")
            kwargs[flag] = doc[flag]
    return OutputConfig(**kwargs)


def parse_config(doc: dict) -> RunConfig:
    if not isinstance(doc, dict):
        raise ConfigError("configuration root must be a JSON object")
    _require_keys(
        "config", doc, {"physics", "geometry", "sweep", "qec", "layout", "outputs"}
    )
    for section in ("physics", "sweep", "qec", "layout", "outputs"):
        if section in doc and not isinstance(doc[section], dict):
            raise ConfigError(f"{section} must be an object")
    return RunConfig(
        physics=_parse_physics(doc.get("physics", {})),
        geometry=_parse_geometry(doc.get("geometry", [])),
        sweep=_parse_sweep(doc.get("sweep", {})),
        qec=_parse_qec(doc.get("qec", {})),
        layout=_parse_layout(doc.get("layout", {})),
        outputs=_parse_outputs(doc.get("outputs", {})),
    )


def load_config(path: str | Path | None) -> RunConfig:
    """Load a config file, or the all-defaults config when path is None."""
    if path is None:
        return RunConfig()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return parse_config(doc)
