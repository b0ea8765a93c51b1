"""Device-module catalog and hierarchical floorplanning.

All coordinates and dimensions are in micrometers (um); design-rule
separations are in nanometers (nm).  A floorplan is a flat list of placed
module instances (axis-aligned rectangles, quarter-turn rotations only);
hierarchy is obtained by wrapping a finished floorplan back into a module
via `Floorplan.as_module`.

The built-in catalog lists the six device blocks of the architecture with
their cataloged areas stored verbatim.  Five rows satisfy width * height ==
area to double precision; the "8 Log. qubits" row keeps its printed
3-decimal area (307.502) although 25.54 * 12.04 = 307.5016, so the
consistency check tolerates half of the last printed digit.

Routing: placements whose rectangles lie within a small coupling distance of
each other are considered linked, and `path_length` returns the shortest
route over that graph with Manhattan center-to-center hop lengths.  The two
shipped reference layouts are laid out so that their designated
communication channels measure exactly 1.0 / 11.0 um (within one logical
qubit) and 15.4 / 24.9 um (between logical qubits of the register).
"""

from __future__ import annotations

import heapq
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

UM2_PER_CM2 = 1e8
DEFAULT_MIN_FEATURE_NM = 20.0
# Geometric slack below which two placed modules are treated as linked for
# routing.  Chosen so that the reference layouts link exactly the intended
# neighbours (largest intended gap 1.12 um, smallest unintended gap 1.22 um).
DEFAULT_COUPLING_UM = 1.2
# Cataloged areas keep the catalog's printed precision (3 decimals); allow
# half of the last printed digit when checking against width * height.
_AREA_PRINT_TOL_UM2 = 5e-4
_DRC_SLACK_NM = 1e-6


class OverlapError(ValueError):
    """Two placements have intersecting interiors."""


class RoutingError(ValueError):
    """No route exists between the requested placements."""


@dataclass(frozen=True)
class ModuleSpec:
    """Catalog entry: a named device block with qubit counts.

    `category` selects the rendering layer ("data", "chain", "t", "macro" or
    "custom").  `area_um2` defaults to width * height and only differs for
    catalog rows whose printed area is a rounded value.
    """

    name: str
    width_um: float
    height_um: float
    data_qubits: int
    comm_qubits: int
    min_feature_nm: float = DEFAULT_MIN_FEATURE_NM
    area_um2: float | None = None
    category: str = "custom"

    def __post_init__(self):
        if not (self.width_um > 0.0 and self.height_um > 0.0):
            raise ValueError(f"module {self.name!r} needs positive dimensions")
        if self.data_qubits < 0 or self.comm_qubits < 0:
            raise ValueError(f"module {self.name!r} needs non-negative qubit counts")
        if self.min_feature_nm <= 0.0:
            raise ValueError(f"module {self.name!r} needs a positive min feature size")
        if self.area_um2 is None:
            object.__setattr__(self, "area_um2", self.width_um * self.height_um)
        elif abs(self.area_um2 - self.width_um * self.height_um) > _AREA_PRINT_TOL_UM2:
            raise ValueError(
                f"module {self.name!r}: cataloged area {self.area_um2} inconsistent "
                f"with {self.width_um} x {self.height_um}"
            )

    @property
    def area(self) -> float:
        return self.area_um2


@dataclass(frozen=True)
class Placement:
    """A module instance at origin (x_um, y_um), rotated by a quarter turn."""

    module: ModuleSpec
    x_um: float
    y_um: float
    rot_deg: int = 0
    ref: str | None = None

    def __post_init__(self):
        if self.rot_deg not in (0, 90, 180, 270):
            raise ValueError(f"rotation must be one of 0/90/180/270, got {self.rot_deg}")

    @property
    def size_um(self) -> tuple[float, float]:
        if self.rot_deg in (90, 270):
            return self.module.height_um, self.module.width_um
        return self.module.width_um, self.module.height_um

    @property
    def rect(self) -> tuple[float, float, float, float]:
        w, h = self.size_um
        return (self.x_um, self.y_um, self.x_um + w, self.y_um + h)

    @property
    def center(self) -> tuple[float, float]:
        x0, y0, x1, y1 = self.rect
        return ((x0 + x1) / 2.0, (y0 + y1) / 2.0)


@dataclass(frozen=True)
class RegisterSummary:
    total_area_um2: float
    data_qubits: int
    comm_qubits: int
    logical_qubits: int
    density_per_cm2: float


@dataclass(frozen=True)
class Violation:
    """One design-rule finding; `second` is None for per-module findings."""

    kind: str  # "spacing" or "min-feature"
    first: str
    second: str | None
    separation_nm: float
    limit_nm: float


@dataclass(frozen=True)
class Floorplan:
    name: str
    placements: tuple[Placement, ...] = field(default_factory=tuple)

    @property
    def bounding_box(self) -> tuple[float, float, float, float]:
        """Tight axis-aligned hull (x0, y0, x1, y1); zeros when empty."""
        if not self.placements:
            return (0.0, 0.0, 0.0, 0.0)
        rects = [p.rect for p in self.placements]
        return (
            min(r[0] for r in rects),
            min(r[1] for r in rects),
            max(r[2] for r in rects),
            max(r[3] for r in rects),
        )

    @property
    def width_um(self) -> float:
        x0, _, x1, _ = self.bounding_box
        return x1 - x0

    @property
    def height_um(self) -> float:
        _, y0, _, y1 = self.bounding_box
        return y1 - y0

    @property
    def area_um2(self) -> float:
        return self.width_um * self.height_um

    @property
    def data_qubits(self) -> int:
        return sum(p.module.data_qubits for p in self.placements)

    @property
    def comm_qubits(self) -> int:
        return sum(p.module.comm_qubits for p in self.placements)

    def placement_id(self, index: int) -> str:
        p = self.placements[index]
        return p.ref if p.ref is not None else f"#{index}"

    def find(self, key: int | str) -> int:
        """Placement index by integer index or by ref string."""
        if isinstance(key, int):
            if not 0 <= key < len(self.placements):
                raise ValueError(f"placement index {key} out of range")
            return key
        for i, p in enumerate(self.placements):
            if p.ref == key:
                return i
        raise ValueError(f"no placement with ref {key!r} in plan {self.name!r}")

    def as_module(self, name: str, category: str = "macro") -> ModuleSpec:
        """Wrap this plan as a catalog module (hierarchical composition)."""
        return ModuleSpec(
            name=name,
            width_um=self.width_um,
            height_um=self.height_um,
            data_qubits=self.data_qubits,
            comm_qubits=self.comm_qubits,
            category=category,
        )


def _interiors_overlap(a: Placement, b: Placement) -> bool:
    ax0, ay0, ax1, ay1 = a.rect
    bx0, by0, bx1, by1 = b.rect
    return ax0 < bx1 and bx0 < ax1 and ay0 < by1 and by0 < ay1


def _gap_um(a: Placement, b: Placement) -> float:
    """Euclidean edge-to-edge separation; 0 for touching or overlapping."""
    ax0, ay0, ax1, ay1 = a.rect
    bx0, by0, bx1, by1 = b.rect
    dx = max(0.0, bx0 - ax1, ax0 - bx1)
    dy = max(0.0, by0 - ay1, ay0 - by1)
    return math.hypot(dx, dy)


def compose(placements: Sequence[Placement], name: str = "plan") -> Floorplan:
    """Build a floorplan, rejecting any pair of overlapping placements."""
    placements = tuple(placements)
    plan = Floorplan(name=name, placements=placements)
    for i in range(len(placements)):
        for j in range(i + 1, len(placements)):
            if _interiors_overlap(placements[i], placements[j]):
                raise OverlapError(
                    f"placements {plan.placement_id(i)!r} ({placements[i].module.name}) and "
                    f"{plan.placement_id(j)!r} ({placements[j].module.name}) overlap"
                )
    return plan


def summarize(plan: Floorplan, logical_qubits: int) -> RegisterSummary:
    """Aggregate counts and information density over the bounding box.

    Dead space counts: the area is the bounding-box area, not the sum of the
    child areas.  Density is logical qubits per cm^2 (1 cm^2 = 1e8 um^2).
    """
    if logical_qubits < 0:
        raise ValueError("logical_qubits must be non-negative")
    area = plan.area_um2
    if logical_qubits > 0 and area <= 0.0:
        raise ValueError(f"plan {plan.name!r} has zero area but {logical_qubits} logical qubits")
    density = (logical_qubits / area) * UM2_PER_CM2 if area > 0.0 else 0.0
    return RegisterSummary(
        total_area_um2=area,
        data_qubits=plan.data_qubits,
        comm_qubits=plan.comm_qubits,
        logical_qubits=logical_qubits,
        density_per_cm2=density,
    )


def check_design_rules(
    plan: Floorplan, min_feature_nm: float = DEFAULT_MIN_FEATURE_NM
) -> list[Violation]:
    """Report spacing violations and modules below the feature-size rule.

    A pair violates spacing when its edge-to-edge separation lies strictly
    between 0 and min_feature_nm: touching modules pass (they are one
    composed structure) and the limit itself is allowed.  Each unordered
    pair is reported once; the relation is symmetric.
    """
    violations: list[Violation] = []
    n = len(plan.placements)
    for i in range(n):
        for j in range(i + 1, n):
            sep_nm = _gap_um(plan.placements[i], plan.placements[j]) * 1000.0
            if _DRC_SLACK_NM < sep_nm < min_feature_nm - _DRC_SLACK_NM:
                violations.append(
                    Violation(
                        kind="spacing",
                        first=plan.placement_id(i),
                        second=plan.placement_id(j),
                        separation_nm=sep_nm,
                        limit_nm=min_feature_nm,
                    )
                )
    for i, p in enumerate(plan.placements):
        if p.module.min_feature_nm < min_feature_nm - _DRC_SLACK_NM:
            violations.append(
                Violation(
                    kind="min-feature",
                    first=plan.placement_id(i),
                    second=None,
                    separation_nm=p.module.min_feature_nm,
                    limit_nm=min_feature_nm,
                )
            )
    return violations


def path_length(
    plan: Floorplan,
    src: int | str,
    dst: int | str,
    coupling_um: float = DEFAULT_COUPLING_UM,
) -> float:
    """Routed distance in um between two placements.

    Placements within `coupling_um` edge-to-edge separation are linked; the
    route is the shortest path over those links with each hop measured as
    the Manhattan distance between module centers (rectilinear routing along
    module centerlines).  Raises RoutingError when no route exists.
    """
    a = plan.find(src)
    b = plan.find(dst)
    if a == b:
        return 0.0
    n = len(plan.placements)
    adjacency: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if _gap_um(plan.placements[i], plan.placements[j]) <= coupling_um:
                ci = plan.placements[i].center
                cj = plan.placements[j].center
                w = abs(ci[0] - cj[0]) + abs(ci[1] - cj[1])
                adjacency[i].append((j, w))
                adjacency[j].append((i, w))
    dist = [math.inf] * n
    dist[a] = 0.0
    queue: list[tuple[float, int]] = [(0.0, a)]
    while queue:
        d, u = heapq.heappop(queue)
        if u == b:
            return d
        if d > dist[u]:
            continue
        for v, w in adjacency[u]:
            if d + w < dist[v]:
                dist[v] = d + w
                heapq.heappush(queue, (d + w, v))
    raise RoutingError(
        f"no route between {plan.placement_id(a)!r} and {plan.placement_id(b)!r} "
        f"in plan {plan.name!r}"
    )


# ---------------------------------------------------------------------------
# Built-in catalog
# ---------------------------------------------------------------------------

def builtin_catalog(logical_data_reading: str = "table") -> list[ModuleSpec]:
    """The six cataloged device blocks.

    The "1 Log. qubit" composition is ambiguous in the source material: the
    tabulated row says 20 data / 70 communication qubits, while the drawn
    register suggests 20 *double* data blocks and 20 junction blocks per
    logical qubit (40 / 140).  `logical_data_reading` selects "table"
    (default, verbatim row) or "figure" (the alternate reading); no
    reconciliation is attempted and the register row stays verbatim in both.
    """
    if logical_data_reading not in ("table", "figure"):
        raise ValueError(f"unknown logical_data_reading {logical_data_reading!r}")
    lq_data, lq_comm = (20, 70) if logical_data_reading == "table" else (40, 140)
    return [
        ModuleSpec("One-qubit", 0.3, 0.5, 1, 0, area_um2=0.15, category="data"),
        ModuleSpec("Two-qubit", 0.38, 0.5, 2, 0, area_um2=0.19, category="data"),
        ModuleSpec("Chain", 0.16, 0.46, 0, 2, area_um2=0.0736, category="chain"),
        ModuleSpec("T", 1.3, 0.7, 0, 7, area_um2=0.91, category="t"),
        ModuleSpec("1 Log. qubit", 11.38, 2.52, lq_data, lq_comm, area_um2=28.6776, category="macro"),
        ModuleSpec("8 Log. qubits", 25.54, 12.04, 1720, 1400, area_um2=307.502, category="macro"),
    ]


def catalog_by_name(logical_data_reading: str = "table") -> dict[str, ModuleSpec]:
    return {m.name: m for m in builtin_catalog(logical_data_reading)}


# ---------------------------------------------------------------------------
# Reference layouts
# ---------------------------------------------------------------------------

# One logical qubit: ten two-qubit data blocks on a bus of ten junction
# modules.  Data blocks sit in pairs (1.0 um center pitch inside a pair,
# 1.5 um between pairs) so the closest data channel measures 1.0 um and the
# end-to-end channel 11.0 um; the block row and junction row pin the
# 11.38 x 2.52 um hull exactly.
_LQ_BLOCK_X_UM = (0.0, 1.0, 2.5, 3.5, 5.0, 6.0, 7.5, 8.5, 10.0, 11.0)
_LQ_BLOCK_Y_UM = 2.02
_LQ_T_X_UM = (0.0, 0.84, 2.34, 3.34, 4.84, 5.84, 7.34, 8.34, 9.84, 10.68)

# Eight-logical-qubit register: two columns of four logical qubits flanking a
# vertical spine of junction + chain modules.  Port junctions sit 0.62 um
# below their row line so that the same-row channel routes at exactly
# 2 * (7.08 + 0.62) = 15.4 um and the corner-to-corner channel at
# 15.4 + 9.5 = 24.9 um.
_REG_ROW_CENTER_Y_UM = (1.27, 4.44, 7.60, 10.77)
_REG_RIGHT_COL_X_UM = 14.16
_REG_PORT_T_X_UM = 12.42
_REG_CHAIN_X_UM = 12.69
_REG_CHAIN_Y_UM = (
    1.30, 1.76, 2.22, 2.68,
    4.47, 4.93, 5.39, 5.85,
    7.63, 8.09, 8.55, 9.01,
    10.80, 11.58,
)


def reference_logical_qubit() -> Floorplan:
    cat = catalog_by_name()
    placements = []
    for i, x in enumerate(_LQ_BLOCK_X_UM):
        placements.append(Placement(cat["Two-qubit"], x, _LQ_BLOCK_Y_UM, ref=f"DQ{i + 1}"))
    for i, x in enumerate(_LQ_T_X_UM):
        placements.append(Placement(cat["T"], x, 0.0, rot_deg=90, ref=f"T{i + 1}"))
    return compose(placements, name="1 Log. qubit")


def reference_register() -> Floorplan:
    cat = catalog_by_name()
    lq = cat["1 Log. qubit"]
    placements = []
    for i, y_center in enumerate(_REG_ROW_CENTER_Y_UM):
        y = y_center - lq.height_um / 2.0
        placements.append(Placement(lq, 0.0, y, ref=f"LQ-{chr(65 + 2 * i)}"))
        placements.append(Placement(lq, _REG_RIGHT_COL_X_UM, y, ref=f"LQ-{chr(66 + 2 * i)}"))
    for i, y_center in enumerate(_REG_ROW_CENTER_Y_UM):
        # rotated T: 0.7 um wide, 1.3 um tall, centered 0.62 um under the row
        y = (y_center - 0.62) - 0.65
        placements.append(Placement(cat["T"], _REG_PORT_T_X_UM, y, rot_deg=90, ref=f"PT{i + 1}"))
    for i, y in enumerate(_REG_CHAIN_Y_UM):
        placements.append(Placement(cat["Chain"], _REG_CHAIN_X_UM, y, ref=f"SC{i + 1}"))
    return compose(placements, name="8 Log. qubits")


def reference_channel_lengths_um() -> dict[str, float]:
    """Routed lengths of the four designated communication channels."""
    lq = reference_logical_qubit()
    reg = reference_register()
    return {
        "phys_min": path_length(lq, "DQ1", "DQ2"),
        "phys_max": path_length(lq, "DQ1", "DQ10"),
        "log_min": path_length(reg, "LQ-A", "LQ-B"),
        "log_max": path_length(reg, "LQ-A", "LQ-H"),
    }


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _module_to_dict(m: ModuleSpec) -> dict:
    return {
        "name": m.name,
        "width_um": m.width_um,
        "height_um": m.height_um,
        "data_qubits": m.data_qubits,
        "comm_qubits": m.comm_qubits,
        "min_feature_nm": m.min_feature_nm,
        "area_um2": m.area_um2,
        "category": m.category,
    }


def _module_from_dict(doc: dict) -> ModuleSpec:
    return ModuleSpec(
        name=doc["name"],
        width_um=doc["width_um"],
        height_um=doc["height_um"],
        data_qubits=doc["data_qubits"],
        comm_qubits=doc["comm_qubits"],
        min_feature_nm=doc.get("min_feature_nm", DEFAULT_MIN_FEATURE_NM),
        area_um2=doc.get("area_um2"),
        category=doc.get("category", "custom"),
    )


def catalog_to_json(logical_data_reading: str = "table") -> str:
    doc = {"modules": [_module_to_dict(m) for m in builtin_catalog(logical_data_reading)]}
    return json.dumps(doc, indent=2) + "\n"


def floorplan_to_json(plan: Floorplan) -> str:
    modules: dict[str, ModuleSpec] = {}
    for p in plan.placements:
        modules.setdefault(p.module.name, p.module)
    doc = {
        "name": plan.name,
        "modules": [_module_to_dict(m) for m in modules.values()],
        "placements": [
            {
                "module": p.module.name,
                "x_um": p.x_um,
                "y_um": p.y_um,
                "rot_deg": p.rot_deg,
                **({"ref": p.ref} if p.ref is not None else {}),
            }
            for p in plan.placements
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def floorplan_from_json(text: str) -> Floorplan:
    doc = json.loads(text)
    modules = catalog_by_name()
    for mdoc in doc.get("modules", []):
        m = _module_from_dict(mdoc)
        modules[m.name] = m
    placements = []
    for pdoc in doc.get("placements", []):
        name = pdoc["module"]
        if name not in modules:
            raise ValueError(f"placement references unknown module {name!r}")
        placements.append(
            Placement(
                module=modules[name],
                x_um=pdoc["x_um"],
                y_um=pdoc["y_um"],
                rot_deg=pdoc.get("rot_deg", 0),
                ref=pdoc.get("ref"),
            )
        )
    return compose(placements, name=doc.get("name", "plan"))


# ---------------------------------------------------------------------------
# SVG export
# ---------------------------------------------------------------------------

_CATEGORY_ORDER = ("macro", "data", "chain", "t", "custom")
_CATEGORY_FILL = {
    "data": "#2e5fa3",   # data-qubit blocks: blue
    "chain": "#3f9b4f",  # chain modules: green
    "t": "#c0392b",      # junction modules: red
    "macro": "#d9d9d9",  # wrapped composites: grey
    "custom": "#b08f3e",
}


def _fmt(value: float) -> str:
    """Minimal stable decimal rendering for SVG attributes."""
    text = f"{value:.4f}".rstrip("0").rstrip(".")
    return text if text not in ("", "-0") else "0"


def export_svg(plan: Floorplan, scale_px_per_um: float = 100.0) -> str:
    """Deterministic layered SVG, one group per module category.

    The canvas spans the bounding box; y grows upward in plan coordinates
    and is flipped for SVG.  Output is byte-stable for identical plans.
    """
    x0, y0, x1, y1 = plan.bounding_box
    width_px = (x1 - x0) * scale_px_per_um
    height_px = (y1 - y0) * scale_px_per_um
    groups: dict[str, list[str]] = {c: [] for c in _CATEGORY_ORDER}
    for i, p in enumerate(plan.placements):
        px0, py0, px1, py1 = p.rect
        rect = (
            f'    <rect x="{_fmt((px0 - x0) * scale_px_per_um)}" '
            f'y="{_fmt((y1 - py1) * scale_px_per_um)}" '
            f'width="{_fmt((px1 - px0) * scale_px_per_um)}" '
            f'height="{_fmt((py1 - py0) * scale_px_per_um)}" '
            f'data-name="{plan.placement_id(i)}" data-module="{p.module.name}"/>'
        )
        category = p.module.category if p.module.category in groups else "custom"
        groups[category].append(rect)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width_px)}" '
        f'height="{_fmt(height_px)}" viewBox="0 0 {_fmt(width_px)} {_fmt(height_px)}">',
    ]
    for category in _CATEGORY_ORDER:
        if not groups[category]:
            continue
        lines.append(
            f'  <g id="layer-{category}" fill="{_CATEGORY_FILL[category]}" '
            f'stroke="#222222" stroke-width="0.5">'
        )
        lines.extend(groups[category])
        lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
