"""Exchange-coupling and SWAP-chain timing model.

Units are carried in field and argument names throughout: lengths in nm,
times in ns, energies in ueV.  The timing model is anchored at a reference
calibration point (t_swap_ref_ns at inter-dot distance d_ref_nm) and
extrapolated with an exponential tunneling law:

    t_r(d)    = t_r(d_ref) * exp(-(d - d_ref) / lambda)
    J(d)      = t_r(d)^2 / delta_E_ST          -> J scales as exp(-2 d / lambda)
    t_swap(d) = t_swap_ref * exp(+2 (d - d_ref) / lambda)

lambda_nm is a calibration parameter (default 10 nm), not a first-principles
value.  A chain of 2n communication qubits of length l_CQ = 2 * d_id spans
the head-to-tail distance d_dq and transfers a state end to end in 2n - 1
SWAP steps, so the total transfer time is (2n - 1) * t_swap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

# CODATA Planck constant, converted: 4.135667696e-15 eV*s = 4.135667696 ueV*ns.
PLANCK_UEV_NS = 4.135667696


class GeometryError(ValueError):
    """Chain geometry cannot host a valid communication chain."""


@dataclass(frozen=True)
class PhysicsParams:
    """Timing-model parameters.

    t_seq (SWAP pulse-sequence duration in units of h/J) and delta_e_st_uev
    are optional: they are only needed by the microscopic constructor
    `from_microscopic`, which derives t_swap_ref_ns from them instead of
    taking it as a calibration input.
    """

    d_ref_nm: float = 40.0
    t_swap_ref_ns: float = 6.47
    lambda_nm: float = 10.0
    t_seq: float | None = None
    delta_e_st_uev: float | None = None

    def __post_init__(self):
        for name in ("d_ref_nm", "t_swap_ref_ns", "lambda_nm"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise ValueError(f"{name} must be strictly positive, got {value!r}")
        for name in ("t_seq", "delta_e_st_uev"):
            value = getattr(self, name)
            if value is not None and not (value > 0.0 and math.isfinite(value)):
                raise ValueError(f"{name} must be strictly positive when set, got {value!r}")

    @classmethod
    def from_microscopic(
        cls,
        t_r_uev: float,
        delta_e_st_uev: float,
        t_seq: float,
        d_ref_nm: float = 40.0,
        lambda_nm: float = 10.0,
    ) -> "PhysicsParams":
        """Derive the reference SWAP time from microscopic inputs.

        t_swap_ref = t_seq * h / J with J = t_r^2 / delta_E_ST, all at the
        reference inter-dot distance.
        """
        if not t_r_uev > 0.0:
            raise ValueError("t_r_uev must be strictly positive")
        j_uev = exchange_coupling(t_r_uev, delta_e_st_uev)
        t_swap_ref_ns = t_seq * PLANCK_UEV_NS / j_uev
        return cls(
            d_ref_nm=d_ref_nm,
            t_swap_ref_ns=t_swap_ref_ns,
            lambda_nm=lambda_nm,
            t_seq=t_seq,
            delta_e_st_uev=delta_e_st_uev,
        )


@dataclass(frozen=True)
class ChainGeometry:
    """Head-to-tail span d_dq_nm bridged by dots at pitch d_id_nm."""

    d_dq_nm: float
    d_id_nm: float

    def __post_init__(self):
        if not (self.d_id_nm > 0.0 and math.isfinite(self.d_id_nm)):
            raise ValueError(f"d_id_nm must be strictly positive, got {self.d_id_nm!r}")
        if not (self.d_dq_nm >= 2.0 * self.d_id_nm):
            raise GeometryError(
                f"d_dq_nm={self.d_dq_nm!r} too short: need at least one communication "
                f"qubit of length 2*d_id_nm={2.0 * self.d_id_nm!r}"
            )

    @property
    def l_cq_nm(self) -> float:
        """Length of one communication qubit (a double dot)."""
        return 2.0 * self.d_id_nm


def exchange_coupling(t_r: float, delta_e_st: float) -> float:
    """Exchange energy J = t_r^2 / delta_E_ST, same units as the inputs."""
    if not delta_e_st > 0.0:
        raise ValueError(f"delta_e_st must be strictly positive, got {delta_e_st!r}")
    return t_r * t_r / delta_e_st


def t_swap(params: PhysicsParams, d_id_nm: float) -> float:
    """SWAP time in ns at inter-dot distance d_id_nm.

    Exactly t_swap_ref_ns at d_ref_nm (exp(0) == 1), growing by e^2 per
    lambda_nm of added distance.
    """
    if not d_id_nm > 0.0:
        raise ValueError(f"d_id_nm must be strictly positive, got {d_id_nm!r}")
    return params.t_swap_ref_ns * math.exp(
        2.0 * (d_id_nm - params.d_ref_nm) / params.lambda_nm
    )


def chain_length(geom: ChainGeometry) -> int:
    """Number of communication qubits 2n in the chain spanning the geometry.

    d_dq / l_CQ is rounded to the nearest integer (ties to even) and then
    decremented by one if odd, because the chain needs an even qubit count.
    The rounding makes the hop count ambiguous by at most +-1 for spans that
    are not integer multiples of l_CQ.
    """
    ratio = geom.d_dq_nm / geom.l_cq_nm
    n2 = round(ratio)
    if n2 % 2:
        n2 -= 1
    if n2 < 2:
        raise GeometryError(
            f"geometry d_dq_nm={geom.d_dq_nm!r}, d_id_nm={geom.d_id_nm!r} rounds to "
            f"{n2} communication qubits; a chain needs at least 2"
        )
    return n2


def t_total(params: PhysicsParams, geom: ChainGeometry) -> float:
    """End-to-end transfer time (2n - 1) * t_swap in ns."""
    return (chain_length(geom) - 1) * t_swap(params, geom.d_id_nm)


class SweepResult(NamedTuple):
    points: list[tuple[float, float]]  # (d_id_nm, t_total_ns), ascending d_id
    skipped: list[float]               # d_id values with no valid chain


def sweep_t_total(
    params: PhysicsParams, d_dq_nm: float, d_id_range_nm: Sequence[float]
) -> SweepResult:
    """Evaluate t_total over a range of inter-dot distances.

    Points are returned in ascending d_id order.  Inter-dot distances that
    cannot host a chain are collected in `skipped` rather than raising.
    """
    points: list[tuple[float, float]] = []
    skipped: list[float] = []
    for d_id_nm in sorted(d_id_range_nm):
        try:
            geom = ChainGeometry(d_dq_nm=d_dq_nm, d_id_nm=d_id_nm)
            points.append((d_id_nm, t_total(params, geom)))
        except (GeometryError, ValueError):
            skipped.append(d_id_nm)
    return SweepResult(points=points, skipped=skipped)


def sweep_csv(result: SweepResult) -> str:
    """Render one sweep as CSV with header d_id_nm,t_total_ns (1 ns decimal)."""
    lines = ["d_id_nm,t_total_ns"]
    for d_id_nm, t_ns in result.points:
        lines.append(f"{format_quantity(d_id_nm)},{t_ns:.1f}")
    return "\n".join(lines) + "\n"


def format_quantity(value: float) -> str:
    """Minimal decimal rendering: 40.0 -> "40", 15.4 -> "15.4"."""
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))
