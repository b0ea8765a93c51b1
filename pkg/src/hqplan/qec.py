"""Steane-code accounting and recursive error-correction overhead.

One logical qubit is encoded in a [[7,1,3]] block plus 12 syndrome ancillae,
so one concatenation level replaces every qubit by a 19-qubit block.
Concatenating k times suppresses the logical error rate doubly
exponentially below threshold:

    rate(0) = p
    rate(k + 1) = c * rate(k)^2          (equivalently (c p)^(2^k) / c)

where 1/c is the threshold error rate.  The recursive form is used directly
so the squaring recurrence holds bit-exactly.  The area/time overhead of a
level is a power law with user-supplied exponents; the block-replication
default (exponent 1) multiplies both by 19 per level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .floorplan import RegisterSummary


@dataclass(frozen=True)
class SteaneParams:
    n_code: int = 7
    k_code: int = 1
    distance: int = 3
    ancillae: int = 12

    def __post_init__(self):
        if (self.n_code, self.k_code, self.distance) != (7, 1, 3):
            raise ValueError("code parameters are fixed to [[7,1,3]]")
        if self.ancillae < 0:
            raise ValueError("ancillae must be non-negative")

    @property
    def block_size(self) -> int:
        """Physical qubits per encoded qubit, ancillae included."""
        return self.n_code + self.ancillae


@dataclass(frozen=True)
class QecLevel:
    """Concatenation order k with physical error rate and threshold 1/c."""

    order_k: int
    p_phys: float
    c_inv_threshold: float

    def __post_init__(self):
        if self.order_k < 0:
            raise ValueError("order_k must be non-negative")
        if not 0.0 <= self.p_phys <= 1.0:
            raise ValueError(f"p_phys must be in [0, 1], got {self.p_phys!r}")
        if not self.c_inv_threshold > 0.0:
            raise ValueError("c_inv_threshold must be strictly positive")


def logical_error_rate(level: QecLevel, clamp: bool = True) -> float:
    """Logical error rate after `order_k` concatenation levels.

    Computed by repeated squaring (rate <- c * rate^2 starting from p), so
    rate(k + 1) == c * rate(k)^2 holds exactly.  With clamp=True values
    above 1 are truncated to 1; use `is_clamped` to detect truncation.
    """
    c = 1.0 / level.c_inv_threshold
    rate = level.p_phys
    for _ in range(level.order_k):
        rate = c * rate * rate
        if math.isinf(rate):
            break
    if clamp:
        return min(rate, 1.0)
    return rate


def is_clamped(level: QecLevel) -> bool:
    """True when the raw rate exceeds 1 and clamping truncated it."""
    return logical_error_rate(level, clamp=False) > 1.0


def suppression_condition(level: QecLevel) -> bool:
    """True iff p < 1/c, i.e. concatenation strictly reduces the rate.

    The boundary p == 1/c is not suppressed: the rate stays pinned at 1/c
    for every k.
    """
    return level.p_phys < level.c_inv_threshold


class OverheadResult(NamedTuple):
    area_um2: float
    time_factor: float
    physical_qubits: int


def overhead(
    level: QecLevel,
    base: RegisterSummary,
    area_exponent: float = 1.0,
    time_exponent: float = 1.0,
    code: SteaneParams = SteaneParams(),
) -> OverheadResult:
    """Resource blow-up of `order_k` concatenation levels over a base circuit.

    Each level replaces a qubit by a block of code.block_size (= 19 by
    default) qubits, so the qubit count scales exactly by block_size^k.
    Area and time grow as block_size^(k * exponent); the exponents are free
    parameters because the real growth depends on routing of the layout.
    """
    if area_exponent <= 0.0 or time_exponent <= 0.0:
        raise ValueError("exponents must be strictly positive")
    k = level.order_k
    block = code.block_size
    base_qubits = base.data_qubits + base.comm_qubits
    return OverheadResult(
        area_um2=base.total_area_um2 * block ** (k * area_exponent),
        time_factor=float(block ** (k * time_exponent)),
        physical_qubits=base_qubits * block**k,
    )


def threshold_sweep_csv(p_phys: float, c_inv_threshold: float, k_max: int) -> str:
    """CSV of logical error rate per concatenation order, k = 0..k_max."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    lines = ["k,p,c_inv,logical_error_rate"]
    for k in range(k_max + 1):
        level = QecLevel(order_k=k, p_phys=p_phys, c_inv_threshold=c_inv_threshold)
        lines.append(
            f"{k},{p_phys!r},{c_inv_threshold!r},{logical_error_rate(level)!r}"
        )
    return "\n".join(lines) + "\n"
