"""Three-spin state space of the hybrid qubit.

A hybrid qubit stores one logical qubit in three electron spins, so the
underlying Hilbert space is the 8-dimensional product of three spin-1/2
systems.  Amplitudes are kept over the fixed product basis

    index 0: |up up up>      index 4: |dn up up>
    index 1: |up up dn>      index 5: |dn up dn>
    index 2: |up dn up>      index 6: |dn dn up>
    index 3: |up dn dn>      index 7: |dn dn dn>

i.e. big-endian ordering with spin 1 most significant and "up" coded as 0.
The logical basis lives in the subspace with total spin S = 1/2 and
z-projection S_z = -1/2:

    |0> = |S>|dn>
    |1> = sqrt(1/3) |T0>|dn> - sqrt(2/3) |T->|up>

with the pair states on spins 1-2

    |S>  = (|up dn> - |dn up>) / sqrt(2)
    |T0> = (|up dn> + |dn up>) / sqrt(2)
    |T-> = |dn dn>

Operators are returned in units of hbar (S_z) and hbar^2 (S^2).  All
functions are pure; states are immutable value objects.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DIM = 8

ARROWS = {"0": "↑", "1": "↓"}
BASIS_LABELS = tuple(
    "".join(ARROWS[c] for c in format(i, "03b")) for i in range(DIM)
)

_PAULI_Z = np.diag([1.0, -1.0]).astype(complex)
_PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_ID2 = np.eye(2, dtype=complex)


def _site_operator(op: np.ndarray, site: int) -> np.ndarray:
    """Embed a single-spin operator at the given site (0, 1 or 2)."""
    factors = [_ID2, _ID2, _ID2]
    factors[site] = op
    return np.kron(np.kron(factors[0], factors[1]), factors[2])


def _total_spin_operators() -> tuple[np.ndarray, np.ndarray]:
    """Build the 8x8 matrices for S_z and S^2 by explicit tensor products."""
    sx = 0.5 * sum(_site_operator(_PAULI_X, i) for i in range(3))
    sy = 0.5 * sum(_site_operator(_PAULI_Y, i) for i in range(3))
    sz = 0.5 * sum(_site_operator(_PAULI_Z, i) for i in range(3))
    s_squared = sx @ sx + sy @ sy + sz @ sz
    return sz, s_squared


_SZ_MATRIX, _S2_MATRIX = _total_spin_operators()


@dataclass(frozen=True, eq=False)
class ThreeSpinState:
    """Immutable amplitude vector over the 8-dimensional product basis.

    Physical qubit states are normalized; images under spin operators are
    generally not (e.g. S_z|dn dn dn> has norm 3/2) and are carried as-is.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (DIM,):
            raise ValueError(f"state needs {DIM} amplitudes, got shape {amps.shape}")
        if not np.all(np.isfinite(amps.view(float))):
            raise ValueError("state amplitudes must be finite")
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "ThreeSpinState") -> complex:
        """<self|other> with the conventional conjugate-linear first slot."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def isclose(self, other: "ThreeSpinState", tol: float = 1e-12) -> bool:
        return bool(np.allclose(self.amplitudes, other.amplitudes, atol=tol, rtol=0.0))


@dataclass(frozen=True)
class LogicalBasis:
    zero: ThreeSpinState
    one: ThreeSpinState


def basis_state(index: int) -> ThreeSpinState:
    """Product basis state by index in the fixed ordering."""
    amps = np.zeros(DIM, dtype=complex)
    amps[index] = 1.0
    return ThreeSpinState(amps)


def build_logical_basis() -> LogicalBasis:
    """Logical |0> and |1> expanded over the product basis."""
    zero = np.zeros(DIM, dtype=complex)
    zero[0b011] = 1.0 / np.sqrt(2.0)   # |up dn dn>
    zero[0b101] = -1.0 / np.sqrt(2.0)  # |dn up dn>

    one = np.zeros(DIM, dtype=complex)
    one[0b011] = 1.0 / np.sqrt(6.0)
    one[0b101] = 1.0 / np.sqrt(6.0)
    one[0b110] = -np.sqrt(2.0 / 3.0)   # |dn dn up>
    return LogicalBasis(zero=ThreeSpinState(zero), one=ThreeSpinState(one))


def apply_sz(state: ThreeSpinState) -> ThreeSpinState:
    """Apply the total-spin z component; result in units of hbar."""
    return ThreeSpinState(_SZ_MATRIX @ state.amplitudes)


def apply_s_squared(state: ThreeSpinState) -> ThreeSpinState:
    """Apply the total-spin square; result in units of hbar^2."""
    return ThreeSpinState(_S2_MATRIX @ state.amplitudes)


def random_state(rng: np.random.Generator, normalize: bool = True) -> ThreeSpinState:
    """Haar-ish random state for property checks."""
    amps = rng.normal(size=DIM) + 1.0j * rng.normal(size=DIM)
    if normalize:
        amps = amps / np.linalg.norm(amps)
    return ThreeSpinState(amps)


def dump_state(state: ThreeSpinState) -> str:
    """Debug dump: 8 lines of "basis-label  re  im" in fixed basis order."""
    lines = []
    for label, amp in zip(BASIS_LABELS, state.amplitudes):
        lines.append(f"{label}  {amp.real:+.15e}  {amp.imag:+.15e}")
    return "\n".join(lines) + "\n"
