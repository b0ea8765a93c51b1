"""Discrete-time simulator for the bidirectional SWAP chain.

The chain holds 2n qubits (even, >= 2) numbered 1..2n.  Payloads are opaque
labels: chain SWAPs are treated as ideal, so the simulation is exact
permutation bookkeeping.  The parallel schedule alternates two gate groups:

    odd steps:  (1,2), (3,4), (5,6), ...
    even steps: (2,3), (4,5), (6,7), ...

After 2n - 1 such steps the payloads initially at the two extremities have
traded places (bidirectional end-to-end transfer); this is the only
permutation property treated as load-bearing.  A sequential one-pair-per-step
generator is also provided, which moves the head payload to the tail in
2n - 1 steps but is not bidirectional (no one-swap-per-step schedule of
length 2n - 1 can be, for 2n >= 4: the two end payloads need a combined
displacement of 2 * (2n - 1) positions, which is the entire displacement
budget of the schedule, so every swap would have to move both of them).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .physics import PhysicsParams, t_swap

Pair = tuple[int, int]


@dataclass(frozen=True)
class ChainState:
    """Payload labels by position (position i holds payloads[i-1])."""

    payloads: tuple[Hashable, ...]
    step: int = 0

    def __post_init__(self):
        n = len(self.payloads)
        if n < 2 or n % 2:
            raise ValueError(f"chain length must be even and >= 2, got {n}")
        object.__setattr__(self, "payloads", tuple(self.payloads))


@dataclass(frozen=True)
class SwapSchedule:
    """Steps of disjoint adjacent transpositions over 1-based qubit indices."""

    n_qubits: int
    steps: tuple[tuple[Pair, ...], ...] = field(default_factory=tuple)

    def __post_init__(self):
        for step in self.steps:
            seen: set[int] = set()
            for a, b in step:
                if b != a + 1 or not 1 <= a < self.n_qubits:
                    raise ValueError(f"pair ({a},{b}) is not adjacent in 1..{self.n_qubits}")
                if a in seen or b in seen:
                    raise ValueError(f"qubit reused within one step: ({a},{b})")
                seen.update((a, b))


def make_schedule(n2: int) -> SwapSchedule:
    """Parallel schedule of exactly 2n - 1 alternating odd/even steps."""
    _check_length(n2)
    steps = []
    for s in range(1, n2):
        first = 1 if s % 2 else 2
        steps.append(tuple((a, a + 1) for a in range(first, n2, 2)))
    return SwapSchedule(n_qubits=n2, steps=tuple(steps))


def make_sequential_schedule(n2: int) -> SwapSchedule:
    """Sequential schedule: one swap per step, head payload walks to the tail."""
    _check_length(n2)
    steps = tuple(((a, a + 1),) for a in range(1, n2))
    return SwapSchedule(n_qubits=n2, steps=steps)


def _check_length(n2: int) -> None:
    if n2 < 2 or n2 % 2:
        raise ValueError(f"chain length must be even and >= 2, got {n2}")


def apply_step(state: ChainState, step: Sequence[Pair]) -> ChainState:
    """Apply one step of disjoint transpositions simultaneously."""
    payloads = list(state.payloads)
    for a, b in step:
        payloads[a - 1], payloads[b - 1] = state.payloads[b - 1], state.payloads[a - 1]
    return ChainState(payloads=tuple(payloads), step=state.step + 1)


def run_chain(state: ChainState, schedule: SwapSchedule) -> ChainState:
    """Run the full schedule and return the final chain state."""
    if len(state.payloads) != schedule.n_qubits:
        raise ValueError(
            f"schedule is for {schedule.n_qubits} qubits but state has {len(state.payloads)}"
        )
    for step in schedule.steps:
        state = apply_step(state, step)
    return state


def iterate_chain(state: ChainState, schedule: SwapSchedule):
    """Yield the state after each step, starting with the initial state."""
    if len(state.payloads) != schedule.n_qubits:
        raise ValueError(
            f"schedule is for {schedule.n_qubits} qubits but state has {len(state.payloads)}"
        )
    yield state
    for step in schedule.steps:
        state = apply_step(state, step)
        yield state


def transfer_report(n2: int, params: PhysicsParams, d_id_nm: float) -> tuple[int, float]:
    """(step count, total duration in ns) for a full parallel transfer."""
    _check_length(n2)
    steps = n2 - 1
    return steps, steps * t_swap(params, d_id_nm)


def trace_csv(state: ChainState, schedule: SwapSchedule) -> str:
    """Step trace as CSV: one row per (step, position), including step 0."""
    lines = ["step,position,payload"]
    for snapshot in iterate_chain(state, schedule):
        for position, payload in enumerate(snapshot.payloads, start=1):
            lines.append(f"{snapshot.step},{position},{payload}")
    return "\n".join(lines) + "\n"
