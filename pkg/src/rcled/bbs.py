"""Box-ball time evolutions T_l, their conserved energies and the periodic system."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .crystal import RowElement
from .kkr import phi_classical
from .led import LocalEnergyTable, local_energy_table, sweep

EMPTY = RowElement(1, 0)
BALL = RowElement(0, 1)


class EvolutionResult(NamedTuple):
    new_path: list[RowElement]
    carrier_out: RowElement
    total_energy: int


class PeriodicError(ValueError):
    """Input outside the periodic box-ball setting (B_1 factors, #2 <= #1)."""


def evolve(path: Sequence[RowElement], l: int, carrier: RowElement | None = None) -> EvolutionResult:
    """T_l: sweep the carrier (default u_l) through the path from the left."""
    if l < 1:
        raise ValueError("carrier capacity must be >= 1")
    start = carrier if carrier is not None else RowElement.highest(l)
    new, out, local = sweep(start, path)
    return EvolutionResult(new, out, sum(local))


def energies(path: Sequence[RowElement], l_max: int) -> list[int]:
    """[E_1, ..., E_{l_max}]."""
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    return [evolve(path, l).total_energy for l in range(1, l_max + 1)]


def pad(path: Sequence[RowElement], extra: int) -> list[RowElement]:
    """path (x) 1^extra."""
    return list(path) + [EMPTY] * extra


def check_linearization(path: Sequence[RowElement], l: int, padding: int) -> bool:
    """T_l on path (x) 1^padding returns the carrier u_l and shifts riggings by min(mu, l)."""
    size = sum(b.capacity for b in path)
    if padding <= size:
        raise ValueError(f"padding {padding} must exceed the path size {size}")
    padded = pad(path, padding)
    res = evolve(padded, l)
    if res.carrier_out != RowElement.highest(l):
        return False
    before = phi_classical(padded)
    after = phi_classical(res.new_path)
    return after == before.shifted(lambda m: min(m, l))


def _check_periodic(path: Sequence[RowElement]) -> None:
    if any(b.capacity != 1 for b in path):
        raise PeriodicError("periodic evolution needs a path of B_1 factors")
    balls = sum(b.twos for b in path)
    if 2 * balls > len(path):
        raise PeriodicError(f"{balls} balls in {len(path)} boxes: more 2's than 1's")


def carrier_v(path: Sequence[RowElement], l: int) -> RowElement:
    """The carrier v_l with v_l (x) b ~ T-bar_l(b) (x) v_l."""
    _check_periodic(path)
    v = evolve(path, l).carrier_out
    again = evolve(path, l, carrier=v).carrier_out
    if again != v:
        raise PeriodicError(f"carrier {v} is not a fixed point (got {again})")
    return v


def evolve_periodic(path: Sequence[RowElement], l: int) -> list[RowElement]:
    """T-bar_l, the periodic box-ball evolution."""
    return evolve(path, l, carrier=carrier_v(path, l)).new_path


def led_periodic(path: Sequence[RowElement]) -> LocalEnergyTable:
    """Local energy distribution swept with v_l instead of u_l in row l."""
    _check_periodic(path)
    return local_energy_table(path, carrier=lambda l: carrier_v(path, l))
