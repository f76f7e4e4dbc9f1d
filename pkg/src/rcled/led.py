"""Local energy distribution: rigged configurations from carrier sweeps.

Row l of the table records E_{l,j} - E_{l-1,j}, where E_{l,j} is the energy
picked up at column j when the carrier u_l = 1^l is swept through the path.
The 1's of the table split into soliton groups, one per row of the
configuration; the group's depth is the row length and its bottom cell fixes
the rigging.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .crystal import RowElement, apply_R
from .kkr import RiggedConfig


@dataclass(frozen=True)
class LocalEnergyTable:
    path: tuple[RowElement, ...]
    bits: tuple[tuple[int, ...], ...]       # bits[l-1][j-1]
    energies: tuple[tuple[int, ...], ...]   # cumulative E_{l,j}, same indexing

    @property
    def width(self) -> int:
        return len(self.path)

    @property
    def depth(self) -> int:
        return len(self.bits)

    def bit(self, l: int, j: int) -> int:
        return self.bits[l - 1][j - 1] if l <= self.depth else 0

    def E(self, l: int, j: int) -> int:
        """E_{l,j}; rows past the table repeat the last one (all-zero increments)."""
        if l == 0:
            return 0
        return self.energies[min(l, self.depth) - 1][j - 1]

    def total(self, l: int) -> int:
        """E_l = sum_j E_{l,j}."""
        return sum(self.E(l, j) for j in range(1, self.width + 1))

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.bits)

    @property
    def n_groups(self) -> int:
        return self.row_sums[0] if self.bits else 0


@dataclass(frozen=True)
class SolitonGroup:
    cells: tuple[tuple[int, int], ...]   # (row l, column j), rows 1..mu top to bottom

    @property
    def mu(self) -> int:
        return len(self.cells)

    @property
    def terminal(self) -> tuple[int, int]:
        return self.cells[-1]

    @property
    def j(self) -> int:
        return self.cells[-1][1]


def sweep(carrier: RowElement, path: Sequence[RowElement]):
    """Send ``carrier`` through ``path``; return (new path, final carrier, local energies)."""
    out, local = [], []
    for b in path:
        b_new, carrier, h = apply_R(carrier, b)
        out.append(b_new)
        local.append(h)
    return out, carrier, local


def local_energy_table(path: Sequence[RowElement],
                       carrier: Optional[Callable[[int], RowElement]] = None) -> LocalEnergyTable:
    """Build the table row by row, stopping after the first all-zero row.

    ``carrier(l)`` gives the element swept in row l; the default is u_l.
    """
    path = tuple(path)
    carrier = carrier or RowElement.highest
    l_max = sum(b.twos for b in path) + 1
    prev = [0] * len(path)
    bits, energies = [], []
    for l in range(1, l_max + 1):
        _, _, cur = sweep(carrier(l), path)
        row = tuple(c - p for c, p in zip(cur, prev))
        bits.append(row)
        energies.append(tuple(cur))
        prev = cur
        if not any(row):
            break
    return LocalEnergyTable(path, tuple(bits), tuple(energies))


def _ones(t: LocalEnergyTable) -> list[set[int]]:
    return [{j for j, v in enumerate(row, 1) if v} for row in t.bits]


def _leftmost(cols):
    return min(cols)


def extract_groups_topdown(t: LocalEnergyTable,
                           choose: Callable[[list[int]], int] = _leftmost) -> list[SolitonGroup]:
    """Groups in extraction order, each started from the rightmost 1 of row 1.

    ``choose`` picks among the weakly-right candidates in the next row; the
    default takes the nearest one.
    """
    left = _ones(t)
    groups = []
    for _ in range(t.n_groups):
        col = max(left[0])
        left[0].discard(col)
        cells = [(1, col)]
        for l in range(1, len(left)):
            cand = sorted(c for c in left[l] if c >= col)
            if not cand:
                break
            col = choose(cand)
            left[l].discard(col)
            cells.append((l + 1, col))
        groups.append(SolitonGroup(tuple(cells)))
    rest = [(l + 1, c) for l, row in enumerate(left) for c in sorted(row)]
    if rest:
        raise ValueError(f"table has unconsumed 1's at {rest}")
    return groups


def extract_groups_bottomup(t: LocalEnergyTable, wrap: bool = False) -> list[SolitonGroup]:
    """Groups built upward from the deepest remaining 1 (leftmost on ties).

    From a cell at column k the next cell up is the rightmost remaining 1 at
    column <= k.  With ``wrap`` (periodic tables) the search continues from
    the right end of the row when nothing lies at or left of k.
    """
    left = _ones(t)
    groups = []
    while True:
        deepest = max((l for l, row in enumerate(left) if row), default=None)
        if deepest is None:
            return groups
        col = min(left[deepest])
        left[deepest].discard(col)
        cells = [(deepest + 1, col)]
        for l in range(deepest - 1, -1, -1):
            cand = [c for c in left[l] if c <= col]
            if not cand and wrap:
                cand = list(left[l])
            if not cand:
                raise ValueError(f"no 1 above cell {cells[-1]} in row {l + 1}")
            col = max(cand)
            left[l].discard(col)
            cells.append((l + 1, col))
        groups.append(SolitonGroup(tuple(reversed(cells))))


def rigging(path: Sequence[RowElement], t: LocalEnergyTable, g: SolitonGroup) -> int:
    """r = sum_{i<j} min(mu, lambda_i) + E_{mu,j} - 2 sum_{i<=j} E_{mu,i}."""
    mu, j = g.terminal
    base = sum(min(mu, b.capacity) for b in path[:j - 1])
    return base + t.E(mu, j) - 2 * sum(t.E(mu, i) for i in range(1, j + 1))


def phi_crystal(path: Sequence[RowElement], method: str = "topdown") -> RiggedConfig:
    """Rigged configuration read off the local energy distribution."""
    path = tuple(path)
    t = local_energy_table(path)
    if method == "topdown":
        groups = extract_groups_topdown(t)
    elif method == "bottomup":
        groups = extract_groups_bottomup(t)
    else:
        raise ValueError(f"unknown extraction method {method!r}")
    rows = [(g.mu, rigging(path, t, g)) for g in groups]
    return RiggedConfig(tuple(b.capacity for b in path), rows)


def table_dict(t: LocalEnergyTable, groups: Sequence[SolitonGroup]) -> dict:
    return {
        "bits": [list(row) for row in t.bits],
        "groups": [
            {"cells": [list(c) for c in g.cells], "mu": g.mu, "j": g.j,
             "r": rigging(t.path, t, g)}
            for g in groups
        ],
    }


def render_ascii(t: LocalEnergyTable, groups: Sequence[SolitonGroup]) -> str:
    """The table with cells labelled by group number, terminals starred, zeros as '.'."""
    label = {}
    for n, g in enumerate(groups, 1):
        for cell in g.cells:
            label[cell] = str(n)
        label[g.terminal] += "*"
    header = [str(b) for b in t.path]
    cols = [[label.get((l, j), ".") for l in range(1, t.depth + 1)] for j in range(1, t.width + 1)]
    widths = [max(len(h), *(len(s) for s in col)) for h, col in zip(header, cols)]
    lw = len(str(t.depth))
    lines = [" " * (lw + 3) + " ".join(h.rjust(w) for h, w in zip(header, widths))]
    for l in range(t.depth):
        cells = " ".join(col[l].rjust(w) for col, w in zip(cols, widths))
        lines.append(f"{l + 1:>{lw}} | {cells}")
    return "\n".join(lines)
