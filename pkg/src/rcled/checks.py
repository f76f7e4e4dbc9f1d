"""Invariant suite shared by the ``check`` command and the test-suite.

Every check takes one instance and returns True when the property holds.
``run`` applies a set of checks to a corpus and tallies the outcome.
"""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from . import bbs
from .crystal import RowElement, apply_R, apply_R_diagram, apply_R_piecewise, elements, is_highest
from .kkr import phi_classical, phi_inverse
from .led import extract_groups_bottomup, extract_groups_topdown, local_energy_table, phi_crystal

DEFAULT_SEED = 20070516


# -- corpora -----------------------------------------------------------------

def exhaustive_paths(max_factors: int = 4, max_capacity: int = 3) -> Iterator[tuple[RowElement, ...]]:
    """Every path with 1..max_factors factors of capacity 1..max_capacity."""
    pool = [e for k in range(1, max_capacity + 1) for e in elements(k)]
    for n in range(1, max_factors + 1):
        yield from itertools.product(pool, repeat=n)


def random_path(rng: random.Random, max_factors: int = 40, max_capacity: int = 6) -> list[RowElement]:
    path = []
    for _ in range(rng.randint(1, max_factors)):
        k = rng.randint(1, max_capacity)
        t = rng.randint(0, k)
        path.append(RowElement(k - t, t))
    return path


def random_b1_path(rng: random.Random, max_len: int = 30) -> list[RowElement]:
    """Random B_1 path with no more 2's than 1's."""
    n = rng.randint(1, max_len)
    balls = rng.randint(0, n // 2)
    cells = [bbs.BALL] * balls + [bbs.EMPTY] * (n - balls)
    rng.shuffle(cells)
    return cells


def pairs(max_capacity: int = 6) -> Iterator[tuple[RowElement, RowElement]]:
    pool = [e for k in range(1, max_capacity + 1) for e in elements(k)]
    return itertools.product(pool, repeat=2)


# -- R matrix ----------------------------------------------------------------

def r_agree(x: RowElement, y: RowElement) -> bool:
    return apply_R_diagram(x, y) == apply_R_piecewise(x, y)


def r_involution(x: RowElement, y: RowElement) -> bool:
    a, b, h = apply_R_diagram(x, y)
    x2, y2, h2 = apply_R_diagram(a, b)
    return (x2, y2) == (x, y) and h == h2


def r_weight(x: RowElement, y: RowElement) -> bool:
    a, b, h = apply_R_diagram(x, y)
    return (a.capacity == y.capacity and b.capacity == x.capacity
            and a.ones + b.ones == x.ones + y.ones
            and 0 <= h <= min(x.capacity, y.capacity)
            and (h == 0 or not (y.twos == 0 and x.twos == 0)))


# -- per-path properties -----------------------------------------------------

def oracle_equivalence(path) -> bool:
    return phi_crystal(path) == phi_classical(path)


def round_trip(path) -> bool:
    path = list(path)
    return phi_inverse(phi_classical(path), [b.capacity for b in path]) == path


def r_invariance(path) -> bool:
    path = list(path)
    ref = phi_classical(path)
    for i in range(len(path) - 1):
        a, b, _ = apply_R(path[i], path[i + 1])
        if phi_classical(path[:i] + [a, b] + path[i + 2:]) != ref:
            return False
    return True


def counting(path) -> bool:
    rc = phi_classical(path)
    return (sum(rc.config) == sum(b.twos for b in path)
            and sum(rc.quantum_space) == sum(b.capacity for b in path))


def highest_bounded(path) -> bool:
    rc = phi_classical(path)
    bounded = all(0 <= r <= rc.vacancy(m) for m, r in rc.rows)
    return bounded if is_highest(path) else True


def prepend(path, extra: int | None = None) -> bool:
    """phi(1^L (x) b) adds L single boxes to lambda and L to every rigging."""
    size = sum(b.capacity for b in path)
    extra = size if extra is None else extra
    rc = phi_classical(path)
    big = phi_classical([bbs.EMPTY] * extra + list(path))
    expect = type(rc)(rc.quantum_space + (1,) * extra, rc.rows).shifted(lambda m: extra)
    return big == expect


def led_binary(path) -> bool:
    return all(v in (0, 1) for row in local_energy_table(path).bits for v in row)


def led_row_sums(path) -> bool:
    t = local_energy_table(path)
    mu = phi_classical(path).config
    longest = max(mu, default=0)
    if t.depth != longest + 1:
        return False
    return all(t.row_sums[l - 1] == sum(1 for m in mu if m >= l) for l in range(1, t.depth + 1))


def led_columns(path) -> bool:
    """Column i of the table lists the mu-columns of the boxes added while reading b_i."""
    t = local_energy_table(path)
    trace: list = []
    phi_classical(path, trace=trace)
    for i in range(1, t.width + 1):
        rows = [l for l in range(1, t.depth + 1) if t.bit(l, i)]
        if rows != [c for pos, c in trace if pos == i]:
            return False
    return True


def non_crossing(path) -> bool:
    groups = extract_groups_topdown(local_energy_table(path))
    cols = [dict(g.cells) for g in groups]
    for a, b in itertools.combinations(cols, 2):
        signs = {(a[l] > b[l]) for l in a.keys() & b.keys()}
        if len(signs) > 1:
            return False
    return True


def extraction_agree(path) -> bool:
    t = local_energy_table(path)
    top = sorted(g.cells for g in extract_groups_topdown(t))
    bottom = sorted(g.cells for g in extract_groups_bottomup(t))
    return top == bottom


def nearest_choice(path) -> bool:
    """Every complete extraction with arbitrary weakly-right choices gives the same groups."""
    t = local_energy_table(path)
    ones = [frozenset(j for j, v in enumerate(row, 1) if v) for row in t.bits]
    found = set()

    def start(left, groups):
        if not left[0]:
            if not any(left):
                found.add(tuple(sorted(groups)))
            return
        col = max(left[0])
        grow([left[0] - {col}, *left[1:]], groups, [(1, col)])

    def grow(left, groups, cells):
        l, col = cells[-1]
        cand = [c for c in left[l] if c >= col] if l < len(left) else []
        if not cand:
            start(left, groups + [tuple(cells)])
        for c in cand:
            nxt = list(left)
            nxt[l] = left[l] - {c}
            grow(nxt, groups, cells + [(l + 1, c)])

    start(ones, [])
    reference = tuple(sorted(g.cells for g in extract_groups_topdown(t)))
    return found == {reference}


# -- dynamics ----------------------------------------------------------------

def conservation(path, l_max: int = 6) -> bool:
    padded = bbs.pad(path, sum(b.capacity for b in path) + 1)
    ref = bbs.energies(padded, l_max)
    for k in range(1, l_max + 1):
        if bbs.energies(bbs.evolve(padded, k).new_path, l_max) != ref:
            return False
    return True


def carrier_return(path, l_max: int = 6) -> bool:
    padded = bbs.pad(path, sum(b.capacity for b in path) + 1)
    return all(bbs.evolve(padded, l).carrier_out == RowElement.highest(l) for l in range(1, l_max + 1))


def linearization(path, l_max: int = 6) -> bool:
    extra = sum(b.capacity for b in path) + 1
    return all(bbs.check_linearization(path, l, extra) for l in range(1, l_max + 1))


def cyclic_shift(path) -> bool:
    path = list(path)
    return bbs.evolve_periodic(path, 1) == path[-1:] + path[:-1]


def periodic_repetition(path, copies: int = 3) -> bool:
    """The table of b^{(x) N} repeats one column block for copies 2..N, and that block
    is the table drawn with the periodic carriers v_l."""
    n = len(path)
    t = local_energy_table(list(path) * copies)
    blocks = [[row[c * n:(c + 1) * n] for row in t.bits] for c in range(1, copies)]
    if any(b != blocks[0] for b in blocks):
        return False
    per = bbs.led_periodic(path)
    depth = max(per.depth, t.depth)
    zero = (0,) * n
    mine = [per.bits[l] if l < per.depth else zero for l in range(depth)]
    theirs = [blocks[0][l] if l < t.depth else zero for l in range(depth)]
    return mine == theirs


PATH_CHECKS: dict[str, Callable] = {
    "oracle_equivalence": oracle_equivalence,
    "round_trip": round_trip,
    "r_invariance": r_invariance,
    "counting": counting,
    "highest_bounded": highest_bounded,
    "led_binary": led_binary,
    "led_row_sums": led_row_sums,
    "led_columns": led_columns,
    "non_crossing": non_crossing,
    "extraction_agree": extraction_agree,
}

PAIR_CHECKS: dict[str, Callable] = {
    "r_agree": r_agree,
    "r_involution": r_involution,
    "r_weight": r_weight,
}

DYNAMICS_CHECKS: dict[str, Callable] = {
    "conservation": conservation,
    "carrier_return": carrier_return,
    "linearization": linearization,
    "prepend": prepend,
}

PERIODIC_CHECKS: dict[str, Callable] = {
    "cyclic_shift": cyclic_shift,
    "periodic_repetition": periodic_repetition,
}


@dataclass
class Tally:
    passed: dict = field(default_factory=lambda: defaultdict(int))
    failed: dict = field(default_factory=lambda: defaultdict(int))
    examples: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool, instance) -> None:
        if ok:
            self.passed[name] += 1
        else:
            self.failed[name] += 1
            self.examples.setdefault(name, instance)

    @property
    def failures(self) -> int:
        return sum(self.failed.values())

    def names(self) -> list[str]:
        return sorted(set(self.passed) | set(self.failed))


def run(checks: dict[str, Callable], corpus: Iterable, tally: Tally | None = None, unpack=False) -> Tally:
    tally = tally or Tally()
    for item in corpus:
        for name, check in checks.items():
            try:
                ok = check(*item) if unpack else check(item)
            except Exception:  # a crash counts as a violation
                ok = False
            tally.record(name, ok, item)
    return tally


def full_suite(exhaustive: bool, n_random: int, seed: int, max_factors: int,
               max_capacity: int) -> Tally:
    """What ``check`` runs: R-matrix pairs, then the exhaustive and/or random corpora."""
    tally = run(PAIR_CHECKS, pairs(6), unpack=True)
    if exhaustive:
        run(PATH_CHECKS, exhaustive_paths(max_factors, max_capacity), tally)
    if n_random:
        rng = random.Random(seed)
        run(PATH_CHECKS, [random_path(rng, max_factors, max_capacity) for _ in range(n_random)], tally)
        small = [random_path(rng, 12, 4) for _ in range(n_random)]
        run(DYNAMICS_CHECKS, small, tally)
        run(PERIODIC_CHECKS, [random_b1_path(rng) for _ in range(n_random)], tally)
    return tally


def sample(seed: int, n: int, max_factors: int = 40, max_capacity: int = 6) -> list[list[RowElement]]:
    rng = random.Random(seed)
    return [random_path(rng, max_factors, max_capacity) for _ in range(n)]


def b1_sample(seed: int, n: int, max_len: int = 30) -> list[list[RowElement]]:
    rng = random.Random(seed)
    return [random_b1_path(rng, max_len) for _ in range(n)]


def describe(instance: Sequence) -> str:
    try:
        return ".".join(str(b) for b in instance)
    except TypeError:
        return repr(instance)
