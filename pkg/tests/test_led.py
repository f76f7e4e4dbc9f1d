import random

import pytest
from hypothesis import given, settings, strategies as st

from rcled import checks
from rcled.crystal import RowElement
from rcled.kkr import RiggedConfig, phi_classical
from rcled.led import (LocalEnergyTable, SolitonGroup, extract_groups_bottomup,
                       extract_groups_topdown, local_energy_table, phi_crystal, render_ascii,
                       rigging, table_dict)

E = RowElement.parse

# printed table for 1111.11.2.1122.1222.1.2.22
TABLE_A = [
    [0, 0, 1, 0, 1, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0],
]

CARDINALITIES_B = [3, 7, 1, 4, 1, 22, 1, 6, 2, 3, 4, 2, 6, 2, 2]
ROWS_B = [(2, 13), (2, 13), (6, 15), (2, 12), (4, 14), (3, 12), (2, 11), (6, 5), (1, 3),
          (22, -17), (1, 1), (4, 1), (1, 1), (7, -3), (3, -2)]


def path_of(text):
    return [E(s) for s in text.split(".")]


def table_from_bits(bits):
    """A table carrying only bits; enough for the extraction routines."""
    width = len(bits[0])
    cum, acc = [], [0] * width
    for row in bits:
        acc = [a + b for a, b in zip(acc, row)]
        cum.append(tuple(acc))
    return LocalEnergyTable(tuple(RowElement(1, 0) for _ in range(width)),
                            tuple(map(tuple, bits)), tuple(cum))


@st.composite
def paths(draw, max_factors=12, max_capacity=5):
    n = draw(st.integers(1, max_factors))
    out = []
    for _ in range(n):
        k = draw(st.integers(1, max_capacity))
        t = draw(st.integers(0, k))
        out.append(RowElement(k - t, t))
    return out


class TestTable:
    def test_example_a(self, path_a):
        t = local_energy_table(path_a)
        assert [list(r) for r in t.bits] == TABLE_A
        assert t.n_groups == 3

    def test_cumulative(self, path_a):
        t = local_energy_table(path_a)
        assert [t.total(l) for l in range(1, 8)] == [3, 5, 6, 7, 8, 9, 9]
        assert t.E(6, 8) == 2 and t.E(0, 3) == 0

    def test_all_ones(self):
        t = local_energy_table(path_of("11.1.111"))
        assert t.bits == ((0, 0, 0),)
        assert t.n_groups == 0

    def test_small(self):
        t = local_energy_table(path_of("2.12"))
        assert t.bits == ((1, 0), (0, 1), (0, 0))


class TestTopDown:
    def test_example_a(self, path_a):
        groups = extract_groups_topdown(local_energy_table(path_a))
        assert [g.terminal for g in groups] == [(2, 8), (1, 5), (6, 8)]
        assert [g.mu for g in groups] == [2, 1, 6]
        assert groups[2].cells == ((1, 3), (2, 4), (3, 4), (4, 5), (5, 5), (6, 8))

    def test_single_one(self):
        bits = [[0, 0, 1, 0], [0, 0, 0, 0]]
        assert extract_groups_topdown(table_from_bits(bits)) == [SolitonGroup(((1, 3),))]

    def test_example_b(self, path_b):
        groups = extract_groups_topdown(local_energy_table(path_b))
        # extraction runs right to left
        assert [g.mu for g in reversed(groups)] == CARDINALITIES_B

    def test_leftover_ones_rejected(self):
        # a lone 1 in row 2 cannot belong to any group
        with pytest.raises(ValueError):
            extract_groups_topdown(table_from_bits([[0, 1, 0], [1, 0, 0], [0, 0, 0]]))


class TestBottomUp:
    def test_example_a(self, path_a):
        t = local_energy_table(path_a)
        assert sorted(g.cells for g in extract_groups_bottomup(t)) == \
            sorted(g.cells for g in extract_groups_topdown(t))

    def test_single_one(self):
        bits = [[0, 1], [0, 0]]
        assert extract_groups_bottomup(table_from_bits(bits)) == [SolitonGroup(((1, 2),))]

    def test_example_b(self, path_b):
        t = local_energy_table(path_b)
        assert sorted(g.cells for g in extract_groups_bottomup(t)) == \
            sorted(g.cells for g in extract_groups_topdown(t))

    def test_wrap(self):
        # bottom 1 at column 1 finds its partner only by wrapping to the right end
        bits = [[0, 0, 1], [1, 0, 0], [0, 0, 0]]
        with pytest.raises(ValueError):
            extract_groups_bottomup(table_from_bits(bits))
        groups = extract_groups_bottomup(table_from_bits(bits), wrap=True)
        assert groups == [SolitonGroup(((1, 3), (2, 1)))]


class TestRigging:
    def test_example_a(self, path_a):
        t = local_energy_table(path_a)
        groups = extract_groups_topdown(t)
        assert [rigging(path_a, t, g) for g in groups] == [2, 1, 1]

    def test_example_a_by_hand(self, path_a):
        # (2+2+1+2+2+1+1) + 1 - 2(0+0+1+1+1+0+1+1)
        t = local_energy_table(path_a)
        assert rigging(path_a, t, SolitonGroup(((1, 7), (2, 8)))) == 11 + 1 - 10

    def test_single_two(self):
        path = [E("2")]
        t = local_energy_table(path)
        assert rigging(path, t, SolitonGroup(((1, 1),))) == -1
        assert phi_classical(path).vacancy(1) == -1


class TestPhiCrystal:
    def test_example_a(self, path_a):
        rc = phi_crystal(path_a)
        assert rc == RiggedConfig([4, 2, 1, 4, 4, 1, 1, 2], [(2, 2), (1, 1), (6, 1)])
        assert phi_crystal(path_a, "bottomup") == rc

    def test_all_ones(self):
        assert phi_crystal(path_of("1.11")) == RiggedConfig([1, 2])

    def test_example_b(self, path_b):
        t = local_energy_table(path_b)
        groups = extract_groups_topdown(t)
        assert [(g.mu, rigging(path_b, t, g)) for g in groups] == ROWS_B
        rc = phi_crystal(path_b)
        assert rc.vacancy_table() == {22: -15, 7: 15, 6: 19, 4: 21, 3: 18, 2: 14, 1: 10}

    def test_unknown_method(self, path_a):
        with pytest.raises(ValueError):
            phi_crystal(path_a, "sideways")


class TestRendering:
    def test_ascii_example_a(self, path_a):
        t = local_energy_table(path_a)
        text = render_ascii(t, extract_groups_topdown(t))
        lines = text.splitlines()
        assert lines[0].split() == "1111 11 2 1122 1222 1 2 22".split()
        assert lines[1].split()[2:] == [".", ".", "3", ".", "2*", ".", "1", "."]
        assert lines[6].split()[2:] == [".", ".", ".", ".", ".", ".", ".", "3*"]
        assert len(lines) == 8

    def test_json_shape(self, path_a):
        t = local_energy_table(path_a)
        d = table_dict(t, extract_groups_topdown(t))
        assert d["bits"] == TABLE_A
        assert d["groups"][0] == {"cells": [[1, 7], [2, 8]], "mu": 2, "j": 8, "r": 2}


@settings(max_examples=200, deadline=None)
@given(paths())
def test_lemma_suite(path):
    assert checks.led_binary(path)
    assert checks.led_row_sums(path)
    assert checks.led_columns(path)
    assert checks.non_crossing(path)
    assert checks.extraction_agree(path)
    assert phi_crystal(path) == phi_classical(path)


@settings(max_examples=150, deadline=None)
@given(paths(max_factors=8, max_capacity=4))
def test_nearest_choice_is_harmless(path):
    assert checks.nearest_choice(path)


def test_table_rows_monotone():
    rng = random.Random(3)
    for _ in range(100):
        t = local_energy_table(checks.random_path(rng, 20, 6))
        sums = t.row_sums
        assert list(sums) == sorted(sums, reverse=True)
        assert sums[-1] == 0
        totals = [t.total(l) for l in range(1, t.depth + 1)]
        assert totals == sorted(totals)
