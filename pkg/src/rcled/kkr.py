"""Rigged configurations and the box adding / box removing KKR maps.

Both maps work letter by letter.  A factor 1^x1 2^x2 is consumed as its
reversed word 2^x2 1^x1: the quantum space grows one box per letter, and each
letter 2 also adds a box to the configuration.  ``phi_inverse`` undoes these
steps in the opposite order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .crystal import RowElement


class InvalidConfiguration(ValueError):
    """A rigged configuration that is not the image of any path."""


def _q(counts: Mapping[int, int], j: int) -> int:
    return sum(mult * min(j, length) for length, mult in counts.items() if mult)


def vacancy_number(quantum_space: Mapping[int, int], config: Mapping[int, int], j: int) -> int:
    """p_j = Q_j(lambda) - 2 Q_j(mu); both arguments map row length -> multiplicity."""
    return _q(quantum_space, j) - 2 * _q(config, j)


@dataclass(frozen=True)
class RiggedConfig:
    """Quantum space ``lambda`` and rows ``(length, rigging)`` of the configuration.

    Stored in canonical order (lambda descending, rows by length then rigging,
    descending) so that ``==`` is multiset equality.
    """

    quantum_space: tuple[int, ...] = ()
    rows: tuple[tuple[int, int], ...] = ()
    _lam: Counter = field(init=False, repr=False, compare=False, hash=False)
    _mu: Counter = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        lam = tuple(sorted((int(w) for w in self.quantum_space), reverse=True))
        rows = tuple(sorted(((int(m), int(r)) for m, r in self.rows), reverse=True))
        if any(w <= 0 for w in lam):
            raise ValueError(f"quantum space entries must be positive: {lam}")
        if any(m <= 0 for m, _ in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        object.__setattr__(self, "quantum_space", lam)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_lam", Counter(lam))
        object.__setattr__(self, "_mu", Counter(m for m, _ in rows))

    @property
    def config(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.rows)

    @property
    def riggings(self) -> tuple[int, ...]:
        return tuple(r for _, r in self.rows)

    def q(self, j: int, level: int) -> int:
        """Q_j^(0) (level 0, quantum space) or Q_j^(1) (level 1, configuration)."""
        return _q(self._lam if level == 0 else self._mu, j)

    def vacancy(self, j: int) -> int:
        if j < 1:
            raise ValueError("row length must be >= 1")
        return vacancy_number(self._lam, self._mu, j)

    def vacancy_table(self) -> dict[int, int]:
        """Vacancy numbers for the row lengths present in the configuration, longest first."""
        return {m: self.vacancy(m) for m in sorted(self._mu, reverse=True)}

    def is_singular(self, index: int) -> bool:
        m, r = self.rows[index]
        return r == self.vacancy(m)

    def coriggings(self) -> tuple[int, ...]:
        return tuple(self.vacancy(m) - r for m, r in self.rows)

    def shifted(self, shift) -> "RiggedConfig":
        """Riggings r -> r + shift(length)."""
        return RiggedConfig(self.quantum_space, [(m, r + shift(m)) for m, r in self.rows])

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.quantum_space),
            "rows": [[m, r] for m, r in self.rows],
            "vacancy": {str(m): p for m, p in self.vacancy_table().items()},
        }

    def __str__(self) -> str:
        rows = " ".join(f"({m},{r})" for m, r in self.rows) or "()"
        return f"lambda={list(self.quantum_space)} rows={rows}"


def vacancy(rc: RiggedConfig, j: int) -> int:
    return rc.vacancy(j)


def is_singular(rc: RiggedConfig, row_index: int) -> bool:
    return rc.is_singular(row_index)


def rc_equal(a: RiggedConfig, b: RiggedConfig) -> bool:
    return a.quantum_space == b.quantum_space and a.rows == b.rows


class _State:
    """Mutable working copy used while adding or removing boxes."""

    def __init__(self, done: Counter, rows: list[list[int]]):
        self.done = done          # completed quantum-space rows
        self.rows = rows          # [length, rigging], creation order
        self.mu = Counter(m for m, _ in rows)

    def p(self, j: int, partial: Iterable[int] = ()) -> int:
        q0 = _q(self.done, j) + sum(min(j, w) for w in partial)
        return q0 - 2 * _q(self.mu, j)

    def singular(self, partial: Sequence[int]) -> list[int]:
        cache: dict[int, int] = {}
        found = []
        for i, (m, r) in enumerate(self.rows):
            if m not in cache:
                cache[m] = self.p(m, partial)
            if r == cache[m]:
                found.append(i)
        return found

    def resize(self, i: int, delta: int) -> int:
        m = self.rows[i][0]
        self.mu[m] -= 1
        m += delta
        self.rows[i][0] = m
        if m:
            self.mu[m] += 1
        return m


def phi_classical(path: Iterable[RowElement], trace: list | None = None) -> RiggedConfig:
    """Path -> (unrestricted) rigged configuration by box addition.

    If ``trace`` is given, ``(factor index, column)`` is appended for every
    box added to the configuration, factor indices starting at 1.
    """
    st = _State(Counter(), [])
    for pos, b in enumerate(path, 1):
        width = 0
        for _ in range(b.twos):
            cand = st.singular((width,))
            width += 1
            if cand:
                # longest singular row; among equal lengths the newest
                i = max(cand, key=lambda k: (st.rows[k][0], k))
                m = st.resize(i, +1)
            else:
                st.rows.append([1, 0])
                st.mu[1] += 1
                i, m = len(st.rows) - 1, 1
            st.rows[i][1] = st.p(m, (width,))
            if trace is not None:
                trace.append((pos, m))
        st.done[b.capacity] += 1
    return RiggedConfig(tuple(st.done.elements()), [tuple(r) for r in st.rows])


def phi_inverse(rc: RiggedConfig, capacities: Sequence[int]) -> list[RowElement]:
    """Rigged configuration -> path with the given factor capacities, by box removal.

    Raises InvalidConfiguration when ``rc`` is not the image of a path with
    these capacities.
    """
    if sorted(capacities, reverse=True) != list(rc.quantum_space):
        raise InvalidConfiguration(
            f"quantum space {list(rc.quantum_space)} does not match capacities {list(capacities)}")
    for m, r in rc.rows:
        if r > rc.vacancy(m):
            raise InvalidConfiguration(f"row ({m},{r}) has rigging above vacancy {rc.vacancy(m)}")
    st = _State(Counter(rc.quantum_space), [list(row) for row in rc.rows])
    out: list[RowElement] = []
    for cap in reversed(capacities):
        st.done[cap] -= 1
        letters = []
        for t in range(cap, 0, -1):
            cand = st.singular((t - 1, 1))
            if not cand:
                if letters and letters[-1] == 2:
                    raise InvalidConfiguration(f"letter 1 after 2 in factor of width {cap}")
                letters.append(1)
                continue
            letters.append(2)
            i = min(cand, key=lambda k: st.rows[k][0])
            m = st.resize(i, -1)
            if m:
                st.rows[i][1] = st.p(m, (t - 1,))
            else:
                del st.rows[i]
        out.append(RowElement(letters.count(1), letters.count(2)))
    if st.rows:
        raise InvalidConfiguration(f"rows left over after removing every letter: {st.rows}")
    out.reverse()
    return out
