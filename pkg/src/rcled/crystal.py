"""Row crystals B_k of sl2, the combinatorial R matrix and the energy function.

An element of B_k is the one-row tableau 1^x1 2^x2 with x1 + x2 = k.  Two
independent implementations of R are provided: the two-column dot diagram
(winding / unwinding pairs) and the piecewise-linear tropical formula.  The
sweeping code elsewhere uses the piecewise version; the diagram version exists
so that the two can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class RowElement(NamedTuple):
    """One-row tableau with ``ones`` letters 1 followed by ``twos`` letters 2."""

    ones: int
    twos: int

    @property
    def capacity(self) -> int:
        return self.ones + self.twos

    @classmethod
    def highest(cls, capacity: int) -> "RowElement":
        """The all-1 element u_l of B_l."""
        return cls(capacity, 0)

    @classmethod
    def parse(cls, text: str) -> "RowElement":
        """Parse the digit form, e.g. ``"1122"``.

        Raises ValueError for empty strings, letters other than 1/2, or a 1
        after a 2.
        """
        if not text:
            raise ValueError("empty tableau")
        for pos, ch in enumerate(text):
            if ch not in "12":
                raise ValueError(f"illegal character {ch!r} at position {pos}")
            if ch == "1" and pos > 0 and text[pos - 1] == "2":
                raise ValueError(f"decreasing tableau {text!r}: '1' after '2' at position {pos}")
        ones = text.count("1")
        return cls(ones, len(text) - ones)

    def word(self) -> str:
        return "1" * self.ones + "2" * self.twos

    def __str__(self) -> str:
        return self.word()


Path = Sequence[RowElement]


class RPair(NamedTuple):
    """Image of x (x) y under R, written left_out (x) right_out, with H(x (x) y)."""

    left_out: RowElement
    right_out: RowElement
    energy: int


@dataclass(frozen=True)
class AffineElement:
    element: RowElement
    mode: int = 0

    def __str__(self) -> str:
        return f"{self.element}[{self.mode}]"


def _pair_left_heavy(x: RowElement, y: RowElement) -> RPair:
    # capacity(x) >= capacity(y).  Every right dot finds a partner: first the
    # nearest strictly higher left dot (unwinding), otherwise wrap to the
    # bottom row and go up (winding).  Right dots are taken top to bottom.
    free = [x.ones, x.twos]
    paired = [0, 0]
    unwinding = 0
    for row, count in enumerate((y.ones, y.twos)):
        for _ in range(count):
            order = [(h, True) for h in range(row - 1, -1, -1)]
            order += [(h, False) for h in range(1, row - 1, -1)]
            for h, is_unwinding in order:
                if free[h]:
                    free[h] -= 1
                    paired[h] += 1
                    unwinding += is_unwinding
                    break
            else:  # pragma: no cover - impossible when capacity(x) >= capacity(y)
                raise AssertionError("no partner left for a right-column dot")
    left_out = RowElement(*paired)
    right_out = RowElement(y.ones + free[0], y.twos + free[1])
    return RPair(left_out, right_out, unwinding)


def _pair_right_heavy(x: RowElement, y: RowElement) -> RPair:
    # Mirror image of _pair_left_heavy, used when capacity(x) < capacity(y):
    # every left dot looks for the nearest strictly lower right dot
    # (unwinding), otherwise wraps to the top row and goes down.  Left dots are
    # taken bottom to top; unpaired right dots move to the left column.
    free = [y.ones, y.twos]
    paired = [0, 0]
    unwinding = 0
    for row, count in ((1, x.twos), (0, x.ones)):
        for _ in range(count):
            order = [(h, True) for h in range(row + 1, 2)]
            order += [(h, False) for h in range(0, row + 1)]
            for h, is_unwinding in order:
                if free[h]:
                    free[h] -= 1
                    paired[h] += 1
                    unwinding += is_unwinding
                    break
            else:  # pragma: no cover
                raise AssertionError("no partner left for a left-column dot")
    left_out = RowElement(x.ones + free[0], x.twos + free[1])
    right_out = RowElement(*paired)
    return RPair(left_out, right_out, unwinding)


def apply_R_diagram(x: RowElement, y: RowElement) -> RPair:
    """R and H via the Nakayashiki-Yamada winding/unwinding diagram."""
    if x.capacity >= y.capacity:
        return _pair_left_heavy(x, y)
    return _pair_right_heavy(x, y)


def apply_R_piecewise(x: RowElement, y: RowElement) -> RPair:
    """R and H via the tropical formula Q_i = min(x_{i+1}, y_i), indices mod 2."""
    q0 = min(x.ones, y.twos)
    q1 = min(x.twos, y.ones)
    new_x = RowElement(x.ones + q1 - q0, x.twos + q0 - q1)
    new_y = RowElement(y.ones + q0 - q1, y.twos + q1 - q0)
    return RPair(new_y, new_x, q0)


apply_R = apply_R_piecewise


def energy(x: RowElement, y: RowElement) -> int:
    """Local energy H(x (x) y), the number of unwinding pairs."""
    return min(x.ones, y.twos)


def apply_R_affine(a: AffineElement, b: AffineElement) -> tuple[AffineElement, AffineElement]:
    """Affine R: x[d] (x) y[e] -> y'[e - H] (x) x'[d + H]."""
    left, right, h = apply_R_diagram(a.element, b.element)
    return AffineElement(left, b.mode - h), AffineElement(right, a.mode + h)


def reading_word(path: Iterable[RowElement]) -> str:
    """Factors left to right, each factor read right to left (2's then 1's)."""
    return "".join("2" * b.twos + "1" * b.ones for b in path)


def is_highest(path: Iterable[RowElement]) -> bool:
    """True iff every prefix of the reading word has at least as many 1's as 2's."""
    balance = 0
    for letter in reading_word(path):
        balance += 1 if letter == "1" else -1
        if balance < 0:
            return False
    return True


def elements(capacity: int) -> list[RowElement]:
    """All elements of B_capacity, ordered by number of 2's."""
    return [RowElement(capacity - t, t) for t in range(capacity + 1)]


def path_str(path: Iterable[RowElement]) -> str:
    return ".".join(str(b) for b in path)
