"""Row sums and diagonal sums of Pascal's triangle and the Hadamard triangle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .closed_form import h_blue, h_red
from .walk import HADAMARD, iter_states

__all__ = [
    "SeqRecord",
    "row_amplitude_sums",
    "shallow_diagonals_pascal",
    "hadamard_diagonals",
    "hadamard_triangle",
    "to_csv",
]

# third-order recurrences: x_n = sum_i coeffs[i] * x_{n-1-i}
A_RECURRENCE = (-1, 1, 2)
B_RECURRENCE = (1, -1, 2)


@dataclass(frozen=True)
class SeqRecord:
    name: str
    values: tuple[int, ...]
    recurrence: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.values)

    def recurrence_violations(self) -> list[int]:
        """Indices ``n >= order`` where the attached recurrence fails."""
        order = len(self.recurrence)
        bad = []
        for n in range(order, len(self.values)):
            pred = sum(c * self.values[n - 1 - i] for i, c in enumerate(self.recurrence))
            if pred != self.values[n]:
                bad.append(n)
        return bad


def row_amplitude_sums(t_max: int) -> SeqRecord:
    """Sum of every scaled Hadamard amplitude (up and down) in rows ``0..t_max``."""
    values = tuple(sum(s.a) + sum(s.b) for s in iter_states(HADAMARD, t_max))
    return SeqRecord("row_amplitude_sums", values)


def shallow_diagonals_pascal(n_max: int) -> SeqRecord:
    """``d_n = sum_c C(n - c, c)``; these are Fibonacci numbers ``F_{n+1}``."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    values = tuple(sum(math.comb(n - c, c) for c in range(n // 2 + 1)) for n in range(n_max + 1))
    return SeqRecord("shallow_diagonals", values, (1, 1))


@lru_cache(maxsize=8)
def hadamard_triangle(rows: int, color: str, source: str = "closed_form") -> tuple[tuple[int, ...], ...]:
    """Blue (down) or red (up) Hadamard triangle as rows ``H[R][C]``, ``R < rows``.

    ``source="closed_form"`` evaluates :func:`h_blue`/:func:`h_red` per cell;
    ``source="walk"`` reads the same cells off the simulator.
    """
    if color not in ("blue", "red"):
        raise ValueError(f"color must be 'blue' or 'red', got {color!r}")
    if source == "closed_form":
        h = h_blue if color == "blue" else h_red
        return tuple(tuple(h(R, C) for C in range(R + 1)) for R in range(rows))
    if source == "walk":
        out = []
        for s in iter_states(HADAMARD, rows):
            if s.t == 0:
                continue
            # down at pos 2C-R-1 is sublattice index C; up at 2C-R+1 is C+1
            out.append(s.b[: s.t] if color == "blue" else s.a[1:])
        return tuple(out)
    raise ValueError(f"unknown source {source!r}")


def _diagonal(H, direction: str, n_max: int) -> list[int]:
    out = []
    for n in range(n_max + 1):
        total = 0
        c = 0
        while True:
            R = n - c
            C = c if direction == "A" else n - 2 * c
            if C < 0 or C > R:
                break
            total += H[R][C]
            c += 1
        out.append(total)
    return out


def hadamard_diagonals(direction: str, color: str, n_max: int, source: str = "closed_form") -> SeqRecord:
    """Diagonal sums of the Hadamard triangles.

    ``direction="A"`` sums ``H(n - c, c)`` (rising diagonals), ``"B"`` sums
    ``H(n - c, n - 2c)`` (falling diagonals); cells outside the triangle
    contribute nothing.  ``color`` picks the blue (down) or red (up) triangle.
    """
    if direction not in ("A", "B"):
        raise ValueError(f"direction must be 'A' or 'B', got {direction!r}")
    if n_max < 3:
        raise ValueError(f"n_max must be >= 3, got {n_max}")
    values = _diagonal(hadamard_triangle(n_max + 1, color, source), direction, n_max)
    rec = A_RECURRENCE if direction == "A" else B_RECURRENCE
    return SeqRecord(f"{direction}_{color}", tuple(values), rec)


def to_csv(seq: SeqRecord) -> str:
    return "".join(f"{n},{v}\n" for n, v in enumerate(seq.values))
