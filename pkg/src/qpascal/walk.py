"""Exact integer time evolution of the scaled 1-D quantum walk.

The coin family is ``sqrt(n) * [[1, sqrt(m)], [sqrt(m), -1]]`` (``m = n = 1``
is ``sqrt(2) H``, the scaled Hadamard coin).  The walker starts in
``|0, up>``; up components shift right and down components shift left.

Radicals are never materialised.  A state at time ``t`` stores integers
``a(pos)`` and ``b(pos)`` with

    up amplitude   = a(pos)           * sqrt(n)**t / sqrt(n(1+m))**t
    down amplitude = b(pos) * sqrt(m) * sqrt(n)**t / sqrt(n(1+m))**t

so one step is the pure integer recurrence

    a'(pos) = a(pos-1) + m * b(pos-1)
    b'(pos) = a(pos+1) -     b(pos+1)

Only the sublattice ``pos = 2k - t`` (``k = 0..t``) can be nonzero, so the
coefficients are kept in dense lists indexed by ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "CoinParams",
    "WalkState",
    "HADAMARD",
    "initial_state",
    "step",
    "evolve",
    "iter_states",
    "scaled_probability",
    "format_row",
]


@dataclass(frozen=True)
class CoinParams:
    """Integer coin class ``m >= 0`` and scale class ``n >= 1``."""

    m: int = 1
    n: int = 1

    def __post_init__(self):
        for name in ("m", "n"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"{name} must be an int, got {v!r}")
        if self.m < 0:
            raise ValueError(f"coin class m must be >= 0, got {self.m}")
        if self.n < 1:
            raise ValueError(f"scale class n must be >= 1, got {self.n}")

    @property
    def norm(self) -> int:
        """Squared scale per step, ``n(1+m)``."""
        return self.n * (1 + self.m)


HADAMARD = CoinParams(1, 1)


@dataclass(frozen=True)
class WalkState:
    t: int
    coin: CoinParams
    a: tuple[int, ...]
    b: tuple[int, ...]

    def _index(self, pos: int) -> int | None:
        if abs(pos) > self.t or (self.t + pos) % 2:
            return None
        return (pos + self.t) // 2

    def up(self, pos: int) -> int:
        i = self._index(pos)
        return 0 if i is None else self.a[i]

    def down(self, pos: int) -> int:
        i = self._index(pos)
        return 0 if i is None else self.b[i]

    def positions(self) -> range:
        """Positions of the (possibly) nonzero sublattice, ascending."""
        return range(-self.t, self.t + 1, 2)

    def rows(self) -> Iterator[tuple[int, int, int]]:
        for pos, a, b in zip(self.positions(), self.a, self.b):
            yield pos, a, b


def initial_state(coin: CoinParams = HADAMARD) -> WalkState:
    return WalkState(0, coin, (1,), (0,))


def step(s: WalkState) -> WalkState:
    m = s.coin.m
    a, b = s.a, s.b
    t = s.t
    # new index j reads old index j-1 for up and old index j for down
    new_a = [0] * (t + 2)
    new_b = [0] * (t + 2)
    for j in range(1, t + 2):
        new_a[j] = a[j - 1] + m * b[j - 1]
    for j in range(t + 1):
        new_b[j] = a[j] - b[j]
    return WalkState(t + 1, s.coin, tuple(new_a), tuple(new_b))


def iter_states(coin: CoinParams, t_max: int) -> Iterator[WalkState]:
    """Yield the states at times ``0, 1, ..., t_max``."""
    if t_max < 0:
        raise ValueError(f"t_max must be >= 0, got {t_max}")
    s = initial_state(coin)
    yield s
    for _ in range(t_max):
        s = step(s)
        yield s


def evolve(coin: CoinParams, t: int) -> WalkState:
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    s = initial_state(coin)
    for _ in range(t):
        s = step(s)
    return s


def scaled_probability(s: WalkState, pos: int) -> int:
    """Probability of finding the walker at ``pos``, times ``(n(1+m))**t``.

    Equals ``n**t * (a**2 + m*b**2)``; summed over positions it gives
    ``(n(1+m))**t`` exactly.
    """
    a, b = s.up(pos), s.down(pos)
    return s.coin.n ** s.t * (a * a + s.coin.m * b * b)


def format_row(s: WalkState, with_probability: bool = False) -> str:
    """Tab-separated ``pos a b`` lines, one per sublattice position."""
    lines = []
    for pos, a, b in s.rows():
        fields = [pos, a, b]
        if with_probability:
            fields.append(scaled_probability(s, pos))
        lines.append("\t".join(str(f) for f in fields))
    return "\n".join(lines) + "\n"
