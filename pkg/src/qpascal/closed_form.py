"""Per-cell closed forms for the walk amplitudes and the ``f_m`` kernel.

``f_m(x, y) = sum_k C(x, k) C(y, k) (-m)**k``.  Mod a prime ``p`` it factors
over base-p digit pairs, which is what makes the walk pictures fractal.

Coordinates: blue (down) cells sit at row ``R``, column ``C`` with walk time
``t = R + 1`` and position ``2C - R - 1``; red (up) cells at the same
``(R, C)`` sit at position ``2C - R + 1``.  Square coordinates are ``x = C``,
``y = R - C``.

The amplitude formulas use the real coin with phases ``alpha = beta = 0``,
``gamma = pi`` (so ``m = 1`` is exactly the Hadamard coin) and return the
integers ``a(pos)``, ``b(pos)`` used by :mod:`qpascal.walk`.

Aside: ``f_m(x, y) = 2F1(-x, -y; 1; -m)``.
"""

from __future__ import annotations

from functools import lru_cache

from .exceptions import DomainError
from .numtheory import check_prime
from .walk import CoinParams

__all__ = [
    "f_m",
    "f_m_mod_digitwise",
    "f_m_digit_table",
    "psi_up",
    "psi_down",
    "h_blue",
    "h_red",
    "phi",
    "phi_general",
    "xy_to_rc",
    "rc_to_xy",
    "blue_to_walk",
    "red_to_walk",
]


def _pair_sum(x: int, y: int, w: int, shift: int) -> int:
    """``sum_{k >= shift} C(x, k) * C(y, k - shift) * w**k``.

    Binomials are advanced along ``k`` by their ratio recurrences.
    """
    if x < shift or y < 0:
        return 0
    bx = 1
    for i in range(shift):
        bx = bx * (x - i) // (i + 1)
    by = 1
    wk = w**shift
    total = 0
    k, j = shift, 0
    while True:
        total += bx * by * wk
        if k >= x or j >= y:
            return total
        bx = bx * (x - k) // (k + 1)
        by = by * (y - j) // (j + 1)
        wk *= w
        k += 1
        j += 1


def f_m(m: int, x: int, y: int) -> int:
    """Exact ``sum_{k=0}^{min(x,y)} C(x,k) C(y,k) (-m)**k``; any integer ``m``."""
    if x < 0 or y < 0:
        raise DomainError(f"x and y must be non-negative, got ({x}, {y})")
    return _pair_sum(x, y, -m, 0)


@lru_cache(maxsize=256)
def f_m_digit_table(m: int, p: int) -> tuple[tuple[int, ...], ...]:
    """``f_m(x, y) mod p`` for single digits, indexed ``[x][y]``."""
    check_prime(p)
    return tuple(tuple(f_m(m, x, y) % p for y in range(p)) for x in range(p))


def f_m_mod_digitwise(m: int, x: int, y: int, p: int) -> int:
    """``f_m(x, y) mod p`` as a product over base-p digit pairs."""
    table = f_m_digit_table(m, p)
    if x < 0 or y < 0:
        raise DomainError(f"x and y must be non-negative, got ({x}, {y})")
    r = 1
    while x or y:
        x, xi = divmod(x, p)
        y, yi = divmod(y, p)
        r = r * table[xi][yi] % p
        if r == 0:
            return 0
    return r


def psi_up(coin: CoinParams, pos: int, t: int) -> int:
    """Integer up coefficient ``a(pos)`` at time ``t`` by path counting."""
    if t < 0 or abs(pos) > t or (t + pos) % 2:
        return 0
    if pos == t:
        return 1
    right = (t + pos) // 2
    left = (t - pos) // 2
    # paths with k down/up turns: C(right, k) C(left-1, k-1) m**k (-1)**(left-k)
    sign = -1 if left % 2 else 1
    return sign * _pair_sum(right, left - 1, -coin.m, 1)


def psi_down(coin: CoinParams, pos: int, t: int) -> int:
    """Integer down coefficient ``b(pos)`` at time ``t`` by path counting."""
    if t < 0 or abs(pos) > t or (t + pos) % 2:
        return 0
    right = (t + pos) // 2
    left = (t - pos) // 2 - 1
    if left < 0:
        return 0
    # C(right, k) C(left, k) m**k (-1)**(left-k)
    sign = -1 if left % 2 else 1
    return sign * _pair_sum(right, left, -coin.m, 0)


def _check_rc(R: int, C: int) -> None:
    if C < 0 or C > R:
        raise DomainError(f"need 0 <= C <= R, got R={R}, C={C}")


def h_blue(R: int, C: int) -> int:
    """Hadamard down coefficient at row ``R``, column ``C`` of the blue triangle."""
    _check_rc(R, C)
    sign = -1 if (R - C) % 2 else 1
    return sign * _pair_sum(C, R - C, -1, 0)


def h_red(R: int, C: int) -> int:
    """Hadamard up coefficient at row ``R``, column ``C`` of the red triangle."""
    _check_rc(R, C)
    if C == R:
        return 1
    sign = -1 if (R - C) % 2 else 1
    return sign * _pair_sum(C + 1, R - C - 1, -1, 1)


def phi(x: int, y: int) -> int:
    """Hadamard down coefficient in square coordinates: ``(-1)**y f_1(x, y)``."""
    v = f_m(1, x, y)
    return -v if y % 2 else v


def phi_general(coin: CoinParams, x: int, y: int) -> int:
    """Scaled down-probability ``m * n**(x+y+1) * f_m(x, y)**2`` at square cell (x, y)."""
    v = f_m(coin.m, x, y)
    return coin.m * coin.n ** (x + y + 1) * v * v


def xy_to_rc(x: int, y: int) -> tuple[int, int]:
    return x + y, x


def rc_to_xy(R: int, C: int) -> tuple[int, int]:
    return C, R - C


def blue_to_walk(R: int, C: int) -> tuple[int, int]:
    """``(pos, t)`` of the down amplitude behind blue cell ``(R, C)``."""
    return 2 * C - R - 1, R + 1


def red_to_walk(R: int, C: int) -> tuple[int, int]:
    """``(pos, t)`` of the up amplitude behind red cell ``(R, C)``."""
    return 2 * C - R + 1, R + 1
