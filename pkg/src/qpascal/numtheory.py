"""Binomial coefficients modulo primes: digits, Lucas, Anton, Kummer, valuations.

All functions are pure and operate on Python ints, so arguments of any size
are accepted.  Digit vectors are little-endian: index ``i`` holds the
coefficient of ``p**i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import DomainError, InvalidBase, ValuationOfZero

__all__ = [
    "DigitVec",
    "CarrySequence",
    "is_prime",
    "check_prime",
    "digits_base_p",
    "binom_exact",
    "binom_mod_lucas",
    "is_binom_divisible",
    "kummer_carries",
    "nu_p",
    "nu_p_binom",
]


@lru_cache(maxsize=256)
def is_prime(p: int) -> bool:
    """Trial-division primality test; bases used here are tiny."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


_SEEN_PRIMES: set[int] = set()


def check_prime(p: int) -> int:
    """Return ``p`` unchanged, or raise :class:`InvalidBase`."""
    if type(p) is int and p in _SEEN_PRIMES:
        return p
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise InvalidBase(f"base must be a prime >= 2, got {p!r}")
    _SEEN_PRIMES.add(int(p))
    return p


@dataclass(frozen=True)
class DigitVec:
    """Little-endian base-``base`` expansion of a non-negative integer."""

    digits: tuple[int, ...]
    base: int

    def __post_init__(self):
        if not self.digits:
            raise ValueError("a digit vector has at least one digit")
        if any(not 0 <= d < self.base for d in self.digits):
            raise ValueError(f"digits out of range for base {self.base}: {self.digits}")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise ValueError("most significant digit must be nonzero")

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def digit(self, i: int) -> int:
        """Digit ``i``, with implicit zeros above the most significant digit."""
        return self.digits[i] if i < len(self.digits) else 0

    @property
    def value(self) -> int:
        v = 0
        for d in reversed(self.digits):
            v = v * self.base + d
        return v


@dataclass(frozen=True)
class CarrySequence:
    """Carry bits ``c_0, c_1, ...`` from adding ``k`` and ``n - k`` in base p."""

    carries: tuple[int, ...]

    @property
    def count(self) -> int:
        return sum(self.carries)


def _raw_digits(n: int, p: int) -> list[int]:
    if n == 0:
        return [0]
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


def digits_base_p(n: int, p: int) -> DigitVec:
    """Base-``p`` digits of ``n >= 0``, least significant first.

    >>> digits_base_p(5, 3).digits
    (2, 1)
    """
    check_prime(p)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return DigitVec(tuple(_raw_digits(n, p)), p)


def binom_exact(n: int, k: int) -> int:
    """Exact binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


# Digits are consumed in chunks of base P = p**j (P <= _CHUNK_LIMIT) through
# lookup tables; both Lucas's product and the carry rule factor over chunks.
_CHUNK_LIMIT = 128


@lru_cache(maxsize=64)
def _chunk_base(p: int) -> int:
    P = p
    while P * p <= _CHUNK_LIMIT:
        P *= p
    return P


@lru_cache(maxsize=64)
def _lucas_table(p: int) -> tuple[int, ...]:
    # flat [a * P + b] -> C(a, b) mod p, zero when b > a
    P = _chunk_base(p)
    return tuple(math.comb(a, b) % p for a in range(P) for b in range(P))


@lru_cache(maxsize=64)
def _carry_table(p: int) -> tuple[tuple[int, int], ...]:
    # flat [(a * P + b) * 2 + c_in] -> (carries inside the chunk, c_out)
    P = _chunk_base(p)
    out = []
    for a in range(P):
        for b in range(P):
            for c_in in (0, 1):
                x, y, c, count, q = a, b, c_in, 0, P
                while q > 1:
                    x, xi = divmod(x, p)
                    y, yi = divmod(y, p)
                    if xi < yi:
                        c = 1
                    elif xi > yi:
                        c = 0
                    count += c
                    q //= p
                out.append((count, c))
    return tuple(out)


def binom_mod_lucas(n: int, k: int, p: int) -> int:
    """``C(n, k) mod p`` as the product of digitwise binomials."""
    check_prime(p)
    if n < 0 or k < 0:
        raise DomainError("n and k must be non-negative")
    if p > _CHUNK_LIMIT:
        r = 1
        while n or k:
            n, ni = divmod(n, p)
            k, ki = divmod(k, p)
            r = r * math.comb(ni, ki) % p
            if r == 0:
                return 0
        return r
    P = _chunk_base(p)
    table = _lucas_table(p)
    r = 1
    while n or k:
        n, ni = divmod(n, P)
        k, ki = divmod(k, P)
        r = r * table[ni * P + ki] % p
        if r == 0:
            return 0
    return r


def is_binom_divisible(n: int, k: int, p: int) -> bool:
    """True iff some base-p digit of ``k`` exceeds the matching digit of ``n``."""
    check_prime(p)
    if n < 0 or k < 0:
        raise DomainError("n and k must be non-negative")
    while n or k:
        n, ni = divmod(n, p)
        k, ki = divmod(k, p)
        if ki > ni:
            return True
    return False


def kummer_carries(n: int, k: int, p: int) -> CarrySequence:
    """Carries produced when ``k`` and ``n - k`` are added in base ``p``.

    Digit ``i`` carries iff ``n_i < k_i``, does not iff ``n_i > k_i``, and
    inherits the previous carry when the digits are equal.  One bit is
    returned per digit of ``n``.
    """
    check_prime(p)
    if k < 0 or n < 0:
        raise DomainError("n and k must be non-negative")
    if k > n:
        raise DomainError(f"need k <= n, got n={n}, k={k}")
    carries = []
    c = 0
    for ni in _raw_digits(n, p):
        k, ki = divmod(k, p)
        if ni < ki:
            c = 1
        elif ni > ki:
            c = 0
        carries.append(c)
    return CarrySequence(tuple(carries))


def nu_p(x: int, p: int) -> int:
    """Exponent of the largest power of ``p`` dividing ``x`` (sign ignored)."""
    check_prime(p)
    if x == 0:
        raise ValuationOfZero("nu_p(0) is infinite")
    x = abs(x)
    v = 0
    # peel off p**(2**j) chunks first so huge powers cost O(log v) divisions
    powers = [p]
    while x % powers[-1] == 0:
        x //= powers[-1]
        v += 1 << (len(powers) - 1)
        powers.append(powers[-1] * powers[-1])
    for j in range(len(powers) - 2, -1, -1):
        if x % powers[j] == 0:
            x //= powers[j]
            v += 1 << j
    return v


def nu_p_binom(n: int, k: int, p: int) -> int:
    """``nu_p(C(n, k))`` by counting Kummer carries; no big binomial is built."""
    check_prime(p)
    if k < 0 or k > n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    c = total = 0
    if p > _CHUNK_LIMIT:
        while n:
            n, ni = divmod(n, p)
            k, ki = divmod(k, p)
            if ni < ki:
                c = 1
            elif ni > ki:
                c = 0
            total += c
        return total
    P = _chunk_base(p)
    table = _carry_table(p)
    while n:
        n, ni = divmod(n, P)
        k, ki = divmod(k, P)
        count, c = table[(ni * P + ki) * 2 + c]
        total += count
    return total
