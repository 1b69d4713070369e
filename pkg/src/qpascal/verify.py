"""Exhaustive invariant suites driven by ``qpascal verify``.

Each suite compares a fast path against an independent brute-force route and
returns a :class:`Report` with the number of checks and the first failure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .closed_form import f_m, f_m_mod_digitwise, psi_down, psi_up
from .numtheory import binom_mod_lucas, is_binom_divisible, kummer_carries, nu_p_binom
from .render import base_image, carpet_image, recursive_expand
from .sequences import hadamard_diagonals, row_amplitude_sums, shallow_diagonals_pascal
from .walk import HADAMARD, CoinParams, iter_states

__all__ = ["Report", "SUITES", "LIMITS", "run_suite"]

# upper bounds accepted by the CLI
LIMITS = {"max": 5000, "tmax": 200, "levels": 5, "nmax": 2000}


@dataclass
class Report:
    name: str
    checks: int = 0
    failures: int = 0
    first: str | None = None

    def check(self, ok: bool, describe) -> None:
        self.checks += 1
        if not ok:
            self.fail(describe())

    def fail(self, message: str) -> None:
        """Record a failure whose check was already counted."""
        self.failures += 1
        if self.first is None:
            self.first = message

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.checks} checks, {self.failures} failures"
        if self.first:
            line += f"; first counterexample: {self.first}"
        return line


def _pascal_rows(n_max: int):
    """Exact rows of Pascal's triangle by big-integer addition."""
    row = [1]
    yield row
    for _ in range(n_max):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
        yield row


def _nu_brute(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def verify_lucas(primes=(2, 3, 5), max_n: int = 500) -> Report:
    rep = Report("lucas")
    for n, row in enumerate(_pascal_rows(max_n)):
        for p in primes:
            rep.checks += 2 * len(row)
            for k, b in enumerate(row):
                r = b % p
                got = binom_mod_lucas(n, k, p)
                if got != r:
                    rep.fail(f"C({n},{k}) mod {p}: lucas={got}, exact={r}")
                div = is_binom_divisible(n, k, p)
                if div != (r == 0):
                    rep.fail(f"divisibility of C({n},{k}) by {p}: {div}")
    return rep


def verify_kummer(primes=(2, 3, 5), max_n: int = 500, sequences: bool = True) -> Report:
    """Carry counts against brute-force valuations of exact binomials.

    With ``sequences`` set, the full carry sequence is also checked against
    the count on every 7th row (it is the slow path).
    """
    rep = Report("kummer")
    for n, row in enumerate(_pascal_rows(max_n)):
        full = sequences and n % 7 == 0
        for p in primes:
            rep.checks += (2 if full else 1) * len(row)
            for k, b in enumerate(row):
                got = nu_p_binom(n, k, p)
                want = _nu_brute(b, p)
                if got != want:
                    rep.fail(f"nu_{p}(C({n},{k})): carries={got}, exact={want}")
                if full:
                    seq = kummer_carries(n, k, p).count
                    if seq != want:
                        rep.fail(f"carry sequence of ({n},{k}) base {p}: {seq}")
    return rep


def verify_closed_form(t_max: int = 40, ms=range(5), ns=(1, 2, 3)) -> Report:
    rep = Report("closed-form")
    for m in ms:
        for n in ns:
            coin = CoinParams(m, n)
            for s in iter_states(coin, t_max):
                t = s.t
                for pos in range(-t, t + 1):
                    u, d = psi_up(coin, pos, t), psi_down(coin, pos, t)
                    rep.check(u == s.up(pos), lambda: f"psi_up{(m, n, pos, t)}={u}, walk={s.up(pos)}")
                    rep.check(d == s.down(pos), lambda: f"psi_down{(m, n, pos, t)}={d}, walk={s.down(pos)}")
    return rep


def phi_table(size: int) -> list[list[int]]:
    """Exact ``Phi(x, y)`` for ``x, y < size``, read off the Hadamard simulator.

    ``Phi(x, y)`` is the down coefficient at ``t = x + y + 1``,
    ``pos = x - y - 1``, i.e. sublattice index ``x``.
    """
    table = [[0] * size for _ in range(size)]
    for s in iter_states(HADAMARD, 2 * size - 1):
        t = s.t
        for x in range(max(0, t - size), min(t, size)):
            table[x][t - 1 - x] = s.b[x]
    return table


def verify_carpet(levels: int = 3, primes=(2, 3, 5), ms=range(1, 5)) -> Report:
    """Carpet self-similarity, digitwise f_m, and recursive vs direct masks."""
    rep = Report("carpet")
    size = 3 ** (levels + 1)
    ph = phi_table(size)
    for n in range(1, levels + 1):
        s = 3**n
        for l in range(3):
            for q in range(3):
                base = ph[l][q] % 3
                if (l, q) == (1, 1):
                    rep.check(base == 0, lambda: "Phi(1,1) != 0 mod 3")
                else:
                    rep.check(base in (1, 2), lambda: f"Phi({l},{q}) = 0 mod 3")
                for x in range(s):
                    for y in range(s):
                        got = ph[l * s + x][q * s + y] % 3
                        want = base * ph[x][y] % 3
                        rep.check(got == want, lambda: f"Phi({l}*3^{n}+{x}, {q}*3^{n}+{y}) mod 3")
    for p in primes:
        for m in ms:
            for x in range(p**3):
                for y in range(p**3):
                    got = f_m_mod_digitwise(m, x, y, p)
                    want = f_m(m, x, y) % p
                    rep.check(got == want, lambda: f"f_{m}({x},{y}) mod {p}: digitwise={got}, exact={want}")
            if (m % p) == 0:
                continue
            for k in range(1, levels + 1):
                rec = recursive_expand(base_image(m, p), k).mask
                direct = carpet_image(CoinParams(m, 1), p**k, p).mask
                rep.check(np.array_equal(rec, direct), lambda: f"recursive != direct for m={m}, p={p}, k={k}")
    return rep


def verify_sequences(t_max: int = 200, n_max: int = 300) -> Report:
    rep = Report("sequences")
    for t, v in enumerate(row_amplitude_sums(t_max).values):
        want = 2 ** (t // 2) if t % 2 == 0 else 2 ** ((t + 1) // 2)
        rep.check(v == want, lambda: f"row sum t={t}: {v} != {want}")
    d = shallow_diagonals_pascal(max(n_max, 2)).values
    fib = [1, 1]
    while len(fib) < len(d):
        fib.append(fib[-1] + fib[-2])
    for i, (a, b) in enumerate(zip(d, fib)):
        rep.check(a == b, lambda: f"d_{i}={a} != F_{i + 1}={b}")
    nm = max(n_max, 3)
    seqs = {(dr, c): hadamard_diagonals(dr, c, nm) for dr in "AB" for c in ("blue", "red")}
    for seq in seqs.values():
        for i in range(3, len(seq)):
            rep.check(_rec_ok(seq, i), lambda: f"{seq.name} recurrence fails at n={i}")
    ab, ar = seqs["A", "blue"].values, seqs["A", "red"].values
    bb, br = seqs["B", "blue"].values, seqs["B", "red"].values
    for i in range(2, nm + 1):
        rep.check(ab[i] == ar[i - 2] - ab[i - 1], lambda: f"A_blue coupling at n={i}")
        rep.check(ar[i] == ar[i - 2] + ab[i - 1], lambda: f"A_red coupling at n={i}")
        rep.check(bb[i] == br[i - 1] - bb[i - 2], lambda: f"B_blue coupling at n={i}")
        rep.check(br[i] == br[i - 1] + bb[i - 2], lambda: f"B_red coupling at n={i}")
    return rep


def _rec_ok(seq, i: int) -> bool:
    v = seq.values
    return v[i] == sum(c * v[i - 1 - j] for j, c in enumerate(seq.recurrence))


def run_suite(name: str, **bounds) -> list[Report]:
    if name == "all":
        return [r for n in SUITES for r in run_suite(n, **bounds)]
    return [SUITES[name](**bounds)]


def _lucas(p=None, max=500, **_):
    return verify_lucas((p,) if p else (2, 3, 5), max)


def _kummer(p=None, max=500, **_):
    return verify_kummer((p,) if p else (2, 3, 5), max)


def _closed(tmax=40, **_):
    return verify_closed_form(tmax)


def _carpet(levels=3, **_):
    return verify_carpet(levels)


def _seq(tmax=200, nmax=300, **_):
    return verify_sequences(tmax, nmax)


SUITES = {
    "lucas": _lucas,
    "kummer": _kummer,
    "closed-form": _closed,
    "carpet": _carpet,
    "sequences": _seq,
}
