import pytest
from hypothesis import given, strategies as st

from qpascal.closed_form import h_blue, h_red
from qpascal.sequences import (
    A_RECURRENCE,
    B_RECURRENCE,
    SeqRecord,
    hadamard_diagonals,
    hadamard_triangle,
    row_amplitude_sums,
    shallow_diagonals_pascal,
    to_csv,
)
from qpascal.walk import HADAMARD, iter_states


def fibonacci(count):
    fib = [1, 1]
    while len(fib) < count:
        fib.append(fib[-1] + fib[-2])
    return fib[:count]


def test_row_sum_examples():
    v = row_amplitude_sums(4).values
    assert (v[0], v[3], v[4]) == (1, 4, 4)


def test_row_sums_are_powers_of_two():
    for t, v in enumerate(row_amplitude_sums(200).values):
        assert v == (2 ** (t // 2) if t % 2 == 0 else 2 ** ((t + 1) // 2))


def test_row_sums_against_walk():
    for s, v in zip(iter_states(HADAMARD, 30), row_amplitude_sums(30).values):
        assert v == sum(s.up(x) + s.down(x) for x in s.positions())


def test_shallow_examples():
    d = shallow_diagonals_pascal(10).values
    assert d[:5] == (1, 1, 2, 3, 5)
    assert d[10] == 89


def test_shallow_is_fibonacci():
    seq = shallow_diagonals_pascal(500)
    assert list(seq.values) == fibonacci(501)
    assert seq.recurrence_violations() == []


def test_shallow_rejects_negative():
    with pytest.raises(ValueError):
        shallow_diagonals_pascal(-1)


@pytest.mark.parametrize("direction", ["A", "B"])
@pytest.mark.parametrize("color", ["blue", "red"])
def test_third_order_recurrences(direction, color):
    seq = hadamard_diagonals(direction, color, 300)
    assert len(seq) == 301
    assert seq.recurrence == (A_RECURRENCE if direction == "A" else B_RECURRENCE)
    assert seq.recurrence_violations() == []


def test_coupled_forms():
    ab, ar = (hadamard_diagonals("A", c, 300).values for c in ("blue", "red"))
    bb, br = (hadamard_diagonals("B", c, 300).values for c in ("blue", "red"))
    for n in range(2, 301):
        assert ab[n] == ar[n - 2] - ab[n - 1]
        assert ar[n] == ar[n - 2] + ab[n - 1]
        assert bb[n] == br[n - 1] - bb[n - 2]
        assert br[n] == br[n - 1] + bb[n - 2]


def test_first_terms_by_direct_summation():
    for color, h in (("blue", h_blue), ("red", h_red)):
        a = hadamard_diagonals("A", color, 12).values
        b = hadamard_diagonals("B", color, 12).values
        for n in range(13):
            assert a[n] == sum(h(n - c, c) for c in range(n // 2 + 1))
            assert b[n] == sum(h(n - c, n - 2 * c) for c in range(n // 2 + 1))
    assert hadamard_diagonals("A", "blue", 3).values[0] == h_blue(0, 0)
    assert hadamard_diagonals("A", "red", 3).values[0] == h_red(0, 0)


@pytest.mark.parametrize("color", ["blue", "red"])
def test_triangle_sources_agree(color):
    assert hadamard_triangle(60, color, "closed_form") == hadamard_triangle(60, color, "walk")
    for d in "AB":
        assert hadamard_diagonals(d, color, 40, "walk") == hadamard_diagonals(d, color, 40)


def test_bad_arguments():
    with pytest.raises(ValueError):
        hadamard_diagonals("C", "blue", 5)
    with pytest.raises(ValueError):
        hadamard_diagonals("A", "blue", 2)
    with pytest.raises(ValueError):
        hadamard_triangle(5, "green")
    with pytest.raises(ValueError):
        hadamard_triangle(5, "blue", "oracle")


def test_csv():
    assert to_csv(shallow_diagonals_pascal(3)) == "0,1\n1,1\n2,2\n3,3\n"
    big = to_csv(shallow_diagonals_pascal(400)).splitlines()[-1]
    assert big == f"400,{fibonacci(401)[-1]}"


@given(st.lists(st.integers(-50, 50), min_size=3, max_size=3), st.integers(3, 30))
def test_recurrence_violations_detects_changes(init, length):
    values = list(init)
    while len(values) < length:
        values.append(sum(c * values[-1 - i] for i, c in enumerate(A_RECURRENCE)))
    seq = SeqRecord("x", tuple(values), A_RECURRENCE)
    assert seq.recurrence_violations() == []
    if length > 3:
        values[-1] += 1
        assert SeqRecord("x", tuple(values), A_RECURRENCE).recurrence_violations() == [length - 1]
