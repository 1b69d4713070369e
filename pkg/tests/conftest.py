import pytest

from qpascal import _kernels_py

try:
    from qpascal import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
if _kernels_c is not None:
    BACKENDS.append(pytest.param(_kernels_c, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def pascal_rows_mod(n_max, modulus):
    """Rows of Pascal's triangle mod ``modulus`` by the additive rule."""
    row = [1 % modulus]
    yield row
    for _ in range(n_max):
        row = [1 % modulus] + [(row[i] + row[i + 1]) % modulus for i in range(len(row) - 1)] + [1 % modulus]
        yield row


def factorial_binom(n, k):
    from math import factorial

    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def nu_by_division(x, p):
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v
