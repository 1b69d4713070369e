"""Exact quantum-walk amplitudes and the fractals of Pascal-like triangles mod p.

Submodules: :mod:`numtheory` (Lucas, Kummer, valuations), :mod:`walk`
(integer walk simulator), :mod:`closed_form` (path-counting formulas, ``f_m``),
:mod:`render` (residue images, P3 output), :mod:`sequences` (row and diagonal
sums), :mod:`verify` (exhaustive invariant suites).
"""

from .closed_form import f_m, f_m_mod_digitwise, h_blue, h_red, phi, phi_general, psi_down, psi_up
from .exceptions import DegenerateAllWhite, DomainError, InvalidBase, QPascalError, ValuationOfZero
from .kernels import BACKEND
from .numtheory import (
    binom_exact,
    binom_mod_lucas,
    digits_base_p,
    is_binom_divisible,
    kummer_carries,
    nu_p,
    nu_p_binom,
)
from .walk import HADAMARD, CoinParams, WalkState, evolve, initial_state, scaled_probability, step

__version__ = "0.1.0"
