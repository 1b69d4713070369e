"""Residue and valuation images of Pascal's triangle and of the walk carpets.

Two routes build every carpet mask: ``carpet_image`` evaluates each cell
directly (digitwise, or with exact big integers), while ``recursive_expand``
substitutes the base image into itself level by level.  Tests require the two
to agree pixel for pixel.

Triangle images are stored as ``rows x rows`` grids indexed ``[r, c]`` with a
``blank`` mask above the diagonal.  Square images are indexed ``[y, x]``
(``x`` to the right, ``y`` downward, origin top-left).
"""

from __future__ import annotations

import colorsys
import os
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .closed_form import f_m, f_m_digit_table
from .exceptions import DegenerateAllWhite, DomainError
from .numtheory import check_prime
from .walk import CoinParams

__all__ = [
    "ResidueImage",
    "Palette",
    "pascal_mod_image",
    "pascal_valuation_image",
    "carpet_image",
    "base_image",
    "recursive_expand",
    "classify_base",
    "triangle_mask_xy",
    "to_rgb",
    "write_image",
    "image_filename",
]

WHITE = (255, 255, 255)


@dataclass(frozen=True, eq=False)
class ResidueImage:
    """Grid of residues (or clamped valuations) plus metadata.

    ``mode`` is ``"residue"`` (cells in ``[0, modulus)``) or ``"valuation"``
    (cells in ``[0, cap]``).  ``geometry`` is ``"triangle"`` or ``"square"``.
    """

    cells: np.ndarray
    mode: str
    geometry: str
    modulus: int | None = None
    p: int | None = None
    cap: int | None = None
    blank: np.ndarray | None = None
    degenerate: bool = False
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.mode not in ("residue", "valuation"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.geometry not in ("triangle", "square"):
            raise ValueError(f"unknown geometry {self.geometry!r}")
        self.cells.setflags(write=False)
        if self.blank is None:
            object.__setattr__(self, "blank", np.zeros(self.cells.shape, dtype=bool))
        self.blank.setflags(write=False)

    @property
    def height(self) -> int:
        return self.cells.shape[0]

    @property
    def width(self) -> int:
        return self.cells.shape[1]

    @property
    def mask(self) -> np.ndarray:
        """True where a cell is present and nonzero (the coloured pixels)."""
        return (self.cells != 0) & ~self.blank

    def stats(self) -> dict:
        blank = int(self.blank.sum())
        nonzero = int(self.mask.sum())
        return {
            "cells": self.cells.size - blank,
            "zero": self.cells.size - blank - nonzero,
            "nonzero": nonzero,
            "blank": blank,
        }


def _triangle_blank(rows: int) -> np.ndarray:
    return ~np.tri(rows, rows, dtype=bool)


def pascal_mod_image(rows: int, modulus: int) -> ResidueImage:
    """``C(r, c) mod modulus`` for the first ``rows`` rows (any modulus >= 2)."""
    if rows < 1:
        raise DomainError(f"rows must be >= 1, got {rows}")
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    cells = kernels.pascal_mod_rows(rows, modulus)
    return ResidueImage(cells, "residue", "triangle", modulus=modulus, blank=_triangle_blank(rows))


def pascal_valuation_image(rows: int, p: int, cap: int = 3) -> ResidueImage:
    """``min(nu_p(C(r, c)), cap)``; cells are what you see mod ``p**k``."""
    check_prime(p)
    if rows < 1:
        raise DomainError(f"rows must be >= 1, got {rows}")
    if cap < 0:
        raise DomainError(f"cap must be >= 0, got {cap}")
    cells = kernels.valuation_rows(rows, p, cap)
    return ResidueImage(cells, "valuation", "triangle", p=p, cap=cap, blank=_triangle_blank(rows))


def carpet_image(coin: CoinParams, size: int, p: int, method: str = "digitwise") -> ResidueImage:
    """``f_m(x, y) mod p`` over ``0 <= x, y < size``.

    A cell is white exactly when the scaled probability
    ``m n**(x+y+1) f_m(x,y)**2`` vanishes mod ``p``.  If ``p`` divides ``m*n``
    that happens everywhere: the returned image is all zero, flagged
    ``degenerate`` and a :class:`DegenerateAllWhite` warning is issued.

    ``method="exact"`` evaluates the defining sum with big integers instead of
    the digitwise product (slow; for cross-checks).
    """
    check_prime(p)
    if size < 1:
        raise DomainError(f"size must be >= 1, got {size}")
    if (coin.m * coin.n) % p == 0:
        warnings.warn(
            f"p={p} divides m*n={coin.m * coin.n}: every pixel is white",
            DegenerateAllWhite,
            stacklevel=2,
        )
        cells = np.zeros((size, size), dtype=np.int64)
        return ResidueImage(cells, "residue", "square", modulus=p, p=p, degenerate=True,
                            meta={"m": coin.m, "n": coin.n})
    if method == "digitwise":
        table = np.array(f_m_digit_table(coin.m, p), dtype=np.int64)
        cells = kernels.carpet_mod(size, table, p)
    elif method == "exact":
        cells = np.array(
            [[f_m(coin.m, x, y) % p for x in range(size)] for y in range(size)],
            dtype=np.int64,
        )
    else:
        raise ValueError(f"unknown method {method!r}")
    return ResidueImage(cells, "residue", "square", modulus=p, p=p, meta={"m": coin.m, "n": coin.n})


def base_image(m: int, p: int) -> ResidueImage:
    """The ``p x p`` table of ``f_m(x, y) mod p`` that seeds the fractal."""
    table = np.array(f_m_digit_table(m, p), dtype=np.int64)
    return ResidueImage(table.T.copy(), "residue", "square", modulus=p, p=p, meta={"m": m})


def recursive_expand(base: ResidueImage, levels: int) -> ResidueImage:
    """Replace every coloured pixel by a copy of ``base``, ``levels - 1`` times.

    Only the zero/nonzero pattern survives: cells are 1 (coloured) or 0.
    """
    h, w = base.cells.shape
    if h != w:
        raise DomainError(f"base image must be square, got {h}x{w}")
    if levels < 1:
        raise DomainError(f"levels must be >= 1, got {levels}")
    seed = base.mask.astype(np.int64)
    img = seed
    for _ in range(levels - 1):
        img = np.kron(img, seed)
    return ResidueImage(img, "residue", "square", modulus=2, p=base.p,
                        meta={**base.meta, "levels": levels})


def triangle_mask_xy(p: int, size: int) -> np.ndarray:
    """Pascal-mod-p mask in square coordinates: ``C(x+y, x) != 0 mod p``, ``[y, x]``."""
    g = kernels.pascal_mod_rows(2 * size - 1, p)
    ys, xs = np.indices((size, size))
    return g[xs + ys, xs] != 0


def classify_base(base: ResidueImage) -> str:
    """Name the fractal a base image generates: triangle, carpet, or other.

    ``"triangle"`` when the zero pattern is ``x + y >= p`` (Pascal mod p),
    ``"carpet"`` when the only zero of a 3x3 base is the centre.
    """
    p = base.cells.shape[0]
    zero = ~base.mask
    ys, xs = np.indices(zero.shape)
    if np.array_equal(zero, xs + ys >= p):
        return "triangle"
    if p == 3 and np.array_equal(zero, (xs == 1) & (ys == 1)):
        return "carpet"
    return "other"


@dataclass(frozen=True)
class Palette:
    """Colour table.  Residue 0 and blank cells are white.

    Residue 1 is black and residues ``2..modulus-1`` get evenly spaced hues.
    Valuations index ``valuation_colors`` and clamp to the last entry, so
    with the default cap of 3 every valuation has its own colour.
    """

    background: tuple = WHITE
    valuation_colors: tuple = ((0, 0, 0), (255, 140, 0), (220, 0, 0), (0, 0, 220))

    def residue_color(self, value: int, modulus: int) -> tuple:
        if value == 0:
            return self.background
        if value == 1:
            return (0, 0, 0)
        # hues for 2..modulus-1 spread over [0, 0.8) to stay clear of wrap-around
        h = 0.8 * (value - 2) / max(modulus - 2, 1)
        r, g, b = colorsys.hsv_to_rgb(h, 0.85, 0.85)
        return (round(r * 255), round(g * 255), round(b * 255))

    def valuation_color(self, value: int) -> tuple:
        return self.valuation_colors[min(value, len(self.valuation_colors) - 1)]

    def lookup(self, img: ResidueImage) -> np.ndarray:
        """``(n_values, 3)`` uint8 lookup table for ``img``'s cell values.

        Residue colours must be distinct; valuation colours may repeat only
        through clamping above the table.
        """
        if img.mode == "valuation":
            colors = [self.valuation_color(v) for v in range(img.cap + 1)]
            distinct = colors[: len(self.valuation_colors)]
        else:
            colors = distinct = [self.residue_color(v, img.modulus) for v in range(img.modulus)]
        if len(set(distinct)) != len(distinct):
            raise ValueError("palette is not injective for this image")
        return np.array(colors, dtype=np.uint8)


DEFAULT_PALETTE = Palette()


def to_rgb(img: ResidueImage, palette: Palette = DEFAULT_PALETTE) -> np.ndarray:
    """``(H, W, 3)`` uint8 pixels.

    Triangle rows are centred: cell ``(r, c)`` of an ``R``-row image lands on
    pixel column ``R - 1 - r + 2c`` of a ``2R - 1`` wide canvas.
    """
    lut = palette.lookup(img)
    bg = np.array(palette.background, dtype=np.uint8)
    if img.geometry == "square":
        rgb = lut[img.cells]
        rgb[img.blank] = bg
        return rgb
    rows = img.height
    rgb = np.empty((rows, 2 * rows - 1, 3), dtype=np.uint8)
    rgb[:] = bg
    for r in range(rows):
        cols = np.arange(r + 1)
        rgb[r, rows - 1 - r + 2 * cols] = lut[img.cells[r, : r + 1]]
    return rgb


def write_image(img: ResidueImage, palette: Palette = DEFAULT_PALETTE, path=None) -> str:
    """Write a plain-text P3 pixmap (maxval 255, one pixel per line)."""
    rgb = to_rgb(img, palette)
    h, w, _ = rgb.shape
    lines = [f"P3\n{w} {h}\n255\n"]
    lines.extend(f"{r} {g} {b}\n" for r, g, b in rgb.reshape(-1, 3).tolist())
    text = "".join(lines)
    if path is not None:
        with open(os.fspath(path), "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    return text


def image_filename(kind: str, m: int, p: int, size: int) -> str:
    return f"{kind}_m{m}_p{p}_s{size}.ppm"
