"""One- and two-dimensional words over small integer alphabets.

Symbols are integers ``0 <= s < alphabet_size``.  A two-dimensional word is
stored row-major as a tuple of equal-length tuples; the textual form joins
digit rows with newlines, e.g. ``"0000011\\n1111101"``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .counting import prime_factors
from .errors import DimensionError, EmptyWordError, FormatError


@dataclass(frozen=True)
class Word1D:
    symbols: tuple[int, ...]
    alphabet_size: int = 2

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be positive")
        for s in self.symbols:
            if not 0 <= s < self.alphabet_size:
                raise FormatError(f"symbol {s} outside alphabet of size {self.alphabet_size}")

    @classmethod
    def parse(cls, text: str, alphabet_size: int = 2) -> Word1D:
        if not text.isdigit() and text:
            raise FormatError(f"not a digit string: {text!r}")
        return cls(tuple(int(ch) for ch in text), alphabet_size)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self):
        return "".join(map(str, self.symbols))


@dataclass(frozen=True)
class Word2D:
    cells: tuple[tuple[int, ...], ...]
    alphabet_size: int = 2

    def __post_init__(self):
        cells = tuple(tuple(int(s) for s in row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be positive")
        if not cells or not cells[0]:
            raise EmptyWordError("two-dimensional words need at least one row and one column")
        width = len(cells[0])
        for row in cells:
            if len(row) != width:
                raise FormatError("ragged rows")
            for s in row:
                if not 0 <= s < self.alphabet_size:
                    raise FormatError(f"symbol {s} outside alphabet of size {self.alphabet_size}")

    @classmethod
    def parse(cls, text: str, alphabet_size: int = 2, sep: str = "\n") -> Word2D:
        rows = text.split(sep)
        for row in rows:
            if not row.isdigit():
                raise FormatError(f"row {row!r} is not a digit string")
        return cls(tuple(tuple(int(ch) for ch in row) for row in rows), alphabet_size)

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], alphabet_size: int = 2) -> Word2D:
        return cls(tuple(zip(*columns)), alphabet_size)

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(index)
        return self.cells[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.cells)

    def to_text(self, sep: str = "\n") -> str:
        return sep.join("".join(map(str, row)) for row in self.cells)

    def __str__(self):
        return self.to_text()


def _check_alphabets(u: Word2D, v: Word2D):
    if u.alphabet_size != v.alphabet_size:
        raise DimensionError("words are over different alphabets")


def row_concat(top: Word2D, bottom: Word2D) -> Word2D:
    """Stack ``bottom`` under ``top``."""
    _check_alphabets(top, bottom)
    if top.cols != bottom.cols:
        raise DimensionError(f"column counts differ: {top.cols} vs {bottom.cols}")
    return Word2D(top.cells + bottom.cells, top.alphabet_size)


def col_concat(left: Word2D, right: Word2D) -> Word2D:
    """Place ``right`` to the right of ``left``."""
    _check_alphabets(left, right)
    if left.rows != right.rows:
        raise DimensionError(f"row counts differ: {left.rows} vs {right.rows}")
    return Word2D(tuple(a + b for a, b in zip(left.cells, right.cells)), left.alphabet_size)


def power_2d(word: Word2D, p: int, q: int) -> Word2D:
    """The ``p x q`` power: ``W[i, j] = word[i mod m, j mod n]`` on a ``pm x qn`` grid."""
    if p < 1 or q < 1:
        raise ValueError("powers must be positive")
    m, n = word.shape
    cells = tuple(
        tuple(word.cells[i % m][j % n] for j in range(q * n)) for i in range(p * m)
    )
    return Word2D(cells, word.alphabet_size)


def has_row_period(word: Word2D, r: int) -> bool:
    cells = word.cells
    return all(cells[i] == cells[i % r] for i in range(r, word.rows))


def has_col_period(word: Word2D, c: int) -> bool:
    return all(row[j] == row[j % c] for row in word.cells for j in range(c, word.cols))


def is_primitive_1d(word: Word1D | Sequence[int]) -> bool:
    symbols = tuple(word)
    n = len(symbols)
    if n == 0:
        raise EmptyWordError("primitivity is undefined for the empty word")
    # any period d | n, d < n, refines to a period n/p for some prime p
    for p in prime_factors(n):
        d = n // p
        if symbols == symbols[:d] * p:
            return False
    return True


def is_primitive_2d(word: Word2D) -> bool:
    """True unless ``word`` is a proper ``p x q`` power of a smaller word.

    Only the maximal proper periods ``m/p`` and ``n/p`` (``p`` prime) need
    checking, since every proper row or column period divides one of them.
    """
    m, n = word.shape
    for p in prime_factors(m):
        if has_row_period(word, m // p):
            return False
    for p in prime_factors(n):
        if has_col_period(word, n // p):
            return False
    return True
