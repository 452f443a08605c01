"""Exact rational dynamics of the sorted pedal map.

A triangle is represented by its angles divided by pi, a triple of
``Fraction`` values summing to 1.  Sorted triples (``a >= b >= c``) stand for
similarity classes.  Nothing in this module touches floating point: region
boundaries mix strict and non-strict inequalities that only exact
comparisons can honour.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import (
    ContractionViolation,
    DegenerateError,
    DomainError,
    FormatError,
    PostconditionError,
)

HALF = Fraction(1, 2)
ONE = Fraction(1)
ZERO = Fraction(0)

def _as_fraction(x) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


_FRACTION_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_fraction(text: str) -> Fraction:
    m = _FRACTION_RE.match(text)
    if not m:
        raise FormatError(f"not a fraction: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise FormatError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_triple(coords: Iterable[Fraction]) -> str:
    """``"x/q,y/q,z/q"`` over the least common denominator ``q``; bare integers when ``q = 1``."""
    fs = [Fraction(x) for x in coords]
    q = lcm(*(f.denominator for f in fs))
    if q == 1:
        return ",".join(str(f.numerator) for f in fs)
    return ",".join(f"{f.numerator * (q // f.denominator)}/{q}" for f in fs)


def _parse_coords(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise FormatError(f"expected three comma-separated fractions, got {text!r}")
    a, b, c = (parse_fraction(p) for p in parts)
    return a, b, c


@dataclass(frozen=True)
class UnsortedTriple:
    """Normalized angles in vertex order; any point of the closed simplex."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, _as_fraction(getattr(self, name)))
        if min(self.a, self.b, self.c) < 0 or self.a + self.b + self.c != 1:
            raise DomainError(f"not a normalized angle triple: {format_triple(self)}")

    @classmethod
    def parse(cls, text: str) -> UnsortedTriple:
        return cls(*_parse_coords(text))

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    @property
    def is_interior(self) -> bool:
        return min(self.a, self.b, self.c) > 0

    def sorted(self) -> SortedTriple:
        return SortedTriple(*sorted(self, reverse=True))

    def __str__(self):
        return format_triple(self)


@dataclass(frozen=True, order=True)
class SortedTriple:
    """A point ``a >= b >= c >= 0`` with ``a + b + c = 1``."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, _as_fraction(getattr(self, name)))
        a, b, c = self.a, self.b, self.c
        if not (a >= b >= c >= 0) or a + b + c != 1:
            raise DomainError(f"not a sorted triple: {format_triple(self)}")

    @classmethod
    def nondegenerate(cls, a, b, c) -> SortedTriple:
        """Constructor that additionally requires ``c > 0``."""
        p = cls(a, b, c)
        if p.c == 0:
            raise DomainError(f"degenerate triple (zero angle): {p}")
        return p

    @classmethod
    def parse(cls, text: str, sort: bool = False) -> SortedTriple:
        """Parse ``"a,b,c"``; with ``sort=True`` accept the angles in any order."""
        coords = _parse_coords(text)
        if sort:
            if min(coords) < 0 or sum(coords) != 1:
                raise DomainError(f"not a normalized angle triple: {text!r}")
            coords = sorted(coords, reverse=True)
        return cls(*coords)

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.a, self.b, self.c

    @property
    def is_nondegenerate(self) -> bool:
        return self.c > 0

    @property
    def is_right(self) -> bool:
        return self.a == HALF

    def __str__(self):
        return format_triple(self)


class Region(IntEnum):
    R0 = 0
    R1 = 1
    R2 = 2
    R3 = 3


def classify_region(p: SortedTriple) -> Region:
    a, b, c = p.a, p.b, p.c
    if c <= 0:
        raise DomainError(f"triple has a zero angle: {p}")
    if a < HALF:
        return Region.R0
    if a == HALF:
        raise DegenerateError(f"right triangle: {p}")
    excess = 2 * a - 1
    if excess >= 2 * b:
        return Region.R1
    if excess >= 2 * c:
        return Region.R2
    return Region.R3


def _branch_image(region: Region, a: Fraction, b: Fraction, c: Fraction):
    if region is Region.R0:
        return 1 - 2 * c, 1 - 2 * b, 1 - 2 * a
    if region is Region.R1:
        return 2 * a - 1, 2 * b, 2 * c
    if region is Region.R2:
        return 2 * b, 2 * a - 1, 2 * c
    return 2 * b, 2 * c, 2 * a - 1


def pedal_step(p: SortedTriple) -> SortedTriple:
    """One application of the sorted pedal map."""
    x, y, z = _branch_image(classify_region(p), p.a, p.b, p.c)
    if not (x >= y >= z > 0):
        raise PostconditionError(f"pedal image of {p} is not sorted: {format_triple((x, y, z))}")
    return SortedTriple(x, y, z)


def pedal_step_unsorted(t: UnsortedTriple) -> UnsortedTriple:
    """Pedal angles in vertex order: acute ``1 - 2x``, obtuse doubles and subtracts 1 at the obtuse vertex."""
    coords = tuple(t)
    if not t.is_interior:
        raise DomainError(f"triple has a zero angle: {t}")
    if HALF in coords:
        raise DegenerateError(f"right triangle: {t}")
    obtuse = [i for i, x in enumerate(coords) if x > HALF]
    if not obtuse:
        return UnsortedTriple(*(1 - 2 * x for x in coords))
    (k,) = obtuse
    return UnsortedTriple(*(2 * x - (1 if i == k else 0) for i, x in enumerate(coords)))


Point = Union[SortedTriple, UnsortedTriple, Sequence[Fraction]]


@dataclass(frozen=True)
class AffineMap3:
    """The map ``p -> matrix @ p + offset`` with exact rational entries."""

    matrix: tuple[tuple[Fraction, Fraction, Fraction], ...]
    offset: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        matrix = tuple(tuple(map(_as_fraction, row)) for row in self.matrix)
        offset = tuple(map(_as_fraction, self.offset))
        if len(matrix) != 3 or any(len(row) != 3 for row in matrix) or len(offset) != 3:
            raise ValueError("AffineMap3 needs a 3x3 matrix and a 3-vector")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "offset", offset)

    @classmethod
    def identity(cls) -> AffineMap3:
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 0))

    def __call__(self, p: Point) -> tuple[Fraction, Fraction, Fraction]:
        x = tuple(p)
        return tuple(
            row[0] * x[0] + row[1] * x[1] + row[2] * x[2] + t
            for row, t in zip(self.matrix, self.offset)
        )

    def apply_sorted(self, p: Point) -> SortedTriple:
        return SortedTriple(*self(p))

    def __matmul__(self, inner: AffineMap3) -> AffineMap3:
        return compose(self, inner)


def compose(outer: AffineMap3, inner: AffineMap3) -> AffineMap3:
    """``outer o inner``: apply ``inner`` first."""
    B = inner.matrix
    matrix = []
    offset = []
    # branch maps are signed permutations scaled by 1/2; skip the zero entries
    for row, t in zip(outer.matrix, outer.offset):
        terms = [(a, k) for k, a in enumerate(row) if a]
        matrix.append(tuple(sum((a * B[k][j] for a, k in terms if B[k][j]), ZERO) for j in range(3)))
        offset.append(sum((a * inner.offset[k] for a, k in terms if inner.offset[k]), t))
    return AffineMap3(tuple(matrix), tuple(offset))


_H = HALF
_INVERSE_BRANCHES = {
    # ((1-c)/2, (1-b)/2, (1-a)/2)
    Region.R0: AffineMap3(((0, 0, -_H), (0, -_H, 0), (-_H, 0, 0)), (_H, _H, _H)),
    # ((a+1)/2, b/2, c/2)
    Region.R1: AffineMap3(((_H, 0, 0), (0, _H, 0), (0, 0, _H)), (_H, 0, 0)),
    # ((b+1)/2, a/2, c/2)
    Region.R2: AffineMap3(((0, _H, 0), (_H, 0, 0), (0, 0, _H)), (_H, 0, 0)),
    # ((c+1)/2, a/2, b/2)
    Region.R3: AffineMap3(((0, 0, _H), (_H, 0, 0), (0, _H, 0)), (_H, 0, 0)),
}


def inverse_branch(region: Region | int) -> AffineMap3:
    return _INVERSE_BRANCHES[Region(region)]


def compose_branches(word: Iterable[int]) -> AffineMap3:
    """``I_{w0} o I_{w1} o ... o I_{w(m-1)}`` for a column word ``w``."""
    symbols = list(word)
    result = AffineMap3.identity()
    for s in reversed(symbols):
        result = compose(inverse_branch(s), result)
    return result


def solve_linear(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction]:
    """Solve ``A x = b`` exactly by Gaussian elimination with partial pivoting."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(A, b)]
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(M[r][col]))
        if M[pivot][col] == 0:
            raise ContractionViolation("singular system: map is not a strict contraction")
        M[col], M[pivot] = M[pivot], M[col]
        piv = M[col][col]
        for r in range(col + 1, n):
            f = M[r][col] / piv
            if f:
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    x = [ZERO] * n
    for r in range(n - 1, -1, -1):
        s = M[r][n] - sum(M[r][k] * x[k] for k in range(r + 1, n))
        x[r] = s / M[r][r]
    return x


def fixed_point(F: AffineMap3) -> SortedTriple:
    """The unique fixed point of a composition of inverse branches."""
    system = [
        [(1 if i == j else 0) - F.matrix[i][j] for j in range(3)] for i in range(3)
    ]
    a, b, c = solve_linear(system, F.offset)
    if F((a, b, c)) != (a, b, c):
        raise PostconditionError("linear solve did not produce a fixed point")
    if a + b + c != 1 or not (a >= b >= c >= 0):
        raise PostconditionError(f"fixed point {format_triple((a, b, c))} lies outside the sorted simplex")
    return SortedTriple(a, b, c)


@dataclass(frozen=True)
class Period:
    n: int


@dataclass(frozen=True)
class Degenerate:
    step: int


@dataclass(frozen=True)
class NotWithinBound:
    pass


PeriodResult = Union[Period, Degenerate, NotWithinBound]


def orbit(p: SortedTriple, steps: int) -> list[SortedTriple]:
    """``[p, P(p), ..., P^steps(p)]``; raises if some iterate before the last is degenerate."""
    out = [p]
    for _ in range(steps):
        out.append(pedal_step(out[-1]))
    return out


def exact_pedal_period(p: SortedTriple, max_n: int) -> PeriodResult:
    """Least ``n <= max_n`` with ``P^n(p) = p``.

    ``Degenerate(j)`` when ``P^j(p)`` is a right triangle; ``NotWithinBound``
    when the bound runs out, or as soon as the orbit revisits a point other
    than ``p`` (then it can never return to ``p``).
    """
    if max_n < 1:
        raise DomainError("max_n must be positive")
    if not p.is_nondegenerate:
        raise DomainError(f"triple has a zero angle: {p}")
    seen = {p}
    x = p
    for j in range(max_n):
        if x.is_right:
            return Degenerate(j)
        x = pedal_step(x)
        if x == p:
            return Period(j + 1)
        if x in seen:
            return NotWithinBound()
        seen.add(x)
    return NotWithinBound()
