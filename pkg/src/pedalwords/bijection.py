"""Correspondence between primitive 2 x n binary words and triangles of exact pedal period n.

A column word over ``{0, 1, 2, 3}`` plays two roles.  Read through the
substitution ``eta`` it is a 2 x n binary word, one symbol per column.  Read
as a branch itinerary it names the regions that successive pedal iterates of
a triangle visit.  The triangle belonging to a word ``w`` is the fixed point
of the composed inverse branches ``I_w``.

Column words are plain tuples of ints; ``parse_column_word("0000032")`` and
``format_column_word`` convert to and from the digit-string form.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import (
    BijectionViolation,
    DegenerateError,
    EnumerationBoundError,
    FormatError,
    NotInDomainError,
    NotPeriodicError,
    PostconditionError,
)
from .pedal import (
    Period,
    SortedTriple,
    classify_region,
    compose_branches,
    exact_pedal_period,
    fixed_point,
    format_triple,
    pedal_step,
)
from .words import Word1D, Word2D, is_primitive_1d, is_primitive_2d

ColumnWord = tuple[int, ...]

ETA_COLUMNS = {0: (0, 1), 1: (0, 0), 2: (1, 1), 3: (1, 0)}
_ETA_INVERSE = {col: s for s, col in ETA_COLUMNS.items()}

MAX_ENUMERATION_N = 12
_BLOCK_BITS = 14


def parse_column_word(text: str) -> ColumnWord:
    if not text or any(ch not in "0123" for ch in text):
        raise FormatError(f"column words are non-empty strings over 0-3, got {text!r}")
    return tuple(int(ch) for ch in text)


def format_column_word(word: Iterable[int]) -> str:
    return "".join(map(str, word))


def word_to_code(word: Sequence[int]) -> int:
    code = 0
    for s in word:
        code = 4 * code + s
    return code


def code_to_word(code: int, n: int) -> ColumnWord:
    return tuple((code >> (2 * (n - 1 - j))) & 3 for j in range(n))


def _as_column_word(word) -> ColumnWord:
    if isinstance(word, str):
        return parse_column_word(word)
    w = tuple(word)
    if not w or any(s not in ETA_COLUMNS for s in w):
        raise FormatError(f"not a column word over 0-3: {w!r}")
    return w


def eta(word) -> Word2D:
    """The 2 x n binary word whose j-th column is the image of the j-th symbol."""
    w = _as_column_word(word)
    return Word2D.from_columns(ETA_COLUMNS[s] for s in w)


def eta_inv(W: Word2D) -> ColumnWord:
    if W.rows != 2 or any(s > 1 for row in W.cells for s in row):
        raise FormatError(f"expected a binary word with two rows, got {W.to_text('/')!r}")
    return tuple(_ETA_INVERSE[W.column(j)] for j in range(W.cols))


def is_column_word_admissible(word) -> bool:
    """Primitive, and not spelled with the symbols 1 and 2 alone."""
    w = _as_column_word(word)
    if all(s in (1, 2) for s in w):
        return False
    return is_primitive_1d(Word1D(w, 4))


def itinerary(p: SortedTriple, n: int) -> ColumnWord:
    """Regions visited by ``p, P(p), ..., P^(n-1)(p)`` for a point of exact period ``n``."""
    out = []
    x = p
    for j in range(n):
        out.append(int(classify_region(x)))
        x = pedal_step(x)
        if x == p and j + 1 < n:
            raise NotPeriodicError(f"{p} has exact pedal period {j + 1}, not {n}")
    if x != p:
        raise NotPeriodicError(f"P^{n}({p}) = {x} differs from the starting triple")
    return tuple(out)


@dataclass(frozen=True)
class PeriodicTriangle:
    triple: SortedTriple
    period: int
    itinerary: ColumnWord

    @property
    def word(self) -> Word2D:
        return eta(self.itinerary)

    def record(self) -> str:
        return (
            f"n={self.period}\titinerary={format_column_word(self.itinerary)}"
            f"\tword={self.word.to_text('/')}\ttriple={self.triple}"
        )


def triangle_to_word(p: SortedTriple, n: int) -> Word2D:
    return eta(itinerary(p, n))


def validate_periodic_triangle(t: PeriodicTriangle) -> None:
    """Re-derive every invariant of ``t`` with exact rationals; raise ``BijectionViolation`` on any failure."""
    n = t.period
    problems = []
    if len(t.itinerary) != n:
        problems.append(f"itinerary length {len(t.itinerary)} != period {n}")
    if not t.triple.is_nondegenerate:
        problems.append("triple has a zero angle")
    if not is_column_word_admissible(t.itinerary):
        problems.append("itinerary is not an admissible column word")
    if not is_primitive_2d(t.word):
        problems.append("word is not primitive")
    if not problems:
        try:
            if fixed_point(compose_branches(t.itinerary)) != t.triple:
                problems.append("triple is not the fixed point of the composed inverse branches")
            result = exact_pedal_period(t.triple, n)
            if result != Period(n):
                problems.append(f"exact pedal period check gave {result}")
            elif itinerary(t.triple, n) != t.itinerary:
                problems.append("recomputed itinerary differs")
        except (DegenerateError, NotPeriodicError, PostconditionError) as exc:
            problems.append(str(exc))
    if problems:
        raise BijectionViolation(
            f"{format_column_word(t.itinerary)} -> {t.triple}: " + "; ".join(problems)
        )


def word_to_triangle(W: Word2D) -> PeriodicTriangle:
    """The triangle of exact pedal period ``W.cols`` coded by the primitive word ``W``."""
    w = eta_inv(W)
    if not is_primitive_2d(W):
        raise NotInDomainError(f"word {W.to_text('/')} is not primitive")
    if not is_column_word_admissible(w):
        raise NotInDomainError(f"column word {format_column_word(w)} is not admissible")
    try:
        p = fixed_point(compose_branches(w))
    except PostconditionError as exc:
        raise BijectionViolation(str(exc)) from exc
    t = PeriodicTriangle(p, len(w), w)
    validate_periodic_triangle(t)
    return t


def _check_bound(n: int, force: bool):
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUMERATION_N and not force:
        raise EnumerationBoundError(
            f"n={n} exceeds the enumeration bound {MAX_ENUMERATION_N} (4**n candidates); pass force=True"
        )


def _blocks(n: int) -> list[tuple[int, int]]:
    total = 1 << (2 * n)
    size = 1 << _BLOCK_BITS
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def iter_admissible_words(n: int, *, force: bool = False, backend: str | None = None) -> Iterator[ColumnWord]:
    _check_bound(n, force)
    for lo, hi in _blocks(n):
        for code in kernels.admissible_codes(n, lo, hi, backend):
            yield code_to_word(code, n)


def enumerate_admissible_words(n: int, *, force: bool = False, backend: str | None = None) -> list[ColumnWord]:
    """All admissible column words of length ``n`` in lexicographic order."""
    return list(iter_admissible_words(n, force=force, backend=backend))


def _scan_block(args):
    n, lo, hi, backend = args
    return kernels.scan(n, lo, hi, backend)


def _triangle_from_row(n: int, row) -> PeriodicTriangle:
    code, status, x, y, z, q = row
    w = code_to_word(code, n)
    if status != kernels.OK:
        raise BijectionViolation(
            f"{format_column_word(w)}: {kernels.STATUS_NAMES.get(status, status)}"
            f" (candidate {format_triple((Fraction(x, q or 1), Fraction(y, q or 1), Fraction(z, q or 1)))})"
        )
    triple = SortedTriple(Fraction(x, q), Fraction(y, q), Fraction(z, q))
    return PeriodicTriangle(triple, n, w)


def iter_periodic_triangles(
    n: int, *, force: bool = False, backend: str | None = None, workers: int = 1
) -> Iterator[PeriodicTriangle]:
    """Stream the triangles of exact pedal period ``n``, ordered by itinerary.

    The integer kernel solves each fixed point and confirms its orbit follows
    the word and closes after exactly ``n`` steps.  With ``workers > 1`` the
    code space is sharded across processes; output order is unchanged.
    """
    _check_bound(n, force)
    tasks = [(n, lo, hi, backend) for lo, hi in _blocks(n)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for rows in pool.map(_scan_block, tasks):
                for row in rows:
                    yield _triangle_from_row(n, row)
    else:
        for task in tasks:
            for row in _scan_block(task):
                yield _triangle_from_row(n, row)


def enumerate_periodic_triangles(
    n: int, *, force: bool = False, backend: str | None = None, workers: int = 1
) -> list[PeriodicTriangle]:
    return list(iter_periodic_triangles(n, force=force, backend=backend, workers=workers))
