from fractions import Fraction as F
from itertools import product

import pytest

from pedalwords import kernels
from pedalwords.pedal import SortedTriple
from pedalwords.words import Word2D, power_2d

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return request.param


def sorted_triples(max_den, include_boundary=False):
    """Every distinct sorted triple whose coordinates have denominators dividing some q <= max_den."""
    seen = set()
    for q in range(1, max_den + 1):
        for z in range(0 if include_boundary else 1, q // 3 + 1):
            for y in range(z, (q - z) // 2 + 1):
                x = q - y - z
                t = (F(x, q), F(y, q), F(z, q))
                if t not in seen:
                    seen.add(t)
    return [SortedTriple(*t) for t in sorted(seen)]


def all_binary_words(m, n):
    for bits in product((0, 1), repeat=m * n):
        yield Word2D(tuple(tuple(bits[i * n:(i + 1) * n]) for i in range(m)))


def periodic_words_by_generation(m, n):
    """Every V^{p x q} of shape m x n with p >= 2 or q >= 2, built from all candidate V."""
    out = set()
    for r in range(1, m + 1):
        for c in range(1, n + 1):
            if m % r or n % c or (r, c) == (m, n):
                continue
            for V in all_binary_words(r, c):
                out.add(power_2d(V, m // r, n // c))
    return out
