"""Primitive two-dimensional binary words of dimension 2 x n and triangles of exact pedal period n.

The bijection runs through a four-symbol coding of the sorted pedal map:
a triangle's branch itinerary is a column word, and each column word
spells a 2 x n binary word one column at a time.
"""
__version__ = "0.1.0"

from .bijection import (
    PeriodicTriangle,
    enumerate_admissible_words,
    enumerate_periodic_triangles,
    eta,
    eta_inv,
    is_column_word_admissible,
    itinerary,
    iter_periodic_triangles,
    triangle_to_word,
    word_to_triangle,
)
from .counting import chi_inclusion_exclusion, chi_mobius, mobius, phi, psi
from .pedal import (
    AffineMap3,
    Degenerate,
    NotWithinBound,
    Period,
    Region,
    SortedTriple,
    UnsortedTriple,
    classify_region,
    compose,
    compose_branches,
    exact_pedal_period,
    fixed_point,
    inverse_branch,
    pedal_step,
    pedal_step_unsorted,
)
from .words import (
    Word1D,
    Word2D,
    col_concat,
    is_primitive_1d,
    is_primitive_2d,
    power_2d,
    row_concat,
)
