"""Shared builders for the test suite."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from boundquiver.algebra import Arrow, QuiverPresentation, linear_quiver

ONE = Fraction(1)


def cycle_quiver(m: int, zero_positions) -> QuiverPresentation:
    """Oriented cycle ``c_i: i -> i+1 (mod m)`` with ``c_{i+1} * c_i = 0`` for
    each i in ``zero_positions``."""
    arrows = tuple(Arrow(f"c{i}", i, i % m + 1) for i in range(1, m + 1))
    rels = tuple(((ONE, (f"c{i % m + 1}", f"c{i}")),) for i in sorted(zero_positions))
    return QuiverPresentation(m, arrows, rels)


def subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def nakayama_sweep(max_vertices: int = 5):
    """Connected Nakayama presentations with length-two monomial relations.

    Yields ``(kind, m, zero_positions, presentation)`` for linear quivers on
    ``1..max_vertices`` vertices with any set of zero relations and for
    oriented cycles with a non-empty set (so the algebra is finite
    dimensional).
    """
    for m in range(1, max_vertices + 1):
        for zs in subsets(range(1, m - 1)):
            yield "linear", m, zs, linear_quiver(m - 1, "b", zs) if m > 1 else QuiverPresentation(1, (), ())
        for zs in subsets(range(1, m + 1)):
            if zs:
                yield "cycle", m, zs, cycle_quiver(m, zs)
