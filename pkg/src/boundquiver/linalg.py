"""Exact linear algebra over the rationals.

Matrices are numpy object arrays whose entries are :class:`fractions.Fraction`
(plain ``int`` entries are tolerated; every division goes through ``Fraction``).
Shapes are always explicit, so ``0 x k`` and ``k x 0`` matrices behave.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

ZERO = Fraction(0)
ONE = Fraction(1)


class SparseEchelon:
    """Fully reduced sparse row echelon form, rows keyed by pivot column.

    Rows are dicts ``{column: value}``.  The pivot of a new row is its
    smallest column index, so callers control pivot preference through the
    column order.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, Fraction]] = {}

    def add(self, row: dict[int, Fraction]) -> None:
        row = {c: v for c, v in row.items() if v != 0}
        for c in sorted(set(row) & set(self.rows)):
            if c in row:
                coef = row[c]
                for k, v in self.rows[c].items():
                    nv = row.get(k, 0) - coef * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        if not row:
            return
        p = min(row)
        inv = 1 / row[p]
        row = {k: v * inv for k, v in row.items()}
        for q, other in self.rows.items():
            if p in other:
                coef = other[p]
                for k, v in row.items():
                    nv = other.get(k, 0) - coef * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self.rows[p] = row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def nullspace(self, ncols: int) -> list[dict[int, Fraction]]:
        """Basis of the solution space of ``row . x = 0`` for all rows."""
        out = []
        for f in range(ncols):
            if f in self.rows:
                continue
            vec = {f: ONE}
            for p, row in self.rows.items():
                if f in row:
                    vec[p] = -row[f]
            out.append(vec)
        return out


def frac(x) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not exact")
    return Fraction(x)


def qarray(rows, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Build a rational matrix from nested sequences.

    ``shape`` must be given when ``rows`` is empty (the column count cannot
    be recovered from an empty list).
    """
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        out = np.empty(rows.shape, dtype=object)
        for idx, v in np.ndenumerate(rows):
            out[idx] = frac(v)
        return out
    rows = [list(r) for r in rows]
    if shape is None:
        if not rows:
            raise ValueError("shape required for an empty matrix")
        shape = (len(rows), len(rows[0]))
    out = zeros(*shape)
    if len(rows) != shape[0] and not (shape[0] == 0 and rows in ([], [[]])):
        raise ValueError(f"expected {shape[0]} rows, got {len(rows)}")
    for i, r in enumerate(rows[: shape[0]]):
        if len(r) != shape[1]:
            raise ValueError(f"row {i} has {len(r)} entries, expected {shape[1]}")
        for j, v in enumerate(r):
            out[i, j] = frac(v)
    return out


def zeros(r: int, c: int) -> np.ndarray:
    out = np.empty((r, c), dtype=object)
    out.fill(ZERO)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return a @ b


def is_zero(a: np.ndarray) -> bool:
    return a.size == 0 or not any(x != 0 for x in a.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def rref(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = np.array(a, dtype=object, copy=True)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i, c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[[r, p]] = m[[p, r]]
        m[r] = m[r] * (ONE / m[r, c])
        for i in range(rows):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] * m[r]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return len(rref(a)[1])


def nullspace(a: np.ndarray) -> np.ndarray:
    """Basis of ``{x : a x = 0}`` as the columns of an ``ncols x k`` matrix."""
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return identity(ncols)
    r, pivots = rref(a)
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = zeros(ncols, len(free))
    for k, f in enumerate(free):
        out[f, k] = ONE
        for row, p in enumerate(pivots):
            out[p, k] = -r[row, f]
    return out


def column_basis(a: np.ndarray) -> np.ndarray:
    """Linearly independent columns of ``a`` spanning its column space."""
    if a.size == 0:
        return zeros(a.shape[0], 0)
    _, pivots = rref(a)
    return a[:, pivots]


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One solution ``x`` of ``a x = b`` (``b`` a matrix), or ``None``."""
    n = a.shape[1]
    k = b.shape[1]
    if a.shape[0] == 0:
        return zeros(n, k)
    aug = np.empty((a.shape[0], n + k), dtype=object)
    aug[:, :n] = a
    aug[:, n:] = b
    r, pivots = rref(aug)
    if any(p >= n for p in pivots):
        return None
    x = zeros(n, k)
    for row, p in enumerate(pivots):
        x[p, :] = r[row, n:]
    return x


def inverse(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    x = solve(a, identity(n))
    if x is None or rank(a) != n:
        raise ZeroDivisionError("matrix is singular")
    return x


def complement_columns(basis: np.ndarray) -> list[int]:
    """Indices of standard basis vectors completing ``basis`` to a basis."""
    n = basis.shape[0]
    aug = np.empty((n, basis.shape[1] + n), dtype=object)
    aug[:, : basis.shape[1]] = basis
    aug[:, basis.shape[1]:] = identity(n)
    _, pivots = rref(aug)
    return [p - basis.shape[1] for p in pivots if p >= basis.shape[1]]


def hstack(mats: Sequence[np.ndarray], nrows: int) -> np.ndarray:
    cols = sum(m.shape[1] for m in mats)
    out = zeros(nrows, cols)
    c = 0
    for m in mats:
        out[:, c: c + m.shape[1]] = m
        c += m.shape[1]
    return out


def vstack(mats: Sequence[np.ndarray], ncols: int) -> np.ndarray:
    rows = sum(m.shape[0] for m in mats)
    out = zeros(rows, ncols)
    r = 0
    for m in mats:
        out[r: r + m.shape[0], :] = m
        r += m.shape[0]
    return out


def block_diag(mats: Iterable[np.ndarray]) -> np.ndarray:
    mats = list(mats)
    out = zeros(sum(m.shape[0] for m in mats), sum(m.shape[1] for m in mats))
    r = c = 0
    for m in mats:
        out[r: r + m.shape[0], c: c + m.shape[1]] = m
        r += m.shape[0]
        c += m.shape[1]
    return out


def matrix_power(a: np.ndarray, k: int) -> np.ndarray:
    result = identity(a.shape[0])
    base = a
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def trace(a: np.ndarray) -> Fraction:
    return sum((a[i, i] for i in range(a.shape[0])), ZERO)


def charpoly(a: np.ndarray) -> list[Fraction]:
    """Coefficients ``[c_0, ..., c_n]`` of ``det(x I - A)`` (Faddeev-LeVerrier)."""
    n = a.shape[0]
    coeffs = [ZERO] * n + [ONE]
    m = zeros(n, n)
    for k in range(1, n + 1):
        m = matmul(a, m)
        for i in range(n):
            m[i, i] += coeffs[n - k + 1]
        coeffs[n - k] = -trace(matmul(a, m)) / k
    return coeffs


def _divisors(n: int, limit: int = 10 ** 8) -> list[int]:
    n = abs(n)
    if n > limit:
        return []
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Distinct rational roots of ``sum c_i x^i`` by the rational root test.

    Gives up (returns what it has) when the integer coefficients are too
    large to enumerate divisors.
    """
    coeffs = [frac(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    roots = []
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs.pop(0)
        if ZERO not in roots:
            roots.append(ZERO)
    if len(coeffs) <= 1:
        return roots
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // np.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and sum(c * cand ** i for i, c in enumerate(ints)) == 0:
                    roots.append(cand)
    return roots


def fmt(x) -> str:
    """Render a rational as ``p/q`` (or ``p`` for integers)."""
    x = frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_strings(a: np.ndarray) -> list[list[str]]:
    return [[fmt(x) for x in row] for row in a]
