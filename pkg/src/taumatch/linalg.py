"""Exact linear algebra over the rationals.

Matrices are 2-D numpy arrays with ``dtype=object`` whose entries are
``fractions.Fraction`` (plain ints are tolerated; all arithmetic stays in Q).
Empty matrices (0 x m, m x 0) are legal and stand for maps to or from the
zero space.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

Mat = np.ndarray


def scalar(x) -> Fraction:
    """Coerce an int, string like ``-2/3``, or Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass ints, Fractions or strings")
    return Fraction(x)


def mat(rows: Sequence[Sequence], cols: Optional[int] = None) -> Mat:
    """Build an exact matrix from nested sequences.

    ``cols`` disambiguates the width when ``rows`` is empty.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return np.zeros((0, 0 if cols is None else cols), dtype=object)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged rows")
    if cols is not None and cols != width:
        raise ValueError(f"expected {cols} columns, got {width}")
    out = np.empty((len(rows), width), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            out[i, j] = scalar(x)
    return out


def zeros(r: int, c: int) -> Mat:
    out = np.empty((r, c), dtype=object)
    out[...] = Fraction(0)
    return out


def eye(n: int) -> Mat:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def mul(a: Mat, b: Mat) -> Mat:
    """Exact matrix product; also correct when the inner dimension is 0."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return a @ b


def hstack(blocks: Sequence[Mat]) -> Mat:
    blocks = list(blocks)
    if not blocks:
        return zeros(0, 0)
    return np.hstack(blocks)


def vstack(blocks: Sequence[Mat]) -> Mat:
    blocks = list(blocks)
    if not blocks:
        return zeros(0, 0)
    return np.vstack(blocks)


def block_diag(blocks: Iterable[Mat]) -> Mat:
    blocks = list(blocks)
    r = sum(b.shape[0] for b in blocks)
    c = sum(b.shape[1] for b in blocks)
    out = zeros(r, c)
    i = j = 0
    for b in blocks:
        out[i : i + b.shape[0], j : j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def is_zero_matrix(m: Mat) -> bool:
    return all(x == 0 for x in m.flat)


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = m.copy()
    nr, nc = a.shape
    pivots: list[int] = []
    row = 0
    for col in range(nc):
        piv = next((r for r in range(row, nr) if a[r, col] != 0), None)
        if piv is None:
            continue
        if piv != row:
            a[[row, piv]] = a[[piv, row]]
        a[row] = a[row] * (Fraction(1) / scalar(a[row, col]))
        for r in range(nr):
            if r != row and a[r, col] != 0:
                a[r] = a[r] - a[r, col] * a[row]
        pivots.append(col)
        row += 1
        if row == nr:
            break
    return a, pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Mat) -> Mat:
    """Columns spanning the right null space; column count = cols - rank."""
    r, pivots = rref(m)
    nc = m.shape[1]
    free = [c for c in range(nc) if c not in pivots]
    out = zeros(nc, len(free))
    for k, fc in enumerate(free):
        out[fc, k] = Fraction(1)
        for i, pc in enumerate(pivots):
            out[pc, k] = -scalar(r[i, fc])
    return out


def solve(m: Mat, rhs: Mat) -> Optional[Mat]:
    """A particular solution of ``m @ x = rhs``, or None when inconsistent.

    ``rhs`` may have several columns; all are solved simultaneously.
    """
    if rhs.shape[0] != m.shape[0]:
        raise ValueError(f"rhs has {rhs.shape[0]} rows, expected {m.shape[0]}")
    nc = m.shape[1]
    aug = hstack([m, rhs]) if nc + rhs.shape[1] > 0 else zeros(m.shape[0], 0)
    r, pivots = rref(aug)
    if any(p >= nc for p in pivots):
        return None
    out = zeros(nc, rhs.shape[1])
    for i, pc in enumerate(pivots):
        for j in range(rhs.shape[1]):
            out[pc, j] = r[i, nc + j]
    return out


def column_space_basis(m: Mat) -> Mat:
    """The pivot columns of ``m``, a basis of its column space."""
    _, pivots = rref(m)
    return m[:, pivots].copy() if pivots else zeros(m.shape[0], 0)


def from_columns(cols: Sequence[Sequence], height: Optional[int] = None) -> Mat:
    cols = [list(c) for c in cols]
    if not cols:
        return zeros(0 if height is None else height, 0)
    return mat(cols).T.copy()
