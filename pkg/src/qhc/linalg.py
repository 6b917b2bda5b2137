"""Exact Gaussian elimination over a NumberField.

Matrices are lists of rows of FieldElement.  Everything is small and
exact; no pivoting heuristics beyond first nonzero entry.
"""

from __future__ import annotations

from typing import List, Optional

from .errors import InputError
from .field import FieldElement, NumberField


def solve(
    matrix: List[List[FieldElement]],
    rhs: List[FieldElement],
    field: NumberField,
) -> Optional[List[FieldElement]]:
    """Solve matrix * x = rhs exactly; None when inconsistent.

    Free variables are set to zero, so the returned solution is the
    deterministic one produced by forward elimination.
    """
    if len(matrix) != len(rhs):
        raise InputError("dimension mismatch between matrix and rhs")
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    for row in matrix:
        if len(row) != ncols:
            raise InputError("ragged matrix")
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    pivots = []
    prow = 0
    for col in range(ncols):
        pivot = None
        for r in range(prow, nrows):
            if aug[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        aug[prow], aug[pivot] = aug[pivot], aug[prow]
        inv = aug[prow][col].inv()
        aug[prow] = [v * inv for v in aug[prow]]
        for r in range(nrows):
            if r != prow and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[prow])]
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    for r in range(prow, nrows):
        if aug[r][ncols]:
            return None
    sol = [field.zero()] * ncols
    for r, col in enumerate(pivots):
        sol[col] = aug[r][ncols]
    return sol


def nullspace(
    matrix: List[List[FieldElement]], field: NumberField
) -> List[List[FieldElement]]:
    """Basis of the right nullspace, one vector per free column."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    aug = [list(row) for row in matrix]
    pivots = []
    prow = 0
    for col in range(ncols):
        pivot = None
        for r in range(prow, nrows):
            if aug[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        aug[prow], aug[pivot] = aug[pivot], aug[prow]
        inv = aug[prow][col].inv()
        aug[prow] = [v * inv for v in aug[prow]]
        for r in range(nrows):
            if r != prow and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[prow])]
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    basis = []
    pivot_set = set(pivots)
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [field.zero()] * ncols
        vec[free] = field.one()
        for r, col in enumerate(pivots):
            vec[col] = -aug[r][free]
        basis.append(vec)
    return basis


def independent_subset(
    vectors: List[List[FieldElement]], field: NumberField
) -> List[int]:
    """Indices of a maximal linearly independent subset (greedy, in order)."""
    if not vectors:
        return []
    ncols = len(vectors[0])
    rows: List[List[FieldElement]] = []
    chosen = []
    for idx, vec in enumerate(vectors):
        work = list(vec)
        for row in rows:
            lead = next((j for j, v in enumerate(row) if v), None)
            if lead is not None and work[lead]:
                factor = work[lead] / row[lead]
                work = [a - factor * b for a, b in zip(work, row)]
        if any(work):
            rows.append(work)
            chosen.append(idx)
        if len(rows) == ncols:
            break
    return chosen
