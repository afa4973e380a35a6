"""Integer Smith normal form and first homology from abelianized
presentations.

This module is the brute-force oracle for every closed-form torsion value
computed elsewhere; it deliberately shares no code path with those
formulas.  Matrices are dense lists of rows of Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass

from .seifert import SeifertData
from .torus_bundle import AnosovMatrix

Matrix = list[list[int]]


@dataclass(frozen=True)
class H1Summary:
    """First homology: free rank plus the elementary divisor chain
    d_1 | d_2 | ... (each > 1)."""

    betti: int
    elementary_divisors: tuple[int, ...]

    @property
    def torsion_order(self) -> int:
        out = 1
        for d in self.elementary_divisors:
            out *= d
        return out


def _validated(matrix) -> Matrix:
    grid = [[int(x) for x in row] for row in matrix]
    if grid and any(len(row) != len(grid[0]) for row in grid):
        raise ValueError("matrix rows have unequal lengths")
    return grid


def smith_normal_form(matrix) -> list[int]:
    """Diagonal of the Smith normal form: non-negative, d_1 | d_2 | ...,
    length min(rows, cols).

    Exact integer row/column reduction.  The pivot is always the nonzero
    entry of minimal absolute value in the trailing block, which keeps
    intermediate entries small for the matrices in scope here.
    """
    grid = _validated(matrix)
    rows = len(grid)
    cols = len(grid[0]) if rows else 0
    size = min(rows, cols)
    diag: list[int] = []

    for t in range(size):
        while True:
            pivot = None
            best = None
            for i in range(t, rows):
                row = grid[i]
                for j in range(t, cols):
                    v = row[j]
                    if v and (best is None or abs(v) < best):
                        best = abs(v)
                        pivot = (i, j)
            if pivot is None:
                break  # trailing block is zero
            pi, pj = pivot
            if pi != t:
                grid[t], grid[pi] = grid[pi], grid[t]
            if pj != t:
                for row in grid:
                    row[t], row[pj] = row[pj], row[t]
            p = grid[t][t]

            dirty = False
            for i in range(t + 1, rows):
                q = grid[i][t] // p
                if q:
                    ri, rt = grid[i], grid[t]
                    for j in range(t, cols):
                        ri[j] -= q * rt[j]
                if grid[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = grid[t][j] // p
                if q:
                    for row in grid:
                        row[j] -= q * row[t]
                if grid[t][j]:
                    dirty = True
            if dirty:
                continue  # remainders are smaller than |p|; re-pivot

            # pivot row/column clean: force p to divide the trailing block
            offender = None
            for i in range(t + 1, rows):
                row = grid[i]
                for j in range(t + 1, cols):
                    if row[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            rt, ro = grid[t], grid[offender]
            for j in range(t, cols):
                rt[j] += ro[j]

        if pivot is None:
            break
        diag.append(abs(grid[t][t]))

    diag.extend([0] * (size - len(diag)))
    return diag


def presentation_matrix_seifert(data: SeifertData) -> Matrix:
    """Abelianized relation matrix of the fibration's fundamental group.

    Generators x_1..x_2g (surface), q_1..q_n (one per marked fiber), h
    (regular fiber); relations a_i*q_i + b_i*h = 0 and
    q_1 + ... + q_n - b*h = 0.  The sign of the last entry is fixed so the
    maximal minor over the q's and h equals e(N) * prod(a_i); the torsion
    order is independent of that choice.
    """
    g2 = 2 * data.genus
    n = data.n
    cols = g2 + n + 1
    rows: Matrix = []
    for i, (a, twist) in enumerate(data.fibers):
        row = [0] * cols
        row[g2 + i] = a
        row[-1] = twist
        rows.append(row)
    last = [0] * cols
    for i in range(n):
        last[g2 + i] = 1
    last[-1] = -data.b
    rows.append(last)
    return rows


def presentation_matrix_bundle(matrix: AnosovMatrix) -> Matrix:
    """Relation matrix I - A for the fiber summand of a torus bundle's
    first homology (the base circle contributes a free Z factor)."""
    return [[1 - matrix.a, -matrix.b], [-matrix.c, 1 - matrix.d]]


def h1_from_presentation(matrix) -> H1Summary:
    """H_1 of the abelian group presented by the matrix: columns are
    generators, rows are relations."""
    grid = _validated(matrix)
    cols = len(grid[0]) if grid else 0
    diag = smith_normal_form(grid)
    rank = sum(1 for d in diag if d)
    divisors = tuple(d for d in diag if d > 1)
    return H1Summary(betti=cols - rank, elementary_divisors=divisors)


def seifert_torsion_oracle(data: SeifertData) -> int:
    """Torsion order of H_1 straight from the presentation; works for any
    Euler number, unlike the closed form."""
    return h1_from_presentation(presentation_matrix_seifert(data)).torsion_order
