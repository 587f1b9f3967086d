"""Exact linear algebra over the rationals.

Every vector-space computation in the package runs through this module:
reduced row echelon forms, kernels, coordinate solving, and canonical
row-space bases, all over ``fractions.Fraction``.  Row spaces are always
canonicalized via RREF, so two equal subspaces have identical basis
matrices and results are reproducible bit for bit.

Matrices carry explicit shape (``Mat``) because zero-dimensional blocks
are everywhere in graded-module arithmetic and bare lists of rows lose
the column count.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac_vector(values: Iterable) -> Vector:
    return tuple(Fraction(x) for x in values)


class Mat:
    """Dense rational matrix with explicit shape."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Optional[list] = None):
        if rows is None:
            rows = [[ZERO] * ncols for _ in range(nrows)]
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError("matrix shape mismatch")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: Optional[int] = None) -> "Mat":
        rows = [[Fraction(x) for x in row] for row in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(len(rows), ncols, rows)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Mat":
        return cls(nrows, ncols)

    def copy(self) -> "Mat":
        return Mat(self.nrows, self.ncols, [row[:] for row in self.rows])

    def mul(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions differ")
        out = [[ZERO] * other.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            orow = out[i]
            for k, a in enumerate(row):
                if a:
                    brow = other.rows[k]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] += a * b
        return Mat(self.nrows, other.ncols, out)

    def vec(self, v: Sequence) -> list:
        if len(v) != self.ncols:
            raise ValueError("vector length differs from column count")
        return [sum((a * Fraction(x) for a, x in zip(row, v)), ZERO) for row in self.rows]

    def col(self, j: int) -> list:
        return [row[j] for row in self.rows]

    def transpose(self) -> "Mat":
        return Mat(self.ncols, self.nrows,
                   [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def hstack(self, other: "Mat") -> "Mat":
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        return Mat(self.nrows, self.ncols + other.ncols,
                   [self.rows[i] + other.rows[i] for i in range(self.nrows)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Mat) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.rows == other.rows)

    def __repr__(self) -> str:
        return f"Mat({self.nrows}x{self.ncols}, {self.rows!r})"


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the pivot column list."""
    rows = [row[:] for row in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        piv = None
        for i in range(r, m.nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m.nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.nrows:
            break
    return Mat(m.nrows, m.ncols, rows), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Mat) -> list[Vector]:
    """Canonical basis of the right kernel, one vector per free column."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * m.ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red.rows[i][f]
        basis.append(tuple(v))
    return basis


def solve(m: Mat, b: Sequence) -> Optional[list]:
    """One solution of ``m x = b``, or None when inconsistent."""
    aug = m.hstack(Mat(m.nrows, 1, [[Fraction(x)] for x in b]))
    red, pivots = rref(aug)
    if m.ncols in pivots:
        return None
    x = [ZERO] * m.ncols
    for i, p in enumerate(pivots):
        x[p] = red.rows[i][m.ncols]
    return x


def row_space_basis(vectors: Iterable[Sequence], ambient: int) -> tuple[Vector, ...]:
    """Canonical (RREF) basis of the span of the given vectors."""
    rows = [list(map(Fraction, v)) for v in vectors]
    if not rows:
        return ()
    red, pivots = rref(Mat(len(rows), ambient, rows))
    return tuple(tuple(red.rows[i]) for i in range(len(pivots)))


def _leading_index(row: Sequence[Fraction]) -> int:
    for j, x in enumerate(row):
        if x:
            return j
    raise ValueError("zero row has no leading index")


def coords_in_basis(basis: Sequence[Vector], v: Sequence) -> Optional[list]:
    """Coordinates of ``v`` in an RREF basis, or None when outside the span."""
    work = [Fraction(x) for x in v]
    coeffs = []
    for row in basis:
        p = _leading_index(row)
        c = work[p]
        coeffs.append(c)
        if c:
            work = [w - c * r for w, r in zip(work, row)]
    if any(work):
        return None
    return coeffs


def subspace_contains(basis: Sequence[Vector], v: Sequence) -> bool:
    return coords_in_basis(basis, v) is not None


def subspace_le(inner: Sequence[Vector], outer: Sequence[Vector]) -> bool:
    return all(subspace_contains(outer, v) for v in inner)


def subspace_eq(a: Sequence[Vector], b: Sequence[Vector]) -> bool:
    return subspace_le(a, b) and subspace_le(b, a)


def intersect_row_spaces(a: Sequence[Vector], b: Sequence[Vector], ambient: int) -> tuple[Vector, ...]:
    """Canonical basis of span(a) ∩ span(b)."""
    if not a or not b:
        return ()
    cols = []
    for j in range(ambient):
        cols.append([v[j] for v in a] + [-v[j] for v in b])
    m = Mat(ambient, len(a) + len(b), cols)
    vectors = []
    for k in kernel_basis(m):
        vec = [ZERO] * ambient
        for coeff, basis_vec in zip(k[: len(a)], a):
            if coeff:
                vec = [x + coeff * y for x, y in zip(vec, basis_vec)]
        vectors.append(vec)
    return row_space_basis(vectors, ambient)


def sum_row_spaces(a: Sequence[Vector], b: Sequence[Vector], ambient: int) -> tuple[Vector, ...]:
    return row_space_basis(list(a) + list(b), ambient)


def is_injective(m: Mat) -> bool:
    return rank(m) == m.ncols


def is_isomorphism(m: Mat) -> bool:
    return m.nrows == m.ncols and rank(m) == m.nrows


def sparse_rank(rows: Iterable[dict]) -> int:
    """Rank of a sparse rational matrix given as dicts ``col -> value``.

    Forward elimination with pivot rows normalized to leading 1; intended
    for the large, very sparse differentials of cochain complexes.
    """
    pivots: dict[int, dict] = {}
    rk = 0
    for r in rows:
        row = {c: Fraction(v) for c, v in r.items() if v}
        while row:
            c = min(row)
            if c in pivots:
                f = row.pop(c)
                for cc, vv in pivots[c].items():
                    if cc == c:
                        continue
                    nv = row.get(cc, ZERO) - f * vv
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
            else:
                f = row[c]
                pivots[c] = {cc: vv / f for cc, vv in row.items()}
                rk += 1
                break
    return rk
