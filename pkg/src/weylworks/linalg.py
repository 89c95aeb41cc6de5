"""Exact linear algebra over the rationals.

Sparse vectors are dicts mapping coordinate index to a nonzero int or
Fraction.  RatMat stores a sparse matrix column-major.  EchelonBasis keeps
a growing subspace in reduced row echelon form, which is the canonical
basis of the subspace, so results never depend on insertion order.
No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvariantViolation

Scalar = int | Fraction
SparseVec = dict[int, Scalar]


def vec_add_scaled(target: SparseVec, src: SparseVec, coeff: Scalar) -> None:
    """target += coeff * src, in place, dropping zeros."""
    if not coeff:
        return
    for k, v in src.items():
        nv = target.get(k, 0) + coeff * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class RatMat:
    """Immutable-by-convention sparse matrix over exact rationals."""

    __slots__ = ("nrows", "ncols", "_cols")

    def __init__(self, nrows: int, ncols: int, cols: dict[int, SparseVec]):
        self.nrows = nrows
        self.ncols = ncols
        self._cols = cols

    @classmethod
    def from_entries(cls, nrows, ncols, entries) -> "RatMat":
        """Build from an iterable of (row, col, value); repeats are summed."""
        cols: dict[int, SparseVec] = {}
        for r, c, v in entries:
            if not v:
                continue
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise ValueError(f"entry ({r}, {c}) outside a {nrows}x{ncols} matrix")
            col = cols.setdefault(c, {})
            nv = col.get(r, 0) + v
            if nv:
                col[r] = nv
            else:
                del col[r]
        for c in [c for c, col in cols.items() if not col]:
            del cols[c]
        return cls(nrows, ncols, cols)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "RatMat":
        return cls(nrows, ncols, {})

    def column(self, c: int) -> SparseVec:
        return self._cols.get(c, {})

    def apply(self, vec: SparseVec) -> SparseVec:
        """Matrix-vector product on a sparse vector."""
        out: SparseVec = {}
        for c, x in vec.items():
            if x:
                vec_add_scaled(out, self._cols.get(c, {}), x)
        return out

    def __matmul__(self, other: "RatMat") -> "RatMat":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.ncols} vs {other.nrows}")
        cols = {}
        for c, col in other._cols.items():
            res = self.apply(col)
            if res:
                cols[c] = res
        return RatMat(self.nrows, other.ncols, cols)

    def __add__(self, other: "RatMat") -> "RatMat":
        return self._combine(other, 1)

    def __sub__(self, other: "RatMat") -> "RatMat":
        return self._combine(other, -1)

    def _combine(self, other: "RatMat", sign: int) -> "RatMat":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        cols: dict[int, SparseVec] = {c: dict(col) for c, col in self._cols.items()}
        for c, col in other._cols.items():
            tgt = cols.setdefault(c, {})
            vec_add_scaled(tgt, col, sign)
            if not tgt:
                del cols[c]
        return RatMat(self.nrows, self.ncols, cols)

    def transpose(self) -> "RatMat":
        return RatMat.from_entries(
            self.ncols, self.nrows, ((c, r, v) for r, c, v in self.entries())
        )

    def is_zero(self) -> bool:
        return not self._cols

    def entries(self) -> list[tuple[int, int, Scalar]]:
        """All nonzero entries sorted row-major."""
        out = [(r, c, v) for c, col in self._cols.items() for r, v in col.items()]
        out.sort(key=lambda t: (t[0], t[1]))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMat):
            return NotImplemented
        return (
            (self.nrows, self.ncols) == (other.nrows, other.ncols)
            and (self - other).is_zero()
        )

    def __repr__(self) -> str:
        nnz = sum(len(col) for col in self._cols.values())
        return f"RatMat({self.nrows}x{self.ncols}, {nnz} nonzero)"


class EchelonBasis:
    """A subspace maintained in reduced row echelon form over the rationals.

    Rows are sparse vectors; every pivot entry is 1 and pivot columns are
    zero in all other rows.  Because RREF is a normal form, the stored
    rows depend only on the subspace, not on the insertion history.
    """

    def __init__(self):
        self.rows: list[SparseVec] = []
        self.pivots: list[int] = []
        self._pivot_row: dict[int, int] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _eliminate(self, vec: SparseVec, record: dict[int, Scalar] | None) -> SparseVec:
        v = dict(vec)
        # RREF rows contain no foreign pivot columns, so one sorted pass
        # over the pivot columns initially present in v is complete.
        for p in sorted(c for c in v if c in self._pivot_row):
            coeff = v.get(p)
            if not coeff:
                continue
            ri = self._pivot_row[p]
            if record is not None:
                record[ri] = coeff
            vec_add_scaled(v, self.rows[ri], -coeff)
        return v

    def residual(self, vec: SparseVec) -> SparseVec:
        """Reduce vec against the basis; empty dict means vec is in the span."""
        return self._eliminate(vec, None)

    def insert(self, vec: SparseVec) -> SparseVec | None:
        """Add vec to the span.

        Returns a copy of the new normalized row if the span grew, else None.
        """
        v = self._eliminate(vec, None)
        if not v:
            return None
        pivot = min(v)
        inv = Fraction(1, 1) / v[pivot]
        v = {c: val * inv for c, val in v.items()}
        v[pivot] = Fraction(1)
        for row in self.rows:
            if pivot in row:
                vec_add_scaled(row, v, -row[pivot])
        self._pivot_row[pivot] = len(self.rows)
        self.rows.append(v)
        self.pivots.append(pivot)
        return dict(v)

    def coords(self, vec: SparseVec) -> dict[int, Scalar]:
        """Coordinates of vec in the stored rows, keyed by row index.

        Raises InvariantViolation if vec is outside the span.
        """
        record: dict[int, Scalar] = {}
        leftover = self._eliminate(vec, record)
        if leftover:
            raise InvariantViolation("vector lies outside the spanned subspace")
        return record

    def sorted_order(self) -> list[int]:
        """Row indices ordered by pivot column."""
        return sorted(range(len(self.rows)), key=lambda i: self.pivots[i])


def rref(rows: list[list[Scalar]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a dense matrix; returns (rows, pivot cols).

    Pivoting always takes the first nonzero entry in the current column.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(mat):
            break
        src = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if src is None:
            continue
        mat[r], mat[src] = mat[src], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                coeff = mat[i][c]
                mat[i] = [x - coeff * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def kernel(rows: list[list[Scalar]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Kernel basis of the linear map given by dense ``rows``.

    Returns (basis, free_cols).  Basis vector i has a 1 in column
    free_cols[i] and 0 in every other free column, so the coordinates of
    any kernel element are simply its values at the free columns.
    """
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            if row[f]:
                vec[p] = -row[f]
        basis.append(vec)
    return basis, free
