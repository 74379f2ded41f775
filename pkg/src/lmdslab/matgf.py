"""Dense exact linear algebra over a FieldCtx.

Matrices are immutable, row-major, with entries stored in the field's
internal representation.  Everything is plain Gaussian elimination with
deterministic pivoting (first nonzero entry in column order), which keeps
reduced echelon forms, kernels and determinants byte-stable across runs.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ForeignElement, NotSquare
from .fields import FieldCtx, FieldElement


class GFMatrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FieldCtx, data: tuple, cols: int | None = None):
        self.field = field
        self.rows = len(data)
        self.cols = len(data[0]) if data else (cols or 0)
        self.data = data  # tuple of tuples of internal reps

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldCtx, rows: Iterable[Iterable]) -> "GFMatrix":
        """Rows of FieldElements or canonical integer encodings."""
        data = []
        width = None
        for row in rows:
            reps = tuple(field.element(x).rep for x in row)
            if width is None:
                width = len(reps)
            elif len(reps) != width:
                raise ValueError("ragged rows")
            data.append(reps)
        return cls(field, tuple(data))

    @classmethod
    def zeros(cls, field: FieldCtx, rows: int, cols: int) -> "GFMatrix":
        z = field.level.zero
        return cls(field, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldCtx, n: int) -> "GFMatrix":
        z, o = field.level.zero, field.level.one
        return cls(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    # -- accessors -------------------------------------------------------------

    def __getitem__(self, idx) -> FieldElement:
        i, j = idx
        return FieldElement(self.field, self.data[i][j])

    def row(self, i) -> tuple:
        return self.data[i]

    def to_encodings(self) -> list[list[int]]:
        enc = self.field.level.encode
        return [[enc(x) for x in row] for row in self.data]

    def __eq__(self, other):
        return (
            isinstance(other, GFMatrix)
            and other.field.signature == self.field.signature
            and other.data == self.data
        )

    def __hash__(self):
        return hash((self.field.signature, self.data))

    def __repr__(self):
        return f"GFMatrix({self.field.name}, {self.rows}x{self.cols})"

    # -- structural ops ---------------------------------------------------------

    def transpose(self) -> "GFMatrix":
        if self.rows == 0:
            return GFMatrix(self.field, tuple(() for _ in range(self.cols)))
        if self.cols == 0:
            return GFMatrix(self.field, (), cols=self.rows)
        return GFMatrix(self.field, tuple(zip(*self.data)))

    def select_columns(self, js: Sequence[int]) -> "GFMatrix":
        return GFMatrix(self.field, tuple(tuple(row[j] for j in js) for row in self.data))

    def select_rows(self, idx: Sequence[int]) -> "GFMatrix":
        return GFMatrix(self.field, tuple(self.data[i] for i in idx))

    def neg(self) -> "GFMatrix":
        ng = self.field.level.neg
        return GFMatrix(self.field, tuple(tuple(ng(x) for x in row) for row in self.data))

    def __matmul__(self, other: "GFMatrix") -> "GFMatrix":
        if other.field.signature != self.field.signature:
            raise ForeignElement("matrix product across different fields")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        lv = self.field.level
        ot = tuple(zip(*other.data)) if other.data else ()
        out = []
        for row in self.data:
            new = []
            for col in ot:
                acc = lv.zero
                for a, b in zip(row, col):
                    if a != lv.zero and b != lv.zero:
                        acc = lv.add(acc, lv.mul(a, b))
                new.append(acc)
            out.append(tuple(new))
        return GFMatrix(self.field, tuple(out))

    def is_zero(self) -> bool:
        z = self.field.level.zero
        return all(x == z for row in self.data for x in row)

    def apply_to_vector(self, vec: Sequence) -> tuple:
        """Syndrome-style product: self @ vec^T, entries as reps."""
        lv = self.field.level
        reps = [self.field.element(v).rep for v in vec]
        out = []
        for row in self.data:
            acc = lv.zero
            for a, b in zip(row, reps):
                if a != lv.zero and b != lv.zero:
                    acc = lv.add(acc, lv.mul(a, b))
            out.append(acc)
        return tuple(out)


def _eliminate(lv, work: list[list], reduce_up: bool) -> tuple[list[int], int]:
    """In-place forward elimination; returns (pivot columns, swap count)."""
    rows = len(work)
    cols = len(work[0]) if rows else 0
    pivots = []
    swaps = 0
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pr = None
        for i in range(r, rows):
            if work[i][c] != lv.zero:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            work[r], work[pr] = work[pr], work[r]
            swaps += 1
        inv = lv.inv(work[r][c])
        work[r] = [lv.mul(inv, x) for x in work[r]]
        span = range(rows) if reduce_up else range(r + 1, rows)
        for i in span:
            if i == r:
                continue
            f = work[i][c]
            if f == lv.zero:
                continue
            ri, rr = work[i], work[r]
            work[i] = [lv.sub(ri[j], lv.mul(f, rr[j])) for j in range(cols)]
        pivots.append(c)
        r += 1
    return pivots, swaps


def rref(m: GFMatrix) -> tuple[GFMatrix, tuple[int, ...]]:
    """Reduced row echelon form (unique) and its pivot columns."""
    lv = m.field.level
    work = [list(row) for row in m.data]
    pivots, _ = _eliminate(lv, work, reduce_up=True)
    nz = [tuple(row) for row in work if any(x != lv.zero for x in row)]
    pad = [tuple([lv.zero] * m.cols) for _ in range(m.rows - len(nz))]
    return GFMatrix(m.field, tuple(nz + pad)), tuple(pivots)


def rank(m: GFMatrix) -> int:
    lv = m.field.level
    work = [list(row) for row in m.data]
    pivots, _ = _eliminate(lv, work, reduce_up=False)
    return len(pivots)


def det(m: GFMatrix) -> FieldElement:
    """Exact determinant by Gaussian elimination (first-nonzero pivoting)."""
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols} matrix has no determinant")
    lv = m.field.level
    n = m.rows
    if n == 0:
        return FieldElement(m.field, lv.one)
    work = [list(row) for row in m.data]
    sign_flip = False
    acc = lv.one
    for c in range(n):
        pr = None
        for i in range(c, n):
            if work[i][c] != lv.zero:
                pr = i
                break
        if pr is None:
            return FieldElement(m.field, lv.zero)
        if pr != c:
            work[c], work[pr] = work[pr], work[c]
            sign_flip = not sign_flip
        piv = work[c][c]
        acc = lv.mul(acc, piv)
        inv = lv.inv(piv)
        rc = work[c]
        for i in range(c + 1, n):
            f = work[i][c]
            if f == lv.zero:
                continue
            f = lv.mul(f, inv)
            ri = work[i]
            work[i] = [lv.sub(ri[j], lv.mul(f, rc[j])) for j in range(c, n)]
            # keep row alignment: eliminated prefix is dead, pad with zeros
            work[i] = [lv.zero] * c + work[i]
    if sign_flip:
        acc = lv.neg(acc)
    return FieldElement(m.field, acc)


def kernel(m: GFMatrix, side: str = "right") -> GFMatrix:
    """Canonical basis (rows) of the right or left kernel.

    The basis is produced from the RREF free-variable construction and then
    re-reduced, so two calls on equal matrices return identical matrices.
    """
    if side == "left":
        return kernel(m.transpose(), "right")
    if side != "right":
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    lv = m.field.level
    r, pivots = rref(m)
    piv_set = set(pivots)
    free = [j for j in range(m.cols) if j not in piv_set]
    basis = []
    for f in free:
        vec = [lv.zero] * m.cols
        vec[f] = lv.one
        for i, p in enumerate(pivots):
            vec[p] = lv.neg(r.data[i][f])
        basis.append(tuple(vec))
    if not basis:
        return GFMatrix(m.field, (), cols=m.cols)
    reduced, _ = rref(GFMatrix(m.field, tuple(basis)))
    return reduced


def solve_right(m: GFMatrix, target: Sequence) -> tuple | None:
    """One solution x (as reps tuple) of m @ x^T = target, or None."""
    lv = m.field.level
    t = [m.field.element(v).rep for v in target]
    work = [list(row) + [t[i]] for i, row in enumerate(m.data)]
    _eliminate(lv, work, reduce_up=True)
    sol = [lv.zero] * m.cols
    for row in work:
        lead = next((j for j in range(m.cols) if row[j] != lv.zero), None)
        if lead is None:
            if row[m.cols] != lv.zero:
                return None
            continue
        sol[lead] = row[m.cols]
    return tuple(sol)
