"""Exact dense linear algebra over QQ and GF(p).

Matrices are immutable row-major tuples of scalars.  Subspaces are stored by
their reduced-row-echelon basis, which is a canonical form: two subspaces are
equal precisely when their basis matrices are identical.  Enumeration of
subspaces over GF(p) is lazy and follows a fixed canonical order (pivot-column
sets lexicographically, then free entries), so searches are deterministic and
restartable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatchError
from .fields import FieldSpec, Scalar, check_same_field


def _as_tuple_vec(field: FieldSpec, v: Sequence) -> tuple:
    return tuple(field.of(x) for x in v)


class Matrix:
    """Immutable matrix with exact entries over a fixed field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FieldSpec, data: Sequence[Sequence]):
        rows = tuple(_as_tuple_vec(field, row) for row in data)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatchError("ragged rows")
        self.field = field
        self.rows = len(rows)
        self.cols = ncols
        self.data = rows

    # -- constructors -------------------------------------------------------

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return Matrix(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(field: FieldSpec, rows: int, cols: int) -> "Matrix":
        zero = field.zero
        return Matrix(field, [[zero] * cols for _ in range(rows)])

    @staticmethod
    def from_rows(field: FieldSpec, rows: Iterable[Sequence]) -> "Matrix":
        return Matrix(field, list(rows))

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data == other.data
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.field, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(
            " ".join(self.field.format(x) for x in row) for row in self.data
        )
        return "Matrix(%r, [%s])" % (self.field, body)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    # -- arithmetic ------------------------------------------------------------

    def _check_shape(self, other: "Matrix"):
        check_same_field(self.field, other.field)
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatchError("shape mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        add = self.field.add
        return Matrix(
            self.field,
            [
                [add(a, b) for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        sub = self.field.sub
        return Matrix(
            self.field,
            [
                [sub(a, b) for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data)
            ],
        )

    def scale(self, c) -> "Matrix":
        c = self.field.of(c)
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, x) for x in row] for row in self.data])

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, [[neg(x) for x in row] for row in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        check_same_field(self.field, other.field)
        if self.cols != other.rows:
            raise DimensionMismatchError("inner dimensions differ")
        F = self.field
        ocols = tuple(other.col(j) for j in range(other.cols))
        out = []
        for r in self.data:
            out.append([_dot(F, r, c) for c in ocols])
        return Matrix(F, out)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.col(j) for j in range(self.cols)])

    def apply_row(self, v: Sequence) -> tuple:
        """Row-vector times matrix: v @ self."""
        if len(v) != self.rows:
            raise DimensionMismatchError("vector length %d != %d" % (len(v), self.rows))
        F = self.field
        return tuple(_dot(F, v, self.col(j)) for j in range(self.cols))

    def apply_col(self, v: Sequence) -> tuple:
        """Matrix times column-vector: self @ v."""
        if len(v) != self.cols:
            raise DimensionMismatchError("vector length %d != %d" % (len(v), self.cols))
        F = self.field
        return tuple(_dot(F, row, v) for row in self.data)

    def trace(self):
        if self.rows != self.cols:
            raise DimensionMismatchError("trace of non-square matrix")
        acc = self.field.zero
        for i in range(self.rows):
            acc = self.field.add(acc, self.data[i][i])
        return acc

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatchError("power of non-square matrix")
        acc = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                acc = acc @ base
            base = base @ base
            k >>= 1
        return acc

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.data for x in row)

    # -- elimination -------------------------------------------------------------

    def rref(self) -> tuple["Matrix", int]:
        red, rank, _ = rref_with_pivots(self)
        return red, rank

    def rank(self) -> int:
        return self.rref()[1]

    def kernel_basis(self) -> "Matrix":
        """Basis (rows, RREF-canonical) of {v : self @ v = 0}, v a column vector."""
        F = self.field
        red, rank, pivots = rref_with_pivots(self)
        n = self.cols
        pivset = set(pivots)
        free = [j for j in range(n) if j not in pivset]
        basis = []
        for f in free:
            v = [F.zero] * n
            v[f] = F.one
            for r, pc in enumerate(pivots):
                v[pc] = F.neg(red.data[r][f])
            basis.append(v)
        if not basis:
            return Matrix(F, [])._with_cols(n)
        mat = Matrix(F, basis)
        red2, rank2, _ = rref_with_pivots(mat)
        return Matrix(F, red2.data[:rank2])._with_cols(n)

    def _with_cols(self, n: int) -> "Matrix":
        # Fix up the column count of an empty matrix.
        if self.rows == 0:
            m = Matrix(self.field, [])
            m.cols = n
            return m
        return self

    def solve_row(self, target: Sequence) -> tuple | None:
        """Solve x @ self = target for a row vector x, or None."""
        sol = self.transpose().solve_col(target)
        return sol

    def solve_col(self, target: Sequence) -> tuple | None:
        """Solve self @ x = target for a column vector x, or None (free vars 0)."""
        F = self.field
        if len(target) != self.rows:
            raise DimensionMismatchError("rhs length mismatch")
        if self.rows == 0:
            return (F.zero,) * self.cols
        aug = Matrix(F, [list(row) + [F.of(t)] for row, t in zip(self.data, target)])
        red, rank, pivots = rref_with_pivots(aug)
        n = self.cols
        for r in range(rank):
            if pivots[r] == n:
                return None  # pivot in the augmented column: inconsistent
        x = [F.zero] * n
        for r in range(rank):
            x[pivots[r]] = red.data[r][n]
        return tuple(x)

    def inverse(self) -> "Matrix":
        F = self.field
        n = self.rows
        if n != self.cols:
            raise DimensionMismatchError("inverse of non-square matrix")
        aug = Matrix(
            F,
            [
                list(row) + list(Matrix.identity(F, n).data[i])
                for i, row in enumerate(self.data)
            ],
        )
        red, rank, pivots = rref_with_pivots(aug)
        if rank != n or any(pivots[r] != r for r in range(n)):
            raise DimensionMismatchError("singular matrix")
        return Matrix(F, [row[n:] for row in red.data[:n]])

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def det2(self):
        """Determinant, 2x2 only."""
        if self.rows != 2 or self.cols != 2:
            raise DimensionMismatchError("det2 needs a 2x2 matrix")
        F = self.field
        return F.sub(F.mul(self.data[0][0], self.data[1][1]), F.mul(self.data[0][1], self.data[1][0]))


def _dot(F: FieldSpec, u: Sequence, v: Sequence):
    acc = F.zero
    for a, b in zip(u, v):
        if a != F.zero and b != F.zero:
            acc = F.add(acc, F.mul(a, b))
    return acc


def rref_with_pivots(M: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form: unit pivots, zeros above and below."""
    F = M.field
    rows = [list(r) for r in M.data]
    nrows, ncols = M.rows, M.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != F.zero:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != F.zero:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    out = Matrix(F, rows)._with_cols(ncols)
    return out, len(pivots), pivots


def rref(M: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank."""
    red, rank, _ = rref_with_pivots(M)
    return red, rank


class Subspace:
    """A subspace of F^n in canonical form: RREF basis, zero rows dropped.

    Equality of subspaces is equality of basis matrices.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: FieldSpec, ambient_dim: int, basis: Matrix, pivots: list[int]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def from_vectors(field: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatchError("vector length != ambient dim")
        if not vecs:
            m = Matrix(field, [])._with_cols(ambient_dim)
            return Subspace(field, ambient_dim, m, [])
        red, rank, pivots = rref_with_pivots(Matrix(field, vecs))
        m = Matrix(field, red.data[:rank])._with_cols(ambient_dim)
        return Subspace(field, ambient_dim, m, pivots)

    @staticmethod
    def zero(field: FieldSpec, ambient_dim: int) -> "Subspace":
        return Subspace.from_vectors(field, ambient_dim, [])

    @staticmethod
    def full(field: FieldSpec, ambient_dim: int) -> "Subspace":
        return Subspace.from_vectors(
            field, ambient_dim, Matrix.identity(field, ambient_dim).data
        )

    # -- basic queries ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def is_zero(self) -> bool:
        return self.dim == 0

    def vectors(self) -> tuple:
        return self.basis.data

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis.data == other.basis.data
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis.data))

    def __repr__(self):
        if self.dim == 0:
            return "Subspace(0 in F^%d)" % self.ambient_dim
        return "Subspace(dim %d in F^%d: %r)" % (self.dim, self.ambient_dim, self.basis)

    # -- membership ----------------------------------------------------------------

    def reduce_vector(self, v: Sequence) -> tuple:
        """Residual of v after subtracting its projection onto the basis rows."""
        F = self.field
        w = [F.of(x) for x in v]
        if len(w) != self.ambient_dim:
            raise DimensionMismatchError("vector length != ambient dim")
        for r, pc in enumerate(self.pivots):
            c = w[pc]
            if c != F.zero:
                row = self.basis.data[r]
                w = [F.sub(x, F.mul(c, y)) for x, y in zip(w, row)]
        return tuple(w)

    def contains_vector(self, v: Sequence) -> bool:
        F = self.field
        return all(x == F.zero for x in self.reduce_vector(v))

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(v) for v in other.basis.data)

    def coordinates(self, v: Sequence) -> tuple | None:
        """Coordinates of v in the RREF basis rows, or None if v is outside."""
        F = self.field
        if not self.contains_vector(v):
            return None
        w = [F.of(x) for x in v]
        return tuple(w[pc] for pc in self.pivots)

    # -- derived data ------------------------------------------------------------------

    def complement_functionals(self) -> Matrix:
        """Rows are functionals whose common kernel is exactly this subspace.

        Row for each non-pivot column c: v |-> v[c] - sum_r basis[r][c] * v[pivot_r].
        """
        F = self.field
        n = self.ambient_dim
        pivset = set(self.pivots)
        rows = []
        for c in range(n):
            if c in pivset:
                continue
            row = [F.zero] * n
            row[c] = F.one
            for r, pc in enumerate(self.pivots):
                row[pc] = F.neg(self.basis.data[r][c])
            rows.append(row)
        return Matrix(F, rows)._with_cols(n)

    def extend_to_full_basis(self) -> Matrix:
        """Invertible matrix whose first rows are the subspace basis, completed
        greedily with standard basis vectors in index order."""
        F = self.field
        n = self.ambient_dim
        rows = [list(r) for r in self.basis.data]
        current = self
        ident = Matrix.identity(F, n)
        for j in range(n):
            if current.dim == n:
                break
            e = ident.data[j]
            if not current.contains_vector(e):
                rows.append(list(e))
                current = Subspace.from_vectors(F, n, rows)
        return Matrix(F, rows)


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    """Smallest subspace containing both."""
    _check_ambient(U, V)
    return Subspace.from_vectors(
        U.field, U.ambient_dim, list(U.basis.data) + list(V.basis.data)
    )


def subspace_intersect(U: Subspace, V: Subspace) -> Subspace:
    """Intersection via the Zassenhaus block-matrix algorithm."""
    _check_ambient(U, V)
    F = U.field
    n = U.ambient_dim
    z = [F.zero] * n
    block = [list(r) + list(r) for r in U.basis.data] + [
        list(r) + z for r in V.basis.data
    ]
    if not block:
        return Subspace.zero(F, n)
    red, rank, _ = rref_with_pivots(Matrix(F, block))
    inter_rows = []
    for row in red.data[:rank]:
        left, right = row[:n], row[n:]
        if all(x == F.zero for x in left):
            inter_rows.append(right)
    return Subspace.from_vectors(F, n, inter_rows)


def _check_ambient(U: Subspace, V: Subspace) -> None:
    check_same_field(U.field, V.field)
    if U.ambient_dim != V.ambient_dim:
        raise DimensionMismatchError("ambient dimensions differ")


@dataclass(frozen=True)
class QuadraticPoly:
    """Monic quadratic t^2 + c1*t + c0."""

    c1: Scalar
    c0: Scalar

    def evaluate(self, F: FieldSpec, t) -> Scalar:
        t = F.of(t)
        return F.add(F.add(F.mul(t, t), F.mul(self.c1, t)), self.c0)

    def discriminant(self, F: FieldSpec) -> Scalar:
        return F.sub(F.mul(self.c1, self.c1), F.mul(F.of(4), self.c0))

    def __repr__(self):
        return "t^2 + (%s)t + (%s)" % (self.c1, self.c0)


def char_poly_2x2(m: Matrix) -> QuadraticPoly:
    """Characteristic polynomial t^2 - tr(m) t + det(m) of a 2x2 matrix."""
    if m.rows != 2 or m.cols != 2:
        raise DimensionMismatchError("char_poly_2x2 needs a 2x2 matrix")
    F = m.field
    return QuadraticPoly(F.neg(m.trace()), m.det2())


def is_irreducible_quadratic(q: QuadraticPoly, F: FieldSpec) -> bool:
    """Over GF(p): no root among the p elements.  Over QQ: the discriminant is
    not a rational square."""
    if F.is_prime_field:
        return all(q.evaluate(F, t) != F.zero for t in F.elements())
    return not F.is_square(q.discriminant(F))


def gaussian_binomial(n: int, d: int, p: int) -> int:
    """Number of d-dimensional subspaces of GF(p)^n."""
    if d < 0 or d > n:
        return 0
    num = den = 1
    for i in range(d):
        num *= p ** (n - i) - 1
        den *= p ** (d - i) - 1
    return num // den


def enumerate_subspaces(ambient_dim: int, dim: int, F: FieldSpec) -> Iterator[Subspace]:
    """Yield every dim-dimensional subspace of F^ambient_dim exactly once.

    Canonical order: pivot-column sets lexicographically, then free entries
    (row-major positions, leftmost slowest).  Only prime fields are
    enumerable.
    """
    if not F.is_prime_field:
        raise ValueError("cannot enumerate subspaces over the rationals")
    if dim < 0 or dim > ambient_dim:
        return
    p = F.p
    n = ambient_dim
    for piv in itertools.combinations(range(n), dim):
        pivset = set(piv)
        free_pos = [
            (r, c)
            for r in range(dim)
            for c in range(piv[r] + 1, n)
            if c not in pivset
        ]
        for vals in itertools.product(range(p), repeat=len(free_pos)):
            rows = [[0] * n for _ in range(dim)]
            for r in range(dim):
                rows[r][piv[r]] = 1
            for (r, c), v in zip(free_pos, vals):
                rows[r][c] = v
            basis = Matrix(F, rows)._with_cols(n)
            yield Subspace(F, n, basis, list(piv))


def enumerate_vectors(length: int, F: FieldSpec) -> Iterator[tuple]:
    """All vectors of F^length in odometer order (prime fields only)."""
    if not F.is_prime_field:
        raise ValueError("cannot enumerate vectors over the rationals")
    for vals in itertools.product(range(F.p), repeat=length):
        yield vals
