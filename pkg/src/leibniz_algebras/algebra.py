"""Structure-constant model of a finite-dimensional (left) Leibniz algebra.

An algebra of dimension n over an exact field is the tensor c[i][j][k] with
[e_i, e_j] = sum_k c[i][j][k] e_k.  No symmetry of the bracket is assumed.
The bracket convention is the left Leibniz rule throughout:

    [x, [y, z]] = [[x, y], z] + [y, [x, z]]

Vectors are coordinate rows over the fixed basis.  All values are immutable
after construction and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    ConsistencyError,
    DimensionMismatchError,
    NotLeibnizError,
)
from .fields import FieldSpec, check_same_field
from .linalg import Matrix, Subspace, subspace_sum


class AlgebraTable:
    """Immutable n*n*n structure-constant table over an exact field."""

    __slots__ = ("field", "dim", "c", "name", "_cache")

    def __init__(self, field: FieldSpec, c, name: str | None = None):
        n = len(c)
        table = []
        for i in range(n):
            if len(c[i]) != n:
                raise DimensionMismatchError("structure tensor is not n*n*n")
            row = []
            for j in range(n):
                vec = tuple(field.of(x) for x in c[i][j])
                if len(vec) != n:
                    raise DimensionMismatchError("structure tensor is not n*n*n")
                row.append(vec)
            table.append(tuple(row))
        self.field = field
        self.dim = n
        self.c = tuple(table)
        self.name = name
        self._cache = {}

    @staticmethod
    def from_products(field: FieldSpec, dim: int, products: dict, name: str | None = None) -> "AlgebraTable":
        """Build a table from a sparse {(i, j): coefficient vector} dict."""
        zero = [field.zero] * dim
        c = [[list(zero) for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in products.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatchError("product index out of range")
            c[i][j] = list(vec)
        return AlgebraTable(field, c, name=name)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraTable)
            and self.field == other.field
            and self.c == other.c
        )

    def __hash__(self):
        return hash((self.field, self.c))

    def __repr__(self):
        label = self.name or "algebra"
        return "AlgebraTable(%s, dim %d over %r)" % (label, self.dim, self.field)

    def zero_vector(self) -> tuple:
        return (self.field.zero,) * self.dim

    def basis_vector(self, i: int) -> tuple:
        F = self.field
        return tuple(F.one if j == i else F.zero for j in range(self.dim))

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def rename(self, name: str) -> "AlgebraTable":
        out = AlgebraTable(self.field, self.c, name=name)
        return out


@dataclass(frozen=True)
class MultOperator:
    """Matrix of a one-sided multiplication operator, tagged with its side.

    Column j holds the coordinates of [x, e_j] (side 'left') or [e_j, x]
    (side 'right').
    """

    matrix: Matrix
    side: str

    def apply(self, v: Sequence) -> tuple:
        return self.matrix.apply_col(v)


def bracket(L: AlgebraTable, u: Sequence, v: Sequence) -> tuple:
    """Evaluate [u, v] for coordinate rows u, v."""
    F = L.field
    n = L.dim
    if len(u) != n or len(v) != n:
        raise DimensionMismatchError("vector length != algebra dimension")
    out = [F.zero] * n
    for i in range(n):
        ui = F.of(u[i])
        if ui == F.zero:
            continue
        ci = L.c[i]
        for j in range(n):
            vj = F.of(v[j])
            if vj == F.zero:
                continue
            coef = F.mul(ui, vj)
            for k, x in enumerate(ci[j]):
                if x != F.zero:
                    out[k] = F.add(out[k], F.mul(coef, x))
    return tuple(out)


def leibniz_failure(L: AlgebraTable) -> tuple | None:
    """First basis triple (i, j, k) violating the left Leibniz rule, or None.

    Trilinearity makes checking basis triples sufficient.
    """
    if "leibniz_failure" in L._cache:
        return L._cache["leibniz_failure"]
    F = L.field
    n = L.dim
    result = None
    for i in range(n):
        ei = L.basis_vector(i)
        for j in range(n):
            ej = L.basis_vector(j)
            bij = L.c[i][j]
            for k in range(n):
                ek = L.basis_vector(k)
                lhs = bracket(L, ei, L.c[j][k])
                rhs1 = bracket(L, bij, ek)
                rhs2 = bracket(L, ej, L.c[i][k])
                if any(
                    a != F.add(b, c) for a, b, c in zip(lhs, rhs1, rhs2)
                ):
                    result = (i, j, k)
                    break
            if result:
                break
        if result:
            break
    L._cache["leibniz_failure"] = result
    return result


def is_leibniz(L: AlgebraTable) -> bool:
    return leibniz_failure(L) is None


def require_leibniz(L: AlgebraTable) -> None:
    bad = leibniz_failure(L)
    if bad is not None:
        raise NotLeibnizError(
            "table violates the Leibniz rule at basis triple %r" % (bad,), triple=bad
        )


def squares_ideal(L: AlgebraTable) -> Subspace:
    """Span of all [x, x].

    Generated by the diagonal brackets [e_i, e_i] together with the
    polarized sums [e_i, e_j] + [e_j, e_i] for i < j.
    """
    require_leibniz(L)
    F = L.field
    gens = []
    for i in range(L.dim):
        gens.append(L.c[i][i])
        for j in range(i + 1, L.dim):
            gens.append(tuple(F.add(a, b) for a, b in zip(L.c[i][j], L.c[j][i])))
    return Subspace.from_vectors(F, L.dim, gens)


def _is_skew(L: AlgebraTable) -> bool:
    F = L.field
    for i in range(L.dim):
        for j in range(i, L.dim):
            if any(a != F.neg(b) for a, b in zip(L.c[i][j], L.c[j][i])):
                return False
    return True


def is_lie(L: AlgebraTable) -> bool:
    """True iff the table is a Leibniz algebra with zero squares span.

    A non-Leibniz table is never Lie, whatever its symmetry.  On Leibniz
    input, skew-symmetry of the table is computed as a redundant cross-check;
    the two criteria can only disagree in characteristic 2, which no
    classification code path accepts, so a disagreement there raises.
    """
    if leibniz_failure(L) is not None:
        return False
    by_squares = squares_ideal(L).is_zero()
    by_skew = _is_skew(L)
    if by_squares != by_skew:
        if L.field.characteristic != 2:
            raise ConsistencyError("squares-span and skew-symmetry tests disagree")
        return by_squares
    return by_squares


def mult_operator(L: AlgebraTable, x: Sequence, side: str = "left") -> MultOperator:
    """Matrix of left multiplication L_x or right multiplication R_x."""
    F = L.field
    n = L.dim
    cols = []
    for j in range(n):
        ej = L.basis_vector(j)
        w = bracket(L, x, ej) if side == "left" else bracket(L, ej, x)
        cols.append(w)
    mat = Matrix(F, [[cols[j][k] for j in range(n)] for k in range(n)])
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    return MultOperator(mat, side)


def _stacked_action_kernel(L: AlgebraTable, conditions) -> Subspace:
    """Joint kernel of a family of linear conditions on x, each condition a row
    of coefficients over the x-coordinates."""
    F = L.field
    mat = Matrix(F, conditions)._with_cols(L.dim)
    if mat.rows == 0:
        return Subspace.full(F, L.dim)
    ker = mat.kernel_basis()
    return Subspace.from_vectors(F, L.dim, ker.data)


def center(L: AlgebraTable) -> Subspace:
    """{x : [x, L] = [L, x] = 0}, the joint kernel of all left and right actions."""
    F = L.field
    n = L.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([L.c[i][j][k] for i in range(n)])  # [x, e_j]_k
            rows.append([L.c[j][i][k] for i in range(n)])  # [e_j, x]_k
    return _stacked_action_kernel(L, rows)


def left_annihilator(L: AlgebraTable) -> Subspace:
    """{x : [x, L] = 0}."""
    n = L.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([L.c[i][j][k] for i in range(n)])
    return _stacked_action_kernel(L, rows)


def centralizer(L: AlgebraTable, A: Subspace) -> Subspace:
    """{x : [x, a] = [a, x] = 0 for all a in A}."""
    _check_subspace(L, A)
    F = L.field
    n = L.dim
    rows = []
    for a in A.basis.data:
        for k in range(n):
            rows.append(
                [_sum(F, (F.mul(a[j], L.c[i][j][k]) for j in range(n))) for i in range(n)]
            )
            rows.append(
                [_sum(F, (F.mul(a[j], L.c[j][i][k]) for j in range(n))) for i in range(n)]
            )
    return _stacked_action_kernel(L, rows)


def normalizer(L: AlgebraTable, A: Subspace) -> Subspace:
    """{x : [x, A] + [A, x] <= A}; requires A to be a subalgebra."""
    _check_subspace(L, A)
    if not is_subalgebra(L, A):
        raise ValueError("normalizer requires a subalgebra")
    F = L.field
    n = L.dim
    funcs = A.complement_functionals()
    rows = []
    for a in A.basis.data:
        # columns i of the maps x -> [x, a] and x -> [a, x]
        left_cols = [
            [_sum(F, (F.mul(a[j], L.c[i][j][k]) for j in range(n))) for k in range(n)]
            for i in range(n)
        ]
        right_cols = [
            [_sum(F, (F.mul(a[j], L.c[j][i][k]) for j in range(n))) for k in range(n)]
            for i in range(n)
        ]
        for f in funcs.data:
            rows.append([_dotvec(F, f, left_cols[i]) for i in range(n)])
            rows.append([_dotvec(F, f, right_cols[i]) for i in range(n)])
    return _stacked_action_kernel(L, rows)


def _sum(F: FieldSpec, items):
    acc = F.zero
    for x in items:
        acc = F.add(acc, x)
    return acc


def _dotvec(F: FieldSpec, u, v):
    return _sum(F, (F.mul(a, b) for a, b in zip(u, v)))


def product_space(L: AlgebraTable, U: Subspace, V: Subspace) -> Subspace:
    """Span of all [u, v] over basis vectors of U and V."""
    _check_subspace(L, U)
    _check_subspace(L, V)
    gens = [bracket(L, u, v) for u in U.basis.data for v in V.basis.data]
    return Subspace.from_vectors(L.field, L.dim, gens)


def is_subalgebra(L: AlgebraTable, U: Subspace) -> bool:
    _check_subspace(L, U)
    return all(
        U.contains_vector(bracket(L, u, v))
        for u in U.basis.data
        for v in U.basis.data
    )


def is_ideal(L: AlgebraTable, U: Subspace) -> bool:
    _check_subspace(L, U)
    n = L.dim
    for u in U.basis.data:
        for j in range(n):
            ej = L.basis_vector(j)
            if not U.contains_vector(bracket(L, u, ej)):
                return False
            if not U.contains_vector(bracket(L, ej, u)):
                return False
    return True


def is_abelian_subspace(L: AlgebraTable, U: Subspace) -> bool:
    _check_subspace(L, U)
    F = L.field
    zero = L.zero_vector()
    return all(
        bracket(L, u, v) == zero for u in U.basis.data for v in U.basis.data
    )


def generated_subalgebra(L: AlgebraTable, S: Subspace) -> Subspace:
    """Least subalgebra containing S: fixed point of W -> W + [W, W]."""
    _check_subspace(L, S)
    W = S
    while True:
        W2 = subspace_sum(W, product_space(L, W, W))
        if W2 == W:
            return W
        W = W2


def subalgebra_table(L: AlgebraTable, U: Subspace, name: str | None = None) -> AlgebraTable:
    """Structure table of a subalgebra on its RREF basis rows."""
    if not is_subalgebra(L, U):
        raise ValueError("subspace is not closed under the bracket")
    rows = U.basis.data
    d = U.dim
    c = []
    for a in range(d):
        row = []
        for b in range(d):
            w = bracket(L, rows[a], rows[b])
            coords = U.coordinates(w)
            if coords is None:
                raise ConsistencyError("closure check passed but product left the subspace")
            row.append(coords)
        c.append(row)
    return AlgebraTable(L.field, c, name=name)


def quotient(L: AlgebraTable, I: Subspace) -> tuple[AlgebraTable, Matrix]:
    """Quotient algebra by a two-sided ideal, plus the projection matrix.

    The new basis extends the ideal basis greedily by standard basis vectors;
    the quotient is read off the complement coordinates.  The projection maps
    ambient coordinate rows to quotient coordinates (shape n x (n-d)):
    row-vector @ projection.
    """
    if not is_ideal(L, I):
        raise ValueError("subspace is not a two-sided ideal")
    F = L.field
    n, d = L.dim, I.dim
    P = I.extend_to_full_basis()
    Pinv = P.inverse()
    m = n - d
    proj = Matrix(F, [[Pinv.data[i][d + t] for t in range(m)] for i in range(n)])
    c = []
    for a in range(m):
        row = []
        fa = P.data[d + a]
        for b in range(m):
            fb = P.data[d + b]
            w = bracket(L, fa, fb)
            coords = Pinv.apply_row(w)
            row.append(tuple(coords[d + t] for t in range(m)))
        c.append(row)
    name = ("%s/ideal" % L.name) if L.name else None
    return AlgebraTable(F, c, name=name), proj


def direct_sum(L1: AlgebraTable, L2: AlgebraTable) -> AlgebraTable:
    """Block-diagonal table; cross products vanish."""
    check_same_field(L1.field, L2.field)
    F = L1.field
    n1, n2 = L1.dim, L2.dim
    n = n1 + n2
    zero = [F.zero] * n
    c = [[list(zero) for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            for k in range(n1):
                c[i][j][k] = L1.c[i][j][k]
    for i in range(n2):
        for j in range(n2):
            for k in range(n2):
                c[n1 + i][n1 + j][n1 + k] = L2.c[i][j][k]
    name = None
    if L1.name and L2.name:
        name = "%s (+) %s" % (L1.name, L2.name)
    return AlgebraTable(F, c, name=name)


def change_of_basis(L: AlgebraTable, P: Matrix) -> AlgebraTable:
    """Table of the same algebra in the basis whose vectors are the rows of P.

    Composition law: change_of_basis(change_of_basis(L, P), Q) equals
    change_of_basis(L, Q @ P).
    """
    check_same_field(L.field, P.field)
    if P.rows != L.dim or P.cols != L.dim:
        raise DimensionMismatchError("basis matrix must be dim x dim")
    Pinv = P.inverse()  # raises on singular P
    n = L.dim
    c = []
    for i in range(n):
        row = []
        for j in range(n):
            w = bracket(L, P.data[i], P.data[j])
            row.append(Pinv.apply_row(w))
        c.append(row)
    return AlgebraTable(L.field, c, name=L.name)


def _check_subspace(L: AlgebraTable, U: Subspace) -> None:
    check_same_field(L.field, U.field)
    if U.ambient_dim != L.dim:
        raise DimensionMismatchError("subspace ambient dimension != algebra dimension")
