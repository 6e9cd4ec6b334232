"""Series, solvability and nilpotency, Fitting decomposition, nilradical,
and the annihilator-dimension bound.

Convention: the derived series is D0 = L, D(k+1) = [Dk, Dk]; the lower
central series is left-normed, C1 = L, C(k+1) = [L, Ck].  An algebra is
solvable when the derived series reaches zero and nilpotent when the lower
central series does.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AlgebraTable,
    is_abelian_subspace,
    is_ideal,
    is_subalgebra,
    left_annihilator,
    mult_operator,
    product_space,
    require_leibniz,
    subalgebra_table,
)
from .errors import ConsistencyError
from .linalg import Matrix, Subspace, subspace_intersect, subspace_sum


@dataclass(frozen=True)
class SeriesReport:
    """Derived and lower-central chains, computed to stabilization."""

    derived_chain: tuple
    lower_central_chain: tuple
    solvable: bool
    nilpotent: bool
    derived_length: int | None

    @property
    def derived_dims(self) -> tuple:
        return tuple(s.dim for s in self.derived_chain)

    @property
    def lower_central_dims(self) -> tuple:
        return tuple(s.dim for s in self.lower_central_chain)


@dataclass(frozen=True)
class FittingSplit:
    """Splitting of the algebra under the left actions of an abelian subalgebra."""

    L0: Subspace
    L1: Subspace


def series(L: AlgebraTable) -> SeriesReport:
    require_leibniz(L)
    full = L.full_space()

    derived = [full]
    while True:
        nxt = product_space(L, derived[-1], derived[-1])
        if nxt == derived[-1]:
            break
        derived.append(nxt)
        if nxt.is_zero():
            break

    lower = [full]
    while True:
        nxt = product_space(L, full, lower[-1])
        if nxt == lower[-1]:
            break
        lower.append(nxt)
        if nxt.is_zero():
            break

    solvable = derived[-1].is_zero()
    nilpotent = lower[-1].is_zero()
    length = None
    if solvable:
        length = next(i for i, s in enumerate(derived) if s.is_zero())
    return SeriesReport(tuple(derived), tuple(lower), solvable, nilpotent, length)


def is_nilpotent_matrix(M: Matrix) -> bool:
    return M.power(M.rows).is_zero()


def fitting_decomposition(L: AlgebraTable, A: Subspace) -> FittingSplit:
    """Split L = L0 (+) L1 under the commuting family of left actions of A.

    L1 is the stable image of U -> [A, U] starting from L; L0 is the stable
    preimage chain K(i+1) = {v : [a, v] in Ki for all a}, starting from 0.
    Directness and [A, L1] = L1 are verified and cannot fail on a valid
    Leibniz table with abelian A.
    """
    require_leibniz(L)
    if not is_abelian_subspace(L, A):
        raise ValueError("fitting decomposition needs an abelian subalgebra")
    F = L.field
    n = L.dim

    L1 = L.full_space()
    while True:
        nxt = product_space(L, A, L1)
        if nxt == L1:
            break
        L1 = nxt

    ops = [mult_operator(L, a, "left").matrix for a in A.basis.data]
    L0 = Subspace.zero(F, n)
    while True:
        # v in next iff every [a, v] lies in the current L0.
        funcs = L0.complement_functionals()
        rows = []
        for op in ops:
            for f in funcs.data:
                # condition row: f @ (op @ v) = (f @ op) @ v
                rows.append(Matrix(F, [f]).__matmul__(op).data[0])
        if not rows:
            nxt = Subspace.full(F, n)
        else:
            ker = Matrix(F, rows)._with_cols(n).kernel_basis()
            nxt = Subspace.from_vectors(F, n, ker.data)
        if nxt == L0:
            break
        L0 = nxt

    if subspace_sum(L0, L1).dim != n or not subspace_intersect(L0, L1).is_zero():
        raise ConsistencyError("fitting split is not direct")
    if product_space(L, A, L1) != L1:
        raise ConsistencyError("[A, L1] != L1 after stabilization")
    return FittingSplit(L0, L1)


def ideal_closure(L: AlgebraTable, S: Subspace) -> Subspace:
    """Least two-sided ideal containing S."""
    W = S
    while True:
        W2 = subspace_sum(
            W, subspace_sum(product_space(L, W, L.full_space()), product_space(L, L.full_space(), W))
        )
        if W2 == W:
            return W
        W = W2


def _is_nilpotent_subalgebra(L: AlgebraTable, U: Subspace) -> bool:
    if U.is_zero():
        return True
    return series(subalgebra_table(L, U)).nilpotent


def nilradical(L: AlgebraTable) -> Subspace:
    """Largest nilpotent ideal, by exhaustive ideal scan (prime fields only).

    Sums every two-sided ideal whose induced subalgebra is nilpotent and
    verifies the sum is itself a nilpotent ideal.
    """
    require_leibniz(L)
    if not L.field.is_prime_field:
        raise ValueError(
            "exact nilradical search needs a prime field; "
            "use verify_nilradical_candidate over the rationals"
        )
    from .search import _scan_ideals  # local import to avoid a cycle

    total = Subspace.zero(L.field, L.dim)
    for d in range(L.dim + 1):
        for U in _scan_ideals(L, d):
            if _is_nilpotent_subalgebra(L, U):
                total = subspace_sum(total, U)
    if not is_ideal(L, total) or not _is_nilpotent_subalgebra(L, total):
        raise ConsistencyError("sum of nilpotent ideals failed to be a nilpotent ideal")
    return total


def verify_nilradical_candidate(L: AlgebraTable, N: Subspace) -> bool:
    """Certificate check usable over any field.

    True iff N is a two-sided ideal, nilpotent as a subalgebra, and every
    nilpotent ideal generated by a single basis vector already lies inside N
    (a partial maximality certificate; full maximality needs the prime-field
    scan).
    """
    require_leibniz(L)
    if not is_ideal(L, N):
        return False
    if not _is_nilpotent_subalgebra(L, N):
        return False
    for i in range(L.dim):
        J = ideal_closure(
            L, Subspace.from_vectors(L.field, L.dim, [L.basis_vector(i)])
        )
        if _is_nilpotent_subalgebra(L, J) and not N.contains(J):
            return False
    return True


def check_annihilator_bound(L: AlgebraTable, A: Subspace) -> tuple[bool, int, int]:
    """Compare dim Ann_l(L) against n - m - (floor(m^2/4) + 1) with m = codim A.

    The caller must supply an abelian subalgebra that is a maximal subalgebra
    of maximal dimension among abelian subalgebras; those hypotheses are
    checked by the search module, not here.  The inequality is guaranteed
    only for codimension m >= 2 (its derivation splits off a complement on
    which the subalgebra acts, which needs m > 1); at m = 1 it can fail.
    Returns (holds, lhs, rhs).
    """
    if not (is_abelian_subspace(L, A) and is_subalgebra(L, A)):
        raise ValueError("bound applies to abelian subalgebras only")
    if L.dim > 0 and A.dim == 0:
        raise ValueError("zero subalgebra is never of maximal abelian dimension")
    n = L.dim
    m = n - A.dim
    lhs = left_annihilator(L).dim
    rhs = n - m - (m * m // 4 + 1)
    return lhs >= rhs, lhs, rhs
