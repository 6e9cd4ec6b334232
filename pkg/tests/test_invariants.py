import pytest

from leibniz_algebras.algebra import (
    direct_sum,
    is_abelian_subspace,
    is_ideal,
    is_subalgebra,
    mult_operator,
    product_space,
    subalgebra_table,
)
from leibniz_algebras.catalog import standard_fixtures
from leibniz_algebras.families import (
    abelian_algebra,
    heisenberg,
    make_a,
    make_c,
    make_d,
    oscillator,
)
from leibniz_algebras.fields import QQ
from leibniz_algebras.invariants import (
    check_annihilator_bound,
    fitting_decomposition,
    is_nilpotent_matrix,
    nilradical,
    series,
    verify_nilradical_candidate,
)
from leibniz_algebras.linalg import Matrix, Subspace, subspace_intersect
from leibniz_algebras.search import all_abelian_subalgebras, alpha, is_maximal_subalgebra

from conftest import F2, F3

ROT3 = Matrix(F3, [[0, 1], [2, 0]])


def span(F, n, *vecs):
    return Subspace.from_vectors(F, n, vecs)


# -- series ------------------------------------------------------------------


def test_series_abelian():
    rep = series(abelian_algebra(3, QQ))
    assert rep.solvable and rep.nilpotent and rep.derived_length == 1
    assert rep.derived_dims == (3, 0)


def test_series_zero_dim():
    rep = series(abelian_algebra(0, QQ))
    assert rep.derived_length == 0 and rep.solvable and rep.nilpotent


def test_series_c_family():
    rep = series(make_c(ROT3, F3))
    assert rep.solvable and not rep.nilpotent
    assert rep.derived_length == 3
    assert rep.derived_dims == (4, 3, 1, 0)


def test_series_d_family_not_solvable():
    rep = series(make_d(ROT3, F3))
    assert not rep.solvable and not rep.nilpotent
    assert rep.derived_chain[-1].dim == 3


def test_series_chains_decrease_and_stabilize():
    for F in (QQ, F3):
        for L in standard_fixtures(F):
            rep = series(L)
            for a, b in zip(rep.derived_chain, rep.derived_chain[1:]):
                assert a.contains(b) and b.dim <= a.dim
            for a, b in zip(rep.lower_central_chain, rep.lower_central_chain[1:]):
                assert a.contains(b)
            assert len(rep.derived_chain) <= L.dim + 2
            if rep.nilpotent:
                assert rep.solvable


def test_engel_consistency():
    for L in standard_fixtures(F3):
        rep = series(L)
        all_left_nilpotent = all(
            is_nilpotent_matrix(mult_operator(L, L.basis_vector(i), "left").matrix)
            for i in range(L.dim)
        )
        assert rep.nilpotent == (
            all_left_nilpotent and rep.lower_central_chain[-1].is_zero()
        )


# -- fitting -------------------------------------------------------------------


def test_fitting_trivial_family():
    L = heisenberg(QQ)
    split = fitting_decomposition(L, Subspace.zero(QQ, 3))
    assert split.L0.dim == 3 and split.L1.dim == 0


def test_fitting_pair_action():
    L = make_a(Matrix.identity(F3, 2), ROT3, F3)
    A = span(F3, 4, (1, 0, 0, 0), (0, 1, 0, 0))
    split = fitting_decomposition(L, A)
    assert split.L0 == A
    assert split.L1 == span(F3, 4, (0, 0, 1, 0), (0, 0, 0, 1))


def test_fitting_oscillator_nilpotent_action():
    O = oscillator(F3)
    A = span(F3, 4, (0, 1, 0, 0), (0, 0, 1, 0))  # e0, e1
    split = fitting_decomposition(O, A)
    assert split.L0.dim == 4 and split.L1.dim == 0


def test_fitting_rejects_nonabelian():
    O = oscillator(QQ)
    bad = Subspace.from_vectors(QQ, 4, [(1, 0, 0, 0), (0, 0, 1, 0)])
    with pytest.raises(ValueError):
        fitting_decomposition(O, bad)


def test_fitting_properties_on_scanned_subalgebras():
    for L in standard_fixtures(F3, max_dim=5):
        n = L.dim
        for d in range(max(0, n - 2), n + 1):
            for A in all_abelian_subalgebras(L, d):
                split = fitting_decomposition(L, A)
                assert split.L0.dim + split.L1.dim == n
                assert subspace_intersect(split.L0, split.L1).is_zero()
                assert product_space(L, A, split.L1) == split.L1
                funcs_ok = True
                for a in A.basis.data:
                    op = mult_operator(L, a, "left").matrix
                    # restriction to L0 is nilpotent: iterate images
                    W = split.L0
                    for _ in range(n + 1):
                        W = Subspace.from_vectors(
                            L.field, n, [op.apply_col(v) for v in W.basis.data]
                        )
                    funcs_ok = funcs_ok and W.is_zero()
                assert funcs_ok


# -- nilradical -----------------------------------------------------------------


def test_nilradical_of_nilpotent_is_everything():
    H = heisenberg(F3)
    assert nilradical(H).dim == 3
    A = abelian_algebra(4, F3)
    assert nilradical(A).dim == 4


def test_nilradical_oscillator():
    O = oscillator(F3)
    N = nilradical(O)
    assert N == span(F3, 4, (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    T = subalgebra_table(O, N)
    assert series(T).nilpotent


def test_nilradical_simple_is_zero():
    assert nilradical(make_d(ROT3, F3)).dim == 0


def test_nilradical_is_nilpotent_ideal_containing_all_nilpotent_ideals():
    for L in standard_fixtures(F3, max_dim=4):
        N = nilradical(L)
        assert is_ideal(L, N)
        if N.dim:
            assert series(subalgebra_table(L, N)).nilpotent


def test_nilradical_rejects_rationals():
    with pytest.raises(ValueError):
        nilradical(heisenberg(QQ))


def test_verify_nilradical_candidate_over_rationals():
    O = oscillator(QQ)
    good = Subspace.from_vectors(QQ, 4, [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    assert verify_nilradical_candidate(O, good)
    assert not verify_nilradical_candidate(O, O.full_space())  # not nilpotent
    assert not verify_nilradical_candidate(O, Subspace.zero(QQ, 4))  # not maximal
    D = make_d(Matrix(QQ, [[0, 1], [-1, 0]]), QQ)
    assert verify_nilradical_candidate(D, Subspace.zero(QQ, 3))


def test_verify_nilradical_candidate_agrees_with_scan():
    for L in standard_fixtures(F3, max_dim=4):
        N = nilradical(L)
        assert verify_nilradical_candidate(L, N)


# -- annihilator bound -------------------------------------------------------------


def test_annihilator_bound_pair_action():
    L = make_a(Matrix.identity(F3, 2), ROT3, F3)
    A = span(F3, 4, (1, 0, 0, 0), (0, 1, 0, 0))
    holds, lhs, rhs = check_annihilator_bound(L, A)
    assert holds and lhs == 2 and rhs == 0


def test_annihilator_bound_with_abelian_summand():
    L = direct_sum(make_a(Matrix.identity(F3, 2), ROT3, F3), abelian_algebra(2, F3))
    A = span(F3, 6, (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1))
    holds, lhs, rhs = check_annihilator_bound(L, A)
    assert holds and lhs == 4 and rhs == 2


def test_annihilator_bound_rejects_degenerate():
    L = heisenberg(F3)
    with pytest.raises(ValueError):
        check_annihilator_bound(L, Subspace.zero(F3, 3))
    with pytest.raises(ValueError):
        check_annihilator_bound(L, L.full_space())  # not abelian


def test_annihilator_bound_sweep():
    # The bound's proof runs through the Fitting-decomposition lemma, which
    # needs codimension > 1, so the sweep quantifies over codim >= 2 pairs.
    checked = 0
    for F in (F2, F3):
        for L in standard_fixtures(F, max_dim=5):
            if L.dim == 0:
                continue
            a = alpha(L).alpha
            if L.dim - a < 2:
                continue
            for A in all_abelian_subalgebras(L, a):
                if not is_maximal_subalgebra(L, A):
                    continue
                holds, lhs, rhs = check_annihilator_bound(L, A)
                assert holds, (L.name, lhs, rhs)
                checked += 1
    assert checked >= 10


def test_annihilator_bound_sharp_at_codimension_one():
    # At codimension 1 the inequality can genuinely fail; this pins the
    # boundary of the bound's domain.
    L = make_c(Matrix(F3, [[0, 1], [0, 0]]), F3)
    A = span(F3, 4, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1))  # a, b, y
    assert is_abelian_subspace(L, A) and is_subalgebra(L, A)
    assert alpha(L).alpha == 3 and is_maximal_subalgebra(L, A)
    holds, lhs, rhs = check_annihilator_bound(L, A)
    assert not holds and lhs == 1 and rhs == 2
