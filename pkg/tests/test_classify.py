import pytest

from leibniz_algebras.algebra import (
    center,
    change_of_basis,
    direct_sum,
    is_abelian_subspace,
    is_ideal,
    product_space,
    subalgebra_table,
)
from leibniz_algebras.catalog import (
    heisenberg_rotation_extension,
    nonideal_codim2_example,
    standard_fixtures,
)
from leibniz_algebras.classify import (
    Case,
    canonical_quadratic,
    classify,
    field_admits_irreducible_quadratic,
    solvability_from_codim2_ideal,
    verify_main_theorem,
)
from leibniz_algebras.errors import ConsistencyError
from leibniz_algebras.families import (
    abelian_algebra,
    heisenberg,
    make_a,
    make_b,
    make_c,
    make_d,
    oscillator,
)
from leibniz_algebras.fields import GF, QQ
from leibniz_algebras.invariants import series
from leibniz_algebras.linalg import Matrix, QuadraticPoly, Subspace
from leibniz_algebras.search import alpha, beta

from conftest import F3, rand_invertible

ROT3 = Matrix(F3, [[0, 1], [2, 0]])
ROTQ = Matrix(QQ, [[0, 1], [-1, 0]])


def span(F, n, *vecs):
    return Subspace.from_vectors(F, n, vecs)


# -- canonical diagnostics ---------------------------------------------------


def test_canonical_quadratic_gf():
    # (c1, c0) ~ (s c1, s^2 c0); over GF(3) squares are {1}, so scaling the
    # linear term can still lower the tuple
    q = canonical_quadratic(F3, QuadraticPoly(2, 1))
    assert (q.c1, q.c0) == (1, 1)
    q = canonical_quadratic(F3, QuadraticPoly(0, 2))
    assert (q.c1, q.c0) == (0, 2)
    F5 = GF(5)
    q = canonical_quadratic(F5, QuadraticPoly(0, 4))
    assert (q.c1, q.c0) == (0, 1)  # 4 = 2^2 * 1


def test_canonical_quadratic_qq():
    q = canonical_quadratic(QQ, QuadraticPoly(QQ.of(3), QQ.of(18)))
    assert (q.c1, q.c0) == (1, 2)
    q = canonical_quadratic(QQ, QuadraticPoly(QQ.of(0), QQ.of("8/9")))
    assert (q.c1, q.c0) == (0, 2)  # squarefree part of 8*9 = 72 is 2
    q = canonical_quadratic(QQ, QuadraticPoly(QQ.of(0), QQ.of(-4)))
    assert (q.c1, q.c0) == (0, -1)


def test_field_admits_irreducible_quadratic():
    for p in (2, 3, 5, 7):
        assert field_admits_irreducible_quadratic(GF(p))
    assert field_admits_irreducible_quadratic(QQ)


# -- classify over GF(3) --------------------------------------------------------


def test_classify_case0_pair_action():
    L = make_a(Matrix.identity(F3, 2), ROT3, F3)
    v = classify(L)
    assert v.case is Case.ABELIAN_IDEAL_CODIM_LE2
    W = v.witness["abelian_ideal"]
    assert W == span(F3, 4, (0, 0, 1, 0), (0, 0, 0, 1))
    CL = center(L)
    L2 = product_space(L, L.full_space(), L.full_space())
    from leibniz_algebras.linalg import subspace_sum

    assert W == subspace_sum(CL, L2)


def test_classify_case1_rotation_c():
    L = make_c(ROT3, F3)
    v = classify(L)
    assert v.case is Case.CASE1_C
    assert (v.chi.c1, v.chi.c0) == (0, 1)
    assert v.diagnostics["dim_center"] == 1
    assert change_of_basis(L, v.witness["frame"]).c == v.witness["model"].c


def test_classify_case2_simple():
    for m in (ROT3, Matrix(F3, [[1, 0], [0, 2]])):
        for k in (0, 1, 2):
            L = make_d(m, F3)
            if k:
                L = direct_sum(L, abelian_algebra(k, F3))
            v = classify(L)
            assert v.case is Case.CASE2_D
            assert change_of_basis(L, v.witness["frame"]).c == v.witness["model"].c


def test_classify_case3_rotation_extension():
    L = heisenberg_rotation_extension(F3)
    v = classify(L)
    assert v.case is Case.CASE3_E
    N = v.witness["nilradical"]
    assert N.dim == 3
    assert N == span(F3, 4, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))
    assert beta(L).beta == 1
    # the unique maximal abelian ideal is the center of the nilradical
    from leibniz_algebras.search import all_abelian_ideals

    ideals = all_abelian_ideals(L, 1)
    assert ideals == [span(F3, 4, (0, 0, 1, 0))]
    T = subalgebra_table(L, N)
    assert center(T).dim == 1
    assert change_of_basis(L, v.witness["frame"]).c == v.witness["model"].c


def test_classify_case3_extracted_extension_data():
    L = heisenberg_rotation_extension(F3)
    v = classify(L)
    phi, theta = v.witness["phi"], v.witness["theta"]
    # right action induces the negative of the left action on N / C(N)
    star = v.witness["induced_action"]
    minus = star.scale(F3.neg(F3.one))
    theta_star = Matrix(
        F3, [[theta.data[0][0], theta.data[0][1]], [theta.data[1][0], theta.data[1][1]]]
    )
    assert theta_star == minus
    assert v.witness["v"] != (0, 0, 0)  # the extending generator has nonzero square


def test_classify_not_applicable():
    assert classify(heisenberg(F3)).case is Case.NOT_APPLICABLE
    assert classify(abelian_algebra(4, F3)).case is Case.NOT_APPLICABLE


def test_classify_rejects_char2():
    with pytest.raises(ValueError):
        classify(heisenberg(GF(2)))


def test_classify_oscillator_shares_the_rotation_c_table():
    # the oscillator *is* the rotation instance of the c family, so the
    # classifier must give both the same (Case1_c) verdict
    O = oscillator(F3)
    C = make_c(ROT3, F3)
    assert O.c == C.c
    vo, vc = classify(O), classify(C)
    assert vo.case is vc.case is Case.CASE1_C
    assert vo.chi == vc.chi


def test_classify_totality_on_fixture_sweep():
    for L in standard_fixtures(F3, max_dim=5):
        v = classify(L)  # must never raise ConsistencyError
        if v.case is Case.NOT_APPLICABLE:
            assert alpha(L).alpha != L.dim - 2
        else:
            assert alpha(L).alpha == L.dim - 2


def test_classify_basis_invariance(rng):
    fixtures = [
        make_c(ROT3, F3),
        make_d(ROT3, F3),
        heisenberg_rotation_extension(F3),
        make_a(Matrix.identity(F3, 2), ROT3, F3),
    ]
    for L in fixtures:
        base = classify(L)
        for _ in range(10):
            P = rand_invertible(F3, L.dim, rng)
            v = classify(change_of_basis(L, P))
            assert v.case is base.case
            assert v.chi == base.chi


# -- classify over the rationals ---------------------------------------------------


def test_classify_qq_requires_witness():
    with pytest.raises(ValueError):
        classify(make_c(ROTQ, QQ))


def test_classify_qq_case0_via_witness():
    L = make_a(Matrix.identity(QQ, 2), ROTQ, QQ)
    A = span(QQ, 4, (1, 0, 0, 0), (0, 1, 0, 0))
    v = classify(L, A=A)
    assert v.case is Case.ABELIAN_IDEAL_CODIM_LE2


def test_classify_qq_case0_nonideal_witness():
    L = nonideal_codim2_example(QQ)
    A = span(QQ, 4, (0, 1, 0, 0), (0, 0, 1, 0))
    v = classify(L, A=A)
    assert v.case is Case.ABELIAN_IDEAL_CODIM_LE2
    W = v.witness["abelian_ideal"]
    assert is_ideal(L, W) and is_abelian_subspace(L, W) and W.codim == 2


def test_classify_qq_case1():
    L = make_c(ROTQ, QQ)
    A = span(QQ, 4, (1, 0, 0, 0), (0, 1, 0, 0))
    v = classify(L, A=A)
    assert v.case is Case.CASE1_C
    assert (v.chi.c1, v.chi.c0) == (0, 1)


def test_classify_qq_case2():
    L = make_d(ROTQ, QQ)
    A = span(QQ, 3, (1, 0, 0))
    v = classify(L, A=A)
    assert v.case is Case.CASE2_D


def test_classify_qq_case3_needs_nilradical_candidate():
    L = heisenberg_rotation_extension(QQ)
    A = span(QQ, 4, (0, 1, 0, 0), (0, 0, 1, 0))
    with pytest.raises(ValueError):
        classify(L, A=A)
    N = span(QQ, 4, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))
    v = classify(L, A=A, nilradical_candidate=N)
    assert v.case is Case.CASE3_E
    assert change_of_basis(L, v.witness["frame"]).c == v.witness["model"].c


def test_classify_qq_rejects_bad_nilradical_candidate():
    L = heisenberg_rotation_extension(QQ)
    A = span(QQ, 4, (0, 1, 0, 0), (0, 0, 1, 0))
    with pytest.raises(ValueError):
        classify(L, A=A, nilradical_candidate=L.full_space())


# -- solvability from a codimension-2 abelian ideal -----------------------------------


def test_solvability_examples():
    assert solvability_from_codim2_ideal(make_a(Matrix.identity(F3, 2), ROT3, F3))
    assert solvability_from_codim2_ideal(direct_sum(heisenberg(F3), abelian_algebra(1, F3)))
    with pytest.raises(ValueError):
        solvability_from_codim2_ideal(make_d(ROT3, F3))
    # over the rationals, a witness is mandatory
    L = make_a(Matrix.identity(QQ, 2), ROTQ, QQ)
    W = span(QQ, 4, (0, 0, 1, 0), (0, 0, 0, 1))
    assert solvability_from_codim2_ideal(L, witness=W)
    with pytest.raises(ValueError):
        solvability_from_codim2_ideal(L, witness=span(QQ, 4, (1, 0, 0, 0)))


def test_solvability_sweep():
    count = 0
    for L in standard_fixtures(F3, max_dim=5):
        try:
            ok = solvability_from_codim2_ideal(L)
        except ValueError:
            continue
        assert ok
        rep = series(L)
        assert rep.solvable and rep.derived_length <= 3
        count += 1
    assert count >= 10


# -- verify_main_theorem ----------------------------------------------------------------


def test_verify_reports_ok_on_examples():
    for L in (
        oscillator(F3),
        make_b(Matrix.identity(F3, 2), ROT3, F3),
        make_d(ROT3, F3),
        heisenberg_rotation_extension(F3),
        make_c(ROT3, F3),
        make_a(Matrix.identity(F3, 2), ROT3, F3),
    ):
        rep = verify_main_theorem(L)
        assert rep.ok, [(c.name, c.status) for c in rep.claims if c.status == "fail"]


def test_verify_not_applicable_report():
    rep = verify_main_theorem(heisenberg(F3))
    assert rep.case is None and rep.ok
    assert rep.claims[0].status == "n/a"


def test_verify_disguised_case2_recovers_chi(rng):
    L = make_d(ROT3, F3)
    base = classify(L).chi
    for _ in range(5):
        P = rand_invertible(F3, 3, rng)
        M = change_of_basis(L, P)
        rep = verify_main_theorem(M)
        assert rep.ok and rep.case is Case.CASE2_D
        assert classify(M).chi == base


def test_verify_rejects_rationals():
    with pytest.raises(ValueError):
        verify_main_theorem(oscillator(QQ))


def test_dichotomy_over_gf5():
    # every fixture with alpha = n-2: either beta >= n-2 or a non-ideal case
    F5 = GF(5)
    for L in standard_fixtures(F5, max_dim=4):
        if alpha(L).alpha != L.dim - 2:
            continue
        v = classify(L)
        if v.case is Case.ABELIAN_IDEAL_CODIM_LE2:
            assert beta(L).beta >= L.dim - 2
        else:
            assert v.case in (Case.CASE1_C, Case.CASE2_D, Case.CASE3_E)
