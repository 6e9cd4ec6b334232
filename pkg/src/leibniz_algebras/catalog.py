"""Named example algebras used by tests, the self-test suite, and the CLI.

The two hand-written 4-dimensional examples demonstrate the two non-maximal
branches of the classification:

* `nonideal_codim2_example` - a solvable non-Lie algebra whose abelian
  codimension-2 subalgebra span(e2, e3) is not an ideal, yet the algebra
  still has an abelian ideal of codimension 2 (span(x, e3)).
* `heisenberg_rotation_extension` - a non-Lie extension of the Heisenberg
  algebra by a generator acting as a rotation, with nonzero square of the
  extending generator; its nilradical has codimension 1 and alpha != beta.
"""

from __future__ import annotations

from .algebra import AlgebraTable, direct_sum
from .errors import FamilyParameterError
from .families import (
    abelian_algebra,
    heisenberg,
    heisenberg_plus_abelian,
    make_a,
    make_b,
    make_c,
    make_d,
    make_e,
    oscillator,
)
from .fields import FieldSpec
from .linalg import Matrix


def nonideal_codim2_example(field: FieldSpec) -> AlgebraTable:
    """Basis (e1, e2, e3, x):
    [e1, x] = -[x, e1] = x,  [e2, x] = -[x, e2] = x,  [e1, e2] = e3."""
    F = field
    neg1 = F.neg(F.one)
    return AlgebraTable.from_products(
        field,
        4,
        {
            (0, 3): (0, 0, 0, 1),
            (3, 0): (0, 0, 0, neg1),
            (1, 3): (0, 0, 0, 1),
            (3, 1): (0, 0, 0, neg1),
            (0, 1): (0, 0, 1, 0),
        },
        name="nonideal-codim2-example",
    )


def heisenberg_rotation_extension(field: FieldSpec) -> AlgebraTable:
    """Basis (e1, e2, e3, e4):
    [e1, e2] = -[e2, e1] = e3,  [e1, e4] = -[e4, e1] = -e2,
    [e2, e4] = -[e4, e2] = e1,  [e4, e4] = e3."""
    F = field
    neg1 = F.neg(F.one)
    return AlgebraTable.from_products(
        field,
        4,
        {
            (0, 1): (0, 0, 1, 0),
            (1, 0): (0, 0, neg1, 0),
            (0, 3): (0, neg1, 0, 0),
            (3, 0): (0, 1, 0, 0),
            (1, 3): (1, 0, 0, 0),
            (3, 1): (neg1, 0, 0, 0),
            (3, 3): (0, 0, 1, 0),
        },
        name="heisenberg-rotation-extension",
    )


def rotation_2x2(field: FieldSpec) -> Matrix:
    return Matrix(field, [[0, 1], [field.neg(field.one), 0]])


def standard_fixtures(field: FieldSpec, max_dim: int = 5) -> list[AlgebraTable]:
    """A spread of Leibniz algebras across every family, used for property
    sweeps.  Instances that fail the Leibniz identity for the given field are
    never produced."""
    F = field
    ident = Matrix.identity(F, 2)
    rot = rotation_2x2(F)
    diag = Matrix(F, [[1, 0], [0, F.neg(F.one)]])
    nilp = Matrix(F, [[0, 1], [0, 0]])
    zero2 = Matrix(F, [[0, 0], [0, 0]])

    out: list[AlgebraTable] = []

    def add(T: AlgebraTable):
        if T.dim <= max_dim:
            out.append(T)

    add(abelian_algebra(1, F))
    add(abelian_algebra(3, F))
    add(heisenberg(F))
    add(heisenberg_plus_abelian(1, F))
    add(oscillator(F))
    add(nonideal_codim2_example(F))
    add(heisenberg_rotation_extension(F))

    add(make_a(ident, rot, F).rename("a(id,rot)"))
    add(make_a(ident, diag, F).rename("a(id,diag)"))
    add(make_a(ident, nilp, F).rename("a(id,nilp)"))
    add(make_a(zero2, zero2, F).rename("a(0,0)"))
    add(direct_sum(make_a(ident, rot, F), abelian_algebra(1, F)).rename("a(id,rot)+F"))

    add(make_b(ident, rot, F).rename("b(id,rot)"))
    add(make_b(ident, diag, F).rename("b(id,diag)"))
    add(direct_sum(make_b(ident, rot, F), abelian_algebra(1, F)).rename("b(id,rot)+F"))

    add(make_c(rot, F).rename("c(rot)"))
    add(make_c(diag, F).rename("c(diag)"))
    add(make_c(nilp, F).rename("c(nilp)"))
    add(make_c(zero2, F).rename("c(0)"))
    add(direct_sum(make_c(rot, F), abelian_algebra(1, F)).rename("c(rot)+F"))

    add(make_d(rot, F).rename("d(rot)"))
    add(make_d(diag, F).rename("d(diag)"))
    add(direct_sum(make_d(rot, F), abelian_algebra(1, F)).rename("d(rot)+F"))
    add(direct_sum(make_d(rot, F), abelian_algebra(2, F)).rename("d(rot)+F^2"))

    phi = Matrix(F, [[0, F.neg(F.one), 0], [1, 0, 0], [0, 0, 0]])
    zero3 = Matrix.zeros(F, 3, 3)
    for phi_e, theta_e, v_e, label in [
        (phi, -phi, (0, 0, 1), "e(rot,-rot,e0,4)"),
        (phi, -phi, (0, 0, 0), "e(rot,-rot,0,4)"),
        (zero3, zero3, (0, 0, 0), "e(0,0,0,4)"),
    ]:
        try:
            add(make_e(phi_e, theta_e, v_e, 4, F).rename(label))
        except FamilyParameterError:
            pass  # triple invalid over this field; skip

    return out
