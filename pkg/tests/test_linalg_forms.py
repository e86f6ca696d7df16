import pytest
from hypothesis import given, settings, strategies as st

from dqha.errors import NonInvertible, ShapeMismatch
from dqha.fields import QQ, PrimeField
from dqha.forms import MultilinearForm, convolution_inverse, convolution_product, counit_power
from dqha.linalg import Matrix, solve_linear, sparse_add
from dqha.examples import kz3, sweedler_hopf

F13 = PrimeField(13)
C4 = sweedler_hopf().coalgebra
C3 = kz3().coalgebra


def forms(C, arity, lo=-3, hi=3):
    return st.lists(st.integers(lo, hi), min_size=C.dim ** arity, max_size=C.dim ** arity).map(
        lambda vs: MultilinearForm(C.field, C.dim, arity, vs))


@settings(max_examples=25, deadline=None)
@given(forms(C4, 2), forms(C4, 2), forms(C4, 2))
def test_convolution_is_associative(f, g, h):
    assert convolution_product(convolution_product(f, g, C4), h, C4) == \
        convolution_product(f, convolution_product(g, h, C4), C4)


@settings(max_examples=25, deadline=None)
@given(forms(C4, 2))
def test_counit_is_convolution_unit(f):
    e = counit_power(C4, 2)
    assert convolution_product(e, f, C4) == f == convolution_product(f, e, C4)


@settings(max_examples=25, deadline=None)
@given(forms(C3, 3, 1, 5))
def test_convolution_inverse_on_grouplikes(f):
    # on a group coalgebra convolution is pointwise
    inv = convolution_inverse(f, C3)
    assert all(a * b == 1 for a, b in zip(f.values, inv.values))


def test_non_invertible_form():
    f = MultilinearForm(QQ, 3, 1, [1, 0, 1])
    with pytest.raises(NonInvertible):
        convolution_inverse(f, C3)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 12), min_size=9, max_size=9))
def test_matrix_inverse_or_singular(vals):
    A = Matrix(F13, [vals[0:3], vals[3:6], vals[6:9]], 3)
    try:
        B = A.inverse()
    except NonInvertible:
        assert A.rank() < 3
        return
    assert (A @ B).is_identity() and (B @ A).is_identity()


def test_solve_and_shapes():
    A = Matrix(QQ, [[2, 1], [1, 1]], 2)
    x = solve_linear(A, [QQ(3), QQ(2)])
    assert x.coords == (QQ(1), QQ(1))
    assert A.apply(x) == {0: QQ(3), 1: QQ(2)}
    with pytest.raises(ShapeMismatch):
        A @ Matrix(QQ, [[1, 2, 3]], 3)


def test_kron_and_sparse_helpers():
    A = Matrix(QQ, [[1, 2], [0, 1]], 2)
    I = Matrix.identity(QQ, 1)
    assert A.kron(I) == A == I.kron(A)
    acc = {0: QQ(1)}
    sparse_add(acc, {0: QQ(-1), 1: QQ(2)})
    assert acc == {1: QQ(2)}
