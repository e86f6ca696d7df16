import pytest

from dqha.coalgebra import Comodule, grouplike_comodule, regular_comodule, trivial_comodule
from dqha.errors import AntipodeNotInvertible, FlavorMismatch, NotYDMorphism
from dqha.examples import builtin, kw_z2, one_dim_yd, pool_comodules, registered_algebras
from dqha.duals import (check_dual_lemma, check_dual_morphisms, check_snake, comodule_dual,
                        dual_lemma_lhs, yd_dual)
from dqha.fields import QQ
from dqha.linalg import Matrix
from dqha.yd import YetterDrinfeldModule, check_yd, h_as_yd, trivial_yd

from conftest import all_algebras


@pytest.mark.parametrize("H", all_algebras(), ids=lambda H: H.name)
@pytest.mark.parametrize("hand", ["left", "right"])
def test_comodule_duals_satisfy_snakes(H, hand):
    for V in pool_comodules(H, max_dim=4):
        pair = comodule_dual(V, hand)
        assert pair.report.passed, pair.report.to_text()


def test_evaluation_value_on_m_theta_comodule():
    # ev(v* (x) v) = beta(s^-1(g)) = beta(g) = -1
    M = builtin("m_theta")
    pair = comodule_dual(M.comodule, "left")
    assert pair.ev.rows == ((M.field(-1),),)
    assert pair.coev.rows == ((M.field(1),),)


def test_snake_detects_a_wrong_evaluation():
    V = grouplike_comodule(kw_z2(), 1)
    pair = comodule_dual(V, "left")
    pair.ev = pair.ev.scale(QQ(2))
    rep = check_snake(pair)
    assert set(rep.failed_names()) == {"snake_object", "snake_dual"}


@pytest.mark.parametrize("H", all_algebras(), ids=lambda H: H.name)
@pytest.mark.parametrize("hand", ["left", "right"])
def test_duals_of_h_as_yd(H, hand):
    pair = yd_dual(h_as_yd(H), hand)
    assert pair.report.passed
    assert pair.dual.dim == H.dim


@pytest.mark.parametrize("hand", ["left", "right"])
def test_duals_of_m_theta(hand):
    M = builtin("m_theta")
    pair = yd_dual(M, hand)
    assert pair.report.passed
    D = pair.dual
    # graded by g^-1 = g; by hand g acts by f(g, g) g(g, g) theta = theta
    assert D.comodule.coaction == ((((1, 0), M.field(1)),),)
    assert D.act(1, 0) == {0: M.field(5)}
    assert check_yd(D).passed


def test_duals_of_trivial_module_are_trivial():
    H = registered_algebras()[3]
    I = trivial_yd(H)
    for hand in ("left", "right"):
        D = yd_dual(I, hand).dual
        assert D.action == I.action and D.comodule.coaction == I.comodule.coaction


def test_dual_with_wrong_action_is_not_a_yd_morphism():
    H = kw_z2("fp:13")
    M = builtin("m_theta")
    bad = YetterDrinfeldModule(H, "LL", M.comodule, [[{0: H.field(1)}], [{0: H.field(3)}]])
    with pytest.raises(NotYDMorphism):
        yd_dual(bad, "left")


def test_dual_needs_ll_module():
    with pytest.raises(FlavorMismatch):
        yd_dual(builtin("m_theta_rl"))


def test_dual_needs_bijective_antipode(h4):
    K = h4.replace(s=Matrix.zeros(QQ, 4, 4))
    with pytest.raises(AntipodeNotInvertible):
        comodule_dual(regular_comodule(K))


@pytest.mark.parametrize("H", all_algebras(), ids=lambda H: H.name)
def test_dual_lemma(H):
    rep = check_dual_lemma(H)
    assert rep.passed, rep.to_text()


def test_dual_lemma_spot_value():
    H = kw_z2()
    assert dual_lemma_lhs(H, 1, 1) == -1


def test_dual_lemma_spot_value_twisted_sweedler(h4f):
    from fractions import Fraction
    assert dual_lemma_lhs(h4f, 1, 1) == Fraction(1, 4)


def test_scaled_coevaluation_leaves_residual_two():
    M = builtin("m_theta")
    pair = yd_dual(M, "right")
    pair.coev = pair.coev.scale(M.field(2))
    from dqha.coalgebra import associator
    V, D = M.comodule, pair.dual.comodule
    I = Matrix.identity(M.field, 1)
    s1 = pair.ev.kron(I) @ associator(V, D, V, inverse=True) @ I.kron(pair.coev)
    assert s1 == Matrix.identity(M.field, 1).scale(M.field(2))
    assert not check_snake(pair).passed


@pytest.mark.parametrize("hand, turn", [("right", "Sinv"), ("left", "S")])
def test_hopf_case_dual_action_is_transpose_after_antipode(h4, hand, turn):
    M = h_as_yd(h4)
    D = yd_dual(M, hand).dual
    for h in range(4):
        A = M.action_matrix(0).scale(0)
        for k, c in getattr(h4, turn)(h).items():
            A = A + M.action_matrix(k).scale(c)
        assert D.action_matrix(h) == A.transpose()
