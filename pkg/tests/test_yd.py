import pytest

from dqha.coalgebra import Comodule, grouplike_comodule, trivial_comodule
from dqha.errors import ConstraintViolated, FlavorMismatch
from dqha.examples import (THETA_F13, builtin, cyclic_group, group_hopf, kw_z2, kw_z4_f13, kz3,
                           one_dim_yd, pool_comodules, registered_algebras)
from dqha.fields import QQ
from dqha.linalg import Matrix
from dqha.yd import (FLAVORS, COACTION_SIDE, YetterDrinfeldModule, braiding, braiding_inverse,
                     check_alt_axiom, check_braided_functor_T, check_braiding_colinear,
                     check_braiding_inverse, check_center_condition, check_yd, convert_flavor,
                     h_as_yd, h_as_yd_actions, tensor_yd, trivial_yd)

from conftest import all_algebras

F13_Z2 = kw_z2("fp:13")


@pytest.fixture(scope="module", params=[H.name for H in all_algebras()])
def hyd(request):
    H = {H.name: H for H in all_algebras()}[request.param]
    return h_as_yd(H)


def test_h_as_yd_passes_axioms_and_alternative(hyd):
    assert check_yd(hyd).passed
    rep = check_alt_axiom(hyd)
    assert rep.passed, rep.to_text()


@pytest.mark.parametrize("H", all_algebras(), ids=lambda H: H.name)
def test_two_action_forms_agree(H):
    A, B = h_as_yd_actions(H)
    assert A == B


def test_g_acts_on_g_by_minus_e():
    M = h_as_yd(kw_z2())
    assert M.act(1, 1) == {0: -1}
    assert M.act(1, 0) == {1: -1}   # picks up sigma(g, g, g)


def test_hopf_case_action_is_multiplication():
    M = h_as_yd(kz3())
    assert all(M.act(h, x) == kz3().m(h, x) for h in range(3) for x in range(3))


def test_h_as_yd_on_twisted_sweedler(h4f):
    M = h_as_yd(h4f)
    assert M.act(1, 1) == {0: -2}
    assert check_yd(tensor_yd(M, M)).passed


# --- one-dimensional modules ---------------------------------------------------------

@pytest.mark.parametrize("flavor", FLAVORS)
def test_m_theta_in_every_flavor(flavor):
    M = one_dim_yd(F13_Z2, 1, THETA_F13, flavor)
    assert check_yd(M).passed
    assert M.act(1, 0) == {0: F13_Z2.field(5)}


def test_theta_one_fails_at_g_g():
    with pytest.raises(ConstraintViolated) as exc:
        one_dim_yd(F13_Z2, 1, 1)
    assert exc.value.axiom == "yd_reassociator_compatibility"
    assert exc.value.constraint == "theta^2 must equal 12"


def test_no_theta_over_q():
    with pytest.raises(ConstraintViolated) as exc:
        one_dim_yd(kw_z2(), 1, 1)
    assert exc.value.constraint == "theta^2 must equal -1"
    M = trivial_yd(kw_z2())
    rep = check_yd(YetterDrinfeldModule(kw_z2(), "LL", grouplike_comodule(kw_z2(), 1),
                                        [[{0: QQ(1)}], [{0: QQ(1)}]]))
    assert check_yd(M).passed and rep.failed_names() == ["yd_reassociator_compatibility"]
    assert rep["yd_reassociator_compatibility"].failing_tuples() == [("g", "g", "v0")]


def test_identity_grading_theta_one_is_trivial():
    for H in registered_algebras():
        if H.group is not None:
            assert check_yd(one_dim_yd(H, H.group.identity, 1)).passed


# --- braiding --------------------------------------------------------------------------

def test_braiding_on_m_theta():
    M = builtin("m_theta")
    assert braiding(M, M).rows == ((M.field(5),),)
    assert braiding_inverse(M, M).rows == ((M.field(8),),)


def test_braiding_of_trivial_modules_is_identity():
    I = trivial_yd(kw_z4_f13())
    assert braiding(I, I).is_identity()


def _ll_modules():
    out = []
    for H in registered_algebras():
        out.append([h_as_yd(H), trivial_yd(H)])
    out[3] += [builtin("m_theta"), one_dim_yd(F13_Z2, 1, 8)]
    return out


@pytest.mark.parametrize("mods", _ll_modules(), ids=lambda ms: ms[0].H.name)
def test_braiding_inverse_on_registered_pairs(mods):
    mods = mods + [tensor_yd(mods[0], mods[0])]
    for M in mods:
        for N in mods:
            assert check_braiding_inverse(M, N).passed
            assert check_braiding_colinear(M, N).passed


def test_braiding_inverse_twisted_sweedler(h4f):
    M = h_as_yd(h4f)
    assert check_braiding_inverse(M, M).passed
    assert check_braiding_inverse(M, trivial_yd(h4f)).passed


def test_braiding_hexagon_on_h_yd_kw_z4():
    # c_{M(x)N, P} against the associators, in matrix form
    from dqha.coalgebra import associator
    H = kw_z4_f13()
    M = h_as_yd(H)
    N = one_dim_yd(H, 0, 1)
    for X, Y, Z in [(M, N, M), (M, M, N)]:
        XY = tensor_yd(X, Y)
        c = braiding(Z, XY)         # (X(x)Y)(x)Z -> Z(x)(X(x)Y)
        a = lambda P, Q, R, inv=False: associator(P.comodule, Q.comodule, R.comodule, inverse=inv)
        I = lambda P: Matrix.identity(H.field, P.dim)
        lhs = a(Z, X, Y, True) @ c @ a(X, Y, Z, True)
        rhs = braiding(Z, X).kron(I(Y)) @ a(X, Z, Y, True) @ I(X).kron(braiding(Z, Y))
        assert lhs == rhs


def test_flavor_mismatch():
    with pytest.raises(FlavorMismatch):
        tensor_yd(builtin("m_theta"), builtin("m_theta_rl"))
    with pytest.raises(FlavorMismatch):
        braiding(builtin("m_theta"), h_as_yd(kz3()))


# --- tensor products and center conditions --------------------------------------------

@pytest.mark.parametrize("flavor", FLAVORS)
def test_tensor_products_in_every_flavor(flavor):
    mods = [one_dim_yd(F13_Z2, g, t, flavor) for g, t in [(0, 1), (0, 12), (1, 5), (1, 8)]]
    for M in mods:
        for N in mods:
            assert check_yd(tensor_yd(M, N)).passed


@pytest.mark.parametrize("flavor", FLAVORS)
def test_center_conditions_in_every_flavor(flavor):
    side = COACTION_SIDE[flavor]
    pool = pool_comodules(F13_Z2, side=side)
    for M in [one_dim_yd(F13_Z2, 1, 5, flavor), one_dim_yd(F13_Z2, 0, 12, flavor)]:
        for X in pool:
            for Y in pool:
                assert check_center_condition(M, X, Y).passed


def test_center_condition_detects_a_wrong_action():
    H = F13_Z2
    M = builtin("m_theta")
    bad = YetterDrinfeldModule(H, "LL", M.comodule, [[{0: H.field(1)}], [{0: H.field(3)}]])
    pool = pool_comodules(H)
    assert not all(check_center_condition(bad, X, Y).passed for X in pool for Y in pool)


def test_center_conditions_twisted_sweedler(h4f):
    M = h_as_yd(h4f)
    pool = pool_comodules(h4f, max_dim=4)
    for X in pool:
        for Y in pool:
            assert check_center_condition(M, X, Y).passed


# --- flavor conversion ------------------------------------------------------------------

def test_convert_m_theta_rl():
    T = convert_flavor(builtin("m_theta_rl"))
    assert T.flavor == "LL" and check_yd(T).passed


def test_braided_functor_on_rl_pairs():
    mods = [one_dim_yd(F13_Z2, g, t, "RL") for g, t in [(0, 1), (0, 12), (1, 5), (1, 8)]]
    for M in mods:
        for N in mods:
            assert check_braided_functor_T(M, N).passed


def test_trivial_rl_goes_to_trivial_ll():
    H = kw_z4_f13()
    T = convert_flavor(trivial_yd(H, "RL"))
    assert T.action == trivial_yd(H, "LL").action


def test_hopf_case_conversion_is_m_times_s_h():
    H = group_hopf(cyclic_group(3), QQ)
    V = Comodule(H, "left", 3, [[(1, v, 1)] for v in range(3)])
    M = YetterDrinfeldModule(H, "RL", V, lambda h, v: H.m(v, h))
    assert check_yd(M).passed
    T = convert_flavor(M)
    assert all(T.act(h, v) == M.act(H.S(h), v) for h in range(3) for v in range(3))


def test_lr_to_rr_experimental():
    for g, t in [(1, 5), (0, 12)]:
        T = convert_flavor(one_dim_yd(F13_Z2, g, t, "LR"), "RR")
        assert T.flavor == "RR" and check_yd(T).passed


def test_unsupported_conversion():
    with pytest.raises(FlavorMismatch):
        convert_flavor(builtin("m_theta"), "RL")


def test_perturbed_action_fails_both_coaction_forms():
    # g swaps a degree-e and a degree-g vector, which no coaction can follow
    H = kw_z2()
    V = Comodule(H, "left", 2, [[(0, 0, 1)], [(1, 1, 1)]])
    bad = YetterDrinfeldModule(H, "LL", V, [[{0: QQ(1)}, {1: QQ(1)}], [{1: QQ(1)}, {0: QQ(1)}]])
    rep = check_alt_axiom(bad)
    assert not rep["yd_coaction_compatibility"].passed
    assert not rep["yd_coaction_alternative"].passed
    assert rep["forms_equivalent"].passed


def test_coaction_compatibility_by_hand_on_kw_z2():
    # at (g, g) both sides equal -g (x) e
    from dqha.yd import _yd_sides
    M = h_as_yd(kw_z2())
    _, _, lhs, rhs = _yd_sides(M)
    assert lhs(1, 1) == rhs(1, 1) == {(1, 0): -1}


def test_braiding_on_h_yd_kw_z2_fixes_g_g():
    M = h_as_yd(kw_z2())
    c = braiding(M, M)
    assert c.column(3) == {3: 1}       # g (x) g -> e > g (x) g


def test_hopf_case_braiding_inverse_formula():
    H = kz3()
    M = h_as_yd(H)
    ci = braiding_inverse(M, M)
    # c^-1(m (x) n) = n_(0) (x) s^-1(n_(-1)) . m, with n_(-1) = e here
    for m in range(3):
        for n in range(3):
            assert ci.column(m * 3 + n) == {n * 3 + m: 1}


def test_braided_functor_on_hopf_regular_modules():
    H = group_hopf(cyclic_group(3), QQ)
    V = Comodule(H, "left", 3, [[(1, v, 1)] for v in range(3)])
    M = YetterDrinfeldModule(H, "RL", V, lambda h, v: H.m(v, h))
    assert check_braided_functor_T(M, M).passed
