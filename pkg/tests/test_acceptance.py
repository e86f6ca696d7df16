"""One test per acceptance criterion; every comparison is exact."""

import io
import json

from dqha.algebra import check_dqha_axioms, derive_twist_pair
from dqha.canonical import canonical_elements, check_pq_identities, check_U_identities, is_counit_product
from dqha.cli import main
from dqha.coalgebra import Comodule
from dqha.documents import load, to_doc
from dqha.duals import check_dual_lemma, comodule_dual, dual_lemma_lhs, yd_dual
from dqha.examples import builtin, cyclic_group, group_hopf, kdual_z2, kw_z2, kw_z4_f13, kz3, \
    pool_comodules, registered_algebras
from dqha.fields import QQ
from dqha.yd import (COACTION_SIDE, YetterDrinfeldModule, check_alt_axiom, check_braided_functor_T,
                     check_braiding_inverse, check_center_condition, check_yd, convert_flavor,
                     h_as_yd, h_as_yd_actions, tensor_yd, trivial_yd)

ALGEBRAS = registered_algebras()


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return main(list(argv), stdout=out, stderr=err), out.getvalue()


def _ll_modules(H):
    mods = [h_as_yd(H), trivial_yd(H)]
    if H.name == "k_w[Z2]/F13":
        mods.append(builtin("m_theta"))
    return mods


def test_criterion_1_axiom_suite():
    for H in ALGEBRAS:
        assert check_dqha_axioms(H).passed, H.name
    broken = kw_z2().replace(beta=kw_z2().alpha)
    assert check_dqha_axioms(broken).failed_names() == ["antipode_reassociator"]


def test_criterion_2_twist_suite():
    assert derive_twist_pair(kw_z2()).f(1, 1) == -1
    for H in ALGEBRAS:
        rep = derive_twist_pair(H, strict=False).report
        assert rep["antipode_twisted_antimultiplicative"].passed, H.name
        assert rep["twisted_reassociator"].passed, H.name
        assert rep.passed, H.name


def test_criterion_3_canonical_element_suite():
    for H in ALGEBRAS:
        assert check_pq_identities(H).passed, H.name
        assert check_U_identities(H).passed, H.name
    for H in (kz3(), kdual_z2()):
        ce = canonical_elements(H)
        assert all(is_counit_product(H, x) for x in (ce.pR, ce.qR, ce.pL, ce.qL, ce.U))


def test_criterion_4_h_as_yd():
    for H in (kw_z2(), kw_z4_f13()):
        A, B = h_as_yd_actions(H)
        assert A == B, H.name
    assert h_as_yd(kw_z2()).act(1, 1) == {0: -1}
    for H in ALGEBRAS:
        M = h_as_yd(H)
        assert check_yd(M).passed, H.name
        assert check_alt_axiom(M).passed, H.name


def test_criterion_5_braiding_inverse():
    for H in ALGEBRAS:
        mods = _ll_modules(H)
        mods += [tensor_yd(M, N) for M in mods for N in mods if M.dim * N.dim <= 16]
        for M in mods:
            for N in mods:
                assert check_braiding_inverse(M, N).passed, (M.name, N.name)


def test_criterion_6_center_conditions():
    for H in ALGEBRAS:
        mods = _ll_modules(H) + [trivial_yd(H, "RL")]
        if H.name == "k_w[Z2]/F13":
            mods.append(builtin("m_theta_rl"))
        for M in mods:
            pool = pool_comodules(H, max_dim=2, side=COACTION_SIDE[M.flavor])
            for X in pool:
                for Y in pool:
                    assert check_center_condition(M, X, Y).passed, (M.name, X, Y)


def test_criterion_7_flavor_conversion():
    assert check_yd(convert_flavor(builtin("m_theta_rl"))).passed
    for H in ALGEBRAS:
        rl = [trivial_yd(H, "RL")]
        if H.name == "k_w[Z2]/F13":
            rl.append(builtin("m_theta_rl"))
        for M in rl:
            for N in rl:
                assert check_braided_functor_T(M, N).passed, (M.name, N.name)
    H = group_hopf(cyclic_group(3), QQ)
    V = Comodule(H, "left", 3, [[(1, v, 1)] for v in range(3)])
    M = YetterDrinfeldModule(H, "RL", V, lambda h, v: H.m(v, h))
    T = convert_flavor(M)
    assert all(T.act(h, v) == M.act(H.S(h), v) for h in range(3) for v in range(3))


def test_criterion_8_rigidity():
    for H in ALGEBRAS:
        for V in pool_comodules(H):
            for hand in ("left", "right"):
                assert comodule_dual(V, hand).report.passed, (H.name, hand)
        assert check_dual_lemma(H).passed, H.name
    for M in [h_as_yd(H) for H in ALGEBRAS] + [builtin("m_theta")]:
        for hand in ("left", "right"):
            rep = yd_dual(M, hand).report
            assert rep.passed, (M.name, hand)
            for name in ("yd_reassociator_compatibility", "ev_linear", "coev_linear",
                         "snake_object", "snake_dual"):
                assert rep[name].passed
    H = kw_z2()
    assert dual_lemma_lhs(H, 1, 1) == -1 == derive_twist_pair(H).f(1, 1)


def test_criterion_9_cli_contract(fixtures, tmp_path):
    assert _cli("validate", "builtin:kz3")[0] == 0
    code, out = _cli("validate", str(fixtures / "kw_z2_broken_beta.json"), "--report", "json")
    failed = [c for c in json.loads(out)["checks"] if not c["passed"]]
    assert code == 1 and [c["name"] for c in failed] == ["antipode_reassociator"]
    assert failed[0]["failures"][0]["at"] == ["g"]
    assert _cli("validate", str(fixtures / "truncated.json"))[0] == 2
    for i, argv in enumerate([("dual", "builtin:m_theta", "--hand", "right"),
                              ("dual", "builtin:h_yd_kw_z2", "--hand", "left"),
                              ("convert", "builtin:m_theta_rl"),
                              ("tensor", "builtin:m_theta", "builtin:m_theta")]):
        path = tmp_path / ("doc%d.json" % i)
        assert _cli(*argv, "--out", str(path))[0] == 0
        assert _cli("validate", str(path))[0] == 0
        assert to_doc(load(str(path))) == json.loads(path.read_text())
