import pytest

from dqha.algebra import check_dqha_axioms
from dqha.errors import InvalidGroupTable, NotACocycle, NotNormalized
from dqha.examples import (FiniteGroupPresentation, ThreeCocycle, builtin, builtin_names, cyclic_cocycle,
                           cyclic_group, group_dqha, kw_z2, registered_algebras, symmetric_group_3,
                           trivial_cocycle)
from dqha.fields import QQ, PrimeField


def test_registered_pool():
    assert [H.name for H in registered_algebras()] == ["kZ3", "k^Z2", "k_w[Z2]", "k_w[Z2]/F13", "k_w[Z4]/F13"]


def test_kw_z2_structure():
    H = kw_z2()
    assert H.sigma(1, 1, 1) == -1
    assert [H.beta(i) for i in range(2)] == [1, -1]
    assert [H.alpha(i) for i in range(2)] == [1, 1]


@pytest.mark.parametrize("table", [[[0, 1], [1, 1]], [[0]] * 2, [[1, 0], [0, 1]]])
def test_invalid_group_tables(table):
    with pytest.raises(InvalidGroupTable):
        FiniteGroupPresentation(table)


def test_s3_is_nonabelian():
    G = symmetric_group_3()
    assert G.order == 6
    assert any(G.mul(a, b) != G.mul(b, a) for a in range(6) for b in range(6))
    assert check_dqha_axioms(group_dqha(G, trivial_cocycle(G, QQ))).passed


def test_cyclic_cocycles_pass_the_cocycle_law():
    F = PrimeField(13)
    for n, zeta in [(2, 12), (4, 5), (3, 3)]:
        assert cyclic_cocycle(n, F, zeta).cocycle_failure() is None


def test_non_cocycle_rejected():
    G = cyclic_group(3)
    with pytest.raises(NotACocycle):
        ThreeCocycle(G, QQ, {(1, 1, 1): 2})


def test_unnormalized_cocycle_rejected():
    G = cyclic_group(2)
    with pytest.raises(NotNormalized):
        ThreeCocycle(G, QQ, {(0, 1, 1): -1})


def test_every_builtin_resolves():
    for name in builtin_names():
        assert builtin(name) is not None
    with pytest.raises(KeyError):
        builtin("nope")
