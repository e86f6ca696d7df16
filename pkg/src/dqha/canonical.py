"""The bilinear forms p^R, q^R, p^L, q^L and U and their identity suites.

They generalize ``h g_1 s(g_2) = eps(g) h`` and its relatives to the
quasi setting; every later construction (braiding inverses, duals, the
H-as-YD action) is built from them.  Two identities are checked in a
corrected reading, with the literal reading reported alongside as an
informational check.
"""

from dataclasses import dataclass
from itertools import product

from .algebra import derive_twist_pair
from .errors import ValidationFailed
from .forms import MultilinearForm
from .linalg import sparse_add
from .report import Report, run_check


@dataclass
class CanonicalElements:
    pR: MultilinearForm
    qR: MultilinearForm
    pL: MultilinearForm
    qL: MultilinearForm
    U: MultilinearForm = None


def _form2(H, fn):
    return MultilinearForm.from_function(H.field, H.dim, 2, fn)


def compute_pq(H):
    """p^R(a,b) = sigma^-1(a, b1, s(b3)) beta(b2)
    q^R(a,b) = sigma(a, b3, s^-1(b1)) alpha(s^-1(b2))
    p^L(a,b) = sigma(s^-1(a3), a1, b) beta(s^-1(a2))
    q^L(a,b) = sigma^-1(s(a1), a3, b) alpha(a2)
    """
    H.require_bijective("p/q elements")
    S, Si, sig, sig_inv = H.S, H.Sinv, H.sigma, H.sigma_inv
    alpha, beta = H.alpha, H.beta
    Z = H.field.zero

    def pR(a, b):
        t = Z
        for k, (b1, b2, b3) in H.sw((b, 3)):
            x = beta(b2)
            if x:
                t += k * x * sig_inv(a, b1, S(b3))
        return t

    def qR(a, b):
        t = Z
        for k, (b1, b2, b3) in H.sw((b, 3)):
            x = alpha(Si(b2))
            if x:
                t += k * x * sig(a, b3, Si(b1))
        return t

    def pL(a, b):
        t = Z
        for k, (a1, a2, a3) in H.sw((a, 3)):
            x = beta(Si(a2))
            if x:
                t += k * x * sig(Si(a3), a1, b)
        return t

    def qL(a, b):
        t = Z
        for k, (a1, a2, a3) in H.sw((a, 3)):
            x = alpha(a2)
            if x:
                t += k * x * sig_inv(S(a1), a3, b)
        return t

    return _form2(H, pR), _form2(H, qR), _form2(H, pL), _form2(H, qL)


def compute_U(H, pq=None, twist_pair=None, validate=True):
    """U(a,b) = g(a1,b1) q^R(s(b2), s(a2)).

    With ``validate`` the two U identities are checked and a failure raises
    :class:`ValidationFailed`.
    """
    pR, qR, pL, qL = pq or compute_pq(H)
    g = (twist_pair or derive_twist_pair(H)).g
    S = H.S
    Z = H.field.zero

    def fn(a, b):
        t = Z
        for k, (a1, a2), (b1, b2) in H.sw((a, 2), (b, 2)):
            x = g(a1, b1)
            if x:
                t += k * x * qR(S(b2), S(a2))
        return t
    U = _form2(H, fn)
    if validate:
        rep = check_U_identities(H, U, pq=(pR, qR, pL, qL))
        if not rep.passed:
            raise ValidationFailed("U identities fail for %s: %s" % (H.name, rep.failed_names()), rep)
    return U


def canonical_elements(H, twist_pair=None):
    pq = compute_pq(H)
    tp = twist_pair or derive_twist_pair(H)
    return CanonicalElements(*pq, U=compute_U(H, pq, tp, validate=False))


def _vec(H):
    def acc(terms):
        out = {}
        for coef, v in terms:
            if coef:
                sparse_add(out, v, coef)
        return out
    return acc


def check_pq_identities(H, pq=None, twist_pair=None):
    pR, qR, pL, qL = pq or compute_pq(H)
    f, g = (twist_pair.f, twist_pair.g) if twist_pair else (None, None)
    if f is None:
        tp = derive_twist_pair(H, strict=False)
        f, g = tp.f, tp.g
    d = H.dim
    S, Si, m, sig, sig_inv, eps = H.S, H.Sinv, H.m, H.sigma, H.sigma_inv, H.eps
    Z = H.field.zero
    B2 = list(product(range(d), repeat=2))
    B3 = list(product(range(d), repeat=3))
    vec = _vec(H)
    one = lambda i: {i: H.field.one}
    rep = Report("p/q identities: %s" % H.name)

    def chk(name, tuples, lhs, rhs, informational=False, note=""):
        rep.add(run_check(name, tuples, lhs, rhs, H.fmt, H.label, note=note, informational=informational))

    # vector identities
    chk("pR_vector_relation", B2,
        lambda a, b: vec((k * pR(a1, b), one(a2)) for k, (a1, a2) in H.sw((a, 2))),
        lambda a, b: vec((k * pR(a2, b2), m(m(a1, b1), S(b3)))
                         for k, (a1, a2), (b1, b2, b3) in H.sw((a, 2), (b, 3))))
    chk("pR_vector_relation_literal", B2,
        lambda a, b: vec((k * pR(a1, b), one(a2)) for k, (a1, a2) in H.sw((a, 2))),
        lambda a, b: vec((k * pR(a2, b2), m(m(a1, b1), S(a3)))
                         for k, (a1, a2, a3), (b1, b2) in H.sw((a, 3), (b, 2))),
        informational=True, note="antipode applied to the third leg of a instead of b")
    chk("qR_vector_relation", B2,
        lambda a, b: vec((k * qR(a2, b), one(a1)) for k, (a1, a2) in H.sw((a, 2))),
        lambda a, b: vec((k * qR(a1, b2), m(m(a2, b3), Si(b1)))
                         for k, (a1, a2), (b1, b2, b3) in H.sw((a, 2), (b, 3))))
    chk("pL_vector_relation", B2,
        lambda a, b: vec((k * pL(a, b1), one(b2)) for k, (b1, b2) in H.sw((b, 2))),
        lambda a, b: vec((k * pL(a2, b2), m(Si(a3), m(a1, b1)))
                         for k, (a1, a2, a3), (b1, b2) in H.sw((a, 3), (b, 2))))
    chk("qL_vector_relation", B2,
        lambda a, b: vec((k * qL(a, b2), one(b1)) for k, (b1, b2) in H.sw((b, 2))),
        lambda a, b: vec((k * qL(a2, b1), m(S(a1), m(a3, b2)))
                         for k, (a1, a2, a3), (b1, b2) in H.sw((a, 3), (b, 2))))

    # scalar counit identities
    e2 = lambda a, b: eps(a) * eps(b)

    def ssum(gen):
        t = Z
        for x in gen:
            t += x
        return t

    chk("qR_pR_counit", B2,
        lambda a, b: ssum(k * qR(m(a1, b1), S(b3)) * pR(a2, b2)
                          for k, (a1, a2), (b1, b2, b3) in H.sw((a, 2), (b, 3))), e2)
    chk("pL_qL_counit", B2,
        lambda a, b: ssum(k * pL(S(a1), m(a3, b2)) * qL(a2, b1)
                          for k, (a1, a2, a3), (b1, b2) in H.sw((a, 3), (b, 2))), e2)
    chk("qL_pL_counit", B2,
        lambda a, b: ssum(k * qL(Si(a3), m(a1, b1)) * pL(a2, b2)
                          for k, (a1, a2, a3), (b1, b2) in H.sw((a, 3), (b, 2))), e2)
    chk("qR_pR_counit_inverse", B2,
        lambda a, b: ssum(k * qR(a1, b2) * pR(m(a2, b3), Si(b1))
                          for k, (a1, a2), (b1, b2, b3) in H.sw((a, 2), (b, 3))), e2)

    # the two relations with the reassociator and the twist pair
    def qR_lhs(a, b, c):
        t = Z
        for k, (a1, a2, a3), (b1, b2, b3), (c1, c2) in H.sw((a, 3), (b, 3), (c, 2)):
            x = qR(a1, b1) * qR(m(a2, b2), c1)
            if x:
                t += k * x * sig_inv(a3, b3, c2)
        return t

    def qR_rhs(a, b, c):
        t = Z
        for k, (a1, a2), (b1, b2, b3, b4), (c1, c2, c3, c4) in H.sw((a, 2), (b, 4), (c, 4)):
            x = qR(a1, m(b3, c3))
            if x:
                x *= f(Si(c2), Si(b2))
                if x:
                    t += k * x * sig(m(a2, m(b4, c4)), Si(c1), Si(b1))
        return t

    chk("qR_reassociator_relation", B3, qR_lhs, qR_rhs)

    def pR_lhs(a, b, c):
        t = Z
        for k, (a1, a2, a3), (b1, b2, b3), (c1, c2) in H.sw((a, 3), (b, 3), (c, 2)):
            x = sig(a1, b1, c1)
            if x:
                t += k * x * pR(m(a2, b2), c2) * pR(a3, b3)
        return t

    def pR_rhs(a, b, c):
        t = Z
        for k, (a1, a2), (b1, b2, b3, b4), (c1, c2, c3, c4) in H.sw((a, 2), (b, 4), (c, 4)):
            x = pR(a2, m(b2, c2)) * g(b3, c3)
            if x:
                t += k * x * sig_inv(m(a1, m(b1, c1)), S(c4), S(b4))
        return t

    chk("pR_reassociator_relation", B3, pR_lhs, pR_rhs)
    return rep


def check_U_identities(H, U=None, pq=None, twist_pair=None):
    if U is None:
        U = compute_U(H, pq, twist_pair, validate=False)
    d = H.dim
    S, m, sig = H.S, H.m, H.sigma
    Z = H.field.zero
    B2 = list(product(range(d), repeat=2))
    B3 = list(product(range(d), repeat=3))
    rep = Report("U identities: %s" % H.name)

    def antipode_lhs(a, b):
        out = {}
        for k, (b1, b2) in H.sw((b, 2)):
            x = U(a, b1)
            if x:
                sparse_add(out, S(b2), k * x)
        return out

    def antipode_rhs(a, b):
        out = {}
        for k, (a1, a2, a3), (b1, b2) in H.sw((a, 3), (b, 2)):
            x = U(a2, b2)
            if x:
                sparse_add(out, m(S(m(a1, b1)), a3), k * x)
        return out

    rep.add(run_check("U_antipode_relation", B2, antipode_lhs, antipode_rhs, H.fmt, H.label))

    def cocycle_lhs(a, b, c):
        t = Z
        for k, (b1, b2), (c1, c2) in H.sw((b, 2), (c, 2)):
            x = U(b2, c2)
            if x:
                t += k * x * U(a, m(b1, c1))
        return t

    def cocycle_rhs(last):
        def fn(a, b, c):
            t = Z
            nb, nc = (4, 3) if last == "b" else (3, 4)
            for k, (a1, a2, a3, a4), bs, cs in H.sw((a, 4), (b, nb), (c, nc)):
                x = sig(a1, bs[0], cs[0])
                if not x:
                    continue
                x *= U(m(a3, bs[2]), cs[2])
                if x:
                    tail = bs[3] if last == "b" else cs[3]
                    t += k * x * sig(S(m(m(a2, bs[1]), cs[1])), a4, tail)
            return t
        return fn

    rep.add(run_check("U_reassociator_relation", B3, cocycle_lhs, cocycle_rhs("b"), H.fmt, H.label))
    rep.add(run_check("U_reassociator_relation_literal", B3, cocycle_lhs, cocycle_rhs("c"), H.fmt, H.label,
                      note="last reassociator slot takes the fourth leg of c instead of b",
                      informational=True))
    return rep


def is_counit_product(H, form):
    """Whether ``form(a, b) = eps(a) eps(b)`` on every basis pair."""
    eps = H.coalgebra.epsilon
    return all(v == eps[a] * eps[b] for (a, b), v in form.items())
