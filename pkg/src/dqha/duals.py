"""Left and right duals of comodules and of LL Yetter-Drinfeld modules.

For a left comodule V with basis v_i and dual basis v^i:

  left dual V*:   coaction through s^-1,  ev(phi (x) v) = beta(s^-1(v_(-1))) phi(v_(0)),
                  coev(1) = sum alpha(s^-1(v_i(-1))) v_i(0) (x) v^i
  right dual *V:  coaction through s,     ev'(v (x) phi) = beta(v_(-1)) phi(v_(0)),
                  coev'(1) = sum v^i (x) alpha(v_i(-1)) v_i(0)

Maps are matrices; the unit object is one-dimensional so V (x) I and V are
identified through the flattening.
"""

from dataclasses import dataclass
from itertools import product

from .algebra import derive_twist_pair
from .canonical import compute_pq
from .coalgebra import Comodule, associator, is_colinear, tensor_comodule
from .errors import FlavorMismatch, NotYDMorphism, SnakeFailed
from .linalg import Matrix, sparse_add
from .report import Report, run_check, single_check
from .yd import YetterDrinfeldModule, tensor_yd, trivial_yd


@dataclass
class DualPair:
    hand: str
    source: object
    dual: object
    ev: Matrix
    coev: Matrix
    report: Report = None


def _dual_names(V, hand):
    return [("%s*" if hand == "left" else "*%s") % n for n in V.basis_names]


def _dual_comodule(V, hand):
    H = V.base
    if V.side != "left":
        raise FlavorMismatch("duals are built for left comodules")
    H.require_bijective("comodule duals")
    turn = H.Sinv if hand == "left" else H.S
    coaction = [[] for _ in range(V.dim)]
    for i in range(V.dim):
        for (h, w), c in V.coaction[i]:
            # phi -> turn(v_(-1)) phi(v_(0)): v^w picks up turn(h) (x) v^i
            for k, a in turn(h).items():
                coaction[w].append((k, i, c * a))
    return Comodule(H, "left", V.dim, coaction, _dual_names(V, hand))


def _ev_coev(V, hand):
    H = V.base
    F = V.field
    n = V.dim
    Si = H.Sinv
    ev_row = [F.zero] * (n * n)
    coev_col = {}
    for i in range(n):
        for (h, w), c in V.coaction[i]:
            if hand == "left":
                # ev(v^w (x) v_i) picks up beta(s^-1(h)); coev picks v_w (x) v^i
                ev_row[w * n + i] += c * H.beta(Si(h))
                sparse_add(coev_col, {w * n + i: c * H.alpha(Si(h))})
            else:
                ev_row[i * n + w] += c * H.beta(h)
                sparse_add(coev_col, {i * n + w: c * H.alpha(h)})
    ev = Matrix(F, [ev_row], n * n)
    coev = Matrix.from_columns(F, n * n, [coev_col])
    return ev, coev


def comodule_dual(V, hand="left"):
    """DualPair for the left (``hand='left'``, V*) or right (``'right'``, *V) dual."""
    if hand not in ("left", "right"):
        raise ValueError("hand must be 'left' or 'right'")
    D = _dual_comodule(V, hand)
    ev, coev = _ev_coev(V, hand)
    pair = DualPair(hand, V, D, ev, coev)
    pair.report = check_snake(pair)
    return pair


def _comodule_of(X):
    return X.comodule if isinstance(X, YetterDrinfeldModule) else X


def check_snake(pair):
    """Both zig-zag identities, with the associators in place."""
    V, D = _comodule_of(pair.source), _comodule_of(pair.dual)
    F = V.field
    iV, iD = Matrix.identity(F, V.dim), Matrix.identity(F, D.dim)
    ev, coev = pair.ev, pair.coev
    rep = Report("snake equations (%s dual)" % pair.hand)
    if pair.hand == "left":
        # V -> (V (x) V*) (x) V -> V (x) (V* (x) V) -> V
        s1 = iV.kron(ev) @ associator(V, D, V) @ coev.kron(iV)
        # V* -> V* (x) (V (x) V*) -> (V* (x) V) (x) V* -> V*
        s2 = ev.kron(iD) @ associator(D, V, D, inverse=True) @ iD.kron(coev)
    else:
        # V -> V (x) (*V (x) V) -> (V (x) *V) (x) V -> V
        s1 = ev.kron(iV) @ associator(V, D, V, inverse=True) @ iV.kron(coev)
        # *V -> (*V (x) V) (x) *V -> *V (x) (V (x) *V) -> *V
        s2 = iD.kron(ev) @ associator(D, V, D) @ coev.kron(iD)
    rep.add(single_check("snake_object", s1.is_identity()))
    rep.add(single_check("snake_dual", s2.is_identity()))
    rep.add(single_check("ev_colinear", is_colinear(ev, *_ev_spaces(pair, V, D))))
    rep.add(single_check("coev_colinear", is_colinear(coev, *_coev_spaces(pair, V, D))))
    return rep


def _unit(V):
    from .coalgebra import trivial_comodule
    return trivial_comodule(V.base, "left", 1)


def _ev_spaces(pair, V, D):
    src = tensor_comodule(D, V) if pair.hand == "left" else tensor_comodule(V, D)
    return src, _unit(V)


def _coev_spaces(pair, V, D):
    dst = tensor_comodule(V, D) if pair.hand == "left" else tensor_comodule(D, V)
    return _unit(V), dst


# --- duals of LL modules --------------------------------------------------------------

def yd_dual(M, hand="left", twist_pair=None, strict=True):
    """Dual of an LL module with the comodule dual structure and the action

      M*  (left):  (h.phi)(m_i) = f(s^-1(m_i(-1)), h3) g(h1, s^-1(y_(-1))) phi(y_(0)),  y = s(h2).m_i(0)
      *M (right):  (h.phi)(m_i) = f(s^-1(h3), m_i(-1)) g(y_(-1), s^-1(h1)) phi(y_(0)),  y = s^-1(h2).m_i(0)

    ev and coev are checked to be module maps; with ``strict`` a failure
    raises :class:`NotYDMorphism` (or :class:`SnakeFailed` for the snake
    identities).  The full report is attached to the returned pair.
    """
    if M.flavor != "LL":
        raise FlavorMismatch("yd_dual is defined for LL modules")
    from .yd import check_yd

    H = M.H
    H.require_bijective("yd_dual")
    tp = twist_pair or derive_twist_pair(H)
    f, g = tp.f, tp.g
    S, Si = H.S, H.Sinv
    n = M.dim
    base = comodule_dual(M.comodule, hand)

    def image(h, j):
        # h . m^j = sum_i (h . m^j)(m_i) m^i
        out = {}
        for i in range(n):
            t = H.field.zero
            if hand == "left":
                for k, (h1, h2, h3) in H.sw((h, 3)):
                    for c, (x,), w in M.co(i):
                        a = f(Si(x), h3)
                        if not a:
                            continue
                        for c2, (y1,), u in M.co(M.act(S(h2), w)):
                            if u == j:
                                t += k * c * c2 * a * g(h1, Si(y1))
            else:
                for k, (h1, h2, h3) in H.sw((h, 3)):
                    for c, (x,), w in M.co(i):
                        a = f(Si(h3), x)
                        if not a:
                            continue
                        for c2, (y1,), u in M.co(M.act(Si(h2), w)):
                            if u == j:
                                t += k * c * c2 * a * g(y1, Si(h1))
            if t:
                out[i] = t
        return out

    D = YetterDrinfeldModule(H, "LL", base.dual, image,
                             name=("(%s)*" if hand == "left" else "*(%s)") % M.name)
    pair = DualPair(hand, M, D, base.ev, base.coev)
    rep = Report("%s dual of %s" % (hand, M.name))
    rep.extend(check_yd(D).checks)
    rep.extend(base.report.checks)
    rep.extend(check_dual_morphisms(pair).checks)
    pair.report = rep
    if strict and not rep.passed:
        failed = rep.failed_names()
        if any(x.startswith("snake") for x in failed):
            raise SnakeFailed("snake identities fail for %s" % D.name, rep)
        raise NotYDMorphism("%s dual of %s fails %s" % (hand, M.name, failed), rep)
    return pair


def check_dual_morphisms(pair):
    """ev and coev commute with the actions (the unit object acts by eps)."""
    M, D = pair.source, pair.dual
    H = M.H
    I = trivial_yd(H, "LL")
    if pair.hand == "left":
        src, dst = tensor_yd(D, M), tensor_yd(M, D)
    else:
        src, dst = tensor_yd(M, D), tensor_yd(D, M)
    rep = Report("duality maps")
    ev, coev = pair.ev, pair.coev

    def ev_ok(h):
        return ev @ src.action_matrix(h) == I.action_matrix(h) @ ev

    def coev_ok(h):
        return dst.action_matrix(h) @ coev == coev @ I.action_matrix(h)

    bad_ev = [H.basis_name(h) for h in range(H.dim) if not ev_ok(h)]
    bad_coev = [H.basis_name(h) for h in range(H.dim) if not coev_ok(h)]
    rep.add(single_check("ev_linear", not bad_ev, note="fails at %s" % bad_ev if bad_ev else ""))
    rep.add(single_check("coev_linear", not bad_coev, note="fails at %s" % bad_coev if bad_coev else ""))
    return rep


# --- the two auxiliary identities used for the duals ---------------------------------------

def check_dual_lemma(H, pq=None, twist_pair=None):
    """q^L(a1, b1 c1) sigma(a2, b2, c2) = q^L(a2, b1) sigma^-1(s(a1), a3 b2, c)
    p^R(s(a1), a3 b3) q^L(a2, b2) q^L(b1, s(a4 b4)) = f(a, b)"""
    pR, qR, pL, qL = pq or compute_pq(H)
    f = (twist_pair or derive_twist_pair(H)).f
    S, m, sig, sig_inv = H.S, H.m, H.sigma, H.sigma_inv
    Z = H.field.zero
    d = H.dim
    rep = Report("dual lemma: %s" % H.name)

    def l1(a, b, c):
        t = Z
        for k, (a1, a2), (b1, b2), (c1, c2) in H.sw((a, 2), (b, 2), (c, 2)):
            x = qL(a1, m(b1, c1))
            if x:
                t += k * x * sig(a2, b2, c2)
        return t

    def r1(a, b, c):
        t = Z
        for k, (a1, a2, a3), (b1, b2) in H.sw((a, 3), (b, 2)):
            x = qL(a2, b1)
            if x:
                t += k * x * sig_inv(S(a1), m(a3, b2), c)
        return t

    def l2(a, b):
        t = Z
        for k, (a1, a2, a3, a4), (b1, b2, b3, b4) in H.sw((a, 4), (b, 4)):
            x = qL(a2, b2)
            if not x:
                continue
            x *= qL(b1, S(m(a4, b4)))
            if x:
                t += k * x * pR(S(a1), m(a3, b3))
        return t

    rep.add(run_check("qL_reassociator_relation", product(range(d), repeat=3), l1, r1, H.fmt, H.label))
    rep.add(run_check("pR_qL_twist_relation", product(range(d), repeat=2), l2,
                      lambda a, b: f(a, b), H.fmt, H.label))
    return rep


def dual_lemma_lhs(H, a, b, pq=None):
    """Left side of the second identity of :func:`check_dual_lemma` at (a, b)."""
    pR, qR, pL, qL = pq or compute_pq(H)
    S, m = H.S, H.m
    t = H.field.zero
    for k, (a1, a2, a3, a4), (b1, b2, b3, b4) in H.sw((a, 4), (b, 4)):
        t += k * pR(S(a1), m(a3, b3)) * qL(a2, b2) * qL(b1, S(m(a4, b4)))
    return t
