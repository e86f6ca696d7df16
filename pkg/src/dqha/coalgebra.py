"""Coalgebras given by structure constants, comodules, and comodule associators.

The central piece is :meth:`Coalgebra.cop`, the memoized iterated coproduct
of a basis element.  Every Sweedler-indexed formula elsewhere in the package
is evaluated by looping over its terms.
"""

import os
import threading
from itertools import product

from .errors import ArityCapExceeded, DimensionMismatch
from .linalg import Matrix, sparse_add, sparse_clean
from .report import Report, fmt_sparse, run_check

DEFAULT_ARITY_CAP = 8


def default_arity_cap():
    raw = os.environ.get("DQHA_ARITY_CAP")
    if raw:
        try:
            cap = int(raw)
        except ValueError:
            raise ValueError("DQHA_ARITY_CAP must be an integer, got %r" % raw) from None
        if cap < 2:
            raise ValueError("DQHA_ARITY_CAP must be at least 2")
        return cap
    return DEFAULT_ARITY_CAP


class Coalgebra:
    """Coalgebra on basis ``0..dim-1``.

    ``delta[i]`` lists ``(j, k, c)`` with ``Delta(e_i) = sum c e_j (x) e_k``;
    ``epsilon[i]`` is the counit on ``e_i``.
    """

    def __init__(self, field, dim, delta, epsilon, basis_names=None, arity_cap=None):
        if len(delta) != dim or len(epsilon) != dim:
            raise DimensionMismatch("delta/epsilon must have one entry per basis element")
        self.field = field
        self.dim = dim
        self.basis_names = tuple(basis_names) if basis_names else tuple("e%d" % i for i in range(dim))
        if len(self.basis_names) != dim:
            raise DimensionMismatch("need %d basis names" % dim)
        rows = []
        for i, terms in enumerate(delta):
            acc = {}
            for j, k, c in terms:
                if not (0 <= j < dim and 0 <= k < dim):
                    raise DimensionMismatch("coproduct of e%d mentions index outside 0..%d" % (i, dim - 1))
                sparse_add(acc, {(j, k): field(c)})
            rows.append(tuple(sorted(acc.items())))
        self.delta = tuple(rows)
        self.epsilon = tuple(field(e) for e in epsilon)
        self.arity_cap = arity_cap if arity_cap is not None else default_arity_cap()
        self._memo = {}
        self._lock = threading.Lock()

    def name(self, i):
        return self.basis_names[i]

    # --- iterated coproducts ----------------------------------------------
    def cop(self, i, k):
        """Terms ``(coef, (i_1, ..., i_k))`` of the k-fold coproduct of e_i.

        k = 1 is the identity.  Higher powers expand the last tensor factor,
        which is the same map as any other bracketing for a coassociative
        coalgebra.
        """
        key = (i, k)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if k < 1:
            raise ValueError("iterated coproduct needs k >= 1")
        if k > self.arity_cap:
            raise ArityCapExceeded("k = %d exceeds the arity cap %d" % (k, self.arity_cap))
        if k == 1:
            terms = ((self.field.one, (i,)),)
        else:
            acc = {}
            for c, t in self.cop(i, k - 1):
                for (a, b), d in self.delta[t[-1]]:
                    sparse_add(acc, {t[:-1] + (a, b): c * d})
            terms = tuple((c, t) for t, c in sorted(acc.items()))
        with self._lock:
            self._memo.setdefault(key, terms)
        return self._memo[key]

    def cop_vec(self, x, k):
        """Iterated coproduct of a sparse vector, merged."""
        if type(x) is int:
            return self.cop(x, k)
        acc = {}
        for i, c in x.items():
            for d, t in self.cop(i, k):
                sparse_add(acc, {t: c * d})
        return tuple((c, t) for t, c in sorted(acc.items()))

    def counit(self, x):
        if type(x) is int:
            return self.epsilon[x]
        total = self.field.zero
        for i, c in x.items():
            total = total + c * self.epsilon[i]
        return total

    def prefill(self, k=None):
        """Populate the memo for every basis element up to arity ``k``."""
        k = k or self.arity_cap
        for i in range(self.dim):
            for j in range(1, k + 1):
                self.cop(i, j)

    def coopposite(self):
        """Same space with ``Delta^cop(e_i) = sum c e_k (x) e_j``."""
        delta = [[(b, a, c) for (a, b), c in row] for row in self.delta]
        return Coalgebra(self.field, self.dim, delta, self.epsilon, self.basis_names, self.arity_cap)


def split_coproduct(C, i, j, k):
    """(Delta^(j) (x) Delta^(k)) o Delta applied to e_i, as a sparse dict on tuples."""
    acc = {}
    for (a, b), c in C.delta[i]:
        for ca, ta in C.cop(a, j):
            for cb, tb in C.cop(b, k):
                sparse_add(acc, {ta + tb: c * ca * cb})
    return acc


def check_coalgebra(C):
    """Coassociativity and both counit laws on every basis element."""
    fmt = lambda v: fmt_sparse(C.field, lambda t: "(x)".join(C.name(i) for i in t), v)
    basis = [(i,) for i in range(C.dim)]
    label = lambda t: (C.name(t[0]),)

    def left_assoc(i):
        acc = {}
        for (a, b), c in C.delta[i]:
            for (x, y), d in C.delta[a]:
                sparse_add(acc, {(x, y, b): c * d})
        return acc

    def right_assoc(i):
        acc = {}
        for (a, b), c in C.delta[i]:
            for (x, y), d in C.delta[b]:
                sparse_add(acc, {(a, x, y): c * d})
        return acc

    def counit_left(i):
        acc = {}
        for (a, b), c in C.delta[i]:
            sparse_add(acc, {(b,): c * C.epsilon[a]})
        return acc

    def counit_right(i):
        acc = {}
        for (a, b), c in C.delta[i]:
            sparse_add(acc, {(a,): c * C.epsilon[b]})
        return acc

    ident = lambda i: {(i,): C.field.one}
    return Report("coalgebra", [
        run_check("coassociativity", basis, left_assoc, right_assoc, fmt, label),
        run_check("counit_left", basis, counit_left, ident, fmt, label),
        run_check("counit_right", basis, counit_right, ident, fmt, label),
    ])


def coalgebra_of(base):
    return getattr(base, "coalgebra", base)


class Comodule:
    """Finite-dimensional comodule over ``base`` (a coalgebra or an algebra).

    ``coaction[v]`` lists ``(h, w, c)``: the coaction of basis vector v is
    ``sum c e_h (x) v_w`` for a left comodule and ``sum c v_w (x) e_h`` for
    a right one.  Terms are stored H-leg first regardless of side.
    """

    def __init__(self, base, side, dim, coaction, basis_names=None):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        C = coalgebra_of(base)
        if len(coaction) != dim:
            raise DimensionMismatch("coaction needs one entry per basis vector")
        self.base = base
        self.side = side
        self.dim = dim
        self.field = C.field
        self.basis_names = tuple(basis_names) if basis_names else tuple("v%d" % i for i in range(dim))
        rows = []
        for terms in coaction:
            acc = {}
            for h, w, c in terms:
                if not (0 <= h < C.dim and 0 <= w < dim):
                    raise DimensionMismatch("coaction term (%r, %r) out of range" % (h, w))
                sparse_add(acc, {(h, w): C.field(c)})
            rows.append(tuple(sorted(acc.items())))
        self.coaction = tuple(rows)
        self._memo = {}

    @property
    def coalgebra(self):
        return coalgebra_of(self.base)

    def name(self, i):
        return self.basis_names[i]

    def co(self, x, k=1):
        """Terms ``(coef, (h_1..h_k), w)``: the coaction followed by the
        (k-1)-fold coproduct on the H leg, for a basis index or sparse vector."""
        if type(x) is int:
            key = (x, k)
            hit = self._memo.get(key)
            if hit is not None:
                return hit
            x_items = ((x, self.field.one),)
        else:
            key = None
            x_items = x.items()
        C = self.coalgebra
        acc = {}
        for v, cv in x_items:
            for (h, w), c in self.coaction[v]:
                for d, hs in C.cop(h, k):
                    sparse_add(acc, {(hs, w): cv * c * d})
        out = tuple((c, hs, w) for (hs, w), c in sorted(acc.items()))
        if key is not None:
            self._memo[key] = out
        return out

    def coaction_matrix(self):
        """Matrix of V -> H(x)V (left) or V -> V(x)H (right), flattened row-major."""
        d = self.coalgebra.dim
        cols = []
        for v in range(self.dim):
            col = {}
            for (h, w), c in self.coaction[v]:
                r = h * self.dim + w if self.side == "left" else w * d + h
                sparse_add(col, {r: c})
            cols.append(col)
        return Matrix.from_columns(self.field, d * self.dim, cols)

    def __repr__(self):
        return "Comodule(%s, dim=%d)" % (self.side, self.dim)


def regular_comodule(base, side="left"):
    """H coacting on itself through its coproduct."""
    C = coalgebra_of(base)
    if side == "left":
        coaction = [[(a, b, c) for (a, b), c in C.delta[i]] for i in range(C.dim)]
    else:
        coaction = [[(b, a, c) for (a, b), c in C.delta[i]] for i in range(C.dim)]
    return Comodule(base, side, C.dim, coaction, C.basis_names)


def grouplike_comodule(base, g, side="left", dim=1):
    """``v -> g (x) v`` on a ``dim``-dimensional space."""
    return Comodule(base, side, dim, [[(g, v, 1)] for v in range(dim)])


def trivial_comodule(base, side="left", dim=1):
    """The unit comodule: ``v -> 1 (x) v`` (requires an algebra base)."""
    unit = base.unit
    return Comodule(base, side, dim, [[(h, v, c) for h, c in unit.items()] for v in range(dim)])


def check_comodule(M):
    """Coassociativity and counit property of the coaction."""
    C = M.coalgebra
    F = M.field
    basis = [(v,) for v in range(M.dim)]
    label = lambda t: (M.name(t[0]),)

    def key_name(k):
        hs, w = k
        return "(x)".join(C.name(h) for h in hs) + "|" + M.name(w)
    fmt = lambda v: fmt_sparse(F, key_name, v)

    def twice_coaction(v):
        acc = {}
        for (h, w), c in M.coaction[v]:
            for (h2, w2), d in M.coaction[w]:
                # left: h (x) h2 (x) w2 ; right: w2 (x) h2 (x) h
                hs = (h, h2) if M.side == "left" else (h2, h)
                sparse_add(acc, {(hs, w2): c * d})
        return acc

    def coproduct_leg(v):
        acc = {}
        for (h, w), c in M.coaction[v]:
            for (a, b), d in C.delta[h]:
                sparse_add(acc, {((a, b), w): c * d})
        return acc

    def counit(v):
        acc = {}
        for (h, w), c in M.coaction[v]:
            sparse_add(acc, {((), w): c * C.epsilon[h]})
        return acc

    ident = lambda v: {((), v): F.one}
    return Report("comodule", [
        run_check("comodule_coassociativity", basis, twice_coaction, coproduct_leg, fmt, label),
        run_check("comodule_counit", basis, counit, ident, fmt, label),
    ])


def tensor_comodule(M, N):
    """Diagonal coaction: m(x)n -> m_(-1) n_(-1) (x) m_(0)(x)n_(0) (left),
    m_(0)(x)n_(0) (x) m_(1) n_(1) (right).  Needs an algebra base."""
    if M.side != N.side:
        raise ValueError("cannot tensor a left and a right comodule")
    H = M.base
    coaction = []
    for i in range(M.dim):
        for j in range(N.dim):
            terms = {}
            for (h, w), c in M.coaction[i]:
                for (k, u), d in N.coaction[j]:
                    for p, e in H.m(h, k).items():
                        sparse_add(terms, {(p, w * N.dim + u): c * d * e})
            coaction.append([(p, wu, c) for (p, wu), c in terms.items()])
    names = [a + "*" + b for a in M.basis_names for b in N.basis_names]
    return Comodule(H, M.side, M.dim * N.dim, coaction, names)


def _triple_map(M, N, P, form):
    F = M.field
    dims = (M.dim, N.dim, P.dim)
    cols = []
    for i, j, k in product(*(range(d) for d in dims)):
        col = {}
        for (hm, wm), cm in M.coaction[i]:
            for (hn, wn), cn in N.coaction[j]:
                for (hp, wp), cp in P.coaction[k]:
                    v = form[hm, hn, hp]
                    if v:
                        sparse_add(col, {(wm * dims[1] + wn) * dims[2] + wp: cm * cn * cp * v})
        cols.append(col)
    return Matrix.from_columns(F, dims[0] * dims[1] * dims[2], cols)


def _same_base(*mods):
    b = mods[0].base
    for m in mods[1:]:
        if m.base is not b:
            raise DimensionMismatch("comodules live over different algebras")


def associator_left_comodules(M, N, P, sigma_inv=None, inverse=False):
    """a_{M,N,P}((m(x)n)(x)p) = sigma^{-1}(m_(-1), n_(-1), p_(-1)) m_(0)(x)n_(0)(x)p_(0).

    With ``inverse=True`` the inverse map (same formula with sigma) is returned.
    """
    _same_base(M, N, P)
    for X in (M, N, P):
        if X.side != "left":
            raise ValueError("left comodules required")
    H = M.base
    if inverse:
        form = H.sigma
    else:
        form = sigma_inv if sigma_inv is not None else H.sigma_inv
    return _triple_map(M, N, P, form)


def associator_right_comodules(M, N, P, sigma=None, inverse=False):
    """a_{M,N,P}((m(x)n)(x)p) = sigma(m_(1), n_(1), p_(1)) m_(0)(x)n_(0)(x)p_(0)."""
    _same_base(M, N, P)
    for X in (M, N, P):
        if X.side != "right":
            raise ValueError("right comodules required")
    H = M.base
    if inverse:
        form = H.sigma_inv
    else:
        form = sigma if sigma is not None else H.sigma
    return _triple_map(M, N, P, form)


def associator(M, N, P, inverse=False):
    if M.side == "left":
        return associator_left_comodules(M, N, P, inverse=inverse)
    return associator_right_comodules(M, N, P, inverse=inverse)


def check_pentagon(M, N, P, Q):
    """(M(x)a_{N,P,Q}) o a_{M,N(x)P,Q} o (a_{M,N,P}(x)Q) = a_{M,N,P(x)Q} o a_{M(x)N,P,Q}."""
    F = M.field
    I = lambda X: Matrix.identity(F, X.dim)
    NP, PQ, MN = tensor_comodule(N, P), tensor_comodule(P, Q), tensor_comodule(M, N)
    lhs = I(M).kron(associator(N, P, Q)) @ associator(M, NP, Q) @ associator(M, N, P).kron(I(Q))
    rhs = associator(M, N, PQ) @ associator(MN, P, Q)
    return lhs == rhs


def is_colinear(f, X, Y):
    """Whether the matrix f: X -> Y commutes with the coactions."""
    C = X.coalgebra
    IH = Matrix.identity(X.field, C.dim)
    if X.side == "left":
        return Y.coaction_matrix() @ f == IH.kron(f) @ X.coaction_matrix()
    return Y.coaction_matrix() @ f == f.kron(IH) @ X.coaction_matrix()


def sweep(C, *specs):
    """Sweedler enumeration over several arguments at once.

    ``sweep(C, (a, 3), (b, 2))`` yields ``(coef, (a1, a2, a3), (b1, b2))``
    for every term of ``Delta^(3)(a) (x) Delta^(2)(b)``.  Arguments may be
    basis indices or sparse vectors.
    """
    lists = [C.cop_vec(x, k) for x, k in specs]
    one = C.field.one
    for combo in product(*lists):
        coef = one
        for c, _ in combo:
            coef = coef * c
        yield (coef,) + tuple(t for _, t in combo)
