"""Dual quasi-bialgebras and dual quasi-Hopf algebras given by structure constants.

The multiplication is a coalgebra map but only associative up to the
reassociator ``sigma``, an invertible element of the convolution algebra
``(H (x) H (x) H)^*``.  Everything here is exact; axiom checks run on every
basis tuple.
"""

from dataclasses import dataclass
from itertools import product

from .coalgebra import Coalgebra, sweep
from .errors import AntipodeNotInvertible, DimensionMismatch, NonInvertible, NotNormalized, ValidationFailed
from .forms import MultilinearForm, convolution_inverse, convolution_product, counit_power
from .linalg import Matrix, sparse_add, sparse_clean
from .report import Report, fmt_sparse, run_check, single_check


def _mul_table(field, dim, mul):
    """Normalize ``mul`` into ``table[i][j] -> sparse dict``.

    Accepts a list of ``(i, j, k, c)`` meaning ``e_i e_j += c e_k`` or a
    nested table of sparse dicts.
    """
    table = [[{} for _ in range(dim)] for _ in range(dim)]
    if isinstance(mul, (list, tuple)) and mul and isinstance(mul[0], (list, tuple)) and mul[0] and isinstance(mul[0][0], dict):
        for i in range(dim):
            for j in range(dim):
                table[i][j] = sparse_clean({k: field(c) for k, c in mul[i][j].items()})
        return table
    for i, j, k, c in mul:
        if not all(0 <= x < dim for x in (i, j, k)):
            raise DimensionMismatch("multiplication entry (%r, %r, %r) out of range" % (i, j, k))
        sparse_add(table[i][j], {k: field(c)})
    return table


class DualQuasiBialgebra:
    def __init__(self, coalgebra, mul, unit, sigma, sigma_inv=None, name=None):
        C = coalgebra
        F = C.field
        self.coalgebra = C
        self.field = F
        self.dim = C.dim
        self.name = name or "H"
        self._mul = _mul_table(F, C.dim, mul)
        self.unit = sparse_clean({i: F(c) for i, c in dict(unit).items()})
        if sigma.arity != 3 or sigma.dim != C.dim:
            raise DimensionMismatch("reassociator must be a trilinear form on H")
        self.sigma = sigma
        if sigma_inv is None:
            sigma_inv = convolution_inverse(sigma, C)
        else:
            unit3 = counit_power(C, 3)
            if (convolution_product(sigma, sigma_inv, C) != unit3
                    or convolution_product(sigma_inv, sigma, C) != unit3):
                raise ValidationFailed("supplied sigma_inv is not the convolution inverse of sigma")
        self.sigma_inv = sigma_inv
        self._one_cache = None

    @property
    def basis_names(self):
        return self.coalgebra.basis_names

    def basis_name(self, i):
        return self.coalgebra.basis_names[i]

    def mul_table(self):
        return self._mul

    def m(self, x, y):
        """Product of two elements (basis indices or sparse vectors)."""
        if type(x) is int and type(y) is int:
            return self._mul[x][y]
        xs = ((x, None),) if type(x) is int else x.items()
        ys = ((y, None),) if type(y) is int else y.items()
        out = {}
        for i, a in xs:
            row = self._mul[i]
            for j, b in ys:
                c = a if b is None else (b if a is None else a * b)
                sparse_add(out, row[j], c)
        return out

    def eps(self, x):
        return self.coalgebra.counit(x)

    def sw(self, *specs):
        return sweep(self.coalgebra, *specs)

    def fmt(self, v):
        if isinstance(v, tuple):
            return "(" + ", ".join(self.fmt(x) for x in v) + ")"
        if isinstance(v, dict):
            return fmt_sparse(self.field, self.coalgebra.basis_names, v)
        return self.field.format(v)

    def label(self, t):
        return tuple(self.basis_name(i) for i in t)


class DualQuasiHopfAlgebra(DualQuasiBialgebra):
    """Adds the antipode ``s`` (a matrix) and the functionals ``alpha``, ``beta``.

    ``s_inv`` is computed by matrix inversion when not supplied; it stays
    ``None`` for a singular antipode and the features that need it refuse to
    run.
    """

    def __init__(self, coalgebra, mul, unit, sigma, s, alpha, beta, sigma_inv=None, s_inv=None,
                 name=None, group=None):
        super().__init__(coalgebra, mul, unit, sigma, sigma_inv, name)
        d = self.dim
        if s.shape != (d, d):
            raise DimensionMismatch("antipode must be a %dx%d matrix" % (d, d))
        for form, label in ((alpha, "alpha"), (beta, "beta")):
            if form.arity != 1 or form.dim != d:
                raise DimensionMismatch("%s must be a linear form on H" % label)
        self.s = s
        if s_inv is None:
            try:
                s_inv = s.inverse()
            except NonInvertible:
                s_inv = None
        elif not (s @ s_inv).is_identity() or not (s_inv @ s).is_identity():
            raise ValidationFailed("supplied s_inv is not the inverse of s")
        self.s_inv = s_inv
        self.alpha = alpha
        self.beta = beta
        self.group = group
        self._s_cols = tuple(s.column(j) for j in range(d))
        self._sinv_cols = None if s_inv is None else tuple(s_inv.column(j) for j in range(d))

    @property
    def has_bijective_antipode(self):
        return self.s_inv is not None

    def require_bijective(self, what="this construction"):
        if self.s_inv is None:
            raise AntipodeNotInvertible("%s needs a bijective antipode" % what)

    def S(self, x):
        if type(x) is int:
            return self._s_cols[x]
        out = {}
        for i, c in x.items():
            sparse_add(out, self._s_cols[i], c)
        return out

    def Sinv(self, x):
        if self._sinv_cols is None:
            raise AntipodeNotInvertible("antipode is singular")
        if type(x) is int:
            return self._sinv_cols[x]
        out = {}
        for i, c in x.items():
            sparse_add(out, self._sinv_cols[i], c)
        return out

    def replace(self, **changes):
        """Copy with some components swapped out (sigma_inv recomputed unless given)."""
        kw = dict(coalgebra=self.coalgebra, mul=self._mul, unit=self.unit, sigma=self.sigma,
                  s=self.s, alpha=self.alpha, beta=self.beta, sigma_inv=self.sigma_inv,
                  s_inv=self.s_inv, name=self.name, group=self.group)
        if "sigma" in changes and "sigma_inv" not in changes:
            kw["sigma_inv"] = None
        if "s" in changes and "s_inv" not in changes:
            kw["s_inv"] = None
        kw.update(changes)
        return DualQuasiHopfAlgebra(**kw)

    def __repr__(self):
        return "DualQuasiHopfAlgebra(%s, dim=%d, field=%s)" % (self.name, self.dim, self.field.key)


def components_equal(H, K):
    """Componentwise equality of two algebras on the same basis."""
    if H.dim != K.dim or H.field != K.field:
        return False
    C, D = H.coalgebra, K.coalgebra
    return (C.delta == D.delta and C.epsilon == D.epsilon
            and all(sparse_clean(H.m(i, j)) == sparse_clean(K.m(i, j))
                    for i in range(H.dim) for j in range(H.dim))
            and sparse_clean(H.unit) == sparse_clean(K.unit)
            and H.sigma == K.sigma and H.sigma_inv == K.sigma_inv
            and H.s == K.s and H.alpha == K.alpha and H.beta == K.beta)


# --- axiom checker ----------------------------------------------------------

def check_bialgebra_axioms(H):
    """Quasi-associativity, unit, cocycle and normalization conditions, and
    the coalgebra-map conditions on the multiplication and unit."""
    F = H.field
    d = H.dim
    B1 = [(a,) for a in range(d)]
    B2 = list(product(range(d), repeat=2))
    B3 = list(product(range(d), repeat=3))
    B4 = list(product(range(d), repeat=4))
    one = H.unit
    sig, sig_inv, m, eps = H.sigma, H.sigma_inv, H.m, H.eps
    checks = []

    def qa_lhs(a, b, c):
        out = {}
        for k, (a1, a2), (b1, b2), (c1, c2) in H.sw((a, 2), (b, 2), (c, 2)):
            v = sig(a2, b2, c2)
            if v:
                sparse_add(out, m(a1, m(b1, c1)), k * v)
        return out

    def qa_rhs(a, b, c):
        out = {}
        for k, (a1, a2), (b1, b2), (c1, c2) in H.sw((a, 2), (b, 2), (c, 2)):
            v = sig(a1, b1, c1)
            if v:
                sparse_add(out, m(m(a2, b2), c2), k * v)
        return out

    checks.append(run_check("quasi_associativity", B3, qa_lhs, qa_rhs, H.fmt, H.label))
    checks.append(run_check("unit", B1, lambda a: (m(one, a), m(a, one)),
                            lambda a: ({a: F.one}, {a: F.one}), H.fmt, H.label))

    def cocycle_lhs(a, b, c, e):
        total = F.zero
        for k, (a1, a2), (b1, b2), (c1, c2), (e1, e2) in H.sw((a, 2), (b, 2), (c, 2), (e, 2)):
            x = sig(a1, b1, m(c1, e1))
            if x:
                total += k * x * sig(m(a2, b2), c2, e2)
        return total

    def cocycle_rhs(a, b, c, e):
        total = F.zero
        for k, (a1, a2), (b1, b2, b3), (c1, c2, c3), (e1, e2) in H.sw((a, 2), (b, 3), (c, 3), (e, 2)):
            x = sig(b1, c1, e1)
            if x:
                y = sig(a1, m(b2, c2), e2)
                if y:
                    total += k * x * y * sig(a2, b3, c3)
        return total

    checks.append(run_check("reassociator_cocycle", B4, cocycle_lhs, cocycle_rhs, H.fmt, H.label))
    checks.append(run_check("reassociator_normalized_middle", B2,
                            lambda a, b: sig(a, one, b), lambda a, b: eps(a) * eps(b), H.fmt, H.label))
    checks.append(run_check("reassociator_normalized_outer", B2,
                            lambda a, b: (sig(one, a, b), sig(a, b, one)),
                            lambda a, b: (eps(a) * eps(b),) * 2, H.fmt, H.label))

    C = H.coalgebra

    def delta_of(x):
        out = {}
        for c, t in C.cop_vec(x, 2):
            sparse_add(out, {t: c})
        return out

    def delta_prod(a, b):
        out = {}
        for k, (a1, a2), (b1, b2) in H.sw((a, 2), (b, 2)):
            for i, x in m(a1, b1).items():
                for j, y in m(a2, b2).items():
                    sparse_add(out, {(i, j): k * x * y})
        return out

    pair_fmt = lambda v: fmt_sparse(F, lambda t: "(x)".join(H.basis_name(i) for i in t), v) \
        if isinstance(v, dict) else F.format(v)
    checks.append(run_check("multiplication_comultiplicative", B2,
                            lambda a, b: delta_of(m(a, b)), delta_prod, pair_fmt, H.label))
    checks.append(run_check("multiplication_counital", B2,
                            lambda a, b: eps(m(a, b)), lambda a, b: eps(a) * eps(b), H.fmt, H.label))
    unit_cop = {}
    for i, x in one.items():
        for j, y in one.items():
            unit_cop[(i, j)] = x * y
    checks.append(run_check("unit_grouplike", [()],
                            lambda: (delta_of(one), eps(one)),
                            lambda: (sparse_clean(unit_cop), F.one),
                            lambda v: "(" + pair_fmt(v[0]) + ", " + F.format(v[1]) + ")"))
    unit3 = counit_power(C, 3)
    inv_ok = (convolution_product(sig, sig_inv, C) == unit3
              and convolution_product(sig_inv, sig, C) == unit3)
    checks.append(single_check("reassociator_inverse", inv_ok))
    return checks


def check_dqha_axioms(H):
    """Every defining axiom and derived consequence, on all basis tuples.

    Returns a :class:`~dqha.report.Report`; nothing is raised for failures.
    """
    F = H.field
    d = H.dim
    B1 = [(a,) for a in range(d)]
    one = H.unit
    sig, sig_inv, m, S = H.sigma, H.sigma_inv, H.m, H.S
    alpha, beta = H.alpha, H.beta
    report = Report("dual quasi-Hopf axioms: %s" % H.name, check_bialgebra_axioms(H))

    def ab_lhs(h):
        left, right = {}, {}
        for k, (h1, h2, h3) in H.sw((h, 3)):
            x = alpha(h2)
            if x:
                sparse_add(left, m(S(h1), h3), k * x)
            y = beta(h2)
            if y:
                sparse_add(right, m(h1, S(h3)), k * y)
        return left, right

    def ab_rhs(h):
        return ({i: c * alpha(h) for i, c in one.items()}, {i: c * beta(h) for i, c in one.items()})

    report.add(run_check("antipode_alpha_beta", B1, ab_lhs, ab_rhs, H.fmt, H.label))

    def ar_lhs(h):
        x = y = F.zero
        for k, (h1, h2, h3, h4, h5) in H.sw((h, 5)):
            p = beta(h2) * alpha(h4)
            if p:
                x += k * p * sig(h1, S(h3), h5)
            q = alpha(h2) * beta(h4)
            if q:
                y += k * q * sig_inv(S(h1), h3, S(h5))
        return x, y

    report.add(run_check("antipode_reassociator", B1, ar_lhs,
                         lambda h: (H.eps(h), H.eps(h)), H.fmt, H.label))

    C = H.coalgebra

    def delta_S(h):
        out = {}
        for c, t in C.cop_vec(S(h), 2):
            sparse_add(out, {t: c})
        return out

    def S_delta(h):
        out = {}
        for k, (h1, h2) in H.sw((h, 2)):
            for i, x in S(h2).items():
                for j, y in S(h1).items():
                    sparse_add(out, {(i, j): k * x * y})
        return out

    pair_fmt = lambda v: fmt_sparse(F, lambda t: "(x)".join(H.basis_name(i) for i in t), v)
    report.add(run_check("antipode_anticomultiplicative", B1, delta_S, S_delta, pair_fmt, H.label))
    report.add(run_check("antipode_counital", B1, lambda h: H.eps(S(h)), lambda h: H.eps(h), H.fmt, H.label))
    report.add(run_check("antipode_unit", [()], lambda: S(one), lambda: one, H.fmt))
    report.add(run_check("alpha_beta_unit", [()], lambda: alpha(one) * beta(one), lambda: F.one, H.fmt))
    if H.s_inv is not None:
        report.add(single_check("antipode_inverse", (H.s @ H.s_inv).is_identity() and (H.s_inv @ H.s).is_identity()))
    return report


# --- variants and twists -----------------------------------------------------

def _opposite_mul(H):
    d = H.dim
    return [[H.m(j, i) for j in range(d)] for i in range(d)]


def build_variant(H, which):
    """H^op, H^cop or H^{op,cop}.

    cop: Delta^cop, sigma^{-1}, s^{-1}, alpha = beta s^{-1}, beta = alpha s^{-1};
    op: opposite product, (sigma^{-1})^{321}, s^{-1}, alpha s^{-1}, beta s^{-1};
    opcop: both, sigma^{321}, s, alpha and beta exchanged.
    """
    H.require_bijective("build_variant")
    si = H.s_inv
    if which == "cop":
        return DualQuasiHopfAlgebra(
            H.coalgebra.coopposite(), H.mul_table(), H.unit, H.sigma_inv, si,
            H.beta.pullback([si]), H.alpha.pullback([si]),
            sigma_inv=H.sigma, s_inv=H.s, name=H.name + "^cop", group=H.group)
    if which == "op":
        return DualQuasiHopfAlgebra(
            H.coalgebra, _opposite_mul(H), H.unit, H.sigma_inv.permuted((2, 1, 0)), si,
            H.alpha.pullback([si]), H.beta.pullback([si]),
            sigma_inv=H.sigma.permuted((2, 1, 0)), s_inv=H.s, name=H.name + "^op", group=H.group)
    if which == "opcop":
        return DualQuasiHopfAlgebra(
            H.coalgebra.coopposite(), _opposite_mul(H), H.unit, H.sigma.permuted((2, 1, 0)), H.s,
            H.beta, H.alpha, sigma_inv=H.sigma_inv.permuted((2, 1, 0)), s_inv=si,
            name=H.name + "^opcop", group=H.group)
    raise ValueError("variant must be one of op, cop, opcop; got %r" % (which,))


def is_normalized(H, F):
    """F(1, a) = F(a, 1) = eps(a) for every basis element a."""
    return all(F(H.unit, a) == H.eps(a) and F(a, H.unit) == H.eps(a) for a in range(H.dim))


def twisted_reassociator(H, F, F_inv):
    """sigma_F(a,b,c) = F(b1,c1) F(a1,b2c2) sigma(a2,b3,c3) F^-1(a3b4,c4) F^-1(a4,b5)."""
    sig, m = H.sigma, H.m

    def fn(a, b, c):
        total = H.field.zero
        for k, (a1, a2, a3, a4), (b1, b2, b3, b4, b5), (c1, c2, c3, c4) in H.sw((a, 4), (b, 5), (c, 4)):
            x = F(b1, c1)
            if not x:
                continue
            x = x * F(a1, m(b2, c2))
            if not x:
                continue
            x = x * sig(a2, b3, c3)
            if not x:
                continue
            x = x * F_inv(m(a3, b4), c4)
            if x:
                total += k * x * F_inv(a4, b5)
        return total
    return MultilinearForm.from_function(H.field, H.dim, 3, fn)


def twist(H, F):
    """Gauge transformation of H by a normalized invertible bilinear form F.

    Product ``a.b = F(a1,b1) a2 b2 F^-1(a3,b3)`` and the reassociator above;
    alpha and beta follow the same gauge (``alpha_F(h) = F^-1(s(h1),h3) alpha(h2)``,
    ``beta_F(h) = F(h1,s(h3)) beta(h2)``) so the result is again a dual
    quasi-Hopf algebra with the same antipode.
    """
    if F.arity != 2 or F.dim != H.dim:
        raise DimensionMismatch("twist must be a bilinear form on H")
    if not is_normalized(H, F):
        raise NotNormalized("twist is not normalized: F(1,a) = F(a,1) = eps(a) fails")
    F_inv = convolution_inverse(F, H.coalgebra)
    d = H.dim
    m, S = H.m, H.S
    mul = [[{} for _ in range(d)] for _ in range(d)]
    for a in range(d):
        for b in range(d):
            out = mul[a][b]
            for k, (a1, a2, a3), (b1, b2, b3) in H.sw((a, 3), (b, 3)):
                x = F(a1, b1) * F_inv(a3, b3)
                if x:
                    sparse_add(out, m(a2, b2), k * x)
    sigma_F = twisted_reassociator(H, F, F_inv)

    def alpha_F(h):
        total = H.field.zero
        for k, (h1, h2, h3) in H.sw((h, 3)):
            x = H.alpha(h2)
            if x:
                total += k * x * F_inv(S(h1), h3)
        return total

    def beta_F(h):
        total = H.field.zero
        for k, (h1, h2, h3) in H.sw((h, 3)):
            x = H.beta(h2)
            if x:
                total += k * x * F(h1, S(h3))
        return total

    return DualQuasiHopfAlgebra(
        H.coalgebra, mul, H.unit, sigma_F, H.s,
        MultilinearForm.from_function(H.field, d, 1, alpha_F),
        MultilinearForm.from_function(H.field, d, 1, beta_F),
        s_inv=H.s_inv, name=H.name + "^F", group=H.group)


# --- the twist pair f, g -----------------------------------------------------

@dataclass
class TwistPair:
    f: MultilinearForm
    g: MultilinearForm
    lam: MultilinearForm
    chi: MultilinearForm
    report: Report

    @property
    def lambda_(self):
        return self.lam


def nu_form(H):
    """nu(a,b,c,d) = sigma(a1,b1,c1) sigma^-1(a2b2,c2,d)."""
    sig, sig_inv, m = H.sigma, H.sigma_inv, H.m

    def fn(a, b, c, e):
        total = H.field.zero
        for k, (a1, a2), (b1, b2), (c1, c2) in H.sw((a, 2), (b, 2), (c, 2)):
            x = sig(a1, b1, c1)
            if x:
                total += k * x * sig_inv(m(a2, b2), c2, e)
        return total
    return MultilinearForm.from_function(H.field, H.dim, 4, fn)


def mu_form(H):
    """mu(a,b,c,d) = sigma(a1b1,c1,d) sigma^-1(a2,b2,c2)."""
    sig, sig_inv, m = H.sigma, H.sigma_inv, H.m

    def fn(a, b, c, e):
        total = H.field.zero
        for k, (a1, a2), (b1, b2), (c1, c2) in H.sw((a, 2), (b, 2), (c, 2)):
            x = sig_inv(a2, b2, c2)
            if x:
                total += k * x * sig(m(a1, b1), c1, e)
        return total
    return MultilinearForm.from_function(H.field, H.dim, 4, fn)


def lambda_form(H, nu=None):
    """lambda(a,b) = nu(s(b1), s(a1), a3, b3) alpha(a2) alpha(b2)."""
    nu = nu or nu_form(H)
    S, alpha = H.S, H.alpha

    def fn(a, b):
        total = H.field.zero
        for k, (a1, a2, a3), (b1, b2, b3) in H.sw((a, 3), (b, 3)):
            x = alpha(a2) * alpha(b2)
            if x:
                total += k * x * nu(S(b1), S(a1), a3, b3)
        return total
    return MultilinearForm.from_function(H.field, H.dim, 2, fn)


def chi_form(H, mu=None):
    """chi(a,b) = mu(a1, b1, s(b3), s(a3)) beta(a2) beta(b2)."""
    mu = mu or mu_form(H)
    S, beta = H.S, H.beta

    def fn(a, b):
        total = H.field.zero
        for k, (a1, a2, a3), (b1, b2, b3) in H.sw((a, 3), (b, 3)):
            x = beta(a2) * beta(b2)
            if x:
                total += k * x * mu(a1, b1, S(b3), S(a3))
        return total
    return MultilinearForm.from_function(H.field, H.dim, 2, fn)


def f_form(H, lam):
    """f(a,b) = sigma^-1(s(b1)s(a1), a3b3, s(a5b5)) lambda(a2,b2) beta(a4b4)."""
    sig_inv, m, S, beta = H.sigma_inv, H.m, H.S, H.beta

    def fn(a, b):
        total = H.field.zero
        for k, (a1, a2, a3, a4, a5), (b1, b2, b3, b4, b5) in H.sw((a, 5), (b, 5)):
            x = lam(a2, b2)
            if not x:
                continue
            x = x * beta(m(a4, b4))
            if x:
                total += k * x * sig_inv(m(S(b1), S(a1)), m(a3, b3), S(m(a5, b5)))
        return total
    return MultilinearForm.from_function(H.field, H.dim, 2, fn)


def g_form(H, chi):
    """g(a,b) = sigma^-1(s(a1b1), a3b3, s(b5)s(a5)) chi(a4,b4) alpha(a2b2)."""
    sig_inv, m, S, alpha = H.sigma_inv, H.m, H.S, H.alpha

    def fn(a, b):
        total = H.field.zero
        for k, (a1, a2, a3, a4, a5), (b1, b2, b3, b4, b5) in H.sw((a, 5), (b, 5)):
            x = chi(a4, b4)
            if not x:
                continue
            x = x * alpha(m(a2, b2))
            if x:
                total += k * x * sig_inv(S(m(a1, b1)), m(a3, b3), m(S(b5), S(a5)))
        return total
    return MultilinearForm.from_function(H.field, H.dim, 2, fn)


def check_twist_pair(H, f, g, lam, chi):
    F = H.field
    d = H.dim
    C = H.coalgebra
    B2 = list(product(range(d), repeat=2))
    B3 = list(product(range(d), repeat=3))
    m, S, alpha, beta = H.m, H.S, H.alpha, H.beta
    report = Report("twist pair: %s" % H.name)

    unit2 = counit_power(C, 2)
    fg, gf = convolution_product(f, g, C), convolution_product(g, f, C)
    report.add(run_check("twist_inverse", B2, lambda a, b: (fg[a, b], gf[a, b]),
                         lambda a, b: (unit2[a, b], unit2[a, b]), H.fmt, H.label))

    def lam_lhs(a, b):
        total = F.zero
        for k, (a1, a2), (b1, b2) in H.sw((a, 2), (b, 2)):
            total += k * f(a1, b1) * alpha(m(a2, b2))
        return total

    def chi_lhs(a, b):
        total = F.zero
        for k, (a1, a2), (b1, b2) in H.sw((a, 2), (b, 2)):
            total += k * beta(m(a1, b1)) * g(a2, b2)
        return total

    report.add(run_check("twist_lambda_chi", B2,
                         lambda a, b: (lam_lhs(a, b), chi_lhs(a, b)),
                         lambda a, b: (lam(a, b), chi(a, b)), H.fmt, H.label))

    def anti_lhs(a, b):
        out = {}
        for k, (a1, a2, a3), (b1, b2, b3) in H.sw((a, 3), (b, 3)):
            x = f(a1, b1) * g(a3, b3)
            if x:
                sparse_add(out, S(m(a2, b2)), k * x)
        return out

    report.add(run_check("antipode_twisted_antimultiplicative", B2, anti_lhs,
                         lambda a, b: m(S(b), S(a)), H.fmt, H.label))

    try:
        f_inv = convolution_inverse(f, C)
    except NonInvertible:
        report.add(single_check("twisted_reassociator", False, note="f is not convolution invertible"))
        return report
    sigma_f = twisted_reassociator(H, f, f_inv)
    sig = H.sigma
    report.add(run_check("twisted_reassociator", B3, lambda a, b, c: sigma_f[a, b, c],
                         lambda a, b, c: sig(S(c), S(b), S(a)), H.fmt, H.label))
    return report


def derive_twist_pair(H, strict=True):
    """Compute nu, mu, lambda, chi and from them f and g; validate.

    With ``strict`` a failed validation raises :class:`ValidationFailed`;
    otherwise the report travels with the result.
    """
    lam = lambda_form(H)
    chi = chi_form(H)
    f = f_form(H, lam)
    g = g_form(H, chi)
    report = check_twist_pair(H, f, g, lam, chi)
    if strict and not report.passed:
        raise ValidationFailed("twist pair identities fail for %s: %s" % (H.name, report.failed_names()), report)
    return TwistPair(f, g, lam, chi, report)
