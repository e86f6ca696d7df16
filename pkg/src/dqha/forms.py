"""Multilinear forms on a finite-dimensional space and their convolution algebra.

A form of arity k on a d-dimensional space is stored densely as its d**k
values on basis tuples (row-major).  Evaluation on arbitrary vectors goes
through the multilinear extension, so there is exactly one code path for
every formula that feeds vectors into a form.

Convolution needs a coalgebra; anything exposing ``dim`` and
``cop(i, 2) -> [(coef, (j, k)), ...]`` works.
"""

from itertools import product

from .errors import ArityMismatch, DimensionMismatch, NonInvertible
from .linalg import Matrix, Vector, solve_many


class MultilinearForm:
    __slots__ = ("field", "dim", "arity", "values", "_strides")

    def __init__(self, field, dim, arity, values):
        values = tuple(field(v) for v in values)
        if len(values) != dim ** arity:
            raise DimensionMismatch("form of arity %d on dim %d needs %d values, got %d"
                                    % (arity, dim, dim ** arity, len(values)))
        self.field = field
        self.dim = dim
        self.arity = arity
        self.values = values
        self._strides = tuple(dim ** (arity - 1 - k) for k in range(arity))

    # --- construction ---------------------------------------------------
    @classmethod
    def from_function(cls, field, dim, arity, fn):
        """Tabulate ``fn(*basis_indices)`` on every basis tuple."""
        return cls(field, dim, arity, [fn(*idx) for idx in product(range(dim), repeat=arity)])

    @classmethod
    def from_entries(cls, field, dim, arity, entries, default):
        """Sparse construction: ``entries`` maps tuples to values, others use ``default(idx)``."""
        entries = {tuple(k): v for k, v in dict(entries).items()}
        for k in entries:
            if len(k) != arity or not all(0 <= i < dim for i in k):
                raise DimensionMismatch("bad index %r for arity %d, dim %d" % (k, arity, dim))
        return cls.from_function(field, dim, arity,
                                 lambda *idx: entries[idx] if idx in entries else default(idx))

    # --- access -----------------------------------------------------------
    def index(self, idx):
        return sum(i * s for i, s in zip(idx, self._strides))

    def __getitem__(self, idx):
        if isinstance(idx, int):
            idx = (idx,)
        if len(idx) != self.arity:
            raise ArityMismatch("form has arity %d, got %d indices" % (self.arity, len(idx)))
        return self.values[self.index(idx)]

    def items(self):
        return zip(product(range(self.dim), repeat=self.arity), self.values)

    def __call__(self, *args):
        """Evaluate on basis indices (ints), sparse dicts or :class:`Vector` s."""
        if len(args) != self.arity:
            raise ArityMismatch("form has arity %d, got %d arguments" % (self.arity, len(args)))
        if all(type(a) is int for a in args):
            return self.values[sum(i * s for i, s in zip(args, self._strides))]
        slots = []
        for a in args:
            if type(a) is int:
                slots.append(((a, None),))
            elif isinstance(a, Vector):
                if a.space_dim != self.dim:
                    raise DimensionMismatch("vector of dim %d fed to form on dim %d" % (a.space_dim, self.dim))
                slots.append(tuple((i, c) for i, c in enumerate(a.coords) if c))
            else:
                slots.append(tuple(a.items()))
        total = self.field.zero
        strides = self._strides
        vals = self.values
        for combo in product(*slots):
            coef = None
            flat = 0
            for (i, c), s in zip(combo, strides):
                flat += i * s
                if c is not None:
                    coef = c if coef is None else coef * c
            v = vals[flat]
            if v:
                total = total + (v if coef is None else v * coef)
        return total

    # --- algebra ------------------------------------------------------------
    def permuted(self, perm):
        """Form ``(x_0..x_{k-1}) -> self(x_perm[0], ..., x_perm[k-1])``."""
        if sorted(perm) != list(range(self.arity)):
            raise ArityMismatch("bad permutation %r" % (perm,))
        return MultilinearForm.from_function(
            self.field, self.dim, self.arity,
            lambda *idx: self[tuple(idx[p] for p in perm)])

    def pullback(self, maps):
        """Precompose slot ``i`` with the matrix ``maps[i]`` (None = identity)."""
        if len(maps) != self.arity:
            raise ArityMismatch("need one map per slot")
        cols = [None if m is None else [m.column(j) for j in range(m.ncols)] for m in maps]

        def fn(*idx):
            return self(*(i if c is None else c[i] for i, c in zip(idx, cols)))
        return MultilinearForm.from_function(self.field, self.dim, self.arity, fn)

    def scale(self, c):
        return MultilinearForm(self.field, self.dim, self.arity, [c * v for v in self.values])

    def __eq__(self, other):
        if not isinstance(other, MultilinearForm):
            return NotImplemented
        return (self.dim, self.arity) == (other.dim, other.arity) and self.values == other.values

    def __hash__(self):
        return hash((self.dim, self.arity, self.values))

    def differences(self, other):
        """Basis tuples where the two forms disagree."""
        return [idx for (idx, a), b in zip(self.items(), other.values) if a != b]

    def __repr__(self):
        return "MultilinearForm(arity=%d, dim=%d, %s)" % (
            self.arity, self.dim, [str(v) for v in self.values])


def evaluate_form(f, args):
    """Evaluate ``f`` on a sequence of :class:`Vector` arguments."""
    args = list(args)
    if len(args) != f.arity:
        raise ArityMismatch("form has arity %d, got %d arguments" % (f.arity, len(args)))
    for a in args:
        if len(a.coords) != f.dim:
            raise DimensionMismatch("vector of dim %d fed to form on dim %d" % (len(a.coords), f.dim))
    return f(*args)


def counit_power(C, k):
    """The convolution unit of arity k: eps x ... x eps."""
    eps = C.epsilon

    def fn(*idx):
        v = C.field.one
        for i in idx:
            v = v * eps[i]
        return v
    return MultilinearForm.from_function(C.field, C.dim, k, fn)


def _check_pair(f, g, C):
    if f.arity != g.arity:
        raise ArityMismatch("convolving forms of arity %d and %d" % (f.arity, g.arity))
    if f.dim != C.dim or g.dim != C.dim:
        raise DimensionMismatch("form dimension does not match the coalgebra")


def convolution_product(f, g, C):
    """(f*g)(x_1..x_k) = f(x_1(1),..,x_k(1)) g(x_1(2),..,x_k(2)), slotwise coproduct."""
    _check_pair(f, g, C)
    fv, gv = f, g
    z = C.field.zero

    def fn(*idx):
        total = z
        for combo in product(*(C.cop(i, 2) for i in idx)):
            coef = C.field.one
            left, right = [], []
            for c, (a, b) in combo:
                coef = coef * c
                left.append(a)
                right.append(b)
            x = fv.values[fv.index(left)]
            if x:
                y = gv.values[gv.index(right)]
                if y:
                    total = total + coef * x * y
        return total
    return MultilinearForm.from_function(C.field, C.dim, f.arity, fn)


def left_multiplication_matrix(f, C):
    """Matrix of ``g -> f*g`` acting on the d**k values of g."""
    d, k = C.dim, f.arity
    n = d ** k
    strides = tuple(d ** (k - 1 - j) for j in range(k))
    rows = [[C.field.zero] * n for _ in range(n)]
    for t, idx in enumerate(product(range(d), repeat=k)):
        row = rows[t]
        for combo in product(*(C.cop(i, 2) for i in idx)):
            coef = C.field.one
            fl = 0
            u = 0
            for (c, (a, b)), s in zip(combo, strides):
                coef = coef * c
                fl += a * s
                u += b * s
            x = f.values[fl]
            if x:
                row[u] = row[u] + coef * x
    return Matrix(C.field, rows, n)


def convolution_inverse(f, C):
    """Two-sided convolution inverse of ``f``, by solving f*x = eps^k exactly.

    Raises :class:`NonInvertible` when no two-sided inverse exists.
    """
    if f.dim != C.dim:
        raise DimensionMismatch("form dimension does not match the coalgebra")
    unit = counit_power(C, f.arity)
    L = left_multiplication_matrix(f, C)
    B = Matrix(C.field, [[v] for v in unit.values], 1)
    X = solve_many(L, B)
    if X is None:
        raise NonInvertible("form has no convolution inverse")
    inv = MultilinearForm(C.field, C.dim, f.arity, [r[0] for r in X.rows])
    if convolution_product(f, inv, C) != unit or convolution_product(inv, f, C) != unit:
        raise NonInvertible("form has only a one-sided convolution inverse")
    return inv
