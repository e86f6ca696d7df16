"""Dense exact linear algebra over a :class:`~dqha.fields.ScalarField`.

Elements of spaces are handled in two shapes.  The public :class:`Vector`
holds a dense coordinate tuple.  Internally most code passes *sparse*
vectors: plain ``dict`` objects mapping a basis index to a nonzero
coefficient.  The helpers ``sparse_*`` below operate on those.
"""

from dataclasses import dataclass

from .errors import NoSolution, NonInvertible, ShapeMismatch


# --- sparse vectors -------------------------------------------------------

def sparse_add(acc, vec, coef=None):
    """acc += coef * vec, in place; drops zeros.  Returns acc."""
    for k, v in vec.items():
        if coef is not None:
            v = v * coef
        if not v:
            continue
        w = acc.get(k)
        if w is None:
            acc[k] = v
        else:
            w = w + v
            if w:
                acc[k] = w
            else:
                del acc[k]
    return acc


def sparse_scale(vec, coef):
    if not coef:
        return {}
    return {k: v * coef for k, v in vec.items() if v * coef}


def sparse_clean(vec):
    return {k: v for k, v in vec.items() if v}


def sparse_eq(x, y):
    return sparse_clean(x) == sparse_clean(y)


def dense(vec, dim, field):
    z = field.zero
    return tuple(vec.get(i, z) for i in range(dim))


def from_dense(coords):
    return {i: c for i, c in enumerate(coords) if c}


@dataclass(frozen=True)
class Vector:
    """Element of ``field^space_dim`` with explicit coordinates."""

    field: object
    coords: tuple

    @property
    def space_dim(self):
        return len(self.coords)

    @classmethod
    def basis(cls, field, dim, i):
        return cls(field, tuple(field.one if j == i else field.zero for j in range(dim)))

    @classmethod
    def zeros(cls, field, dim):
        return cls(field, (field.zero,) * dim)

    def sparse(self):
        return from_dense(self.coords)

    def __add__(self, other):
        if self.space_dim != other.space_dim:
            raise ShapeMismatch("adding vectors of dimension %d and %d" % (self.space_dim, other.space_dim))
        return Vector(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, c):
        return Vector(self.field, tuple(c * a for a in self.coords))

    def __getitem__(self, i):
        return self.coords[i]


# --- matrices ---------------------------------------------------------------

class Matrix:
    """Immutable dense matrix; ``rows[i][j]`` is the entry in row i, column j.

    A matrix represents the linear map sending basis vector ``e_j`` of the
    domain to column ``j``.
    """

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ShapeMismatch("ragged matrix rows")

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, field, nrows, columns):
        """Build from a list of sparse column vectors (dict index -> value)."""
        z = field.zero
        rows = [[z] * len(columns) for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                if not 0 <= i < nrows:
                    raise ShapeMismatch("column entry %d outside %d rows" % (i, nrows))
                rows[i][j] = v
        return cls(field, rows, len(columns))

    def column(self, j):
        """Sparse column ``j``."""
        return {i: r[j] for i, r in enumerate(self.rows) if r[j]}

    def apply(self, x):
        """Image of a sparse vector (or a :class:`Vector`)."""
        if isinstance(x, Vector):
            x = x.sparse()
        out = {}
        for j, c in x.items():
            for i, r in enumerate(self.rows):
                v = r[j]
                if v:
                    sparse_add(out, {i: v}, c)
        return out

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ShapeMismatch("cannot compose %s with %s" % (self.shape, other.shape))
        z = self.field.zero
        n = other.ncols
        # row i of the product is sum_k a_ik (row k of other); skip zeros on both sides
        other_nz = [[(j, b) for j, b in enumerate(r) if b] for r in other.rows]
        out = []
        for r in self.rows:
            row = [z] * n
            for k, a in enumerate(r):
                if a:
                    for j, b in other_nz[k]:
                        row[j] = row[j] + a * b
            out.append(row)
        return Matrix(self.field, out, n)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch("adding %s and %s" % (self.shape, other.shape))
        return Matrix(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch("subtracting %s and %s" % (self.shape, other.shape))
        return Matrix(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c):
        return Matrix(self.field, [[c * a for a in r] for r in self.rows], self.ncols)

    def transpose(self):
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [], self.nrows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(self.rows)

    def is_identity(self):
        return self.nrows == self.ncols and self == Matrix.identity(self.field, self.nrows)

    def kron(self, other):
        rows = []
        for r in self.rows:
            for s in other.rows:
                rows.append([a * b for a in r for b in s])
        return Matrix(self.field, rows, self.ncols * other.ncols)

    def inverse(self):
        if self.nrows != self.ncols:
            raise ShapeMismatch("only square matrices are invertible")
        n = self.nrows
        cols = solve_many(self, Matrix.identity(self.field, n))
        if cols is None:
            raise NonInvertible("matrix is singular")
        return cols

    def rank(self):
        return len(_row_reduce([list(r) for r in self.rows], self.ncols)[1])

    def __repr__(self):
        return "Matrix(%s)" % ([[str(a) for a in r] for r in self.rows],)


def _row_reduce(rows, ncols):
    """Gauss-Jordan elimination in place; returns (rows, pivot_columns)."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        pr = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def solve_many(A, B):
    """Solve A X = B for X exactly; returns None when some column has no solution.

    Free variables are set to zero, so the result is one particular solution.
    """
    if A.nrows != B.nrows:
        raise ShapeMismatch("A has %d rows, B has %d" % (A.nrows, B.nrows))
    n, m = A.ncols, B.ncols
    aug = [list(a) + list(b) for a, b in zip(A.rows, B.rows)]
    rows, pivots = _row_reduce(aug, n)
    rank = len(pivots)
    for i in range(rank, A.nrows):
        if any(rows[i][n:]):
            return None
    z = A.field.zero
    X = [[z] * m for _ in range(n)]
    for i, c in enumerate(pivots):
        X[c] = rows[i][n:]
    return Matrix(A.field, X, m)


def solve_linear(A, b):
    """Exact solution ``x`` of ``A x = b`` (a :class:`Vector`).

    Raises :class:`NoSolution` for an inconsistent system.  Underdetermined
    systems return the solution with all free variables zero.
    """
    coords = b.coords if isinstance(b, Vector) else tuple(b)
    if len(coords) != A.nrows:
        raise ShapeMismatch("right-hand side has length %d, matrix has %d rows" % (len(coords), A.nrows))
    B = Matrix(A.field, [[c] for c in coords], 1)
    X = solve_many(A, B)
    if X is None:
        raise NoSolution("inconsistent linear system")
    return Vector(A.field, tuple(r[0] for r in X.rows))
