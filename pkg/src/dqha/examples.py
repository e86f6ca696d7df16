"""Concrete algebras and small modules: group algebras, 3-cocycle twisted
group algebras, dual group algebras and one-dimensional YD modules."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .algebra import DualQuasiHopfAlgebra
from .coalgebra import Coalgebra, grouplike_comodule, regular_comodule, trivial_comodule
from .errors import ConstraintViolated, InvalidGroupTable, NotACocycle, NotNormalized
from .fields import QQ, PrimeField
from .forms import MultilinearForm
from .linalg import Matrix


@dataclass(frozen=True)
class FiniteGroupPresentation:
    mul_table: tuple
    identity: int = 0
    names: tuple = None

    def __post_init__(self):
        table = tuple(tuple(r) for r in self.mul_table)
        object.__setattr__(self, "mul_table", table)
        n = len(table)
        if self.names is None:
            object.__setattr__(self, "names", tuple("g%d" % i for i in range(n)))
        validate_group_table(table, self.identity)
        inv = []
        for a in range(n):
            inv.append(next(b for b in range(n) if table[a][b] == self.identity))
        object.__setattr__(self, "_inverse", tuple(inv))

    @property
    def order(self):
        return len(self.mul_table)

    @property
    def inverse_table(self):
        return self._inverse

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        return self._inverse[a]


def validate_group_table(table, identity=0):
    n = len(table)
    if n == 0 or any(len(r) != n for r in table):
        raise InvalidGroupTable("group table must be a nonempty square")
    if not 0 <= identity < n:
        raise InvalidGroupTable("identity index out of range")
    for r in table:
        if any(not (isinstance(x, int) and 0 <= x < n) for x in r):
            raise InvalidGroupTable("table entries must be element indices")
    for a in range(n):
        if table[identity][a] != a or table[a][identity] != a:
            raise InvalidGroupTable("index %d is not a two-sided identity" % identity)
        if identity not in table[a]:
            raise InvalidGroupTable("element %d has no inverse" % a)
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise InvalidGroupTable("associativity fails at (%d, %d, %d)" % (a, b, c))


def cyclic_group(n):
    names = ["e"] + (["g"] if n == 2 else ["g%s" % ("" if k == 1 else "^%d" % k) for k in range(1, n)])
    names = tuple(names[:n])
    return FiniteGroupPresentation([[(a + b) % n for b in range(n)] for a in range(n)], 0, names)


def symmetric_group_3():
    elems = list(permutations(range(3)))
    idx = {p: i for i, p in enumerate(elems)}
    # (p q)(x) = p(q(x))
    table = [[idx[tuple(p[q[x]] for x in range(3))] for q in elems] for p in elems]
    names = tuple("".join(map(str, p)) for p in elems)
    return FiniteGroupPresentation(table, idx[(0, 1, 2)], names)


class ThreeCocycle:
    """Normalized 3-cocycle on a finite group with values in ``field``."""

    def __init__(self, group, field, values):
        self.group = group
        self.field = field
        n = group.order
        if callable(values):
            vals = {t: field(values(*t)) for t in product(range(n), repeat=3)}
        else:
            vals = {t: field(1) for t in product(range(n), repeat=3)}
            vals.update({tuple(k): field(v) for k, v in dict(values).items()})
        self.values = vals
        e = group.identity
        for t, v in vals.items():
            if not v:
                raise NotACocycle("cocycle value at %r is zero" % (t,))
            if e in t and v != field.one:
                raise NotNormalized("cocycle is not normalized at %r" % (t,))
        bad = self.cocycle_failure()
        if bad is not None:
            raise NotACocycle("cocycle condition fails at %r" % (bad,))

    def __call__(self, a, b, c):
        return self.values[(a, b, c)]

    def cocycle_failure(self):
        """First (a, b, c, d) violating the grouplike cocycle law, or None."""
        G, w = self.group, self.values
        m = G.mul
        for a, b, c, d in product(range(G.order), repeat=4):
            if w[(a, b, m(c, d))] * w[(m(a, b), c, d)] != w[(b, c, d)] * w[(a, m(b, c), d)] * w[(a, b, c)]:
                return (a, b, c, d)
        return None


def cyclic_cocycle(n, field, zeta):
    """omega(g^a, g^b, g^c) = zeta^(a * floor((b + c) / n)); zeta must be an n-th root of 1."""
    G = cyclic_group(n)
    z = field(zeta)
    return ThreeCocycle(G, field, lambda a, b, c: z ** (a * ((b + c) // n)))


def trivial_cocycle(G, field):
    return ThreeCocycle(G, field, {})


def _group_coalgebra(G, field):
    n = G.order
    return Coalgebra(field, n, [[(g, g, 1)] for g in range(n)], [1] * n, G.names)


def group_dqha(G, omega, name=None):
    """k_omega[G]: grouplike basis, sigma = omega, s(g) = g^-1, alpha = eps,
    beta(g) = omega(g, g^-1, g)^-1."""
    F = omega.field
    n = G.order
    C = _group_coalgebra(G, F)
    mul = [(a, b, G.mul(a, b), 1) for a in range(n) for b in range(n)]
    sigma = MultilinearForm(F, n, 3, [omega(*t) for t in product(range(n), repeat=3)])
    sigma_inv = MultilinearForm(F, n, 3, [1 / omega(*t) for t in product(range(n), repeat=3)])
    s = Matrix.from_columns(F, n, [{G.inv(g): F.one} for g in range(n)])
    alpha = MultilinearForm(F, n, 1, [1] * n)
    beta = MultilinearForm(F, n, 1, [1 / omega(g, G.inv(g), g) for g in range(n)])
    return DualQuasiHopfAlgebra(C, mul, {G.identity: 1}, sigma, s, alpha, beta,
                                sigma_inv=sigma_inv, name=name or "k_w[G]", group=G)


def group_hopf(G, field, name=None):
    return group_dqha(G, trivial_cocycle(G, field), name=name or "kG")


def dual_group_hopf(G, field, name=None):
    """Function algebra k^G on the basis of point masses delta_g."""
    n = G.order
    e = G.identity
    names = tuple("d_" + x for x in G.names)
    delta = [[(a, b, 1) for a in range(n) for b in range(n) if G.mul(a, b) == g] for g in range(n)]
    C = Coalgebra(field, n, delta, [1 if g == e else 0 for g in range(n)], names)
    mul = [(a, a, a, 1) for a in range(n)]
    eps3 = MultilinearForm(field, n, 3, [1 if t == (e, e, e) else 0 for t in product(range(n), repeat=3)])
    s = Matrix.from_columns(field, n, [{G.inv(g): field.one} for g in range(n)])
    eps = MultilinearForm(field, n, 1, C.epsilon)
    return DualQuasiHopfAlgebra(C, mul, {g: 1 for g in range(n)}, eps3, s, eps, eps,
                                sigma_inv=eps3, name=name or "k^G")


# --- the registered pool ------------------------------------------------------

F13 = PrimeField(13)
THETA_F13 = 5          # 5^2 = 25 = -1 in F_13
ZETA4_F13 = 5          # multiplicative order 4 in F_13


@lru_cache(maxsize=None)
def kz3():
    return group_hopf(cyclic_group(3), QQ, name="kZ3")


@lru_cache(maxsize=None)
def kdual_z2():
    return dual_group_hopf(cyclic_group(2), QQ, name="k^Z2")


@lru_cache(maxsize=None)
def kw_z2(field_spec="q"):
    F = QQ if field_spec == "q" else PrimeField(int(field_spec.split(":")[1]))
    name = "k_w[Z2]" if field_spec == "q" else "k_w[Z2]/F%d" % F.p
    return group_dqha(cyclic_group(2), cyclic_cocycle(2, F, -1), name=name)


@lru_cache(maxsize=None)
def kw_z4_f13():
    return group_dqha(cyclic_group(4), cyclic_cocycle(4, F13, ZETA4_F13), name="k_w[Z4]/F13")


def registered_algebras():
    """The fixed pool every cross-module suite runs over."""
    return [kz3(), kdual_z2(), kw_z2(), kw_z2("fp:13"), kw_z4_f13()]


def pool_comodules(H, max_dim=2, side="left"):
    """Comodules of dimension <= max_dim used for naturality checks."""
    out = [trivial_comodule(H, side, 1)]
    if H.group is not None:
        out += [grouplike_comodule(H, g, side, 1) for g in range(H.dim) if g != H.group.identity]
    if H.dim <= max_dim:
        out.append(regular_comodule(H, side))
    return out


@lru_cache(maxsize=None)
def sweedler_hopf(field=QQ):
    """Sweedler's 4-dimensional Hopf algebra: g^2 = 1, x^2 = 0, xg = -gx.

    Neither commutative nor cocommutative, and s has order 4, which makes it
    (and its twists) a sharper test object than the group algebras.
    Basis order: 1, g, x, gx.
    """
    F = field
    C = Coalgebra(F, 4, [
        [(0, 0, 1)],
        [(1, 1, 1)],
        [(2, 0, 1), (1, 2, 1)],
        [(3, 1, 1), (0, 3, 1)],
    ], [1, 1, 0, 0], ("1", "g", "x", "gx"))
    # products of basis words, written out
    table = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
        (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: 1}, (3, 1): {2: -1}, (3, 2): {}, (3, 3): {},
    }
    mul = [(i, j, k, c) for (i, j), v in table.items() for k, c in v.items()]
    eps3 = MultilinearForm.from_function(F, 4, 3, lambda a, b, c: C.epsilon[a] * C.epsilon[b] * C.epsilon[c])
    s = Matrix.from_columns(F, 4, [{0: F.one}, {1: F.one}, {3: -F.one}, {2: F.one}])
    eps = MultilinearForm(F, 4, 1, C.epsilon)
    return DualQuasiHopfAlgebra(C, mul, {0: 1}, eps3, s, eps, eps, sigma_inv=eps3, name="H4")


# A normalized gauge twist of H4 with no special structure; twisting by it
# gives a reassociator that is nontrivial on the skew-primitive part.
SWEEDLER_TWIST = (
    (1, 1, 0, 0),
    (1, -2, 1, 1),
    (0, -2, -1, 1),
    (0, 0, 2, 1),
)


@lru_cache(maxsize=None)
def sweedler_twisted(field=QQ):
    """H4 twisted by :data:`SWEEDLER_TWIST`: a genuinely quasi, non-cocommutative example."""
    from .algebra import twist

    H = sweedler_hopf(field)
    F = MultilinearForm(field, 4, 2, [c for row in SWEEDLER_TWIST for c in row])
    return twist(H, F).replace(name="H4^F")


def one_dim_yd(H, g, theta, flavor="LL"):
    """1-dim YD module over a cyclic group algebra: coaction by the grouplike
    ``g``, a chosen generator acting by ``theta``.

    The values on the other group elements follow from the associativity
    constraint the reassociator imposes on a one-dimensional action.
    Raises :class:`ConstraintViolated` naming the failing axiom when the
    result is not a YD module.
    """
    from .coalgebra import Comodule
    from .yd import FLAVORS, YetterDrinfeldModule, check_yd

    if flavor not in FLAVORS:
        raise ValueError("unknown flavor %r" % (flavor,))
    if H.group is None:
        raise ValueError("one_dim_yd needs a group algebra")
    F = H.field
    theta = F(theta)
    G = H.group
    side = "left" if flavor in ("LL", "RL") else "right"
    V = Comodule(H, side, 1, [[(g, 0, 1)]], ["v"])
    sig = H.sigma

    def defect(h, k):
        # a(h) a(k) = defect(h, k) a(hk) for a one-dimensional module
        if flavor in ("LL", "RR"):
            return sig(h, k, g) * sig(g, h, k) / sig(h, g, k)
        return sig(h, g, k) / (sig(g, h, k) * sig(h, k, g))

    gen, powers = _generator(G)
    values = {G.identity: F.one}
    prev = G.identity
    for _ in range(G.order - 1):
        nxt = G.mul(gen, prev)
        values[nxt] = theta * values[prev] / defect(gen, prev)
        prev = nxt
    action = [[{0: values[h]}] for h in range(H.dim)]
    M = YetterDrinfeldModule(H, flavor, V, action,
                             name="M(%s, %s, %s)" % (H.basis_name(g), F.format(theta), flavor))
    rep = check_yd(M)
    if not rep.passed:
        axiom = rep.failed_names()[0]
        raise ConstraintViolated(
            "theta = %s does not give a %s module: %s fails" % (F.format(theta), flavor, axiom),
            axiom=axiom,
            constraint="theta^%d must equal %s" % (G.order, F.format(_wrap_value(F, G, gen, defect))))
    return M


def _wrap_value(F, G, gen, defect):
    """The value theta^n has to take so that the recursion closes up."""
    acc = F.one
    prev = G.identity
    for _ in range(G.order - 1):
        acc = acc * defect(gen, prev)
        prev = G.mul(gen, prev)
    return acc * defect(gen, prev)


def _generator(G):
    n = G.order
    for x in range(n):
        seq = [G.identity]
        while len(seq) < n:
            seq.append(G.mul(x, seq[-1]))
        if len(set(seq)) == n:
            return x, seq
    raise ValueError("one_dim_yd supports cyclic groups only")


def _trivial(H, flavor):
    from .yd import trivial_yd
    return trivial_yd(H, flavor)


def _h_yd(H):
    from .yd import h_as_yd
    return h_as_yd(H)


BUILTIN_ALGEBRAS = {
    "kz3": kz3,
    "kdualz2": kdual_z2,
    "kw_z2": kw_z2,
    "kw_z2_f13": lambda: kw_z2("fp:13"),
    "kw_z4_f13": kw_z4_f13,
    "h4": lambda: sweedler_hopf(),
    "h4_twisted": lambda: sweedler_twisted(),
}


def builtin_names():
    names = list(BUILTIN_ALGEBRAS)
    names += ["h_yd_" + a for a in BUILTIN_ALGEBRAS]
    names += ["trivial_" + a for a in BUILTIN_ALGEBRAS] + ["trivial_rl_" + a for a in BUILTIN_ALGEBRAS]
    names += ["m_theta", "m_theta_rl"]
    return names


def builtin(name):
    """Named fixtures shared by the command line and the tests.

    Algebras are addressed by their key in :data:`BUILTIN_ALGEBRAS`;
    ``h_yd_<alg>`` is H as an LL module over itself, ``trivial_<alg>`` and
    ``trivial_rl_<alg>`` the one-dimensional trivial modules, and
    ``m_theta`` / ``m_theta_rl`` the modules graded by g over k_w[Z2]/F13 on
    which g acts by 5.
    """
    if name in BUILTIN_ALGEBRAS:
        return BUILTIN_ALGEBRAS[name]()
    if name == "m_theta":
        return one_dim_yd(kw_z2("fp:13"), 1, THETA_F13, "LL")
    if name == "m_theta_rl":
        return one_dim_yd(kw_z2("fp:13"), 1, THETA_F13, "RL")
    for prefix, make in (("h_yd_", _h_yd), ("trivial_rl_", lambda H: _trivial(H, "RL")),
                         ("trivial_", lambda H: _trivial(H, "LL"))):
        if name.startswith(prefix) and name[len(prefix):] in BUILTIN_ALGEBRAS:
            return make(BUILTIN_ALGEBRAS[name[len(prefix):]]())
    raise KeyError("unknown builtin %r; known: %s" % (name, ", ".join(builtin_names())))
