"""JSON documents for algebras and modules.

Algebra document::

    {"kind": "algebra", "name": ..., "field": "q" | "fp:<p>", "dim": n,
     "basis": [...], "delta": [[i, j, k, c], ...], "epsilon": [...],
     "mul": [[i, j, k, c], ...], "unit": [...],
     "sigma": [[i, j, k, c], ...], "antipode": [[...], ...],
     "alpha": [...], "beta": [...],
     optional "sigma_inv", "s_inv", "group"}

``delta`` lists Delta(e_i) = sum c e_j (x) e_k, ``mul`` lists
e_i e_j = sum c e_k.  Reassociator entries that are not listed take the
counit value eps(i) eps(j) eps(k); ``antipode[r][c]`` is the coefficient of
e_r in s(e_c).  Scalars are strings ("3", "-1/2") or integers.

Module document::

    {"kind": "module", "name": ..., "flavor": "LL", "algebra": <algebra
     document | "builtin:<name>" | path>, "dim": n, "basis": [...],
     "coaction": [[v, h, w, c], ...], "action": [[h, v, w, c], ...]}

``coaction`` lists the coaction of v as sum c e_h (x) v_w (the H leg is
written first for both sides), ``action`` lists h acting on v as sum c v_w.
Unlisted entries are zero.
"""

import json
from itertools import product
from pathlib import Path

from .algebra import DualQuasiHopfAlgebra
from .coalgebra import Coalgebra, Comodule
from .errors import DimensionMismatch, InvalidGroupTable, ParseError, ShapeError
from .examples import FiniteGroupPresentation, builtin
from .fields import field_from_key
from .forms import MultilinearForm
from .linalg import Matrix
from .yd import FLAVORS, COACTION_SIDE, YetterDrinfeldModule

BUILTIN_PREFIX = "builtin:"


def _scalar(F, x):
    return F.format(x)


# --- emit ---------------------------------------------------------------------

def algebra_to_doc(H):
    F = H.field
    d = H.dim
    C = H.coalgebra
    eps = C.epsilon
    doc = {
        "kind": "algebra",
        "name": H.name,
        "field": F.key,
        "dim": d,
        "basis": list(H.basis_names),
        "delta": [[i, j, k, _scalar(F, c)] for i in range(d) for (j, k), c in C.delta[i]],
        "epsilon": [_scalar(F, c) for c in eps],
        "mul": [[i, j, k, _scalar(F, c)] for i in range(d) for j in range(d)
                for k, c in sorted(H.m(i, j).items())],
        "unit": [_scalar(F, H.unit.get(i, F.zero)) for i in range(d)],
        "sigma": [[a, b, c, _scalar(F, v)] for (a, b, c), v in H.sigma.items()
                  if v != eps[a] * eps[b] * eps[c]],
        "antipode": [[_scalar(F, x) for x in row] for row in H.s.rows],
        "alpha": [_scalar(F, H.alpha(i)) for i in range(d)],
        "beta": [_scalar(F, H.beta(i)) for i in range(d)],
    }
    if H.group is not None:
        G = H.group
        doc["group"] = {"mul_table": [list(r) for r in G.mul_table], "identity": G.identity,
                        "names": list(G.names)}
    return doc


def module_to_doc(M, algebra_ref=None):
    """``algebra_ref`` (e.g. "builtin:kz3") replaces the inline algebra."""
    F = M.field
    return {
        "kind": "module",
        "name": M.name,
        "flavor": M.flavor,
        "algebra": algebra_ref if algebra_ref else algebra_to_doc(M.H),
        "dim": M.dim,
        "basis": list(M.basis_names),
        "coaction": [[v, h, w, _scalar(F, c)] for v in range(M.dim)
                     for (h, w), c in M.comodule.coaction[v]],
        "action": [[h, v, w, _scalar(F, c)] for h in range(M.H.dim) for v in range(M.dim)
                   for w, c in sorted(M.action[h][v].items())],
    }


def to_doc(obj):
    if isinstance(obj, YetterDrinfeldModule):
        return module_to_doc(obj)
    return algebra_to_doc(obj)


def dumps(doc):
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


# --- parse ----------------------------------------------------------------------

def _need(doc, key, kind):
    if key not in doc:
        raise ParseError("%s document lacks %r" % (kind, key))
    return doc[key]


def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError("%s must be an integer, got %r" % (what, x))
    return x


def _vector(F, xs, d, what):
    if not isinstance(xs, list):
        raise ParseError("%s must be a list" % what)
    if len(xs) != d:
        raise ShapeError("%s needs %d entries, got %d" % (what, d, len(xs)))
    return [F.parse(x) for x in xs]


def _entries(F, xs, arity, bounds, what):
    if not isinstance(xs, list):
        raise ParseError("%s must be a list" % what)
    out = []
    for e in xs:
        if not isinstance(e, list) or len(e) != arity + 1:
            raise ShapeError("%s entries need %d indices and a value: %r" % (what, arity, e))
        idx = tuple(_int(i, what + " index") for i in e[:arity])
        for i, b in zip(idx, bounds):
            if not 0 <= i < b:
                raise ShapeError("%s index %r out of range" % (what, idx))
        out.append((idx, F.parse(e[arity])))
    return out


def _names(doc, d, kind):
    names = doc.get("basis")
    if names is None:
        return None
    if not isinstance(names, list) or len(names) != d:
        raise ShapeError("%s basis needs %d names" % (kind, d))
    return [str(x) for x in names]


def doc_to_algebra(doc, field=None):
    """Build the algebra; ``field`` (a key or field) overrides the document's."""
    if not isinstance(doc, dict) or doc.get("kind", "algebra") != "algebra":
        raise ParseError("not an algebra document")
    try:
        F = field_from_key(field if field is not None else _need(doc, "field", "algebra"))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    d = _int(_need(doc, "dim", "algebra"), "dim")
    if d < 1:
        raise ShapeError("dim must be positive")
    names = _names(doc, d, "algebra")
    delta = [[] for _ in range(d)]
    for (i, j, k), c in _entries(F, _need(doc, "delta", "algebra"), 3, (d, d, d), "delta"):
        delta[i].append((j, k, c))
    eps = _vector(F, _need(doc, "epsilon", "algebra"), d, "epsilon")
    mul = [(i, j, k, c) for (i, j, k), c in _entries(F, _need(doc, "mul", "algebra"), 3, (d, d, d), "mul")]
    unit = {i: c for i, c in enumerate(_vector(F, _need(doc, "unit", "algebra"), d, "unit")) if c}

    def trilinear(key):
        listed = dict(_entries(F, doc[key], 3, (d, d, d), key))
        return MultilinearForm(F, d, 3, [listed.get(t, eps[t[0]] * eps[t[1]] * eps[t[2]])
                                         for t in product(range(d), repeat=3)])

    def square(key):
        rows = doc[key]
        if not isinstance(rows, list) or len(rows) != d:
            raise ShapeError("%s must be a %dx%d matrix" % (key, d, d))
        return Matrix(F, [_vector(F, r, d, key + " row") for r in rows], d)

    _need(doc, "sigma", "algebra")
    sigma = trilinear("sigma")
    sigma_inv = trilinear("sigma_inv") if "sigma_inv" in doc else None
    _need(doc, "antipode", "algebra")
    s = square("antipode")
    s_inv = square("s_inv") if "s_inv" in doc else None
    alpha = MultilinearForm(F, d, 1, _vector(F, _need(doc, "alpha", "algebra"), d, "alpha"))
    beta = MultilinearForm(F, d, 1, _vector(F, _need(doc, "beta", "algebra"), d, "beta"))
    group = None
    if "group" in doc:
        g = doc["group"]
        try:
            gnames = g.get("names")
            group = FiniteGroupPresentation(tuple(tuple(r) for r in g["mul_table"]),
                                            g.get("identity", 0), tuple(gnames) if gnames else None)
        except (KeyError, TypeError, InvalidGroupTable) as exc:
            raise ParseError("bad group entry: %s" % exc) from None
        if group.order != d:
            raise ShapeError("group order %d does not match dim %d" % (group.order, d))
    try:
        C = Coalgebra(F, d, delta, eps, names)
        return DualQuasiHopfAlgebra(C, mul, unit, sigma, s, alpha, beta, sigma_inv=sigma_inv,
                                    s_inv=s_inv, name=str(doc.get("name", "H")), group=group)
    except DimensionMismatch as exc:
        raise ShapeError(str(exc)) from None


class Loader:
    """Resolves references and shares one algebra object between modules
    whose algebra documents coincide (tensor products and braidings need
    both factors over the same object)."""

    def __init__(self, field=None, base_dir=None):
        self.field = field
        self.base_dir = Path(base_dir) if base_dir else Path.cwd()
        self._algebras = {}

    def read(self, ref):
        """A parsed object for ``builtin:<name>`` or a file path."""
        if isinstance(ref, str) and ref.startswith(BUILTIN_PREFIX):
            try:
                obj = builtin(ref[len(BUILTIN_PREFIX):])
            except KeyError as exc:
                raise ParseError(exc.args[0]) from None
            if self.field is not None:
                # reparse in the requested field
                return self.from_doc(to_doc(obj))
            return self._share(obj)
        return self.from_doc(read_json(self._path(ref)))

    def _path(self, ref):
        p = Path(ref)
        return p if p.is_absolute() else self.base_dir / p

    def _share(self, obj):
        if isinstance(obj, YetterDrinfeldModule):
            key = json.dumps(algebra_to_doc(obj.H), sort_keys=True)
            H = self._algebras.setdefault(key, obj.H)
            if H is not obj.H:
                obj = _rebase(obj, H)
            return obj
        key = json.dumps(algebra_to_doc(obj), sort_keys=True)
        return self._algebras.setdefault(key, obj)

    def algebra(self, ref_or_doc):
        if isinstance(ref_or_doc, dict):
            H = doc_to_algebra(ref_or_doc, self.field)
        elif isinstance(ref_or_doc, str):
            H = self.read(ref_or_doc)
            if isinstance(H, YetterDrinfeldModule):
                raise ParseError("%r is a module, not an algebra" % ref_or_doc)
        else:
            raise ParseError("algebra must be a document or a reference")
        return self._share(H)

    def from_doc(self, doc):
        if not isinstance(doc, dict):
            raise ParseError("document must be a JSON object")
        kind = doc.get("kind", "algebra")
        if kind == "algebra":
            return self._share(doc_to_algebra(doc, self.field))
        if kind == "module":
            return self.module(doc)
        raise ParseError("unknown document kind %r" % kind)

    def module(self, doc):
        H = self.algebra(_need(doc, "algebra", "module"))
        F = H.field
        flavor = _need(doc, "flavor", "module")
        if flavor not in FLAVORS:
            raise ParseError("flavor must be one of %s" % (FLAVORS,))
        n = _int(_need(doc, "dim", "module"), "dim")
        if n < 1:
            raise ShapeError("dim must be positive")
        names = _names(doc, n, "module")
        coaction = [[] for _ in range(n)]
        for (v, h, w), c in _entries(F, _need(doc, "coaction", "module"), 3, (n, H.dim, n), "coaction"):
            coaction[v].append((h, w, c))
        action = [[{} for _ in range(n)] for _ in range(H.dim)]
        for (h, v, w), c in _entries(F, _need(doc, "action", "module"), 3, (H.dim, n, n), "action"):
            action[h][v][w] = action[h][v].get(w, F.zero) + c
        V = Comodule(H, COACTION_SIDE[flavor], n, coaction, names)
        return YetterDrinfeldModule(H, flavor, V, action, name=str(doc.get("name", "M")))


def _rebase(M, H):
    C = Comodule(H, M.comodule.side, M.dim,
                 [[(h, w, c) for (h, w), c in row] for row in M.comodule.coaction], M.basis_names)
    return YetterDrinfeldModule(H, M.flavor, C, [list(r) for r in M.action], name=M.name)


def read_json(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc.strerror)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("%s is not valid JSON: %s" % (path, exc)) from None


def load(ref, field=None):
    return Loader(field).read(ref)
