"""Canonical catalogs of indecomposable objects.

A Registry holds pairwise non-isomorphic objects with deterministic
canonical ids: entries are sorted by (total dimension, dimension data,
discovery index) once enumeration finishes.

Module enumeration knits the Auslander-Reiten quiver of mod Lambda to a
mesh-closed fixpoint (complete for representation-finite algebras); the
closure operators of the registry contract (radical, socle quotient,
syzygy, cosyzygy, hom kernels and cokernels) are then available as a
consistency sweep that must produce no new objects.

Complex enumeration is the direct construction: stalks, J's, and the
minimal projective presentations of the non-projective indecomposable
modules, pushed through the degree embeddings for hereditary algebras
and n >= 3.  It never knits, so it can serve as the independent oracle
against the knitted quiver.
"""

from .category import CxCategory, ModCategory
from .complexes import ComplexN, phi_embed
from .errors import (CountMismatch, ProbablyInfiniteType,
                     UnsupportedAlgebraForN)
from .projmod import PathMat
from .quivers import classify_dynkin
from .reps import (cokernel, hom_basis, injective, injective_envelope,
                   is_projective as rep_is_projective, kernel,
                   min_proj_presentation, projective, projective_cover,
                   radical_mod, simple, socle, quotient_by_subspaces)

MAX_OBJECTS = 5000
MAX_TOTAL_DIM = 512


class Registry:
    def __init__(self, cat, tag):
        self.cat = cat
        self.tag = tag  # 'mod' or 'c<n>'
        self.entries = []   # (obj, provenance), discovery order
        self._ids = None

    def __len__(self):
        return len(self.entries)

    def objects(self):
        return [obj for obj, _ in self.entries]

    def find(self, obj):
        """Index of an entry isomorphic to obj, or None."""
        dd = self.cat.dim_data(obj)
        for k, (other, _) in enumerate(self.entries):
            if self.cat.dim_data(other) == dd \
                    and self.cat.find_iso(obj, other) is not None:
                return k
        return None

    def add_if_new(self, obj, provenance):
        k = self.find(obj)
        if k is not None:
            return k, False
        self.entries.append((obj, provenance))
        self._ids = None
        return len(self.entries) - 1, True

    def _sort_key(self, k):
        obj, _ = self.entries[k]
        dd = self.cat.dim_data(obj)
        flat = tuple(x for part in dd for x in
                     (part if isinstance(part, tuple) else (part,)))
        return (self.cat.total_dim(obj), flat, k)

    def canonical_order(self):
        """Entry indices in canonical id order."""
        return sorted(range(len(self.entries)), key=self._sort_key)

    def ids(self):
        """Canonical id strings, indexed by entry position."""
        if self._ids is None:
            prefix = "M" if self.tag == "mod" else "X"
            order = self.canonical_order()
            width = max(3, len(str(len(order))))
            self._ids = [None] * len(self.entries)
            for rank, k in enumerate(order):
                self._ids[k] = "%s%0*d" % (prefix, width, rank + 1)
        return self._ids

    def id_of(self, k):
        return self.ids()[k]

    def index_of_id(self, ident):
        try:
            return self.ids().index(ident)
        except ValueError:
            return None

    def label_of(self, k):
        obj, _ = self.entries[k]
        if self.tag == "mod":
            return module_label(self.cat.algebra, obj)
        return obj.label()

    def index_of_label(self, label):
        labels = [self.label_of(k) for k in range(len(self.entries))]
        norm = label.replace(" ", "")
        for k, s in enumerate(labels):
            if s == norm:
                return k
        return None

    def provenance_of(self, k):
        return self.entries[k][1]


def module_label(algebra, M):
    """P_v / I_v / S_v when isomorphic to one, else the dimension vector."""
    cache = getattr(M, "_cnproj_label", None)
    if cache is not None:
        return cache
    label = "M" + str(tuple(M.dims))
    from .decompose import find_iso
    cat = _label_cat(algebra)
    for prefix, build in (("P", projective), ("S", simple), ("I", injective)):
        done = False
        for v in algebra.quiver.vertices:
            N = build(algebra, v)
            if M.dims == N.dims and find_iso(cat, M, N) is not None:
                label = "%s%d" % (prefix, v)
                done = True
                break
        if done:
            break
    M._cnproj_label = label
    return label


def _label_cat(algebra):
    cat = getattr(algebra, "_cnproj_label_cat", None)
    if cat is None:
        cat = algebra._cnproj_label_cat = ModCategory(algebra)
    return cat


def enumerate_ind_modules(algebra, max_objects=MAX_OBJECTS,
                          max_total_dim=MAX_TOTAL_DIM, verify_closure=False):
    """Registry of all indecomposable modules of a representation-finite
    algebra, by knitting mod Lambda to mesh closure."""
    from .arquiver import knit

    cat = ModCategory(algebra)
    try:
        result = knit(cat, depth_limit=max_objects,
                      max_objects=max_objects, max_total_dim=max_total_dim)
    except ProbablyInfiniteType:
        raise
    if not result.complete:
        raise ProbablyInfiniteType(
            "module knitting did not close within the budget")
    reg = Registry(cat, "mod")
    for node in result.nodes:
        reg.add_if_new(node.obj, node.provenance)
    if verify_closure:
        _closure_sweep(algebra, cat, reg)
    reg.ar_result = result
    return reg


def _closure_sweep(algebra, cat, reg):
    """The contract's closure operators must create nothing new."""
    objs = reg.objects()
    produced = []
    for M in objs:
        produced.append(radical_mod(M)[0])
        S, inc = socle(M)
        spaces = _socle_spaces(algebra, M)
        produced.append(quotient_by_subspaces(M, spaces)[0])
        produced.append(kernel(projective_cover(M))[0])       # syzygy
        produced.append(cokernel(injective_envelope(M))[0])   # cosyzygy
    for M in objs:
        for N in objs:
            for f in hom_basis(M, N):
                produced.append(kernel(f)[0])
                produced.append(cokernel(f)[0])
    for X in produced:
        if X.total_dim == 0:
            continue
        for Z, _, _ in cat.decompose(X):
            if reg.find(Z) is None:
                raise CountMismatch(len(reg) + 1, len(reg),
                                    "closure sweep found a new module")


def _socle_spaces(algebra, M):
    from .linalg import Subspace
    S, inc = socle(M)
    spaces = {}
    for u in algebra.quiver.vertices:
        sp = Subspace(algebra.field, M.dim_at(u))
        for j in range(S.dim_at(u)):
            sp.insert([inc.at(u).rows[i][j] for i in range(M.dim_at(u))])
        spaces[u] = sp
    return spaces


def presentation_complex(algebra, M):
    """The minimal projective presentation of M as a 2-term ComplexN."""
    d, _ = min_proj_presentation(M)
    dm = PathMat.from_module_map(d)
    return ComplexN(algebra, 2, [d.source.proj_verts, d.target.proj_verts],
                    [dm], check=False)


def enumerate_ind_complexes(algebra, n, mod_registry=None):
    """Registry of the indecomposable objects of C_n(proj Lambda).

    Hereditary algebras: union of the degree embeddings of the C_2
    classification.  General algebras: n = 2 only, via the equivalence
    of mod Lambda with the injectively stable category.
    """
    if n < 2:
        raise UnsupportedAlgebraForN("n >= 2 required")
    if not algebra.is_hereditary and n != 2:
        raise UnsupportedAlgebraForN(
            "direct enumeration beyond n = 2 needs a hereditary algebra")
    if mod_registry is None:
        mod_registry = enumerate_ind_modules(algebra)
    cat = CxCategory(algebra, n)
    reg = Registry(cat, "c%d" % n)

    two = CxCategory(algebra, 2)
    c2_objects = []
    from .complexes import make_J, make_S, make_T
    for v in algebra.quiver.vertices:
        c2_objects.append((make_T(v, 2, algebra=algebra), "T(P%d)" % v))
        c2_objects.append((make_J(v, 1, 2, algebra=algebra), "J1(P%d)" % v))
        c2_objects.append((make_S(v, 2, algebra=algebra), "S(P%d)" % v))
    for k in mod_registry.canonical_order():
        M = mod_registry.objects()[k]
        if rep_is_projective(M):
            continue
        c2_objects.append((presentation_complex(algebra, M),
                           "pres(%s)" % mod_registry.label_of(k)))

    if n == 2:
        for X, prov in c2_objects:
            reg.add_if_new(X, prov)
    else:
        for i in range(n - 1):
            for X, prov in c2_objects:
                reg.add_if_new(phi_embed(X, i, n),
                               "phi_%d(%s)" % (i, prov))
    reg.mod_registry = mod_registry
    return reg


POSITIVE_ROOTS = {"A": lambda n: n * (n + 1) // 2,
                  "D": lambda n: n * (n - 1),
                  "E": {6: 36, 7: 63, 8: 120}}


def positive_root_count(label):
    kind, num = label[0], int(label[1:])
    if kind == "E":
        return POSITIVE_ROOTS["E"][num]
    return POSITIVE_ROOTS[kind](num)


def completeness_check(reg, mod_registry=None):
    """Count certificates; raises CountMismatch on failure.

    mod H, H Dynkin hereditary: positive-root count.
    C_2: |ind mod| + 2 |vertices|.
    C_n, n >= 3 (hereditary): (n-1) |ind C_2| - (n-2) |vertices|.
    """
    algebra = reg.cat.algebra
    nv = algebra.quiver.vertex_count
    report = {"objects": len(reg), "tag": reg.tag}
    if reg.tag == "mod":
        label = classify_dynkin(algebra.quiver)
        if label is None or not algebra.is_hereditary:
            report["expected"] = None
            report["note"] = "no closed count formula for this algebra"
            return report
        expected = positive_root_count(label)
        report["expected"] = expected
        report["dynkin"] = label
        if len(reg) != expected:
            raise CountMismatch(len(reg), expected, "positive roots")
        return report
    n = int(reg.tag[1:])
    mod_registry = mod_registry or getattr(reg, "mod_registry", None)
    if mod_registry is None:
        mod_registry = enumerate_ind_modules(algebra)
    m = len(mod_registry)
    c2 = m + 2 * nv
    expected = c2 if n == 2 else (n - 1) * c2 - (n - 2) * nv
    report["expected"] = expected
    report["ind_modules"] = m
    if len(reg) != expected:
        raise CountMismatch(len(reg), expected, "complex gluing count")
    return report
