"""Finite, dimension-bounded simplicial sets and their maps.

A simplicial set here stores *every* simplex up to ``dim_bound``,
degenerate ones included, as indexed tables of face and degeneracy
operators.  Each simplex record also carries its Eilenberg-Zilber
decomposition: the index of a nondegenerate base together with the
strictly decreasing degeneracy word that produces the simplex from it.
Nothing above ``dim_bound`` is stored; everything up there is degenerate
by construction, so the objects are honest ``dim_bound``-skeletal
simplicial sets.

Construction goes through two disciplined routes:

* vertex-tuple complexes (standard simplices, boundaries, horns,
  simplicial complexes), where simplices are nondecreasing vertex tuples;
* explicit nondegenerate skeleta (``from_nondegenerate``), where each
  nondegenerate simplex lists its faces as (base, degeneracy word) pairs,
  and the full tables are materialized from the simplicial identities.

Derived structure (face-key indexes, pi0, vertex sets) is cached on the
instance; values are treated as immutable after construction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .verdict import InputError


# ---------------------------------------------------------------------------
# degeneracy-word algebra
#
# A word (j1, j2, ..., jr) with j1 > j2 > ... > jr denotes the operator
# s_{j1} s_{j2} ... s_{jr}, outermost first.  This is the unique normal
# form under s_i s_j = s_{j+1} s_i (i <= j).

def word_after_degeneracy(word: tuple, j: int) -> tuple:
    """Normal form of s_j composed after the normal word s_word."""
    out = []
    i = 0
    while i < len(word) and j <= word[i]:
        out.append(word[i] + 1)
        i += 1
    out.append(j)
    out.extend(word[i:])
    return tuple(out)


def compose_words(outer: tuple, inner: tuple) -> tuple:
    """Normal form of s_outer composed after s_inner."""
    w = tuple(inner)
    for j in reversed(outer):
        w = word_after_degeneracy(w, j)
    return w


def degeneracy_words(base_dim: int, length: int) -> list:
    """All normal degeneracy words of the given length over a base_dim simplex.

    Entry i (0-based, outermost first) must satisfy word[i] <= base_dim +
    (length - 1 - i); words are strictly decreasing.  Returned in
    lexicographic order.
    """
    if length == 0:
        return [()]
    words = []

    def rec(prefix, pos):
        if pos == length:
            words.append(tuple(prefix))
            return
        hi = base_dim + (length - 1 - pos)
        if prefix:
            hi = min(hi, prefix[-1] - 1)
        lo = (length - 1 - pos)  # must leave room for a strictly decreasing tail
        for j in range(lo, hi + 1):
            prefix.append(j)
            rec(prefix, pos + 1)
            prefix.pop()

    rec([], 0)
    words.sort()
    return words


@dataclass(frozen=True)
class Simplex:
    """One simplex record.

    ``faces[i]`` indexes dimension k-1, ``degens[j]`` dimension k+1 (only
    stored while k+1 <= dim_bound).  ``base``/``word`` give the EZ
    decomposition; a nondegenerate simplex has word () and base equal to
    its own index.
    """
    faces: tuple
    degens: tuple
    base: int
    word: tuple

    @property
    def nondeg(self) -> bool:
        return not self.word


class SimplicialSet:
    __slots__ = ("dim_bound", "dims", "_cache")

    def __init__(self, dim_bound: int, dims: list):
        if dim_bound < 0:
            raise InputError("dim_bound must be non-negative")
        if len(dims) != dim_bound + 1:
            raise InputError("dims must have dim_bound + 1 levels")
        self.dim_bound = dim_bound
        self.dims = tuple(tuple(level) for level in dims)
        self._cache = {}

    # -- identity / hashing ------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, SimplicialSet)
                and self.dim_bound == other.dim_bound
                and self.dims == other.dims)

    def __hash__(self):
        return hash((self.dim_bound, self.dims))

    def __repr__(self):
        sizes = ",".join(str(len(level)) for level in self.dims)
        return f"SimplicialSet(dim_bound={self.dim_bound}, sizes=[{sizes}])"

    # -- basic accessors ----------------------------------------------------
    def size(self, k: int) -> int:
        return len(self.dims[k])

    def face(self, k: int, idx: int, i: int) -> int:
        return self.dims[k][idx].faces[i]

    def degeneracy(self, k: int, idx: int, j: int) -> int:
        return self.dims[k][idx].degens[j]

    def nondeg_indices(self, k: int) -> tuple:
        key = ("nondeg", k)
        if key not in self._cache:
            self._cache[key] = tuple(i for i, s in enumerate(self.dims[k]) if s.nondeg)
        return self._cache[key]

    def base_dim(self, k: int, idx: int) -> int:
        return k - len(self.dims[k][idx].word)

    def apply_word(self, dim: int, idx: int, word: tuple) -> int:
        """Index of s_word applied to the simplex (dim, idx)."""
        cur_dim, cur = dim, idx
        for j in reversed(word):
            cur = self.dims[cur_dim][cur].degens[j]
            cur_dim += 1
        return cur

    def pair_index(self, k: int) -> dict:
        """(base_dim, base_idx, word) -> index, for dimension k."""
        key = ("pairs", k)
        if key not in self._cache:
            table = {}
            for i, s in enumerate(self.dims[k]):
                table[(k - len(s.word), s.base, s.word)] = i
            self._cache[key] = table
        return self._cache[key]

    def face_key_index(self, k: int) -> dict:
        """tuple(faces) -> list of simplex indices, for dimension k >= 1."""
        key = ("facekey", k)
        if key not in self._cache:
            table = {}
            for i, s in enumerate(self.dims[k]):
                table.setdefault(s.faces, []).append(i)
            self._cache[key] = table
        return self._cache[key]

    def vertices_of(self, k: int, idx: int) -> frozenset:
        """All iterated 0-dimensional faces of the simplex."""
        key = ("verts", k, idx)
        if key not in self._cache:
            if k == 0:
                out = frozenset((idx,))
            else:
                out = frozenset().union(
                    *(self.vertices_of(k - 1, f) for f in self.dims[k][idx].faces))
            self._cache[key] = out
        return self._cache[key]

    def is_empty(self) -> bool:
        return all(len(level) == 0 for level in self.dims)


# ---------------------------------------------------------------------------
# construction: generic materialization from a nondegenerate skeleton

def from_nondegenerate(dim_bound: int, face_data: list) -> SimplicialSet:
    """Build the full tables from nondegenerate simplices only.

    ``face_data[k]`` lists the nondegenerate k-simplices; each entry is a
    list of k+1 faces, a face being ``(base_index, word)`` with
    ``base_index`` into the nondegenerate list of dimension
    ``k - 1 - len(word)``.  Dimension 0 entries are ``[]``.
    """
    if len(face_data) < dim_bound + 1:
        face_data = list(face_data) + [[] for _ in range(dim_bound + 1 - len(face_data))]
    order = []  # per dim: list of (base_dim, base_idx, word)
    index = []  # per dim: map pair -> idx
    for k in range(dim_bound + 1):
        level = [(k, i, ()) for i in range(len(face_data[k]))]
        for bd in range(k):
            for bi in range(len(face_data[bd])):
                for w in degeneracy_words(bd, k - bd):
                    level.append((bd, bi, w))
        order.append(level)
        index.append({p: i for i, p in enumerate(level)})

    def face_pair(bd: int, bi: int, word: tuple, i: int) -> tuple:
        """d_i applied to s_word(base) as a (base_dim, base_idx, word) pair."""
        prefix = []
        rest = list(word)
        while rest:
            j = rest[0]
            if i < j:
                prefix.append(j - 1)
                rest.pop(0)
            elif i == j or i == j + 1:
                return (bd, bi, compose_words(tuple(prefix), tuple(rest[1:])))
            else:
                prefix.append(j)
                i -= 1
                rest.pop(0)
        fb, fw = face_data[bd][bi][i]
        fdim = bd - 1 - len(fw)
        return (fdim, fb, compose_words(tuple(prefix), fw))

    dims = []
    for k in range(dim_bound + 1):
        level = []
        for (bd, bi, w) in order[k]:
            if k == 0:
                faces = ()
            else:
                faces = tuple(index[k - 1][face_pair(bd, bi, w, i)] for i in range(k + 1))
            if k + 1 <= dim_bound:
                degens = tuple(index[k + 1][(bd, bi, word_after_degeneracy(w, j))]
                               for j in range(k + 1))
            else:
                degens = ()
            base = index[bd][(bd, bi, ())]
            level.append(Simplex(faces=faces, degens=degens, base=base, word=w))
        dims.append(level)
    return SimplicialSet(dim_bound, dims)


# ---------------------------------------------------------------------------
# construction: vertex-tuple complexes

def _tuple_decomposition(t: tuple) -> tuple:
    """EZ decomposition of a nondecreasing tuple: (base_tuple, word)."""
    for j in range(len(t) - 1):
        if t[j] == t[j + 1]:
            base, inner = _tuple_decomposition(t[:j + 1] + t[j + 2:])
            return base, compose_words((j,), inner)
    return t, ()


def from_simplex_tuples(dim_bound: int, members) -> SimplicialSet:
    """Simplicial set whose k-simplices are the nondecreasing (k+1)-tuples
    produced by ``members(k + 1)``.

    The tuple family must be closed under dropping and duplicating
    entries.  Tuples are indexed in lexicographic order.
    """
    levels = []
    index = []
    for k in range(dim_bound + 1):
        tups = sorted(members(k + 1))
        levels.append(tups)
        index.append({t: i for i, t in enumerate(tups)})
    dims = []
    for k in range(dim_bound + 1):
        level = []
        for t in levels[k]:
            if k == 0:
                faces = ()
            else:
                faces = tuple(index[k - 1][t[:i] + t[i + 1:]] for i in range(k + 1))
            if k + 1 <= dim_bound:
                degens = tuple(index[k + 1][t[:j + 1] + t[j:]] for j in range(k + 1))
            else:
                degens = ()
            base_t, word = _tuple_decomposition(t)
            base = index[k - len(word)][base_t]
            level.append(Simplex(faces=faces, degens=degens, base=base, word=word))
        dims.append(level)
    return SimplicialSet(dim_bound, dims)


def _nondecreasing_tuples(values: list, length: int):
    return itertools.combinations_with_replacement(values, length)


def standard_simplex(n: int, dim_bound: int = 4) -> SimplicialSet:
    if n < 0 or n > dim_bound:
        raise InputError(f"standard_simplex: need 0 <= n <= dim_bound, got n={n}")
    verts = list(range(n + 1))
    return from_simplex_tuples(dim_bound, lambda ln: _nondecreasing_tuples(verts, ln))


def boundary(n: int, dim_bound: int = 4) -> SimplicialSet:
    if n < 0 or n > dim_bound:
        raise InputError(f"boundary: need 0 <= n <= dim_bound, got n={n}")
    verts = list(range(n + 1))
    full = set(verts)

    def members(ln):
        return [t for t in _nondecreasing_tuples(verts, ln) if set(t) != full]

    return from_simplex_tuples(dim_bound, members)


def horn(n: int, k: int, dim_bound: int = 4) -> SimplicialSet:
    if n < 1 or n > dim_bound:
        raise InputError(f"horn: need 1 <= n <= dim_bound, got n={n}")
    if k < 0 or k > n:
        raise InputError(f"horn: need 0 <= k <= n, got k={k}")
    verts = list(range(n + 1))

    def members(ln):
        out = []
        for t in _nondecreasing_tuples(verts, ln):
            missing = set(verts) - set(t)
            if missing - {k}:
                out.append(t)
        return out

    return from_simplex_tuples(dim_bound, members)


def point(dim_bound: int = 4) -> SimplicialSet:
    return standard_simplex(0, dim_bound)


def empty_sset(dim_bound: int = 4) -> SimplicialSet:
    return SimplicialSet(dim_bound, [[] for _ in range(dim_bound + 1)])


def from_simplicial_complex(facets: list, dim_bound: int = 4) -> SimplicialSet:
    """Simplicial set of an abstract simplicial complex given by facets
    (iterables of comparable vertex labels)."""
    faces = set()
    for f in facets:
        f = tuple(sorted(set(f)))
        for r in range(1, len(f) + 1):
            faces.update(itertools.combinations(f, r))
    verts = sorted({v for f in faces for v in f})

    def members(ln):
        return [t for t in _nondecreasing_tuples(verts, ln)
                if tuple(sorted(set(t))) in faces]

    return from_simplex_tuples(dim_bound, members)


# ---------------------------------------------------------------------------
# validation

def validate_sset(x: SimplicialSet) -> list:
    """All violated structural invariants, as readable strings."""
    bad = []
    bound = x.dim_bound
    for k in range(bound + 1):
        n_here = x.size(k)
        n_below = x.size(k - 1) if k > 0 else 0
        n_above = x.size(k + 1) if k + 1 <= bound else 0
        for idx, s in enumerate(x.dims[k]):
            tag = f"dim {k} simplex {idx}"
            if k == 0:
                if s.faces:
                    bad.append(f"{tag}: 0-simplex with faces")
            elif len(s.faces) != k + 1:
                bad.append(f"{tag}: expected {k + 1} faces")
            if any(not (0 <= f < n_below) for f in s.faces):
                bad.append(f"{tag}: face index out of range")
                continue
            if k + 1 <= bound:
                if len(s.degens) != k + 1:
                    bad.append(f"{tag}: expected {k + 1} degeneracies")
                    continue
                if any(not (0 <= d < n_above) for d in s.degens):
                    bad.append(f"{tag}: degeneracy index out of range")
                    continue
            elif s.degens:
                bad.append(f"{tag}: degeneracies stored above dim_bound")
    if bad:
        return bad  # no point checking identities on broken tables

    for k in range(bound + 1):
        for idx, s in enumerate(x.dims[k]):
            tag = f"dim {k} simplex {idx}"
            # d_i d_j = d_{j-1} d_i for i < j
            if k >= 2:
                for j in range(1, k + 1):
                    for i in range(j):
                        lhs = x.face(k - 1, s.faces[j], i)
                        rhs = x.face(k - 1, s.faces[i], j - 1)
                        if lhs != rhs:
                            bad.append(f"{tag}: d_{i} d_{j} != d_{j-1} d_{i}")
            # s_i s_j = s_{j+1} s_i for i <= j
            if k + 2 <= bound:
                for j in range(k + 1):
                    for i in range(j + 1):
                        lhs = x.degeneracy(k + 1, s.degens[j], i)
                        rhs = x.degeneracy(k + 1, s.degens[i], j + 1)
                        if lhs != rhs:
                            bad.append(f"{tag}: s_{i} s_{j} != s_{j+1} s_{i}")
            # d_i s_j relations
            if k + 1 <= bound:
                for j in range(k + 1):
                    sj = s.degens[j]
                    for i in range(k + 2):
                        got = x.face(k + 1, sj, i)
                        if i == j or i == j + 1:
                            want = idx
                        elif i < j:
                            want = x.degeneracy(k - 1, s.faces[i], j - 1) if k >= 1 else None
                        else:
                            want = x.degeneracy(k - 1, s.faces[i - 1], j) if k >= 1 else None
                        if want is not None and got != want:
                            bad.append(f"{tag}: d_{i} s_{j} identity fails")
            # EZ decomposition consistency
            bdim = k - len(s.word)
            if bdim < 0 or not (0 <= s.base < x.size(bdim)):
                bad.append(f"{tag}: decomposition out of range")
                continue
            base_rec = x.dims[bdim][s.base]
            if base_rec.word:
                bad.append(f"{tag}: decomposition base is degenerate")
                continue
            if list(s.word) != sorted(s.word, reverse=True) or len(set(s.word)) != len(s.word):
                bad.append(f"{tag}: degeneracy word not strictly decreasing")
                continue
            if x.apply_word(bdim, s.base, s.word) != idx:
                bad.append(f"{tag}: decomposition does not reproduce the simplex")
            if not s.word and k >= 1:
                for j in range(k):
                    if x.degeneracy(k - 1, s.faces[j], j) == idx:
                        bad.append(f"{tag}: flagged nondegenerate but equals s_{j} d_{j}")
                        break
    return bad


# ---------------------------------------------------------------------------
# pi0

class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        p = a
        while self.parent[p] != p:
            p = self.parent[p]
        while self.parent[a] != p:
            self.parent[a], a = p, self.parent[a]
        return p

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def pi0(x: SimplicialSet) -> list:
    """Partition of the 0-simplices into path components.

    Components are sorted lists of vertex indices, ordered by least member.
    """
    key = "pi0"
    if key not in x._cache:
        n = x.size(0)
        uf = _UnionFind(n)
        if x.dim_bound >= 1:
            for idx in x.nondeg_indices(1):
                s = x.dims[1][idx]
                uf.union(s.faces[0], s.faces[1])
        groups = {}
        for v in range(n):
            groups.setdefault(uf.find(v), []).append(v)
        x._cache[key] = [sorted(g) for _, g in sorted(groups.items())]
    return x._cache[key]


def pi0_class_of(x: SimplicialSet) -> list:
    """vertex index -> component index (components as ordered by pi0)."""
    key = "pi0_class"
    if key not in x._cache:
        cls = [0] * x.size(0)
        for ci, comp in enumerate(pi0(x)):
            for v in comp:
                cls[v] = ci
        x._cache[key] = cls
    return x._cache[key]


# ---------------------------------------------------------------------------
# maps

class SSetMap:
    __slots__ = ("source", "target", "assign")

    def __init__(self, source: SimplicialSet, target: SimplicialSet, assign):
        if source.dim_bound != target.dim_bound:
            raise InputError("source and target must share one dim_bound")
        self.source = source
        self.target = target
        self.assign = tuple(tuple(level) for level in assign)
        if len(self.assign) != source.dim_bound + 1:
            raise InputError("assignment must cover every tracked dimension")

    def __call__(self, k: int, idx: int) -> int:
        return self.assign[k][idx]

    def __eq__(self, other):
        return (isinstance(other, SSetMap) and self.source == other.source
                and self.target == other.target and self.assign == other.assign)

    def __hash__(self):
        return hash((self.source, self.target, self.assign))

    def __repr__(self):
        return f"SSetMap({self.source!r} -> {self.target!r})"


def validate_sset_map(f: SSetMap) -> list:
    bad = []
    x, y = f.source, f.target
    for k in range(x.dim_bound + 1):
        if len(f.assign[k]) != x.size(k):
            bad.append(f"dim {k}: assignment not total")
            return bad
        for idx, img in enumerate(f.assign[k]):
            if not (0 <= img < y.size(k)):
                bad.append(f"dim {k} simplex {idx}: image out of range")
                return bad
    for k in range(1, x.dim_bound + 1):
        for idx, s in enumerate(x.dims[k]):
            img = f.assign[k][idx]
            for i in range(k + 1):
                if y.face(k, img, i) != f.assign[k - 1][s.faces[i]]:
                    bad.append(f"dim {k} simplex {idx}: does not commute with d_{i}")
    for k in range(x.dim_bound):
        for idx, s in enumerate(x.dims[k]):
            img = f.assign[k][idx]
            for j in range(k + 1):
                if y.degeneracy(k, img, j) != f.assign[k + 1][s.degens[j]]:
                    bad.append(f"dim {k} simplex {idx}: does not commute with s_{j}")
    return bad


def identity_map(x: SimplicialSet) -> SSetMap:
    return SSetMap(x, x, [list(range(x.size(k))) for k in range(x.dim_bound + 1)])


def compose_maps(g: SSetMap, f: SSetMap) -> SSetMap:
    """g after f."""
    if f.target != g.source:
        raise InputError("maps not composable")
    return SSetMap(f.source, g.target,
                   [[g.assign[k][f.assign[k][i]] for i in range(f.source.size(k))]
                    for k in range(f.source.dim_bound + 1)])


def is_iso_map(f: SSetMap) -> SSetMap | None:
    """Inverse of f if f is a levelwise bijection, else None."""
    inverse = []
    for k in range(f.source.dim_bound + 1):
        n, m = f.source.size(k), f.target.size(k)
        if n != m or len(set(f.assign[k])) != n:
            return None
        inv = [0] * n
        for i, img in enumerate(f.assign[k]):
            inv[img] = i
        inverse.append(inv)
    return SSetMap(f.target, f.source, inverse)


def sub_complex(x: SimplicialSet, keep: list) -> tuple:
    """Subcomplex on the kept simplices; returns (sub, inclusion, idx_maps).

    ``keep[k]`` is an iterable of indices, which must be closed under
    faces and degeneracies (checked).
    """
    keep = [sorted(set(keep[k])) if k < len(keep) else [] for k in range(x.dim_bound + 1)]
    pos = [{idx: i for i, idx in enumerate(level)} for level in keep]
    for k in range(x.dim_bound + 1):
        for idx in keep[k]:
            s = x.dims[k][idx]
            if k >= 1 and any(f not in pos[k - 1] for f in s.faces):
                raise InputError(f"subcomplex not closed under faces at dim {k}")
            if k + 1 <= x.dim_bound and any(d not in pos[k + 1] for d in s.degens):
                raise InputError(f"subcomplex not closed under degeneracies at dim {k}")
    dims = []
    for k in range(x.dim_bound + 1):
        level = []
        for idx in keep[k]:
            s = x.dims[k][idx]
            faces = tuple(pos[k - 1][f] for f in s.faces) if k >= 1 else ()
            degens = tuple(pos[k + 1][d] for d in s.degens) if k + 1 <= x.dim_bound else ()
            bdim = k - len(s.word)
            if s.base not in pos[bdim]:
                raise InputError("subcomplex dropped a decomposition base")
            level.append(Simplex(faces=faces, degens=degens,
                                 base=pos[bdim][s.base], word=s.word))
        dims.append(level)
    sub = SimplicialSet(x.dim_bound, dims)
    incl = SSetMap(sub, x, [list(level) for level in keep])
    return sub, incl, pos


def disjoint_union(x: SimplicialSet, y: SimplicialSet) -> tuple:
    """(x ⊔ y, inclusion of x, inclusion of y)."""
    if x.dim_bound != y.dim_bound:
        raise InputError("dim_bound mismatch")
    dims = []
    for k in range(x.dim_bound + 1):
        off = x.size(k)
        off_below = x.size(k - 1) if k > 0 else 0
        off_above = x.size(k + 1) if k + 1 <= x.dim_bound else 0
        level = list(x.dims[k])
        for s in y.dims[k]:
            faces = tuple(f + off_below for f in s.faces)
            degens = tuple(d + off_above for d in s.degens)
            level.append(Simplex(faces=faces, degens=degens,
                                 base=s.base + x.size(k - len(s.word)), word=s.word))
        dims.append(level)
    z = SimplicialSet(x.dim_bound, dims)
    inc_x = SSetMap(x, z, [list(range(x.size(k))) for k in range(x.dim_bound + 1)])
    inc_y = SSetMap(y, z, [[i + x.size(k) for i in range(y.size(k))]
                           for k in range(x.dim_bound + 1)])
    return z, inc_x, inc_y


# ---------------------------------------------------------------------------
# decomposition derivation for table-built complexes (pullbacks, words)

def derive_records(dim_bound: int, faces_tables: list, degens_tables: list) -> list:
    """Build Simplex records from raw face/degeneracy tables.

    Degeneracy flags and EZ decompositions are derived from the tables via
    the retraction test s_j d_j = id on degenerate simplices.
    """
    decomp = [dict() for _ in range(dim_bound + 1)]  # idx -> (base, word)
    dims = []
    for k in range(dim_bound + 1):
        level = []
        for idx in range(len(faces_tables[k])):
            faces = tuple(faces_tables[k][idx])
            degens = tuple(degens_tables[k][idx]) if k + 1 <= dim_bound else ()
            deg_j = None
            for j in range(k):
                w = faces[j]
                if degens_tables[k - 1][w][j] == idx:
                    deg_j = j
                    break
            if deg_j is None:
                decomp[k][idx] = (idx, ())
            else:
                w = faces[deg_j]
                b, word = decomp[k - 1][w]
                decomp[k][idx] = (b, word_after_degeneracy(word, deg_j))
            base, word = decomp[k][idx]
            level.append(Simplex(faces=faces, degens=degens, base=base, word=word))
        dims.append(level)
    return dims


def pullback_ssets(f: SSetMap, g: SSetMap) -> tuple:
    """Levelwise pullback X x_Z Y of f: X -> Z, g: Y -> Z.

    Returns (P, pr_x, pr_y, index) where index[k] maps (i, j) pairs to P's
    simplex indices.
    """
    if f.target != g.target:
        raise InputError("pullback needs a common target")
    x, y = f.source, g.source
    bound = x.dim_bound
    pairs = []
    index = []
    for k in range(bound + 1):
        level = [(i, j) for i in range(x.size(k)) for j in range(y.size(k))
                 if f.assign[k][i] == g.assign[k][j]]
        pairs.append(level)
        index.append({p: n for n, p in enumerate(level)})
    faces_tables = []
    degens_tables = []
    for k in range(bound + 1):
        faces_tables.append([
            [index[k - 1][(x.face(k, i, a), y.face(k, j, a))] for a in range(k + 1)]
            if k >= 1 else [] for (i, j) in pairs[k]])
        if k + 1 <= bound:
            degens_tables.append([
                [index[k + 1][(x.degeneracy(k, i, a), y.degeneracy(k, j, a))]
                 for a in range(k + 1)] for (i, j) in pairs[k]])
        else:
            degens_tables.append([[] for _ in pairs[k]])
    p = SimplicialSet(bound, derive_records(bound, faces_tables, degens_tables))
    pr_x = SSetMap(p, x, [[i for (i, j) in pairs[k]] for k in range(bound + 1)])
    pr_y = SSetMap(p, y, [[j for (i, j) in pairs[k]] for k in range(bound + 1)])
    return p, pr_x, pr_y, index


# ---------------------------------------------------------------------------
# attaching a nondegenerate simplex (cell attachment)

def attach_nondeg(x: SimplicialSet, k: int, faces: list) -> tuple:
    """Attach one nondegenerate k-simplex with the given faces.

    Existing indices are stable; the new simplex and its degeneracies are
    appended.  Returns (x', new_index_at_k).
    """
    if k < 0 or k > x.dim_bound:
        raise InputError("attachment dimension out of range")
    if k >= 1 and len(faces) != k + 1:
        raise InputError("need k+1 faces")
    if k == 0 and faces:
        raise InputError("0-simplices have no faces")
    bound = x.dim_bound
    new_at = {d: [] for d in range(bound + 1)}  # dim -> list of words
    for d in range(k, bound + 1):
        new_at[d] = degeneracy_words(k, d - k)
    counts = {d: x.size(d) for d in range(bound + 1)}
    new_index = {}
    for d in range(k, bound + 1):
        for w in new_at[d]:
            new_index[(d, w)] = counts[d]
            counts[d] += 1

    def old_pair_lookup(d, bdim, bidx, word):
        return x.pair_index(d)[(bdim, bidx, word)]

    def face_of_new(d, word, i):
        """d_i of s_word(new cell) as an index in dimension d-1 (old or new)."""
        prefix = []
        rest = list(word)
        ii = i
        while rest:
            j = rest[0]
            if ii < j:
                prefix.append(j - 1)
                rest.pop(0)
            elif ii == j or ii == j + 1:
                w2 = compose_words(tuple(prefix), tuple(rest[1:]))
                return new_index[(d - 1, w2)]
            else:
                prefix.append(j)
                ii -= 1
                rest.pop(0)
        f = faces[ii]  # face of the new cell itself: an old simplex of dim k-1
        rec = x.dims[k - 1][f]
        bdim = k - 1 - len(rec.word)
        w2 = compose_words(tuple(prefix), rec.word)
        return old_pair_lookup(d - 1, bdim, rec.base, w2)

    dims = []
    for d in range(bound + 1):
        level = list(x.dims[d])
        # old simplices: degeneracies stay old; nothing to rewrite
        for w in new_at.get(d, []):
            if d >= 1:
                fcs = tuple(face_of_new(d, w, i) for i in range(d + 1))
            else:
                fcs = ()
            if d + 1 <= bound:
                dgs = tuple(new_index[(d + 1, word_after_degeneracy(w, j))]
                            for j in range(d + 1))
            else:
                dgs = ()
            level.append(Simplex(faces=fcs, degens=dgs,
                                 base=new_index[(k, ())], word=w))
        dims.append(level)
    return SimplicialSet(bound, dims), new_index[(k, ())]


# ---------------------------------------------------------------------------
# enumeration of simplicial maps

class SearchBudgetHit(Exception):
    pass


def enumerate_sset_maps(x: SimplicialSet, y: SimplicialSet, *, forced=None,
                        fiber=None, first_only=False, max_nodes=None):
    """All simplicial maps x -> y, by exhaustive assignment on the
    nondegenerate simplices of x, dimension by dimension, in index order.

    ``forced`` maps (dim, idx) of a nondegenerate source simplex to a
    required image; ``fiber(k, idx, cand)`` may veto candidates.  Images of
    degenerate simplices are determined by their decompositions.  Raises
    SearchBudgetHit when more than ``max_nodes`` assignments are explored.
    """
    if x.dim_bound != y.dim_bound:
        raise InputError("dim_bound mismatch")
    forced = forced or {}
    bound = x.dim_bound
    slots = [(k, idx) for k in range(bound + 1) for idx in x.nondeg_indices(k)]
    assign = {}
    results = []
    nodes = 0

    def image_of(k, idx):
        s = x.dims[k][idx]
        if s.nondeg:
            return assign[(k, idx)]
        bdim = k - len(s.word)
        return y.apply_word(bdim, assign[(bdim, s.base)], s.word)

    def finish():
        full = []
        for k in range(bound + 1):
            full.append([image_of(k, i) for i in range(x.size(k))])
        results.append(SSetMap(x, y, full))

    def candidates(k, idx):
        if k == 0:
            cands = range(y.size(0))
        else:
            s = x.dims[k][idx]
            key = tuple(image_of(k - 1, f) for f in s.faces)
            cands = y.face_key_index(k).get(key, ())
        want = forced.get((k, idx))
        out = []
        for c in cands:
            if want is not None and c != want:
                continue
            if fiber is not None and not fiber(k, idx, c):
                continue
            out.append(c)
        return out

    def rec(pos):
        nonlocal nodes
        if pos == len(slots):
            finish()
            return not first_only
        k, idx = slots[pos]
        for c in candidates(k, idx):
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise SearchBudgetHit()
            assign[(k, idx)] = c
            if not rec(pos + 1):
                return False
        assign.pop((k, idx), None)
        return True

    rec(0)
    return results


def _simplex_members(n):
    verts = list(range(n + 1))
    return lambda ln: list(_nondecreasing_tuples(verts, ln))


def _boundary_members(n):
    verts = list(range(n + 1))
    full = set(verts)
    return lambda ln: [t for t in _nondecreasing_tuples(verts, ln) if set(t) != full]


def _horn_members(n, k):
    verts = list(range(n + 1))
    return lambda ln: [t for t in _nondecreasing_tuples(verts, ln)
                       if (set(verts) - set(t)) - {k}]


def _tuple_inclusion(small_members, big_members, small, big) -> SSetMap:
    assign = []
    for k in range(small.dim_bound + 1):
        index = {t: i for i, t in enumerate(sorted(big_members(k + 1)))}
        assign.append([index[t] for t in sorted(small_members(k + 1))])
    return SSetMap(small, big, assign)


def boundary_inclusion(n: int, dim_bound: int = 4) -> SSetMap:
    """The inclusion of the boundary into the n-simplex."""
    return _tuple_inclusion(_boundary_members(n), _simplex_members(n),
                            boundary(n, dim_bound), standard_simplex(n, dim_bound))


def horn_inclusion(n: int, k: int, dim_bound: int = 4) -> SSetMap:
    """The inclusion of the (n, k)-horn into the n-simplex."""
    return _tuple_inclusion(_horn_members(n, k), _simplex_members(n),
                            horn(n, k, dim_bound), standard_simplex(n, dim_bound))
