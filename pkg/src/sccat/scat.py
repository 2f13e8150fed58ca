"""Simplicial categories: categories enriched in simplicial sets.

A simplicial category stores a finite object list, one simplicial set per
ordered pair of objects (all sharing a dim_bound), dimensionwise total
composition tables, and a marked identity 0-simplex per object.  The
identity in dimension k is the k-fold degeneracy of that 0-simplex.

Composition tables are indexed ``compose[(a, b, c)][k][g][f]`` = index of
g after f in Hom(a, c)_k, for f in Hom(a, b)_k and g in Hom(b, c)_k.

Functors carry an object map plus one simplicial map per hom pair and are
validated against identity and composition preservation in every
dimension.  The component category pi_0 and its functoriality live here
as well, next to the constructions that only shuffle hom data around
(full subcategories, object doubling, coproducts, pullbacks).
"""
from __future__ import annotations

from dataclasses import dataclass

from .cat import FiniteCategory, FiniteFunctor
from .sset import (SimplicialSet, SSetMap, empty_sset, identity_map, pi0,
                   pi0_class_of, point, pullback_ssets, sub_complex,
                   validate_sset, validate_sset_map)
from .verdict import InputError, StructureError


class SimplicialCategory:
    __slots__ = ("objects", "hom", "compose", "identities", "dim_bound", "_cache")

    def __init__(self, objects, hom, compose, identities, dim_bound=None):
        self.objects = tuple(objects)
        self.hom = dict(hom)
        n = len(self.objects)
        bounds = {h.dim_bound for h in self.hom.values()}
        if dim_bound is None:
            if not bounds:
                raise InputError("dim_bound required for a category with no homs")
            dim_bound = max(bounds)
        if bounds - {dim_bound}:
            raise InputError("all hom complexes must share one dim_bound")
        self.dim_bound = dim_bound
        for a in range(n):
            for b in range(n):
                self.hom.setdefault((a, b), empty_sset(dim_bound))
        # canonicalize: a dimension with no composable pairs stores ()
        self.compose = {}
        for key, levels in compose.items():
            a, b, c = key
            out = []
            for k in range(dim_bound + 1):
                lvl = levels[k] if k < len(levels) else ()
                if self.hom[(a, b)].size(k) and self.hom[(b, c)].size(k):
                    out.append(tuple(tuple(row) for row in lvl))
                else:
                    out.append(())
            self.compose[key] = tuple(out)
        empty_levels = tuple(() for _ in range(dim_bound + 1))
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if (a, b, c) not in self.compose:
                        hf, hg = self.hom[(a, b)], self.hom[(b, c)]
                        if all(not (hf.size(k) and hg.size(k))
                               for k in range(dim_bound + 1)):
                            self.compose[(a, b, c)] = empty_levels
        self.identities = tuple(identities)
        self._cache = {}

    # -- accessors -----------------------------------------------------------
    def n_objects(self) -> int:
        return len(self.objects)

    def hom_of(self, a: int, b: int) -> SimplicialSet:
        return self.hom[(a, b)]

    def comp(self, k: int, a: int, b: int, c: int, g: int, f: int) -> int:
        return self.compose[(a, b, c)][k][g][f]

    def identity_tower(self, a: int, k: int) -> int:
        """The identity k-simplex of object a (iterated degeneracy)."""
        h = self.hom[(a, a)]
        cur = self.identities[a]
        for d in range(k):
            cur = h.degeneracy(d, cur, 0)
        return cur

    def object_pairs(self):
        n = self.n_objects()
        return ((a, b) for a in range(n) for b in range(n))

    def object_triples(self):
        n = self.n_objects()
        return ((a, b, c) for a in range(n) for b in range(n) for c in range(n))

    def __eq__(self, other):
        return (isinstance(other, SimplicialCategory)
                and self.objects == other.objects
                and self.dim_bound == other.dim_bound
                and self.hom == other.hom
                and self.compose == other.compose
                and self.identities == other.identities)

    def __repr__(self):
        return (f"SimplicialCategory(objects={list(self.objects)}, "
                f"dim_bound={self.dim_bound})")


def build_compose(n_objects: int, homs: dict, dim_bound: int, rule) -> dict:
    """Composition tables from a rule(k, a, b, c, g, f) -> index."""
    compose = {}
    for a in range(n_objects):
        for b in range(n_objects):
            for c in range(n_objects):
                levels = []
                for k in range(dim_bound + 1):
                    nf = homs[(a, b)].size(k)
                    ng = homs[(b, c)].size(k)
                    levels.append(tuple(tuple(rule(k, a, b, c, g, f)
                                              for f in range(nf))
                                        for g in range(ng)))
                compose[(a, b, c)] = tuple(levels)
    return compose


def validate_scat(cat: SimplicialCategory) -> list:
    """All violated invariants, naming dimension, triple and simplices."""
    bad = []
    n = cat.n_objects()
    bound = cat.dim_bound
    for (a, b), h in cat.hom.items():
        sub = validate_sset(h)
        bad.extend(f"hom ({a},{b}): {v}" for v in sub)
    if len(cat.identities) != n:
        bad.append("identities must mark one 0-simplex per object")
        return bad
    for a in range(n):
        if not (0 <= cat.identities[a] < cat.hom[(a, a)].size(0)):
            bad.append(f"identity of object {a} out of range")
            return bad
    if bad:
        return bad

    for (a, b, c) in cat.object_triples():
        table = cat.compose.get((a, b, c))
        hf, hg, ht = cat.hom[(a, b)], cat.hom[(b, c)], cat.hom[(a, c)]
        if table is None:
            if any(hf.size(k) and hg.size(k) for k in range(bound + 1)):
                bad.append(f"missing composition table {(a, b, c)}")
            continue
        if len(table) != bound + 1:
            bad.append(f"composition table {(a, b, c)} must cover every dimension")
            continue
        for k in range(bound + 1):
            nf, ng, nt = hf.size(k), hg.size(k), ht.size(k)
            lvl = table[k]
            if nf == 0 or ng == 0:
                continue
            if len(lvl) != ng or any(len(row) != nf for row in lvl):
                bad.append(f"table {(a, b, c)} dim {k}: wrong shape")
                continue
            if any(not (0 <= v < nt) for row in lvl for v in row):
                bad.append(f"table {(a, b, c)} dim {k}: entry out of range")
    if bad:
        return bad

    # composition is a simplicial map
    for (a, b, c) in cat.object_triples():
        hf, hg, ht = cat.hom[(a, b)], cat.hom[(b, c)], cat.hom[(a, c)]
        for k in range(bound + 1):
            for g in range(hg.size(k)):
                for f in range(hf.size(k)):
                    gf = cat.comp(k, a, b, c, g, f)
                    if k >= 1:
                        for i in range(k + 1):
                            lhs = ht.face(k, gf, i)
                            rhs = cat.comp(k - 1, a, b, c, hg.face(k, g, i),
                                           hf.face(k, f, i))
                            if lhs != rhs:
                                bad.append(
                                    f"composition not simplicial: d_{i} at "
                                    f"{(a, b, c)} dim {k} pair ({g},{f})")
                    if k + 1 <= bound:
                        for j in range(k + 1):
                            lhs = ht.degeneracy(k, gf, j)
                            rhs = cat.comp(k + 1, a, b, c,
                                           hg.degeneracy(k, g, j),
                                           hf.degeneracy(k, f, j))
                            if lhs != rhs:
                                bad.append(
                                    f"composition not simplicial: s_{j} at "
                                    f"{(a, b, c)} dim {k} pair ({g},{f})")

    # unit laws
    for (a, b) in cat.object_pairs():
        hf = cat.hom[(a, b)]
        for k in range(bound + 1):
            ida = cat.identity_tower(a, k)
            idb = cat.identity_tower(b, k)
            for f in range(hf.size(k)):
                if cat.comp(k, a, a, b, f, ida) != f:
                    bad.append(f"right unit law fails at {(a, b)} dim {k} simplex {f}")
                if cat.comp(k, a, b, b, idb, f) != f:
                    bad.append(f"left unit law fails at {(a, b)} dim {k} simplex {f}")

    # associativity
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    hf, hg, hh = cat.hom[(a, b)], cat.hom[(b, c)], cat.hom[(c, d)]
                    for k in range(bound + 1):
                        nf, ng, nh = hf.size(k), hg.size(k), hh.size(k)
                        if nf == 0 or ng == 0 or nh == 0:
                            continue
                        for f in range(nf):
                            for g in range(ng):
                                gf = cat.comp(k, a, b, c, g, f)
                                for h in range(nh):
                                    lhs = cat.comp(k, a, c, d, h, gf)
                                    rhs = cat.comp(k, a, b, d,
                                                   cat.comp(k, b, c, d, h, g), f)
                                    if lhs != rhs:
                                        bad.append(
                                            f"associativity fails at {(a, b, c, d)}"
                                            f" dim {k} triple ({f},{g},{h})")
    return bad


# ---------------------------------------------------------------------------
# functors

@dataclass(frozen=True)
class SFunctor:
    source: SimplicialCategory
    target: SimplicialCategory
    ob_map: tuple
    hom_maps: dict  # (a, b) -> SSetMap

    def ob(self, a: int) -> int:
        return self.ob_map[a]

    def on_hom(self, a: int, b: int) -> SSetMap:
        return self.hom_maps[(a, b)]

    def apply(self, k: int, a: int, b: int, idx: int) -> int:
        return self.hom_maps[(a, b)].assign[k][idx]

    def __eq__(self, other):
        return (isinstance(other, SFunctor)
                and self.source == other.source and self.target == other.target
                and self.ob_map == other.ob_map
                and all(self.hom_maps[p] == other.hom_maps[p]
                        for p in self.source.object_pairs()))

    def __hash__(self):
        return hash((self.ob_map, tuple(sorted(
            (p, m.assign) for p, m in self.hom_maps.items()))))


def validate_sfunctor(F: SFunctor) -> list:
    bad = []
    src, tgt = F.source, F.target
    n = src.n_objects()
    if len(F.ob_map) != n or any(not (0 <= x < tgt.n_objects()) for x in F.ob_map):
        return ["object map not a total map into the target objects"]
    for (a, b) in src.object_pairs():
        m = F.hom_maps.get((a, b))
        if m is None:
            bad.append(f"missing hom map at {(a, b)}")
            continue
        if m.source != src.hom[(a, b)] or m.target != tgt.hom[(F.ob(a), F.ob(b))]:
            bad.append(f"hom map at {(a, b)} has wrong source or target")
            continue
        bad.extend(f"hom map {(a, b)}: {v}" for v in validate_sset_map(m))
    if bad:
        return bad
    for a in range(n):
        if F.apply(0, a, a, src.identities[a]) != tgt.identities[F.ob(a)]:
            bad.append(f"identity of object {a} not preserved")
    for (a, b, c) in src.object_triples():
        hf, hg = src.hom[(a, b)], src.hom[(b, c)]
        fa, fb, fc = F.ob(a), F.ob(b), F.ob(c)
        for k in range(src.dim_bound + 1):
            for g in range(hg.size(k)):
                for f in range(hf.size(k)):
                    lhs = F.apply(k, a, c, src.comp(k, a, b, c, g, f))
                    rhs = tgt.comp(k, fa, fb, fc, F.apply(k, b, c, g),
                                   F.apply(k, a, b, f))
                    if lhs != rhs:
                        bad.append(f"composition not preserved at {(a, b, c)} "
                                   f"dim {k} pair ({g},{f})")
    return bad


def identity_sfunctor(cat: SimplicialCategory) -> SFunctor:
    return SFunctor(source=cat, target=cat,
                    ob_map=tuple(range(cat.n_objects())),
                    hom_maps={p: identity_map(cat.hom[p])
                              for p in cat.object_pairs()})


def compose_sfunctors(G: SFunctor, F: SFunctor) -> SFunctor:
    if F.target != G.source:
        raise InputError("functors not composable")
    from .sset import compose_maps
    n = F.source.n_objects()
    return SFunctor(
        source=F.source, target=G.target,
        ob_map=tuple(G.ob(F.ob(a)) for a in range(n)),
        hom_maps={(a, b): compose_maps(G.hom_maps[(F.ob(a), F.ob(b))],
                                       F.hom_maps[(a, b)])
                  for (a, b) in F.source.object_pairs()})


# ---------------------------------------------------------------------------
# basic constructions

def empty_cat(dim_bound: int = 4) -> SimplicialCategory:
    return SimplicialCategory(objects=(), hom={}, compose={}, identities=(),
                              dim_bound=dim_bound)


def singleton_cat(dim_bound: int = 4, label: str = "x") -> SimplicialCategory:
    pt = point(dim_bound)
    return SimplicialCategory(
        objects=(label,), hom={(0, 0): pt},
        compose={(0, 0, 0): tuple(((0,),) for _ in range(dim_bound + 1))},
        identities=(0,))


def functor_U(x: SimplicialSet) -> SimplicialCategory:
    """Two objects, Hom(x, y) = X, no other nonidentity morphisms."""
    bound = x.dim_bound
    pt = point(bound)
    homs = {(0, 0): pt, (1, 1): pt, (0, 1): x, (1, 0): empty_sset(bound)}

    def rule(k, a, b, c, g, f):
        if a == b:          # f is an identity tower
            return g
        return f            # then b == c and g is an identity tower

    compose = build_compose(2, homs, bound, rule)
    return SimplicialCategory(objects=("x", "y"), hom=homs, compose=compose,
                              identities=(0, 0))


def functor_U_map(g: SSetMap) -> SFunctor:
    """U applied to a simplicial-set map."""
    src, tgt = functor_U(g.source), functor_U(g.target)
    pt_id = identity_map(src.hom[(0, 0)])
    return SFunctor(source=src, target=tgt, ob_map=(0, 1),
                    hom_maps={(0, 0): pt_id, (1, 1): pt_id, (0, 1): g,
                              (1, 0): SSetMap(src.hom[(1, 0)], tgt.hom[(1, 0)],
                                              [[] for _ in range(g.source.dim_bound + 1)])})


def full_subcategory(cat: SimplicialCategory, objs) -> tuple:
    """(subcategory, inclusion functor); objs by index, order preserved."""
    objs = list(objs)
    if any(not (0 <= o < cat.n_objects()) for o in objs):
        raise InputError("unknown object in subcategory selection")
    homs = {(i, j): cat.hom[(objs[i], objs[j])]
            for i in range(len(objs)) for j in range(len(objs))}
    compose = {(i, j, k): cat.compose[(objs[i], objs[j], objs[k])]
               for i in range(len(objs)) for j in range(len(objs))
               for k in range(len(objs))}
    sub = SimplicialCategory(objects=tuple(cat.objects[o] for o in objs),
                             hom=homs, compose=compose,
                             identities=tuple(cat.identities[o] for o in objs),
                             dim_bound=cat.dim_bound)
    inc = SFunctor(source=sub, target=cat, ob_map=tuple(objs),
                   hom_maps={(i, j): identity_map(homs[(i, j)])
                             for i in range(len(objs)) for j in range(len(objs))})
    return sub, inc


def double_object(cat: SimplicialCategory, a: int) -> tuple:
    """(E', collapse) where E' has two objects a, a' and every hom equal to
    Hom(a, a); the collapse sends both to a and is the identity on homs."""
    if not (0 <= a < cat.n_objects()):
        raise InputError("unknown object")
    h = cat.hom[(a, a)]
    label = cat.objects[a]
    homs = {(i, j): h for i in range(2) for j in range(2)}
    table = cat.compose[(a, a, a)]
    compose = {(i, j, k): table for i in range(2) for j in range(2)
               for k in range(2)}
    e = SimplicialCategory(objects=(label, f"{label}'"), hom=homs,
                           compose=compose,
                           identities=(cat.identities[a], cat.identities[a]),
                           dim_bound=cat.dim_bound)
    collapse = SFunctor(source=e, target=cat, ob_map=(a, a),
                        hom_maps={(i, j): SSetMap(h, h, [list(range(h.size(k)))
                                                         for k in range(cat.dim_bound + 1)])
                                  for i in range(2) for j in range(2)})
    return e, collapse


def coproduct(cats: list) -> tuple:
    """(coproduct, list of inclusion functors)."""
    if not cats:
        raise InputError("coproduct needs at least the empty list... of one")
    bound = cats[0].dim_bound
    if any(c.dim_bound != bound for c in cats):
        raise InputError("dim_bound mismatch in coproduct")
    offsets = []
    total = 0
    labels = []
    for ci, c in enumerate(cats):
        offsets.append(total)
        total += c.n_objects()
        for lbl in c.objects:
            labels.append(lbl if lbl not in labels else f"{lbl}#{ci}")
    owner = []
    local = []
    for ci, c in enumerate(cats):
        owner.extend([ci] * c.n_objects())
        local.extend(range(c.n_objects()))
    empty = empty_sset(bound)
    homs = {}
    identities = []
    for i in range(total):
        for j in range(total):
            if owner[i] == owner[j]:
                homs[(i, j)] = cats[owner[i]].hom[(local[i], local[j])]
            else:
                homs[(i, j)] = empty
    for i in range(total):
        identities.append(cats[owner[i]].identities[local[i]])
    compose = {}
    empty_levels = tuple(() for _ in range(bound + 1))
    for i in range(total):
        for j in range(total):
            for k in range(total):
                if owner[i] == owner[j] == owner[k]:
                    compose[(i, j, k)] = cats[owner[i]].compose[
                        (local[i], local[j], local[k])]
                else:
                    compose[(i, j, k)] = empty_levels
    cop = SimplicialCategory(objects=tuple(labels), hom=homs, compose=compose,
                             identities=tuple(identities), dim_bound=bound)
    inclusions = []
    for ci, c in enumerate(cats):
        off = offsets[ci]
        hom_maps = {}
        for (a, b) in c.object_pairs():
            src = c.hom[(a, b)]
            hom_maps[(a, b)] = SSetMap(src, cop.hom[(off + a, off + b)],
                                       [list(range(src.size(k)))
                                        for k in range(bound + 1)])
        inclusions.append(SFunctor(source=c, target=cop,
                                   ob_map=tuple(off + x for x in range(c.n_objects())),
                                   hom_maps=hom_maps))
    return cop, inclusions


def pullback_scat(f: SFunctor, h: SFunctor) -> tuple:
    """Pullback B x_D C of f: B -> D, h: C -> D.

    Returns (P, pr_B, pr_C).  Objects are the pairs (b, c) with matching
    images, in lexicographic order; homs are levelwise pullbacks.
    """
    if f.target != h.target:
        raise InputError("pullback needs a common target")
    B, C = f.source, h.source
    bound = B.dim_bound
    obj_pairs = [(b, c) for b in range(B.n_objects()) for c in range(C.n_objects())
                 if f.ob(b) == h.ob(c)]
    if B.dim_bound != C.dim_bound:
        raise InputError("dim_bound mismatch")
    homs = {}
    proj_b = {}
    proj_c = {}
    pair_idx = {}
    for i, (b1, c1) in enumerate(obj_pairs):
        for j, (b2, c2) in enumerate(obj_pairs):
            p, prx, pry, idx = pullback_ssets(f.hom_maps[(b1, b2)],
                                              h.hom_maps[(c1, c2)])
            homs[(i, j)] = p
            proj_b[(i, j)] = prx
            proj_c[(i, j)] = pry
            pair_idx[(i, j)] = idx

    def rule(k, i, j, l, g, ff):
        b1, c1 = obj_pairs[i]
        b2, c2 = obj_pairs[j]
        b3, c3 = obj_pairs[l]
        bf = proj_b[(i, j)].assign[k][ff]
        cf = proj_c[(i, j)].assign[k][ff]
        bg = proj_b[(j, l)].assign[k][g]
        cg = proj_c[(j, l)].assign[k][g]
        target_pair = (B.comp(k, b1, b2, b3, bg, bf),
                       C.comp(k, c1, c2, c3, cg, cf))
        return pair_idx[(i, l)][k][target_pair]

    compose = build_compose(len(obj_pairs), homs, bound, rule)
    identities = []
    for i, (b, c) in enumerate(obj_pairs):
        identities.append(pair_idx[(i, i)][0][(B.identities[b], C.identities[c])])
    P = SimplicialCategory(
        objects=tuple(f"({B.objects[b]},{C.objects[c]})" for (b, c) in obj_pairs),
        hom=homs, compose=compose, identities=tuple(identities),
        dim_bound=bound)
    pr_B = SFunctor(source=P, target=B,
                    ob_map=tuple(b for (b, c) in obj_pairs),
                    hom_maps={(i, j): proj_b[(i, j)]
                              for i in range(len(obj_pairs))
                              for j in range(len(obj_pairs))})
    pr_C = SFunctor(source=P, target=C,
                    ob_map=tuple(c for (b, c) in obj_pairs),
                    hom_maps={(i, j): proj_c[(i, j)]
                              for i in range(len(obj_pairs))
                              for j in range(len(obj_pairs))})
    return P, pr_B, pr_C


def pullback_mediating(P: SimplicialCategory, pr_B: SFunctor, pr_C: SFunctor,
                       cone_B: SFunctor, cone_C: SFunctor) -> SFunctor:
    """The unique functor T -> P through a commuting cone (T -> B, T -> C).

    Raises StructureError if the cone does not factor (which would refute
    the universal property)."""
    T = cone_B.source
    if cone_C.source != T:
        raise InputError("cone legs must share their source")
    obj_pairs = list(zip(pr_B.ob_map, pr_C.ob_map))
    ob_map = []
    for t in range(T.n_objects()):
        pair = (cone_B.ob(t), cone_C.ob(t))
        if pair not in obj_pairs:
            raise StructureError("cone does not factor on objects")
        ob_map.append(obj_pairs.index(pair))
    hom_maps = {}
    for (a, b) in T.object_pairs():
        i, j = ob_map[a], ob_map[b]
        hom_p = P.hom[(i, j)]
        # invert the joint projection on simplices
        lookup = [dict() for _ in range(P.dim_bound + 1)]
        for k in range(P.dim_bound + 1):
            for idx in range(hom_p.size(k)):
                lookup[k][(pr_B.hom_maps[(i, j)].assign[k][idx],
                           pr_C.hom_maps[(i, j)].assign[k][idx])] = idx
        assign = []
        for k in range(P.dim_bound + 1):
            level = []
            for idx in range(T.hom[(a, b)].size(k)):
                key = (cone_B.apply(k, a, b, idx), cone_C.apply(k, a, b, idx))
                if key not in lookup[k]:
                    raise StructureError("cone does not factor on homs")
                level.append(lookup[k][key])
            assign.append(level)
        hom_maps[(a, b)] = SSetMap(T.hom[(a, b)], hom_p, assign)
    return SFunctor(source=T, target=P, ob_map=tuple(ob_map), hom_maps=hom_maps)


# ---------------------------------------------------------------------------
# pi0

def pi0_data(cat: SimplicialCategory):
    """(component category, classes) where classes[(a, b)] is the pi0
    partition of Hom(a, b) and morphism i of the component category is the
    i-th class.  Well-definedness of induced composition is asserted."""
    key = "pi0_data"
    if key in cat._cache:
        return cat._cache[key]
    classes = {}
    class_of = {}
    for (a, b) in cat.object_pairs():
        h = cat.hom[(a, b)]
        classes[(a, b)] = pi0(h)
        class_of[(a, b)] = pi0_class_of(h)
    homs = {(a, b): tuple(f"c{i}" for i in range(len(classes[(a, b)])))
            for (a, b) in cat.object_pairs()}
    compose = {}
    for (a, b, c) in cat.object_triples():
        table = []
        for gi, gcls in enumerate(classes[(b, c)]):
            row = []
            for fi, fcls in enumerate(classes[(a, b)]):
                values = {class_of[(a, c)][cat.comp(0, a, b, c, g0, f0)]
                          for g0 in gcls for f0 in fcls}
                if len(values) != 1:
                    raise StructureError(
                        f"pi0 composition not well defined at {(a, b, c)} "
                        f"classes ({gi},{fi})")
                row.append(values.pop())
            table.append(tuple(row))
        compose[(a, b, c)] = tuple(table)
    identities = tuple(class_of[(a, a)][cat.identities[a]]
                       for a in range(cat.n_objects()))
    fc = FiniteCategory(objects=cat.objects, homs=homs, compose=compose,
                        identities=identities)
    cat._cache[key] = (fc, classes)
    return cat._cache[key]


def pi0_category(cat: SimplicialCategory) -> FiniteCategory:
    return pi0_data(cat)[0]


def pi0_functor(F: SFunctor) -> FiniteFunctor:
    src_cat, src_classes = pi0_data(F.source)
    tgt_cat, tgt_classes = pi0_data(F.target)
    mor_maps = {}
    for (a, b) in F.source.object_pairs():
        tgt_class_of = pi0_class_of(F.target.hom[(F.ob(a), F.ob(b))])
        mor_maps[(a, b)] = tuple(
            tgt_class_of[F.apply(0, a, b, cls[0])]
            for cls in src_classes[(a, b)])
    return FiniteFunctor(source=src_cat, target=tgt_cat,
                         ob_map=F.ob_map, mor_maps=mor_maps)


def is_homotopy_equivalence(cat: SimplicialCategory, a: int, b: int,
                            e: int) -> bool:
    """Whether the 0-simplex e of Hom(a, b) becomes an isomorphism in the
    component category."""
    if not (0 <= e < cat.hom[(a, b)].size(0)):
        raise InputError("not a 0-simplex of the stated hom")
    from .cat import is_isomorphism
    fc, classes = pi0_data(cat)
    cls = pi0_class_of(cat.hom[(a, b)])[e]
    ok, _ = is_isomorphism(fc, a, b, cls)
    return ok


def homotopy_equivalence_witness(cat: SimplicialCategory, a: int, b: int,
                                 e: int):
    """(True, (inverse class rep,)) or (False, None) with a re-checkable
    inverse 0-simplex when one exists."""
    from .cat import is_isomorphism
    fc, classes = pi0_data(cat)
    cls = pi0_class_of(cat.hom[(a, b)])[e]
    ok, inv_cls = is_isomorphism(fc, a, b, cls)
    if not ok:
        return False, None
    return True, classes[(b, a)][inv_cls][0]
