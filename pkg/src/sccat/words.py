"""Pushouts of simplicial categories along generating maps, by normalized
alternating words.

The supported attachment shapes are exactly the ones the generating sets
use:

* adding an object (the map from the empty category to the singleton);
* U(i) for a monomorphism i: X -> Y of simplicial sets;
* an inclusion {x} -> H of the marked two-object kind.

In every case the pushout of ``glue: A -> C`` against ``inc: A -> F`` is a
free product amalgamated over the image of A: morphisms are words whose
letters come from C and from F, written in diagrammatic order.  A word is
normal when identity letters are gone, letters of F lying in the image of
A have been rewritten into C through the glue, and adjacent letters that
compose inside a single factor have been composed there ("unit and
existing-composition reductions").  Normal forms are unique, so the word
category is the genuine pushout whenever generation stabilizes; if new
words keep appearing past the word budget, BudgetExceeded is raised.

Faces, degeneracies and composition act letterwise, which keeps the whole
construction simplicial; stale decomposition data is re-derived from the
finished tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .scat import (SFunctor, SimplicialCategory, compose_sfunctors,
                   singleton_cat, functor_U, functor_U_map, empty_cat)
from .sset import (SimplicialSet, SSetMap, derive_records, empty_sset,
                   identity_map)
from .verdict import Budget, BudgetExceeded, InputError

# letters: ("C", a, b, idx) with C-object endpoints, or ("F", u, v, idx)
# with F-object endpoints; the simplex dimension is carried by the word.


@dataclass(frozen=True)
class Attachment:
    """A generating map inc: A -> F together with its shape tag."""
    kind: str                   # "c2" | "usset" | "a2"
    A: SimplicialCategory
    F: SimplicialCategory
    inc: SFunctor
    label: str = ""

    @staticmethod
    def c2(dim_bound: int = 4) -> "Attachment":
        a = empty_cat(dim_bound)
        f = singleton_cat(dim_bound)
        inc = SFunctor(source=a, target=f, ob_map=(), hom_maps={})
        return Attachment(kind="c2", A=a, F=f, inc=inc, label="phi->{x}")

    @staticmethod
    def from_sset_mono(i: SSetMap, label: str = "") -> "Attachment":
        for k in range(i.source.dim_bound + 1):
            if len(set(i.assign[k])) != i.source.size(k):
                raise InputError("attachment needs a monomorphism of simplicial sets")
        return Attachment(kind="usset", A=functor_U(i.source),
                          F=functor_U(i.target), inc=functor_U_map(i),
                          label=label or "U(mono)")

    @staticmethod
    def a2(h: SimplicialCategory, x_index: int = 0, label: str = "a2") -> "Attachment":
        if h.n_objects() != 2:
            raise InputError("an A2 attachment target has exactly two objects")
        from .constructions_basic import inclusion_of_object
        a = singleton_cat(h.dim_bound, label=str(h.objects[x_index]))
        inc = inclusion_of_object(h, x_index, a)
        return Attachment(kind="a2", A=a, F=h, inc=inc, label=label)


@dataclass
class PushoutResult:
    category: SimplicialCategory
    inc_base: SFunctor          # C -> D
    inc_attached: SFunctor      # F -> D
    stabilized: bool
    attachment: Attachment
    glue: SFunctor
    new_objects: tuple
    word_index: dict            # (k, (a, b)) -> {word: index}
    words: dict                 # (k, (a, b)) -> [word, ...]


class _WordEngine:
    def __init__(self, base: SimplicialCategory, att: Attachment,
                 glue: SFunctor, budget: Budget):
        if glue.source != att.A:
            raise InputError("glue must start at the attachment source")
        if glue.target != base:
            raise InputError("glue must land in the base category")
        if base.dim_bound != att.F.dim_bound:
            raise InputError("dim_bound mismatch between base and attachment")
        self.C = base
        self.F = att.F
        self.att = att
        self.glue = glue
        self.budget = budget
        self.bound = base.dim_bound

        # object bookkeeping: D-objects = C-objects + new F-objects
        inc_ob_image = set(att.inc.ob_map)
        self.f2d = {}
        self.new_objects = []
        for a_obj in range(att.A.n_objects()):
            self.f2d[att.inc.ob(a_obj)] = glue.ob(a_obj)
        for u in range(self.F.n_objects()):
            if u not in inc_ob_image:
                self.f2d[u] = base.n_objects() + len(self.new_objects)
                self.new_objects.append(u)
        self.n_objects = base.n_objects() + len(self.new_objects)

        # F-simplices in the image of A, rewritten through the glue
        self.image_rewrite = {}
        for (a, b) in att.A.object_pairs():
            inc_map = att.inc.hom_maps[(a, b)]
            glue_map = glue.hom_maps[(a, b)]
            u, v = att.inc.ob(a), att.inc.ob(b)
            ga, gb = glue.ob(a), glue.ob(b)
            for k in range(self.bound + 1):
                for idx in range(att.A.hom[(a, b)].size(k)):
                    key = (k, u, v, inc_map.assign[k][idx])
                    val = ("C", ga, gb, glue_map.assign[k][idx])
                    if key in self.image_rewrite and self.image_rewrite[key] != val:
                        raise InputError("attachment inclusion is not injective")
                    self.image_rewrite[key] = val

        self.c_id = [[base.identity_tower(a, k) for a in range(base.n_objects())]
                     for k in range(self.bound + 1)]
        self.f_id = [[self.F.identity_tower(u, k) for u in range(self.F.n_objects())]
                     for k in range(self.bound + 1)]

    # -- letters -------------------------------------------------------------
    def d_endpoints(self, letter):
        tag, a, b, idx = letter
        if tag == "C":
            return a, b
        return self.f2d[a], self.f2d[b]

    def rewrite(self, k, letter):
        """Normalize one letter: None for identities, C-letters for the
        image of the attachment source."""
        while True:
            tag, a, b, idx = letter
            if tag == "C":
                if a == b and self.c_id[k][a] == idx:
                    return None
                return letter
            if a == b and self.f_id[k][a] == idx:
                return None
            img = self.image_rewrite.get((k, a, b, idx))
            if img is None:
                return letter
            letter = img

    def push(self, out, letter, k):
        letter = self.rewrite(k, letter)
        if letter is None:
            return
        out.append(letter)
        while len(out) >= 2:
            l1, l2 = out[-2], out[-1]
            t1, a1, b1, i1 = l1
            t2, a2, b2, i2 = l2
            if t1 != t2 or b1 != a2:
                break
            out.pop()
            out.pop()
            if t1 == "C":
                merged = ("C", a1, b2, self.C.comp(k, a1, b1, b2, i2, i1))
            else:
                merged = ("F", a1, b2, self.F.comp(k, a1, b1, b2, i2, i1))
            merged = self.rewrite(k, merged)
            if merged is not None:
                out.append(merged)

    def normalize(self, k, letters):
        out = []
        for letter in letters:
            self.push(out, letter, k)
        return tuple(out)

    def word_f_count(self, word):
        return sum(1 for l in word if l[0] == "F")

    def word_endpoints(self, word, at_pair=None):
        if word:
            return self.d_endpoints(word[0])[0], self.d_endpoints(word[-1])[1]
        return at_pair

    # -- closure ---------------------------------------------------------------
    def generate(self):
        bound = self.bound
        words = {}
        for k in range(bound + 1):
            for a in range(self.n_objects):
                for b in range(self.n_objects):
                    words[(k, a, b)] = {}

        def add(k, a, b, w):
            bucket = words[(k, a, b)]
            if w in bucket:
                return False
            if self.word_f_count(w) > self.budget.max_words:
                raise BudgetExceeded(
                    "free closure did not stabilize within max_words",
                    partial=words)
            bucket[w] = len(bucket)
            return True

        # atoms: identities, base simplices, attached simplices
        for k in range(bound + 1):
            for o in range(self.n_objects):
                add(k, o, o, ())
            for (a, b) in self.C.object_pairs():
                for idx in range(self.C.hom[(a, b)].size(k)):
                    w = self.normalize(k, [("C", a, b, idx)])
                    sa, sb = self.word_endpoints(w, (a, b))
                    add(k, sa, sb, w)
            for (u, v) in self.F.object_pairs():
                for idx in range(self.F.hom[(u, v)].size(k)):
                    w = self.normalize(k, [("F", u, v, idx)])
                    sa, sb = self.word_endpoints(w, (self.f2d[u], self.f2d[v]))
                    add(k, sa, sb, w)

        # closure under composition, breadth-first by rounds
        steps = 0
        for k in range(bound + 1):
            changed = True
            while changed:
                changed = False
                snapshot = {(a, b): list(words[(k, a, b)])
                            for a in range(self.n_objects)
                            for b in range(self.n_objects)}
                for a in range(self.n_objects):
                    for b in range(self.n_objects):
                        for w1 in snapshot[(a, b)]:
                            for c in range(self.n_objects):
                                for w2 in snapshot[(b, c)]:
                                    steps += 1
                                    if steps > self.budget.max_steps:
                                        raise BudgetExceeded(
                                            "free closure exceeded max_steps",
                                            partial=words)
                                    w = self.normalize(k, list(w1) + list(w2))
                                    sa, sb = self.word_endpoints(w, (a, c))
                                    if add(k, sa, sb, w):
                                        changed = True
        return words

    # -- assembling the result ---------------------------------------------------
    def build(self) -> PushoutResult:
        raw = self.generate()
        bound = self.bound
        n = self.n_objects

        def letter_key(letter):
            tag, a, b, idx = letter
            return (0 if tag == "C" else 1, a, b, idx)

        def word_key(w):
            return (self.word_f_count(w), len(w), tuple(letter_key(l) for l in w))

        # deterministic order: images of old simplices first (in old index
        # order), then everything else by (generator count, length, letters)
        words = {}
        index = {}
        old_word = {}
        for k in range(bound + 1):
            for (a, b) in self.C.object_pairs():
                lst = []
                seen = set()
                for idx in range(self.C.hom[(a, b)].size(k)):
                    w = self.normalize(k, [("C", a, b, idx)])
                    old_word[(k, a, b, idx)] = w
                    if w not in seen:
                        seen.add(w)
                        lst.append(w)
                rest = sorted((w for w in raw[(k, a, b)] if w not in seen),
                              key=word_key)
                lst.extend(rest)
                words[(k, (a, b))] = lst
                index[(k, (a, b))] = {w: i for i, w in enumerate(lst)}
            for a in range(n):
                for b in range(n):
                    if (k, (a, b)) in words:
                        continue
                    lst = sorted(raw[(k, a, b)], key=word_key)
                    words[(k, (a, b))] = lst
                    index[(k, (a, b))] = {w: i for i, w in enumerate(lst)}

        def letter_face(k, letter, i):
            tag, a, b, idx = letter
            hom = self.C.hom[(a, b)] if tag == "C" else self.F.hom[(a, b)]
            return (tag, a, b, hom.face(k, idx, i))

        def letter_degen(k, letter, j):
            tag, a, b, idx = letter
            hom = self.C.hom[(a, b)] if tag == "C" else self.F.hom[(a, b)]
            return (tag, a, b, hom.degeneracy(k, idx, j))

        homs = {}
        for a in range(n):
            for b in range(n):
                faces_tables = []
                degens_tables = []
                for k in range(bound + 1):
                    lst = words[(k, (a, b))]
                    faces_lvl = []
                    degens_lvl = []
                    for w in lst:
                        if k >= 1:
                            fcs = []
                            for i in range(k + 1):
                                fw = self.normalize(
                                    k - 1, [letter_face(k, l, i) for l in w])
                                fcs.append(index[(k - 1, (a, b))][fw])
                            faces_lvl.append(fcs)
                        else:
                            faces_lvl.append([])
                        if k + 1 <= bound:
                            dgs = []
                            for j in range(k + 1):
                                dw = self.normalize(
                                    k + 1, [letter_degen(k, l, j) for l in w])
                                dgs.append(index[(k + 1, (a, b))][dw])
                            degens_lvl.append(dgs)
                        else:
                            degens_lvl.append([])
                    faces_tables.append(faces_lvl)
                    degens_tables.append(degens_lvl)
                homs[(a, b)] = SimplicialSet(
                    bound, derive_records(bound, faces_tables, degens_tables))

        compose = {}
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    levels = []
                    for k in range(bound + 1):
                        rows = []
                        for g in words[(k, (b, c))]:
                            row = []
                            for f in words[(k, (a, b))]:
                                w = self.normalize(k, list(f) + list(g))
                                row.append(index[(k, (a, c))][w])
                            rows.append(tuple(row))
                        levels.append(tuple(rows))
                    compose[(a, b, c)] = tuple(levels)

        labels = list(self.C.objects)
        for u in self.new_objects:
            lbl = str(self.F.objects[u])
            labels.append(lbl if lbl not in labels else f"{lbl}+")
        identities = tuple(index[(0, (o, o))][()] for o in range(n))
        D = SimplicialCategory(objects=tuple(labels), hom=homs,
                               compose=compose, identities=identities,
                               dim_bound=bound)

        inc_base = SFunctor(
            source=self.C, target=D,
            ob_map=tuple(range(self.C.n_objects())),
            hom_maps={(a, b): SSetMap(
                self.C.hom[(a, b)], homs[(a, b)],
                [[index[(k, (a, b))][old_word[(k, a, b, idx)]]
                  for idx in range(self.C.hom[(a, b)].size(k))]
                 for k in range(bound + 1)])
                for (a, b) in self.C.object_pairs()})

        f_ob = tuple(self.f2d[u] for u in range(self.F.n_objects()))
        f_maps = {}
        for (u, v) in self.F.object_pairs():
            du, dv = self.f2d[u], self.f2d[v]
            assign = []
            for k in range(bound + 1):
                level = []
                for idx in range(self.F.hom[(u, v)].size(k)):
                    w = self.normalize(k, [("F", u, v, idx)])
                    sa, sb = self.word_endpoints(w, (du, dv))
                    level.append(index[(k, (sa, sb))][w])
                assign.append(level)
            f_maps[(u, v)] = SSetMap(self.F.hom[(u, v)], homs[(du, dv)], assign)
        inc_attached = SFunctor(source=self.F, target=D, ob_map=f_ob,
                                hom_maps=f_maps)

        return PushoutResult(category=D, inc_base=inc_base,
                             inc_attached=inc_attached, stabilized=True,
                             attachment=self.att, glue=self.glue,
                             new_objects=tuple(self.new_objects),
                             word_index=index, words=words)


def pushout_generating(base: SimplicialCategory, attachment: Attachment,
                       glue: SFunctor, budget: Budget | None = None) -> PushoutResult:
    """Pushout of the attachment along the glue, exact when the free
    closure stabilizes within the budget; raises BudgetExceeded otherwise."""
    budget = budget or Budget()
    return _WordEngine(base, attachment, glue, budget).build()


def glue_for_c2(attachment: Attachment, base: SimplicialCategory) -> SFunctor:
    """The unique functor from the empty category into the base."""
    if attachment.kind != "c2":
        raise InputError("glue_for_c2 needs a c2 attachment")
    return SFunctor(source=attachment.A, target=base, ob_map=(), hom_maps={})


def glue_at_object(attachment: Attachment, base: SimplicialCategory,
                   obj: int) -> SFunctor:
    """Glue a one-object attachment source onto the given base object."""
    if attachment.kind != "a2":
        raise InputError("glue_at_object needs an a2 attachment")
    from .constructions_basic import inclusion_of_object
    return inclusion_of_object(base, obj, attachment.A)


def glue_for_u(attachment: Attachment, base: SimplicialCategory, gx: int,
               gy: int, hom_map: SSetMap) -> SFunctor:
    """Glue U(X) into the base: objects go to gx, gy and X maps into
    Hom(gx, gy) by the given simplicial map."""
    if attachment.kind != "usset":
        raise InputError("glue_for_u needs a U(mono) attachment")
    a_cat = attachment.A
    bound = base.dim_bound
    if hom_map.source != a_cat.hom[(0, 1)] or hom_map.target != base.hom[(gx, gy)]:
        raise InputError("hom_map must send Hom(x, y) of the source into "
                         "Hom(gx, gy) of the base")
    def id_tower_map(o, g):
        return SSetMap(a_cat.hom[(o, o)], base.hom[(g, g)],
                       [[base.identity_tower(g, k)]
                        for k in range(bound + 1)])
    return SFunctor(source=a_cat, target=base, ob_map=(gx, gy),
                    hom_maps={(0, 0): id_tower_map(0, gx),
                              (1, 1): id_tower_map(1, gy),
                              (0, 1): hom_map,
                              (1, 0): SSetMap(a_cat.hom[(1, 0)],
                                              base.hom[(gy, gx)],
                                              [[] for _ in range(bound + 1)])})


def pushout_mediating(result: PushoutResult, to_base: SFunctor,
                      to_attached: SFunctor) -> SFunctor:
    """The functor out of the pushout induced by a commuting cocone
    (to_base: C -> T, to_attached: F -> T)."""
    if to_base.source != result.inc_base.source:
        raise InputError("cocone leg must start at the base category")
    if to_attached.source != result.attachment.F:
        raise InputError("cocone leg must start at the attached category")
    # cocone must agree on the attachment source
    lhs = compose_sfunctors(to_base, result.glue)
    rhs = compose_sfunctors(to_attached, result.attachment.inc)
    if lhs != rhs:
        raise InputError("cocone does not commute with the attachment span")
    T = to_base.target
    D = result.category
    eng_new = result.new_objects
    n_base = result.inc_base.source.n_objects()
    f2d = {u: d for u, d in enumerate(result.inc_attached.ob_map)}
    ob_map = []
    for o in range(D.n_objects()):
        if o < n_base:
            ob_map.append(to_base.ob(o))
        else:
            u = eng_new[o - n_base]
            ob_map.append(to_attached.ob(u))

    def letter_image(k, letter):
        tag, a, b, idx = letter
        if tag == "C":
            return (to_base.ob(a), to_base.ob(b), to_base.apply(k, a, b, idx))
        return (to_attached.ob(a), to_attached.ob(b),
                to_attached.apply(k, a, b, idx))

    hom_maps = {}
    for (a, b) in D.object_pairs():
        assign = []
        for k in range(D.dim_bound + 1):
            level = []
            for w in result.words[(k, (a, b))]:
                if not w:
                    level.append(T.identity_tower(ob_map[a], k))
                    continue
                ta, tb, cur = letter_image(k, w[0])
                for letter in w[1:]:
                    la, lb, nxt = letter_image(k, letter)
                    cur = T.comp(k, ta, la, lb, nxt, cur)
                    tb = lb
                level.append(cur)
            assign.append(level)
        hom_maps[(a, b)] = SSetMap(D.hom[(a, b)], T.hom[(ob_map[a], ob_map[b])],
                                   assign)
    return SFunctor(source=D, target=T, ob_map=tuple(ob_map), hom_maps=hom_maps)
