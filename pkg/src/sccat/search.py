"""Exhaustive enumeration of functors between simplicial categories.

Object maps are tried in lexicographic order, then simplex images are
assigned dimension by dimension (pairs in index order, nondegenerate
simplices in index order), pruned by face and degeneracy compatibility,
forced identities, optional fibers, and composition preservation checked
as soon as every participant of an instance is determined.  The order is
part of the contract: counterexamples and witnesses must be reproducible.
"""
from __future__ import annotations

import itertools

from .scat import SFunctor, SimplicialCategory
from .sset import SSetMap, SearchBudgetHit
from .verdict import InputError


def _comp_instances(src: SimplicialCategory):
    """All composition instances of the source, grouped by the slot from
    which all three participants are determined."""
    key = "comp_instances"
    if key in src._cache:
        return src._cache[key]
    bound = src.dim_bound
    slot_pos = {}
    slots = []
    for k in range(bound + 1):
        for (a, b) in src.object_pairs():
            for idx in src.hom[(a, b)].nondeg_indices(k):
                slot_pos[(k, (a, b), idx)] = len(slots)
                slots.append((k, (a, b), idx))

    def det_slot(k, pair, idx):
        rec = src.hom[pair].dims[k][idx]
        if rec.nondeg:
            return slot_pos[(k, pair, idx)]
        return slot_pos[(k - len(rec.word), pair, rec.base)]

    grouped = [[] for _ in slots]
    for (a, b, c) in src.object_triples():
        hf, hg = src.hom[(a, b)], src.hom[(b, c)]
        for k in range(bound + 1):
            for g in range(hg.size(k)):
                for f in range(hf.size(k)):
                    gf = src.comp(k, a, b, c, g, f)
                    ready = -1
                    for (kk, pair, idx) in ((k, (a, b), f), (k, (b, c), g),
                                            (k, (a, c), gf)):
                        ready = max(ready, det_slot(kk, pair, idx))
                    if ready >= 0:
                        grouped[ready].append((k, a, b, c, g, f, gf))
    src._cache[key] = (slots, slot_pos, grouped)
    return src._cache[key]


def enumerate_sfunctors(src: SimplicialCategory, dst: SimplicialCategory, *,
                        ob_fixed=None, ob_fiber=None, forced=None, fiber=None,
                        first_only=False, max_nodes=None):
    """All functors src -> dst subject to the constraints.

    ob_fixed: {object -> required image}; ob_fiber(a, cand) -> bool;
    forced: {(k, (a, b), idx) -> required image index} on nondegenerate
    source slots; fiber(ob_map, k, (a, b), idx, cand) -> bool.  Raises
    SearchBudgetHit past max_nodes assignments.
    """
    if src.dim_bound != dst.dim_bound:
        raise InputError("dim_bound mismatch")
    ob_fixed = ob_fixed or {}
    forced = forced or {}
    bound = src.dim_bound
    n_src, n_dst = src.n_objects(), dst.n_objects()
    slots, slot_pos, comp_groups = _comp_instances(src)
    results = []
    nodes = 0

    if n_src == 0:
        return [SFunctor(source=src, target=dst, ob_map=(), hom_maps={})]

    ob_choices = []
    for a in range(n_src):
        if a in ob_fixed:
            cands = [ob_fixed[a]]
        else:
            cands = range(n_dst)
        if ob_fiber is not None:
            cands = [x for x in cands if ob_fiber(a, x)]
        ob_choices.append(list(cands))

    for ob_map in itertools.product(*ob_choices):
        assign = {}

        def image_of(k, pair, idx):
            rec = src.hom[pair].dims[k][idx]
            if rec.nondeg:
                return assign[(k, pair, idx)]
            bdim = k - len(rec.word)
            base_img = assign[(bdim, pair, rec.base)]
            tgt = dst.hom[(ob_map[pair[0]], ob_map[pair[1]])]
            return tgt.apply_word(bdim, base_img, rec.word)

        def comp_ok(pos):
            for (k, a, b, c, g, f, gf) in comp_groups[pos]:
                img_f = image_of(k, (a, b), f)
                img_g = image_of(k, (b, c), g)
                img_gf = image_of(k, (a, c), gf)
                if dst.comp(k, ob_map[a], ob_map[b], ob_map[c],
                            img_g, img_f) != img_gf:
                    return False
            return True

        def candidates(pos):
            k, pair, idx = slots[pos]
            tgt = dst.hom[(ob_map[pair[0]], ob_map[pair[1]])]
            if k == 0:
                if idx == src.identities[pair[0]] and pair[0] == pair[1]:
                    cands = [dst.identities[ob_map[pair[0]]]]
                else:
                    cands = range(tgt.size(0))
            else:
                rec = src.hom[pair].dims[k][idx]
                key = tuple(image_of(k - 1, pair, f) for f in rec.faces)
                cands = tgt.face_key_index(k).get(key, ())
            want = forced.get((k, pair, idx))
            out = []
            for cand in cands:
                if want is not None and cand != want:
                    continue
                if fiber is not None and not fiber(ob_map, k, pair, idx, cand):
                    continue
                out.append(cand)
            return out

        def finish():
            hom_maps = {}
            for (a, b) in src.object_pairs():
                tgt = dst.hom[(ob_map[a], ob_map[b])]
                hom_maps[(a, b)] = SSetMap(
                    src.hom[(a, b)], tgt,
                    [[image_of(k, (a, b), i)
                      for i in range(src.hom[(a, b)].size(k))]
                     for k in range(bound + 1)])
            results.append(SFunctor(source=src, target=dst,
                                    ob_map=tuple(ob_map), hom_maps=hom_maps))

        def rec_assign(pos):
            nonlocal nodes
            if pos == len(slots):
                finish()
                return not first_only
            for cand in candidates(pos):
                nodes += 1
                if max_nodes is not None and nodes > max_nodes:
                    raise SearchBudgetHit()
                assign[slots[pos]] = cand
                if comp_ok(pos) and not rec_assign(pos + 1):
                    return False
            assign.pop(slots[pos], None)
            return True

        if not rec_assign(0):
            break
    return results
