"""Weak-contractibility, weak-equivalence and lifting checks for
simplicial sets.

Weak contractibility is certified through pi_0, the edge-path group and
integer homology; for skeletal finite complexes this combination is
complete on simply connected inputs (simple connectivity plus vanishing
reduced homology forces contractibility), so the only honest escape hatch
is an undecided fundamental group.

The weak-equivalence checker is deliberately partial: definite answers
are sound, isomorphisms and simply connected comparisons are decided, and
everything else returns unknown.

Lifting problems of simplicial sets are solved by exhaustive search over
assignments on nondegenerate simplices; Kan and acyclic-fibration checks
reduce to those searches against horn and boundary inclusions up to the
budgeted dimension, and that bound is recorded in the verdict qualifier.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import homology as hml
from .pi1 import edge_path_presentation, is_trivial_group
from .sset import (SimplicialSet, SSetMap, SearchBudgetHit, boundary,
                   boundary_inclusion, compose_maps, empty_sset,
                   enumerate_sset_maps, horn, horn_inclusion, identity_map,
                   is_iso_map, pi0, pi0_class_of, standard_simplex)
from .verdict import (BUDGET, Budget, InputError, UNDECIDED_GROUP, Verdict,
                      aggregate)


def is_weakly_contractible(x: SimplicialSet, budget: Budget | None = None) -> Verdict:
    budget = budget or Budget()
    comps = pi0(x)
    if len(comps) != 1:
        return Verdict.no(witness={"pi0_classes": len(comps)})
    for k in range(1, x.dim_bound + 1):
        h = hml.homology(x, k)
        if h != (0, []):
            return Verdict.no(witness={"nonvanishing_homology": {"degree": k,
                                                                 "value": h}})
    pi1_verdict = is_trivial_group(edge_path_presentation(x, comps[0][0]), budget)
    if pi1_verdict.is_no:
        return Verdict.no(witness={"pi1": pi1_verdict.witness})
    if not pi1_verdict.is_definite:
        return Verdict.unknown(UNDECIDED_GROUP, witness=pi1_verdict.witness)
    return Verdict.yes(witness={"pi0_classes": 1, "pi1": "trivial",
                                "reduced_homology": "vanishes"})


def _pi0_map(f: SSetMap) -> list:
    """Component index map induced by f."""
    src_class = pi0_class_of(f.source)
    tgt_class = pi0_class_of(f.target)
    out = [None] * len(pi0(f.source))
    for v in range(f.source.size(0)):
        out[src_class[v]] = tgt_class[f.assign[0][v]]
    return out


def pi0_bijective(f: SSetMap) -> bool:
    m = _pi0_map(f)
    return len(set(m)) == len(m) == len(pi0(f.target))


def _all_components_simply_connected(x: SimplicialSet, budget: Budget) -> Verdict:
    sub = []
    for comp in pi0(x):
        sub.append(is_trivial_group(edge_path_presentation(x, comp[0]), budget))
    return aggregate(sub)


def is_weak_equivalence_sset(f: SSetMap, budget: Budget | None = None) -> Verdict:
    """Sound, partial weak-equivalence check.

    Definite routes: isomorphisms; both sides certified weakly
    contractible; pi0 bijection + simply connected components on both
    sides + homology isomorphism through the induced chain map.  A failed
    pi0 or homology comparison is a definite no.
    """
    budget = budget or Budget()
    inv = is_iso_map(f)
    if inv is not None:
        return Verdict.yes(witness={"isomorphism": True}, route="isomorphism")
    if not pi0_bijective(f):
        return Verdict.no(witness={
            "pi0_source": len(pi0(f.source)), "pi0_target": len(pi0(f.target)),
            "pi0_map": _pi0_map(f)})
    ok, fail = hml.homology_iso_all_degrees(f)
    if not ok:
        return Verdict.no(witness={"homology_failure_degree": fail,
                                   "source": hml.homology(f.source, fail),
                                   "target": hml.homology(f.target, fail)})
    wc_x = is_weakly_contractible(f.source, budget)
    wc_y = is_weakly_contractible(f.target, budget)
    if wc_x.is_yes and wc_y.is_yes:
        return Verdict.yes(witness={"both_weakly_contractible": True},
                           route="contractible")
    sc_x = _all_components_simply_connected(f.source, budget)
    sc_y = _all_components_simply_connected(f.target, budget)
    if sc_x.is_yes and sc_y.is_yes:
        return Verdict.yes(witness={"pi0": "bijective", "pi1": "trivial",
                                    "homology": "isomorphism"},
                           route="simply-connected")
    # a definitely nontrivial pi1 on either side leaves the comparison
    # undecided (homology cannot see it), not refuted
    return Verdict.unknown(UNDECIDED_GROUP,
                           witness={"pi1_source": sc_x.kind,
                                    "pi1_target": sc_y.kind})


# ---------------------------------------------------------------------------
# lifting of simplicial sets

@dataclass(frozen=True)
class SSetSquare:
    """Commutative square: bottom . i = p . top (i left, p right)."""
    i: SSetMap
    p: SSetMap
    top: SSetMap
    bottom: SSetMap

    def commutes(self) -> bool:
        return compose_maps(self.p, self.top) == compose_maps(self.bottom, self.i)


def check_square_lift(square: SSetSquare, diagonal: SSetMap) -> bool:
    """Independent witness verifier: both triangles commute."""
    return (compose_maps(diagonal, square.i) == square.top
            and compose_maps(square.p, diagonal) == square.bottom)


def _retract_by_word(y: SimplicialSet, k: int, idx: int, word: tuple):
    """The unique c with s_word(c) = idx, or None if idx is not in the
    image of s_word."""
    cur, dim = idx, k
    for j in word:
        cur = y.face(dim, cur, j)
        dim -= 1
    return cur if y.apply_word(dim, cur, word) == idx else None


def _diagonal_search(square: SSetSquare, max_nodes):
    """First diagonal (in enumeration order) by exhaustive assignment on
    nondegenerate simplices of B, pruned by both triangle constraints."""
    i, p, top, bottom = square.i, square.p, square.top, square.bottom
    b, c = i.target, p.source
    forced = {}
    for k in range(i.source.dim_bound + 1):
        for idx in i.source.nondeg_indices(k):
            img = i.assign[k][idx]
            want = top.assign[k][idx]
            rec = b.dims[k][img]
            if rec.nondeg:
                key, val = (k, img), want
            else:
                # s_word(base) must land on `want`; that pins the base image
                base = _retract_by_word(c, k, want, rec.word)
                if base is None:
                    return None
                key, val = (k - len(rec.word), rec.base), base
            if forced.get(key, val) != val:
                return None  # the top map is inconsistent on a fiber of i
            forced[key] = val

    def fiber(k, idx, cand):
        return p.assign[k][cand] == bottom.assign[k][idx]

    found = enumerate_sset_maps(b, c, forced=forced, fiber=fiber,
                                first_only=True, max_nodes=max_nodes)
    for g in found:
        if check_square_lift(square, g):
            return g
    return None


def naive_diagonal_exists(square: SSetSquare) -> bool:
    """Slow independent re-search used to re-validate DefiniteNo squares:
    plain enumeration of all maps B -> C with no pruning beyond validity."""
    b, c = square.i.target, square.p.source
    for g in enumerate_sset_maps(b, c):
        if check_square_lift(square, g):
            return True
    return False


def enumerate_squares(i: SSetMap, p: SSetMap, max_nodes=None):
    """All commutative squares with i on the left and p on the right.

    Bottom maps are enumerated first, then tops constrained into the
    fibers of p, in deterministic search order.
    """
    squares = []
    bottoms = enumerate_sset_maps(i.target, p.target, max_nodes=max_nodes)
    for bottom in bottoms:
        want = compose_maps(bottom, i)

        def fiber(k, idx, cand, _want=want):
            return p.assign[k][cand] == _want.assign[k][idx]

        tops = enumerate_sset_maps(i.source, p.source, fiber=fiber,
                                   max_nodes=max_nodes)
        for top in tops:
            sq = SSetSquare(i=i, p=p, top=top, bottom=bottom)
            if sq.commutes():
                squares.append(sq)
    return squares


def has_rlp_sset(p: SSetMap, i: SSetMap, budget: Budget | None = None) -> Verdict:
    """Right lifting property of p against i, by exhaustive search."""
    budget = budget or Budget()
    try:
        squares = enumerate_squares(i, p, max_nodes=budget.max_steps)
        witnesses = []
        for sq in squares:
            diag = _diagonal_search(sq, max_nodes=budget.max_steps)
            if diag is None:
                return Verdict.no(witness={"square": sq})
            witnesses.append((sq, diag))
    except SearchBudgetHit:
        return Verdict.unknown(BUDGET)
    return Verdict.yes(witness={"lifts": witnesses})


def is_kan_fibration(p: SSetMap, budget: Budget | None = None) -> Verdict:
    budget = budget or Budget()
    bound = min(budget.max_dim, p.source.dim_bound)
    sub = []
    for n in range(1, bound + 1):
        for k in range(n + 1):
            inc = horn_inclusion(n, k, p.source.dim_bound)
            v = has_rlp_sset(p, inc, budget)
            if v.is_no:
                return Verdict.no(witness={"horn": (n, k), **v.witness},
                                  checked_max_dim=bound)
            sub.append(v)
    return aggregate(sub, witness_on_yes={"all_horns_filled": True},
                     checked_max_dim=bound)


def is_acyclic_fibration_sset(p: SSetMap, budget: Budget | None = None) -> Verdict:
    budget = budget or Budget()
    bound = min(budget.max_dim, p.source.dim_bound)
    sub = []
    for n in range(0, bound + 1):
        inc = boundary_inclusion(n, p.source.dim_bound)
        v = has_rlp_sset(p, inc, budget)
        if v.is_no:
            return Verdict.no(witness={"boundary": n, **v.witness},
                              checked_max_dim=bound)
        sub.append(v)
    return aggregate(sub, witness_on_yes={"all_boundaries_lift": True},
                     checked_max_dim=bound)


def unique_map_to_point(x: SimplicialSet) -> SSetMap:
    pt = standard_simplex(0, x.dim_bound)
    return SSetMap(x, pt, [[0] * x.size(k) for k in range(x.dim_bound + 1)])
