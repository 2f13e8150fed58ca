import pytest

from sccat import sset
from sccat.sset import (
    SimplicialSet, Simplex, attach_nondeg, boundary, boundary_inclusion,
    compose_maps, compose_words, degeneracy_words, disjoint_union,
    empty_sset, enumerate_sset_maps, from_nondegenerate,
    from_simplicial_complex, horn, horn_inclusion, identity_map, is_iso_map,
    pi0, point, pullback_ssets, standard_simplex, sub_complex, validate_sset,
    validate_sset_map, word_after_degeneracy,
)


# -- degeneracy word algebra -------------------------------------------------

def test_word_normal_forms():
    assert word_after_degeneracy((), 0) == (0,)
    # s_0 s_0 = s_1 s_0
    assert word_after_degeneracy((0,), 0) == (1, 0)
    assert word_after_degeneracy((2, 0), 1) == (3, 1, 0)
    assert compose_words((1, 0), (0,)) == (2, 1, 0)


def test_degeneracy_words_counts():
    # over a 0-simplex there is exactly one word of each length
    for r in range(4):
        assert degeneracy_words(0, r) == [tuple(range(r - 1, -1, -1))]
    assert degeneracy_words(1, 1) == [(0,), (1,)]
    assert set(degeneracy_words(1, 2)) == {(1, 0), (2, 0), (2, 1)}


# -- constructors ------------------------------------------------------------

def test_standard_simplex_0():
    x = standard_simplex(0, dim_bound=4)
    assert [x.size(k) for k in range(5)] == [1, 1, 1, 1, 1]
    assert x.nondeg_indices(0) == (0,)
    for k in range(1, 5):
        assert x.nondeg_indices(k) == ()
    assert validate_sset(x) == []


def test_boundary_1_is_two_points():
    x = boundary(1, dim_bound=3)
    assert x.size(0) == 2
    for k in range(1, 4):
        assert x.nondeg_indices(k) == ()
    assert validate_sset(x) == []


def test_horn_2_1_simplices():
    x = horn(2, 1, dim_bound=3)
    assert len(x.nondeg_indices(0)) == 3
    # edges {01, 12}; edge 02 missing
    assert len(x.nondeg_indices(1)) == 2
    assert x.nondeg_indices(2) == ()
    assert validate_sset(x) == []


@pytest.mark.parametrize("n", range(5))
def test_validate_accepts_standard_simplex(n):
    assert validate_sset(standard_simplex(n, dim_bound=4)) == []


@pytest.mark.parametrize("n", range(1, 5))
def test_validate_accepts_boundary(n):
    assert validate_sset(boundary(n, dim_bound=4)) == []


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 5) for k in range(n + 1)])
def test_validate_accepts_horn(n, k):
    assert validate_sset(horn(n, k, dim_bound=4)) == []


def test_simplex_counts_delta2():
    x = standard_simplex(2, dim_bound=2)
    assert [x.size(k) for k in range(3)] == [3, 6, 10]
    assert len(x.nondeg_indices(1)) == 3
    assert len(x.nondeg_indices(2)) == 1


def test_validate_catches_broken_identity():
    x = standard_simplex(2, dim_bound=2)
    dims = [list(level) for level in x.dims]
    # corrupt one face of the nondegenerate 2-simplex
    top = x.nondeg_indices(2)[0]
    rec = dims[2][top]
    bad_faces = list(rec.faces)
    bad_faces[0] = (bad_faces[0] + 1) % x.size(1)
    dims[2][top] = Simplex(faces=tuple(bad_faces), degens=rec.degens,
                           base=rec.base, word=rec.word)
    broken = SimplicialSet(2, dims)
    assert validate_sset(broken) != []


# -- the projective-plane test complex (degenerate face of a nondeg cell) ----

def projective_plane(dim_bound=3):
    """One vertex v, one edge e (a loop), one 2-cell with boundary e, s_0 v, e.

    Its boundary in normalized chains is 2e, so H_1 = Z/2.
    """
    return from_nondegenerate(dim_bound, [
        [[]],                                # v
        [[(0, ()), (0, ())]],                # e: both faces v
        [[(0, ()), (0, (0,)), (0, ())]],     # faces: d0=e, d1=s_0 v, d2=e
    ])


def test_projective_plane_validates():
    x = projective_plane()
    # faces of the 2-cell: e, s_0 v, e
    assert validate_sset(x) == []
    assert len(x.nondeg_indices(0)) == 1
    assert len(x.nondeg_indices(1)) == 1
    assert len(x.nondeg_indices(2)) == 1


def test_from_simplicial_complex_circle():
    circle = from_simplicial_complex([(0, 1), (1, 2), (0, 2)], dim_bound=2)
    assert len(circle.nondeg_indices(0)) == 3
    assert len(circle.nondeg_indices(1)) == 3
    assert circle.nondeg_indices(2) == ()
    assert validate_sset(circle) == []


# -- pi0 ---------------------------------------------------------------------

def test_pi0_boundary_1():
    assert len(pi0(boundary(1, dim_bound=2))) == 2


def test_pi0_boundary_2():
    assert len(pi0(boundary(2, dim_bound=2))) == 1


def test_pi0_disjoint_union():
    # oracle: brute-force reachability over the edge table
    x, _, _ = disjoint_union(point(2), standard_simplex(1, dim_bound=2))
    edges = [(x.dims[1][i].faces[1], x.dims[1][i].faces[0])
             for i in x.nondeg_indices(1)]
    reach = {v: {v} for v in range(x.size(0))}
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            union = reach[a] | reach[b]
            if union != reach[a] or union != reach[b]:
                for v in union:
                    if reach[v] != union:
                        reach[v] = union
                        changed = True
    classes = {frozenset(s) for s in reach.values()}
    assert len(pi0(x)) == len(classes) == 2


# -- maps --------------------------------------------------------------------

def test_identity_and_compose():
    x = boundary(2, dim_bound=2)
    ident = identity_map(x)
    assert validate_sset_map(ident) == []
    assert compose_maps(ident, ident) == ident
    assert is_iso_map(ident) is not None


def test_boundary_and_horn_inclusions_validate():
    for n in range(1, 4):
        inc = boundary_inclusion(n, dim_bound=3)
        assert validate_sset_map(inc) == []
        for k in range(n + 1):
            inc2 = horn_inclusion(n, k, dim_bound=3)
            assert validate_sset_map(inc2) == []


def test_enumerate_maps_delta1_to_delta1():
    d1 = standard_simplex(1, dim_bound=2)
    maps = enumerate_sset_maps(d1, d1)
    # vertex images (0,0), (0,1), (1,1) plus (1,0) is impossible for the edge
    assert len(maps) == 3
    for f in maps:
        assert validate_sset_map(f) == []


def test_enumerate_maps_to_point_unique():
    for x in [standard_simplex(2, 2), boundary(2, 2), horn(2, 1, 2)]:
        maps = enumerate_sset_maps(x, point(2))
        assert len(maps) == 1


def test_sub_complex_boundary_inside_simplex():
    big = standard_simplex(2, dim_bound=2)
    keep = [list(range(big.size(0))), list(range(big.size(1))), []]
    # all 2-simplices except the nondegenerate top cell are degeneracies of
    # edges; keep those to stay closed under degeneracies
    keep[2] = [i for i in range(big.size(2)) if not big.dims[2][i].nondeg]
    sub, incl, _ = sub_complex(big, keep)
    assert validate_sset(sub) == []
    assert validate_sset_map(incl) == []
    assert sub == boundary(2, dim_bound=2)


def test_attach_fills_horn_to_simplex():
    h = horn(2, 1, dim_bound=2)
    # attach the missing edge 02, then the triangle
    v0, v1, v2 = 0, 1, 2
    x1, e02 = attach_nondeg(h, 1, [v2, v0])
    assert validate_sset(x1) == []
    # edges of the triangle: d0 = edge 12, d1 = new edge 02, d2 = edge 01
    idx_01, idx_12 = h.nondeg_indices(1)
    x2, top = attach_nondeg(x1, 2, [idx_12, e02, idx_01])
    assert validate_sset(x2) == []
    assert len(x2.nondeg_indices(2)) == 1
    assert len(pi0(x2)) == 1


def test_pullback_of_identity_is_isomorphic_copy():
    x = boundary(2, dim_bound=2)
    f = identity_map(x)
    p, pr1, pr2, _ = pullback_ssets(f, f)
    assert validate_sset(p) == []
    assert validate_sset_map(pr1) == []
    assert is_iso_map(pr1) is not None


def test_pullback_over_point_is_product():
    d1 = standard_simplex(1, dim_bound=2)
    pt = point(2)
    to_pt = enumerate_sset_maps(d1, pt)[0]
    p, pr1, pr2, _ = pullback_ssets(to_pt, to_pt)
    assert validate_sset(p) == []
    assert p.size(0) == 4  # product of vertex sets
    # the square has four vertices and one connected component
    assert len(pi0(p)) == 1


def test_empty_sset():
    e = empty_sset(2)
    assert validate_sset(e) == []
    assert pi0(e) == []
