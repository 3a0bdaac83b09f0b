import random
from math import ceil, comb

import pytest

from bootperc.constructions import (
    carved_corner_set,
    carved_region,
    corner_masks,
    inner_cut_region,
    line_seed,
    reflect_region,
    simplex_corner_set,
    simplex_region,
    star_seed_complete,
    star_seed_hamming,
    vertex_seed_dim2,
)
from bootperc.engine import percolate_vertices
from bootperc.errors import PreconditionError
from bootperc.graphs import HammingSpace, make_hamming


def decode_all(n, d, indices):
    sp = HammingSpace(n, d)
    return {sp.decode(i) for i in indices}


class TestCornerMasks:
    def test_dim2(self):
        assert corner_masks(2) == [(0, 0), (1, 1)]

    def test_dim3(self):
        assert corner_masks(3) == [(0, 0, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1)]

    def test_first_two_agree_and_count(self):
        for d in range(2, 6):
            masks = corner_masks(d)
            assert len(masks) == 2 ** (d - 1)
            assert all(t[0] == t[1] for t in masks)

    def test_rejects_dim1(self):
        with pytest.raises(PreconditionError):
            corner_masks(1)


class TestReflectRegion:
    def test_corner_swap(self):
        assert reflect_region({(0, 0)}, (1, 1), 5) == frozenset({(4, 4)})

    def test_identity_mask(self):
        pts = frozenset({(1, 2), (0, 3)})
        assert reflect_region(pts, (0, 0), 4) == pts

    def test_single_coordinate(self):
        got = reflect_region({(1, 0, 4), (0, 1, 4)}, (0, 0, 1), 5)
        assert got == frozenset({(1, 0, 0), (0, 1, 0)})

    def test_involution(self):
        rng = random.Random(9)
        for _ in range(20):
            n, d = rng.randint(2, 6), rng.randint(2, 4)
            pts = frozenset(
                tuple(rng.randrange(n) for _ in range(d)) for _ in range(6)
            )
            mask = tuple(rng.randint(0, 1) for _ in range(d))
            once = reflect_region(pts, mask, n)
            assert len(once) == len(pts)
            assert reflect_region(once, mask, n) == pts


class TestVertexSeedDim2:
    def test_smallest_case(self):
        assert decode_all(3, 2, vertex_seed_dim2(3, 2)) == {(0, 2), (2, 0)}

    def test_zero_threshold_is_empty(self):
        assert vertex_seed_dim2(5, 0) == frozenset()

    def test_figure_case_size(self):
        assert len(vertex_seed_dim2(6, 5)) == 9

    @pytest.mark.parametrize("r", range(0, 11))
    def test_size_formula(self, r):
        for n in range(ceil(r / 2) + 1, r + 5):
            assert len(vertex_seed_dim2(n, r)) == (r + 1) ** 2 // 4

    def test_rejects_small_alphabet(self):
        with pytest.raises(PreconditionError):
            vertex_seed_dim2(2, 5)

    def test_percolates_sample(self):
        g = make_hamming(HammingSpace(4, 2))
        tr = percolate_vertices(g, 3, vertex_seed_dim2(4, 3))
        assert len(tr.final) == 16


class TestRegions:
    def test_simplex_freeze(self):
        assert simplex_region(5, 4, 3) == frozenset(
            {(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)}
        )

    def test_simplex_size_is_stars_and_bars(self):
        for d in (2, 3, 4):
            for r in range(1, 7):
                n = r + 1
                s = ceil(r / 2)
                assert len(simplex_region(n, r, d)) == comb(s - 1 + d, d)

    def test_cut_is_empty_in_dim2(self):
        for r in range(1, 8):
            assert inner_cut_region(r + 1, r, 2) == frozenset()

    def test_carved_freeze(self):
        # the cut removes exactly the origin: 0 < 1/2 holds, but for
        # (0,0,1) the comparison is 1/2 < 1/2, which fails
        assert inner_cut_region(5, 4, 3) == frozenset({(0, 0, 0)})
        assert carved_region(5, 4, 3) == frozenset(
            {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
        )

    def test_exact_boundary_dim4(self):
        # d=4, r=6: delta=2/3, bound=4/3; (0,0,2,0) gives exactly 4/3
        # and must stay out of the cut
        region = inner_cut_region(7, 6, 4)
        assert (0, 0, 2, 0) not in region
        assert (0, 0, 1, 0) in region  # 2/3 < 4/3

    def test_carved_inside_simplex(self):
        for d in (2, 3, 4):
            for r in range(1, 6):
                assert carved_region(r + 1, r, d) <= simplex_region(r + 1, r, d)

    def test_rejects_bad_args(self):
        with pytest.raises(PreconditionError):
            simplex_region(4, 4, 3)
        with pytest.raises(PreconditionError):
            simplex_region(5, 4, 1)


class TestCornerSets:
    def test_simplex_corner_freeze(self):
        assert decode_all(3, 2, simplex_corner_set(3, 2, 2)) == {(0, 0), (2, 2)}

    def test_carved_corner_size(self):
        assert len(carved_corner_set(5, 4, 3)) == 12

    def test_carved_subset_of_simplex(self):
        for d in (2, 3):
            for r in range(1, 6):
                for n in (r + 1, r + 2):
                    assert carved_corner_set(n, r, d) <= simplex_corner_set(n, r, d)

    def test_dim2_sets_coincide(self):
        for r in range(1, 7):
            assert carved_corner_set(r + 1, r, 2) == simplex_corner_set(r + 1, r, 2)

    def test_percolation_sample(self):
        g = make_hamming(HammingSpace(5, 3))
        tr = percolate_vertices(g, 4, carved_corner_set(5, 4, 3))
        assert len(tr.final) == 125

    @pytest.mark.parametrize("d", (2, 3))
    @pytest.mark.parametrize("r", (1, 2, 3, 4))
    def test_both_sets_percolate_with_slack_alphabet(self, d, r):
        # the guarantee holds for every n >= r+1, not just the tight one
        for n in (r + 1, r + 3):
            g = make_hamming(HammingSpace(n, d))
            final_a = percolate_vertices(g, r, simplex_corner_set(n, r, d)).final
            final_c = percolate_vertices(g, r, carved_corner_set(n, r, d)).final
            assert len(final_a) == g.vertex_count
            assert len(final_c) == g.vertex_count

    def test_stalled_closure_is_reflection_invariant(self):
        # the seed is a union over every corner mask, so the closure is
        # preserved by each reflection even when it stalls early
        n, d = 5, 3
        sp = HammingSpace(n, d)
        g = make_hamming(sp)
        seed = carved_corner_set(n, 4, d)
        final = percolate_vertices(g, 6, seed).final
        assert len(final) < g.vertex_count
        for mask in corner_masks(d):
            reflected = reflect_region({sp.decode(i) for i in final}, mask, n)
            assert {sp.encode(p) for p in reflected} == final


class TestStarSeeds:
    def test_complete_freeze(self):
        assert star_seed_complete(4, 2) == frozenset({(0, 1), (0, 2), (1, 2)})
        assert star_seed_complete(5, 1) == frozenset({(0, 1)})
        assert len(star_seed_complete(5, 4)) == 10

    def test_complete_rejects(self):
        with pytest.raises(PreconditionError):
            star_seed_complete(4, 4)

    def test_hamming_freeze(self):
        assert star_seed_hamming(4, 2, 2) == frozenset(
            {(0, 4), (0, 8), (4, 8), (1, 5)}
        )

    def test_dim1_is_complete_seed(self):
        for r in range(1, 5):
            assert star_seed_hamming(r + 2, r, 1) == star_seed_complete(r + 2, r)

    def test_layer_decomposition(self):
        # layer t along the last coordinate carries the seed for threshold r-t
        n, r, d = 5, 3, 3
        seed = star_seed_hamming(n, r, d)
        for t in range(r):
            layer = {
                (u // n, v // n)
                for u, v in seed
                if u % n == t and v % n == t
            }
            assert layer == set(star_seed_hamming(n, r - t, d - 1))
        assert all(u % n == v % n and u % n < r for u, v in seed)

    @pytest.mark.parametrize("d", (1, 2, 3))
    @pytest.mark.parametrize("r", (1, 2, 3, 4, 5))
    def test_size_formula(self, d, r):
        for n in (r + 1, r + 2):
            assert len(star_seed_hamming(n, r, d)) == comb(d + r, d + 1)


class TestLineSeed:
    def test_freezes(self):
        assert line_seed(4, 2) == frozenset({(0, 3), (2, 3)})
        assert line_seed(5, 3) == frozenset({(0, 3), (0, 4), (1, 4)})
        assert line_seed(6, 0) == frozenset()

    @pytest.mark.parametrize("r", range(0, 11))
    def test_size_formula(self, r):
        lo = ceil(r / 2) + 2
        for n in range(lo, lo + 5):
            assert len(line_seed(n, r)) == (r + 2) ** 2 // 8

    def test_rejects_small_alphabet(self):
        with pytest.raises(PreconditionError):
            line_seed(4, 6)
