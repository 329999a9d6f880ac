"""Lattice polygon constructions and exact geometry validation."""

import random

import pytest

import latticeknot as lk
from latticeknot import LatticePolygon, LatticeStick


def unit_square():
    return LatticePolygon(
        (
            LatticeStick("x", 0, 1, 0, 0),
            LatticeStick("y", 0, 1, 1, 0),
            LatticeStick("x", 0, 1, 1, 0),
            LatticeStick("y", 0, 1, 0, 0),
        )
    )


class TestStick:
    def test_zero_length_forbidden(self):
        with pytest.raises(ValueError):
            LatticeStick("x", 2, 2, 0, 0)

    def test_endpoints_per_axis(self):
        assert LatticeStick("x", 1, 4, 2, 3).endpoints() == ((1, 2, 3), (4, 2, 3))
        assert LatticeStick("y", 1, 4, 2, 3).endpoints() == ((2, 1, 3), (2, 4, 3))
        assert LatticeStick("z", 1, 4, 2, 3).endpoints() == ((2, 3, 1), (2, 3, 4))

    def test_bad_axis(self):
        with pytest.raises(ValueError):
            LatticeStick("w", 0, 1, 0, 0)


class TestValidatePolygon:
    def test_unit_square_ok(self):
        assert lk.validate_polygon(unit_square()) == []
        assert lk.stick_count(unit_square()) == 4

    def test_construction_outputs_ok(self, p5):
        assert lk.validate_polygon(lk.construct_basic(p5)) == []

    def test_nonadjacent_overlap_reported(self):
        # a planar loop whose last y-stick lands inside the bottom x-stick
        poly = LatticePolygon(
            (
                LatticeStick("x", 0, 4, 0, 0),
                LatticeStick("y", 0, 4, 4, 0),
                LatticeStick("x", 0, 4, 4, 0),
                LatticeStick("y", 2, 4, 0, 0),
                LatticeStick("x", 0, 2, 2, 0),
                LatticeStick("y", 0, 2, 2, 0),
                LatticeStick("x", 0, 2, 0, 0),
            )
        )
        kinds = {v.kind for v in lk.validate_polygon(poly)}
        assert "overlap" in kinds

    def test_same_axis_consecutive_reported(self):
        poly = LatticePolygon(
            (
                LatticeStick("x", 0, 1, 0, 0),
                LatticeStick("x", 1, 2, 0, 0),
                LatticeStick("y", 0, 1, 2, 0),
                LatticeStick("x", 0, 2, 1, 0),
                LatticeStick("y", 0, 1, 0, 0),
            )
        )
        kinds = {v.kind for v in lk.validate_polygon(poly)}
        assert "axis_repeat" in kinds

    def test_disconnected_corners_reported(self):
        poly = LatticePolygon(
            (
                LatticeStick("x", 0, 1, 0, 0),
                LatticeStick("y", 0, 1, 5, 0),
                LatticeStick("x", 0, 1, 1, 0),
                LatticeStick("y", 0, 1, 0, 0),
            )
        )
        kinds = {v.kind for v in lk.validate_polygon(poly)}
        assert "corner" in kinds

    def test_too_few_sticks(self):
        poly = LatticePolygon(
            (LatticeStick("x", 0, 1, 0, 0), LatticeStick("y", 0, 1, 1, 0))
        )
        kinds = {v.kind for v in lk.validate_polygon(poly)}
        assert "too_few_sticks" in kinds


class TestConstructBasic:
    def test_pentagram_3a_sticks(self, p5):
        poly = lk.construct_basic(p5)
        assert lk.stick_count(poly) == 15
        assert lk.validate_polygon(poly) == []

    def test_figure8_18_sticks(self, p6):
        assert lk.stick_count(lk.construct_basic(p6)) == 18

    def test_z_sticks_on_diagonal(self, p5, p6, p7):
        for P in (p5, p6, p7):
            for s in lk.construct_basic(P).sticks:
                if s.axis == "z":
                    assert s.c1 == s.c2

    def test_coordinates_within_1_a(self):
        rng = random.Random(4)
        for _ in range(30):
            P = lk.random_presentation(rng.randint(5, 9), rng)
            for s in lk.construct_basic(P).sticks:
                for (lo, hi) in s.ranges():
                    assert 1 <= lo <= hi <= P.a

    def test_rejects_small_a(self):
        P = lk.validate([[1, 2], [1, 2]])
        with pytest.raises(ValueError):
            lk.construct_basic(P)


class TestReduceEnds:
    def test_pentagram_13(self, p5):
        poly = lk.reduce_ends(lk.construct_basic(p5), p5)
        assert lk.stick_count(poly) == 13
        assert lk.validate_polygon(poly) == []

    def test_p7_19(self, p7):
        assert lk.stick_count(lk.reduce_ends(lk.construct_basic(p7), p7)) == 19

    def test_exactly_two_off_diagonal_z(self, p5, p6, p7):
        for P in (p5, p6, p7):
            poly = lk.reduce_ends(lk.construct_basic(P), P)
            off = [s for s in poly.sticks if s.axis == "z" and s.c1 != s.c2]
            assert len(off) == 2

    def test_arc_1_a_never_deleted(self):
        # presentations containing the pair {1, a}: its sticks are the longer
        # ones at both reductions, so they are truncated, never removed
        rng = random.Random(14)
        checked = 0
        while checked < 40:
            a = rng.randint(5, 9)
            P = lk.random_presentation(a, rng)
            if (1, a) not in P.arcs:
                continue
            checked += 1
            page = P.page_of((1, a))
            poly = lk.reduce_ends(lk.construct_basic(P), P)
            assert lk.validate_polygon(poly) == []
            xs = [s for s in poly.sticks if s.axis == "x" and s.c2 == page and s.c1 == 1]
            ys = [s for s in poly.sticks if s.axis == "y" and s.c2 == page and s.c1 == a]
            assert len(xs) == 1 and xs[0].hi == a  # truncated to [i, a]
            assert len(ys) == 1 and ys[0].lo == 1  # truncated to [1, j']

    def test_random_counts(self):
        rng = random.Random(15)
        for _ in range(50):
            P = lk.random_presentation(rng.randint(5, 9), rng)
            poly = lk.reduce_ends(lk.construct_basic(P), P)
            assert lk.stick_count(poly) == 3 * P.a - 2
            assert lk.validate_polygon(poly) == []


def normalized(P):
    w = lk.find_nonstar_witness(P)
    assert w is not None
    return lk.normalize_for_nonstar(P, w)


class TestConstructNonstar:
    def test_figure8_14_sticks(self, p6):
        poly = lk.construct_nonstar(normalized(p6))
        assert lk.stick_count(poly) == 14
        assert lk.validate_polygon(poly) == []

    def test_random_counts_and_z_population(self):
        rng = random.Random(16)
        seen = 0
        while seen < 60:
            a = rng.randint(5, 9)
            P = lk.random_presentation(a, rng)
            if lk.is_star_shaped(P):
                continue
            seen += 1
            poly = lk.construct_nonstar(normalized(P))
            assert lk.stick_count(poly) == 3 * a - 4
            assert lk.validate_polygon(poly) == []
            assert sum(1 for s in poly.sticks if s.axis == "z") == a - 1


class TestLiftSweep:
    def test_figure8_sweep_valid(self, p6):
        nns = normalized(p6)
        sweep = lk.lift_sweep(nns)
        assert len(sweep) == nns.lift_page
        for poly in sweep:
            assert lk.validate_polygon(poly) == []
        assert sweep[-1] == lk.construct_nonstar(nns)
        assert lk.stick_count(sweep[0]) == 3 * p6.a - 2

    def test_sweep_passes_intermediate_attachment_level(self):
        # find a case where the alpha-side neighbour page sits strictly
        # between 1 and lift_page, so the degenerate-connector snapshot runs
        rng = random.Random(17)
        exercised = 0
        trials = 0
        while exercised < 10 and trials < 4000:
            trials += 1
            P = lk.random_presentation(rng.randint(5, 9), rng)
            if lk.is_star_shaped(P):
                continue
            nns = normalized(P)
            q_alpha = next(
                p for p in nns.presentation.pages_at(nns.alpha) if p != 1
            )
            if not 1 < q_alpha < nns.lift_page:
                continue
            exercised += 1
            for poly in lk.lift_sweep(nns):
                assert lk.validate_polygon(poly) == []
        assert exercised == 10
