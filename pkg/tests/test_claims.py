import random

import numpy as np
import pytest

from covnum import (
    ComponentTable,
    CoverInstance,
    EdgeColoring,
    check_claim_distinguishing,
    check_claim_distr,
    check_claim_rsame,
    check_claim_samepart,
    check_claim_smalldist,
    check_claim_t1diff,
    claim_suite,
    cyclic_biclique,
    decompose,
    forensic_report,
    hamming,
    make_shape,
    min_cover_exact,
    vector_of,
)

from oracles import random_coloring, random_small_shape


def all_one_color(shape):
    return EdgeColoring(shape, np.ones(shape.edge_count, dtype=np.int32))


class TestRsame:
    def test_holds_on_random_colorings(self):
        rng = random.Random(31)
        for _ in range(50):
            coloring = random_coloring(random_small_shape(rng), rng)
            assert check_claim_rsame(coloring).holds

    def test_corrupted_table_fails_with_witness(self):
        shape = make_shape(2, 2, [2, 2])
        coloring = all_one_color(shape)
        # fabricated table where every vertex is alone in every color
        rows = np.tile(np.arange(1, 5, dtype=np.int32), (2, 1))
        corrupt = ComponentTable(shape, rows, (4, 4))
        verdict = check_claim_rsame(coloring, corrupt)
        assert not verdict.holds
        assert verdict.witness is not None


class TestT1Diff:
    def test_cyclic_biclique_budgets(self):
        coloring = cyclic_biclique(3)
        assert check_claim_t1diff(coloring, 2).holds
        verdict = check_claim_t1diff(coloring, 3)
        assert not verdict.holds
        assert len(verdict.witness) == 3

    def test_one_cover_exists(self):
        assert not check_claim_t1diff(all_one_color(make_shape(3, 1, [2, 2, 2])), 1).holds

    def test_equivalence_with_solver(self):
        rng = random.Random(32)
        for _ in range(25):
            coloring = random_coloring(random_small_shape(rng, max_vertices=9), rng)
            size = min_cover_exact(
                CoverInstance.from_component_table(decompose(coloring))
            ).size
            for budget in range(1, 5):
                assert check_claim_t1diff(coloring, budget).holds == (size > budget)


class TestSamepart:
    def test_cyclic_biclique(self):
        # each part meets 3 components per color; threshold 1 + 2 = 3
        assert check_claim_samepart(cyclic_biclique(3), 1).holds

    def test_single_color_fails(self):
        verdict = check_claim_samepart(all_one_color(make_shape(2, 1, [2, 2])), 1)
        assert not verdict.holds
        assert verdict.witness == (1, 1)


class TestDistances:
    def test_cyclic_biclique_distances(self):
        # cross-part pairs share their matching edge's color, so distance
        # is exactly k - 1 = 2; same-part pairs differ everywhere
        coloring = cyclic_biclique(3)
        table = decompose(coloring)
        shape = coloring.shape
        cross = []
        same = []
        for gu in range(6):
            for gv in range(gu + 1, 6):
                d = hamming(
                    vector_of(table, shape.vertex_id(gu)),
                    vector_of(table, shape.vertex_id(gv)),
                )
                if shape.vertex_id(gu).part != shape.vertex_id(gv).part:
                    cross.append(d)
                else:
                    same.append(d)
        assert max(cross) == 2
        assert set(same) == {3}
        # t = k - r = 1: all cross-part distances are <= t + 1 = 2
        assert check_claim_smalldist(coloring, 1).holds
        assert not check_claim_smalldist(coloring, 0).holds

    def test_all_one_color(self):
        coloring = all_one_color(make_shape(3, 1, [2, 2, 2]))
        assert check_claim_smalldist(coloring, 0).holds
        assert not check_claim_distr(coloring).holds

    def test_distr_on_cyclic_biclique(self):
        verdict = check_claim_distr(cyclic_biclique(3), 2)
        assert verdict.holds
        u, v, d = verdict.witness
        assert d >= 2 and u.part != v.part


class TestDistinguishing:
    def test_requires_r3(self):
        with pytest.raises(ValueError):
            check_claim_distinguishing(cyclic_biclique(3))

    def test_single_color_holds(self):
        assert check_claim_distinguishing(all_one_color(make_shape(3, 1, [2, 2, 2]))).holds

    def test_two_empty_colors_fail(self):
        # two edges in colors 1 and 2; colors 3 and 4 have no edges, so
        # their all-singleton rows both distinguish the triple
        shape = make_shape(3, 4, [1, 1, 2])
        coloring = EdgeColoring(shape, np.asarray([1, 2], dtype=np.int32))
        verdict = check_claim_distinguishing(coloring)
        assert not verdict.holds
        assert verdict.witness[-1] == (3, 4)


class TestReports:
    def test_forensic_report_r2(self):
        report = forensic_report(cyclic_biclique(3), 2)
        assert report.all_hold
        assert {v.claim for v in report} == {"rsame", "t1diff"}

    def test_forensic_report_r3_claims(self):
        rng = random.Random(33)
        shape = make_shape(3, 4, [2, 2, 2])
        coloring = random_coloring(shape, rng)
        report = forensic_report(coloring, 99)  # budget no cover can exceed
        names = {v.claim for v in report}
        assert names == {
            "rsame",
            "t1diff",
            "samepartdiffcolor",
            "smalldist",
            "distr",
            "distinguishing",
        }

    def test_claim_suite_cyclic(self):
        report = claim_suite(cyclic_biclique(3), 2)
        by_name = {v.claim: v for v in report}
        assert by_name["rsame"].holds
        assert by_name["t1diff"].holds
        assert by_name["samepartdiffcolor"].holds
        assert by_name["smalldist"].holds
        assert by_name["distr"].holds
