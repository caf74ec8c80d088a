import pytest

from mcpi import (
    DegenerateDimension,
    DimensionScores,
    EmptyDimensionList,
    Interval,
    LastDimension,
    McpiError,
    MCPIResult,
    SeparationSummary,
    UnknownDimension,
    beta_ratings,
    closeness,
    exclude_dimension,
    overall_interval,
    rank_alternatives,
)


def sep(dim, sp, sm, wp, wm):
    return SeparationSummary(dimension_id=dim, strong_plus=sp, strong_minus=sm,
                             weak_plus=wp, weak_minus=wm)


def result(name, weaks, strongs=None, rank=None):
    strongs = strongs or weaks
    dims = tuple(
        DimensionScores(dimension_id=f"d{k}", strong=s, weak=w)
        for k, (s, w) in enumerate(zip(strongs, weaks))
    )
    overall = overall_interval(list(dims))
    return MCPIResult(alternative=name, dimension_scores=dims, overall=overall,
                      span=100.0 * overall.width, rank=rank)


class TestCloseness:
    def test_ratios(self):
        scores = closeness(sep("d", sp=0.3, sm=0.2, wp=0.2, wm=0.3))
        assert scores.strong == pytest.approx(0.4, abs=1e-15)
        assert scores.weak == pytest.approx(0.6, abs=1e-15)
        assert scores.interval == Interval(scores.strong, scores.weak)

    def test_at_ideal_scores_one(self):
        scores = closeness(sep("d", sp=0.0, sm=0.4, wp=0.0, wm=0.25))
        assert scores.strong == 1.0 and scores.weak == 1.0

    def test_at_anti_ideal_scores_zero(self):
        scores = closeness(sep("d", sp=0.4, sm=0.0, wp=0.25, wm=0.0))
        assert scores.strong == 0.0 and scores.weak == 0.0

    def test_degenerate_dimension(self):
        with pytest.raises(DegenerateDimension):
            closeness(sep("d", sp=0.0, sm=0.0, wp=0.1, wm=0.1))


class TestOverallInterval:
    def test_min_and_mean_of_weak(self):
        # weak closeness 83.2, 81.8, 29.5, 30.7 percent
        dims = [DimensionScores(f"d{k}", 0.0, w)
                for k, w in enumerate([0.832, 0.818, 0.295, 0.307])]
        iv = overall_interval(dims)
        assert iv.lower == 0.295
        assert iv.upper == pytest.approx(0.563, abs=1e-12)

    def test_rounding_matches_reported_upper(self):
        dims = [DimensionScores(f"d{k}", 0.0, w)
                for k, w in enumerate([0.786, 0.726, 0.255, 1.0])]
        iv = overall_interval(dims)
        assert iv.lower == 0.255
        assert iv.upper == pytest.approx(0.69175, abs=1e-12)
        assert round(iv.upper * 100, 1) == 69.2

    def test_three_dimension_variant(self):
        dims = [DimensionScores(f"d{k}", 0.0, w)
                for k, w in enumerate([0.786, 0.726, 0.255])]
        iv = overall_interval(dims)
        assert iv.lower == 0.255
        assert iv.upper == pytest.approx(0.589, abs=1e-12)

    def test_single_dimension(self):
        iv = overall_interval([DimensionScores("d", 0.1, 0.4)])
        assert iv.lower == iv.upper == 0.4

    def test_empty(self):
        with pytest.raises(EmptyDimensionList):
            overall_interval([])


class TestRanking:
    def test_by_descending_upper(self):
        rs = [result("c", [0.668]), result("a", [0.692]), result("b", [0.691])]
        ranked = rank_alternatives(rs)
        assert [(r.alternative, r.rank) for r in ranked] == [("a", 1), ("b", 2), ("c", 3)]

    def test_identical_intervals_rank_by_name(self):
        rs = [result("zeta", [0.5, 0.7]), result("alpha", [0.5, 0.7])]
        ranked = rank_alternatives(rs)
        assert [(r.alternative, r.rank) for r in ranked] == [("alpha", 1), ("zeta", 2)]

    def test_equal_upper_ranks_smaller_lower_first(self):
        rs = [result("x", [0.4, 0.8]), result("y", [0.55, 0.65])]  # both mean 0.6
        ranked = rank_alternatives(rs)
        assert [r.alternative for r in ranked] == ["x", "y"]

    def test_single_alternative(self):
        (r,) = rank_alternatives([result("only", [0.2, 0.4])])
        assert r.rank == 1

    def test_empty_rejected(self):
        with pytest.raises(McpiError):
            rank_alternatives([])

    def test_ranks_are_permutation(self):
        rs = [result(f"alt{i}", [0.1 * i, 0.05 * i + 0.3]) for i in range(1, 7)]
        ranked = rank_alternatives(rs)
        assert sorted(r.rank for r in ranked) == list(range(1, 7))


class TestBetaRatings:
    def test_minmax_tertiles_on_reported_spans(self):
        # Spain, Greece, Denmark, Luxembourg: cohort min and max included
        spans = [11.2, 22.5, 34.2, 43.7]
        rs = beta_ratings(spans, rule="minmax")
        assert rs[0].normalized_span == 0.0 and rs[0].stars == 3
        assert rs[1].normalized_span == pytest.approx(0.3477, abs=5e-4)
        assert rs[1].stars == 2
        assert rs[2].normalized_span == pytest.approx(0.7077, abs=5e-4)
        assert rs[2].stars == 1
        assert rs[3].stars == 1

    def test_minmax_two_star_boundary(self):
        spans = [5.1, 33.4, 34.5, 48.2]
        rs = beta_ratings(spans, rule="minmax")
        assert rs[1].normalized_span == pytest.approx(0.6566, abs=5e-4)
        assert rs[1].stars == 2  # at most 2/3 still rates 2 stars
        assert rs[2].normalized_span == pytest.approx(0.6822, abs=5e-4)
        assert rs[2].stars == 1

    def test_all_spans_equal(self):
        rs = beta_ratings([7.5, 7.5, 7.5])
        assert all(r.stars == 3 and r.normalized_span == 0.0 for r in rs)

    def test_maxfrac_rule(self):
        rs = beta_ratings([10.0, 20.0, 30.0], rule="maxfrac")
        assert [r.stars for r in rs] == [3, 2, 1]
        assert rs[0].normalized_span == pytest.approx(1 / 3, abs=0)

    def test_unknown_rule(self):
        with pytest.raises(McpiError):
            beta_ratings([1.0], rule="median")

    def test_stars_follow_normalized_span(self):
        import numpy as np
        rng = np.random.default_rng(41)
        spans = rng.uniform(0, 50, size=40).tolist()
        for r in beta_ratings(spans):
            if r.normalized_span <= 1 / 3:
                assert r.stars == 3
            elif r.normalized_span <= 2 / 3:
                assert r.stars == 2
            else:
                assert r.stars == 1


class TestExcludeDimension:
    def baseline(self):
        rs = [
            result("a", [0.80, 0.60, 0.40]),
            result("b", [0.30, 0.70, 0.50]),
            result("c", [0.20, 0.30, 0.40]),
        ]
        return rank_alternatives(rs)

    def test_recomputes_over_remaining_dimensions(self):
        entries = exclude_dimension(self.baseline(), "d0")
        by_name = {e.result.alternative: e for e in entries}
        assert by_name["a"].result.overall.upper == pytest.approx(0.5, abs=1e-15)
        assert by_name["b"].result.overall.upper == pytest.approx(0.6, abs=1e-15)
        assert [d.dimension_id for d in by_name["a"].result.dimension_scores] == ["d1", "d2"]

    def test_delta_rank_sign(self):
        # baseline: a=1, b=2, c=3; without d0: b=1, a=2, c=3
        entries = exclude_dimension(self.baseline(), "d0")
        deltas = {e.result.alternative: e.delta_rank for e in entries}
        assert deltas == {"b": 1, "a": -1, "c": 0}

    def test_excluding_mean_valued_dimension_keeps_uppers(self):
        rs = rank_alternatives([
            result("a", [0.2, 0.4, 0.3]),  # d2 weak equals the mean of all three
            result("b", [0.5, 0.7, 0.6]),
        ])
        entries = exclude_dimension(rs, "d2")
        for e, r in zip(entries, rs):
            assert e.result.overall.upper == pytest.approx(r.overall.upper, abs=1e-15)

    def test_unknown_dimension(self):
        with pytest.raises(UnknownDimension):
            exclude_dimension(self.baseline(), "nope")

    def test_last_dimension(self):
        rs = rank_alternatives([result("a", [0.4]), result("b", [0.6])])
        with pytest.raises(LastDimension):
            exclude_dimension(rs, "d0")

    def test_requires_ranked_baseline(self):
        with pytest.raises(McpiError):
            exclude_dimension([result("a", [0.4, 0.5])], "d0")


class TestInterval:
    def test_rejects_inverted_bounds(self):
        with pytest.raises(McpiError):
            Interval(0.7, 0.3)

    def test_rejects_out_of_range(self):
        with pytest.raises(McpiError):
            Interval(-0.1, 0.5)
        with pytest.raises(McpiError):
            Interval(0.5, 1.2)
