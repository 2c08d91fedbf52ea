"""Rank correlation, gap diagnosis, and report serialization."""
import json

import pytest
import scipy.stats
from hypothesis import given
from hypothesis import strategies as st

from divscore.analysis import (
    MAX_GAP_EXAMPLES,
    attach_gap,
    deserialize_report,
    gap_report,
    overlap_series,
    serialize_report,
    spearman,
)
from divscore.diversity import WeightVector, jmm_score
from divscore.model import DiversityReport


class TestSpearman:
    def test_perfect_monotone(self):
        r = spearman([1, 2, 3, 4], [10, 20, 30, 40])
        assert r.rho == 1.0
        assert r.n == 4

    def test_perfect_reversal(self):
        assert spearman([1, 2, 3], [9, 5, 1]).rho == -1.0

    def test_nonlinear_monotone_still_one(self):
        xs = [1.0, 2.0, 3.0, 4.0, 5.0]
        assert spearman(xs, [x**3 for x in xs]).rho == pytest.approx(1.0, abs=1e-12)

    def test_hand_computed_with_ties(self):
        xs = [1.0, 2.0, 2.0, 4.0, 5.0]
        ys = [3.0, 1.0, 4.0, 4.0, 6.0]
        expected = scipy.stats.spearmanr(xs, ys).statistic
        assert spearman(xs, ys).rho == pytest.approx(expected, abs=1e-12)

    def test_zero_variance_rejected(self):
        with pytest.raises(ValueError, match="zero rank variance"):
            spearman([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])

    def test_too_few_pairs_rejected(self):
        with pytest.raises(ValueError, match="at least 3"):
            spearman([1, 2], [1, 2])

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError, match="length mismatch"):
            spearman([1, 2, 3], [1, 2])

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError, match="finite"):
            spearman([1.0, float("nan"), 3.0], [1.0, 2.0, 3.0])

    @given(
        xs=st.lists(st.floats(min_value=-10, max_value=10), min_size=3, max_size=20),
        ys=st.lists(st.floats(min_value=-10, max_value=10), min_size=3, max_size=20),
    )
    def test_matches_scipy_property(self, xs, ys):
        n = min(len(xs), len(ys))
        xs, ys = xs[:n], ys[:n]
        if len(set(xs)) < 2 or len(set(ys)) < 2:
            return
        expected = scipy.stats.spearmanr(xs, ys).statistic
        assert spearman(xs, ys).rho == pytest.approx(expected, abs=1e-12)


class TestGapReport:
    def _vectors(self):
        labels = ["bin2", "bin3", "bin4"]
        d = WeightVector(labels, [1.0, 2.0, 0.0])
        r = WeightVector(labels, [0.0, 1.5, 1.5])
        return d, r

    def test_partition(self):
        d, r = self._vectors()
        gap = gap_report(d, r, {"bin4": ["qba", "qbb"]})
        assert [(b.label, b.excess) for b in gap.surplus_bins] == [
            ("bin2", 1.0),
            ("bin3", 0.5),
        ]
        assert [(b.label, b.shortfall) for b in gap.deficit_bins] == [("bin4", 1.5)]
        assert gap.deficit_bins[0].examples == ("qba", "qbb")

    def test_examples_capped_and_sorted(self):
        d = WeightVector(["bin0"], [1.0])
        r = WeightVector(["bin0"], [9.0])
        members = {"bin0": ["zzz", "aaa", "mmm", "bbb", "ccc", "ddd", "eee"]}
        gap = gap_report(d, r, members)
        examples = gap.deficit_bins[0].examples
        assert len(examples) == MAX_GAP_EXAMPLES
        assert examples == ("aaa", "bbb", "ccc", "ddd", "eee")

    def test_equal_bins_appear_nowhere(self):
        v = WeightVector(["bin0", "bin1"], [1.0, 2.0])
        gap = gap_report(v, v, {})
        assert gap.surplus_bins == () and gap.deficit_bins == ()

    def test_label_mismatch_rejected(self):
        d = WeightVector(["bin0"], [1.0])
        r = WeightVector(["bin1"], [1.0])
        with pytest.raises(ValueError, match="aligned"):
            gap_report(d, r, {})

    def test_attach_gap_round_trip(self):
        report = jmm_score([2.5, 3.5, 3.7], [3.2, 4.1], 1.0)
        enriched = attach_gap(report, {"bin4": ["qzz"]})
        assert enriched.value == report.value
        assert enriched.gap is not None
        deficit_labels = [b.label for b in enriched.gap.deficit_bins]
        assert "bin4" in deficit_labels

    def test_attach_gap_needs_per_bin(self):
        bare = DiversityReport(score_name="ti_morph", value=0.5)
        with pytest.raises(ValueError, match="per-bin"):
            attach_gap(bare, {})


class TestOverlapSeries:
    def test_rows_carry_min_max(self):
        a = WeightVector(["x", "y"], [1.0, 3.0])
        b = WeightVector(["x", "y"], [2.0, 2.0])
        rows = overlap_series(a, b)
        assert [(r.min_weight, r.max_weight) for r in rows] == [(1.0, 2.0), (2.0, 3.0)]
        num = sum(r.min_weight for r in rows)
        den = sum(r.max_weight for r in rows)
        assert num / den == 3.0 / 5.0


class TestSerialization:
    def _report(self):
        report = jmm_score([2.5, 3.5, 3.7], [3.2, 4.1], 1.0)
        return attach_gap(report, {"bin4": ["qba", "qbb"]})

    def test_json_round_trip(self):
        report = self._report()
        blob = serialize_report(report, "json")
        assert blob.endswith(b"\n")
        again = deserialize_report(blob)
        assert again == report

    def test_json_is_deterministic(self):
        report = self._report()
        assert serialize_report(report, "json") == serialize_report(report, "json")

    def test_json_carries_schema_version(self):
        payload = json.loads(serialize_report(self._report(), "json"))
        assert payload["schema_version"] == "1"

    def test_schema_version_mismatch_rejected(self):
        payload = json.loads(serialize_report(self._report(), "json"))
        payload["schema_version"] = "99"
        with pytest.raises(ValueError, match="schema_version"):
            deserialize_report(json.dumps(payload))

    def test_csv_header_and_rows(self):
        text = serialize_report(self._report(), "csv").decode()
        lines = text.splitlines()
        assert lines[0] == "bin,dataset,reference,min,max"
        assert len(lines) == 1 + 3
        assert lines[1].split(",")[0] == "bin2"

    def test_svg_one_rect_per_occupied_bin_per_series(self):
        report = self._report()
        svg = serialize_report(report, "svg").decode()
        assert svg.startswith("<?xml")
        assert "<svg" in svg and svg.rstrip().endswith("</svg>")
        n_dataset_bins = sum(1 for r in report.per_bin if r.dataset > 0)
        n_reference_bins = sum(1 for r in report.per_bin if r.reference > 0)
        n_overlap_bins = sum(1 for r in report.per_bin if r.min_weight > 0)
        assert svg.count('class="dataset"') == n_dataset_bins
        assert svg.count('class="reference"') == n_reference_bins
        assert svg.count('class="intersection"') == n_overlap_bins
        assert svg.count("<text") == len(report.per_bin) + 1

    def test_svg_alias(self):
        report = self._report()
        assert serialize_report(report, "svg-histogram") == serialize_report(report, "svg")

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError, match="unsupported format"):
            serialize_report(self._report(), "yaml")

    def test_tabular_formats_need_per_bin(self):
        bare = DiversityReport(score_name="ti_syn", value=0.5)
        with pytest.raises(ValueError, match="per-bin"):
            serialize_report(bare, "csv")
        # json works without a table
        assert deserialize_report(serialize_report(bare, "json")) == bare
