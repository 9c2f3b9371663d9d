import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from momentumrank import (
    InputError,
    StudyConfig,
    build_delta_system,
    frontier_sortscan,
    parse_gains_table,
    parse_leaders_table,
    parse_snapshot,
    rank_leaders,
    run_study,
    verify_bound,
    write_report,
)

from util import random_pairs, records_from_pairs


class TestParseSnapshot:
    def test_csv(self, tmp_path):
        p = tmp_path / "snap.csv"
        p.write_text("id,score\nA,100\nB,50\n")
        snap = parse_snapshot(p)
        assert snap.scores == {"A": 100.0, "B": 50.0}

    def test_json(self, tmp_path):
        p = tmp_path / "snap.json"
        p.write_text(json.dumps({"timestamp": "2021-05-01", "scores": {"A": 1.5}}))
        snap = parse_snapshot(p)
        assert snap.timestamp == "2021-05-01"
        assert snap.scores == {"A": 1.5}

    def test_duplicate_id_names_id_and_line(self, tmp_path):
        p = tmp_path / "snap.csv"
        p.write_text("id,score\nA,100\nA,50\n")
        with pytest.raises(InputError, match=r"line 3.*'A'"):
            parse_snapshot(p)

    def test_negative_score(self, tmp_path):
        p = tmp_path / "snap.csv"
        p.write_text("id,score\nA,-1\n")
        with pytest.raises(InputError, match="negative"):
            parse_snapshot(p)

    def test_empty_file(self, tmp_path):
        p = tmp_path / "snap.csv"
        p.write_text("")
        with pytest.raises(InputError, match="no entities"):
            parse_snapshot(p)

    def test_header_only(self, tmp_path):
        p = tmp_path / "snap.csv"
        p.write_text("id,score\n")
        with pytest.raises(InputError, match="no entities"):
            parse_snapshot(p)

    def test_malformed_row_reports_line(self, tmp_path):
        p = tmp_path / "snap.csv"
        p.write_text("id,score\nA,1\nB\n")
        with pytest.raises(InputError, match="line 3"):
            parse_snapshot(p)

    def test_unparseable_score_reports_line(self, tmp_path):
        p = tmp_path / "snap.csv"
        p.write_text("id,score\nA,ten\n")
        with pytest.raises(InputError, match="line 2"):
            parse_snapshot(p)

    def test_wrong_header(self, tmp_path):
        p = tmp_path / "snap.csv"
        p.write_text("entity,value\nA,1\n")
        with pytest.raises(InputError, match="header"):
            parse_snapshot(p)


class TestParseGainsTable:
    def test_table2_shape_and_values(self, table2):
        assert table2.n == 28
        anuel = table2.by_rank(4)
        assert anuel.g == 6301433.0  # thousands separators normalized
        assert anuel.r == 0.332

    def test_percent_normalization_matches_division(self, table2):
        assert table2.by_rank(3).r == 4.50 / 100

    def test_negative_percent(self, fixtures_dir):
        ds = parse_gains_table(fixtures_dir / "table7.csv")
        assert ds.by_id("Qi Baishi").r == -2.18 / 100
        assert ds.by_id("Qi Baishi").r < 0

    def test_scientific_notation_scores(self, tmp_path):
        p = tmp_path / "g.csv"
        p.write_text("id,score,g,r\nMSFT,2.49E+12,5.5e10,2.24%\n")
        ds = parse_gains_table(p)
        assert ds.by_id("MSFT").score == 2.49e12

    def test_extra_columns_ignored(self, fixtures_dir):
        ds = parse_gains_table(fixtures_dir / "table6.csv")  # carries a name column
        assert ds.n == 20
        assert ds.by_id("QS").g == 1756.0

    def test_missing_required_column(self, tmp_path):
        p = tmp_path / "g.csv"
        p.write_text("id,g\nA,1\n")
        with pytest.raises(InputError, match="missing"):
            parse_gains_table(p)

    def test_unparseable_number_reports_line_and_column(self, tmp_path):
        p = tmp_path / "g.csv"
        p.write_text("id,g,r\nA,1,0.1\nB,oops,0.2\n")
        with pytest.raises(InputError, match=r"line 3, column g"):
            parse_gains_table(p)

    def test_header_only_gives_empty_system(self, tmp_path):
        p = tmp_path / "g.csv"
        p.write_text("id,g,r\n")
        assert parse_gains_table(p).n == 0

    def test_blank_score_cells_mean_missing(self, tmp_path):
        p = tmp_path / "g.csv"
        p.write_text("id,score,g,r\nA,10,1,0.1\nB,,2,0.2\n")
        ds = parse_gains_table(p)
        assert not ds.has_scores
        assert ds.by_id("B").score is None

    @given(x=st.floats(min_value=-1e6, max_value=1e6, allow_nan=False))
    def test_percent_equals_hundredth(self, tmp_path_factory, x):
        p = tmp_path_factory.mktemp("pct") / "g.csv"
        p.write_text(f"id,g,r\nA,1,{x!r}%\n")
        assert parse_gains_table(p).by_id("A").r == x / 100


class TestParseLeadersTable:
    def test_reads_percent_columns(self, fixtures_dir):
        rows = parse_leaders_table(fixtures_dir / "table8.csv")
        assert rows == (("k1", 0.2, 0.1), ("k2", 0.4, 0.6), ("k3", 0.8, 0.3))

    def test_id_column_optional(self, tmp_path):
        p = tmp_path / "l.csv"
        p.write_text("r,w\n0.5,0.1\n0.25,0.2\n")
        assert parse_leaders_table(p) == (("1", 0.5, 0.1), ("2", 0.25, 0.2))

    def test_empty_rejected(self, tmp_path):
        p = tmp_path / "l.csv"
        p.write_text("r,w\n")
        with pytest.raises(InputError, match="no leader rows"):
            parse_leaders_table(p)

    def test_missing_columns(self, tmp_path):
        p = tmp_path / "l.csv"
        p.write_text("id,weight\nA,0.5\n")
        with pytest.raises(InputError, match="missing"):
            parse_leaders_table(p)


class TestRoundTrip:
    @pytest.mark.parametrize("with_scores", [True, False])
    def test_gains_csv_round_trips_exactly(self, tmp_path, with_scores):
        rng = np.random.default_rng(83)
        g, r = random_pairs(rng, 40, "negative")
        scores = rng.random(40) * 1e9 if with_scores else None
        ds = build_delta_system(records_from_pairs(g, r, scores))
        p = tmp_path / "out.csv"
        p.write_text(write_report(ds, "csv") + "\n")
        back = parse_gains_table(p)
        assert [(e.id, e.score, e.g, e.r) for e in back.entities] == [
            (e.id, e.score, e.g, e.r) for e in ds.entities
        ]

    def test_fixture_survives_rewrite(self, table2, tmp_path):
        p = tmp_path / "t2.csv"
        p.write_text(write_report(table2, "csv") + "\n")
        back = parse_gains_table(p)
        assert [(e.id, e.g, e.r) for e in back.entities] == [
            (e.id, e.g, e.r) for e in table2.entities
        ]


class TestWriteReport:
    def test_markdown_leader_table_has_one_row_per_leader(self, table2):
        doc = write_report(frontier_sortscan(table2), "markdown")
        lines = doc.splitlines()
        assert lines[0].startswith("| id | rank | g | r | w | interval |")
        assert len(lines) == 2 + 3  # header, rule, three leaders

    def test_serialization_is_deterministic(self, table2):
        result = frontier_sortscan(table2)
        assert write_report(result, "json") == write_report(result, "json")
        study = run_study(StudyConfig(n=500, trials=10, seed=3))
        assert write_report(study, "json") == write_report(study, "json")

    def test_frontier_json_fields(self, abcd):
        payload = json.loads(write_report(frontier_sortscan(abcd), "json"))
        assert payload["n"] == 4
        ids = [row["id"] for row in payload["leaders"]]
        assert ids == ["A", "B", "C"]
        assert payload["leaders"][0]["w"] == 0.2

    def test_frontier_csv_interval_column(self, table2):
        doc = write_report(frontier_sortscan(table2), "csv")
        rows = doc.splitlines()
        assert rows[0] == "id,rank,g,r,w,interval,|D(m)|"
        assert rows[1].endswith("1..21,24")

    def test_ranking_report(self, abcd):
        doc = write_report(rank_leaders(abcd), "csv")
        assert doc.splitlines()[1].startswith("C,0.2,0.5")

    def test_study_json_summary(self):
        study = run_study(StudyConfig(n=500, trials=10, seed=3))
        payload = json.loads(write_report(study, "json"))
        assert set(payload) == {"config", "percentiles", "bounds", "fitted_c"}
        assert payload["config"]["n"] == 500
        assert set(payload["bounds"]) == {"1/3", "1/2"}

    def test_study_csv_is_trial_size(self):
        study = run_study(StudyConfig(n=500, trials=4, seed=3))
        rows = write_report(study, "csv").splitlines()
        assert rows[0] == "trial,size"
        assert len(rows) == 5

    def test_bound_report(self, table2):
        payload = json.loads(write_report(verify_bound(table2), "json"))
        assert payload == {"frontier_size": 3, "moving_maxima_count": 3, "holds": True}

    def test_momentousness_formats(self, abcd):
        from momentumrank import momentousness

        score = momentousness(abcd)
        markdown = write_report(score, "markdown")
        assert markdown.splitlines()[0] == "| id | r | w | r*w |"
        assert markdown.splitlines()[-1].startswith("momentousness: ")
        rows = write_report(score, "csv").splitlines()
        assert rows[0] == "id,r,w,r*w"
        assert rows[-1].startswith("TOTAL")

    def test_comparison_formats(self, abcd):
        from momentumrank import compare_systems

        comparison = compare_systems(abcd, abcd)
        assert json.loads(write_report(comparison, "json"))["verdict"] == "equal"
        assert "equally momentous" in write_report(comparison, "markdown")

    def test_system_reports(self, abcd):
        payload = json.loads(write_report(abcd, "json"))
        assert payload["total_score"] == 200.0
        assert [e["id"] for e in payload["entities"]] == ["A", "B", "D", "C"]
        markdown = write_report(abcd, "markdown")
        assert markdown.splitlines()[0] == "| id | score | g | r |"

    def test_study_markdown_mentions_bounds(self):
        study = run_study(StudyConfig(n=500, trials=5, seed=3))
        doc = write_report(study, "markdown")
        assert "bound c*(log10(n)+1)^2" in doc
        assert "n=500 trials=5 seed=3" in doc

    def test_unknown_format_rejected(self, table2):
        with pytest.raises(InputError, match="format"):
            write_report(frontier_sortscan(table2), "yaml")

    def test_unknown_result_rejected(self):
        with pytest.raises(InputError, match="no report writer"):
            write_report(object(), "json")
