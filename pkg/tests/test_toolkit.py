"""Catalog generation and the survey runner."""

import pytest

from powerchroma import generate_catalog, run_survey
from powerchroma.fixtures import nonabelian21_text
from powerchroma.toolkit import _check_report, survey_group


class TestCatalog:
    def test_max_order_8(self):
        catalog = generate_catalog(8)
        specs = set(catalog)
        assert {f"cyclic:{n}" for n in range(1, 9)} <= specs
        assert "product:cyclic:2,cyclic:2" in specs
        assert "product:cyclic:2,cyclic:4" in specs
        assert "product:cyclic:2,cyclic:2,cyclic:2" in specs
        assert "dihedral:3" in specs and "dihedral:4" in specs
        assert "quaternion:2" in specs
        assert len(specs) == 8 + 3 + 2 + 1

    def test_max_order_1(self):
        assert list(generate_catalog(1)) == ["cyclic:1"]

    def test_max_order_9_additions(self):
        extra = set(generate_catalog(9)) - set(generate_catalog(8))
        assert extra == {"cyclic:9", "product:cyclic:3,cyclic:3"}

    def test_product_entries_are_invariant_factor_chains(self):
        for spec in generate_catalog(48):
            if not spec.startswith("product:"):
                continue
            factors = [int(p.split(":")[1]) for p in spec[len("product:"):].split(",")]
            assert len(factors) >= 2
            assert all(factors[i + 1] % factors[i] == 0 for i in range(len(factors) - 1)), spec
            # divisibility chains with d1 >= 2 are never cyclic, so no duplicates
            assert factors[0] >= 2

    def test_sorted_and_deterministic(self):
        a = generate_catalog(24)
        b = generate_catalog(24)
        assert a.specs == b.specs
        orders = []
        from powerchroma import construct_group

        for spec in a:
            orders.append(construct_group(spec).order)
        assert orders == sorted(orders)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            generate_catalog(0)


class TestSurvey:
    def test_overfull_set_up_to_15(self):
        result = run_survey(generate_catalog(15))
        assert result.overfull_groups == [
            "cyclic:3", "cyclic:5", "cyclic:7", "cyclic:9", "cyclic:11", "cyclic:13",
        ]
        assert result.class2_groups == result.overfull_groups
        assert result.consistent

    def test_max_order_2_all_class1(self):
        result = run_survey(generate_catalog(2))
        assert result.overfull_groups == []
        assert all(r.predicted_class == "class1" for r in result.reports)

    def test_witness_and_oracle_modes(self):
        result = run_survey(generate_catalog(15), witness=True, oracle_max_order=10)
        assert result.consistent, result.mismatches
        for report in result.reports:
            assert report.witness is not None and report.witness.verified
            if report.order <= 10:
                assert report.oracle is not None and report.oracle.agrees

    def test_byte_identical_output(self):
        first = run_survey(generate_catalog(12), witness=True, oracle_max_order=8, seed=3)
        second = run_survey(generate_catalog(12), witness=True, oracle_max_order=8, seed=3)
        assert first.to_json() == second.to_json()

    def test_parallel_matches_serial(self):
        serial = run_survey(generate_catalog(15), witness=True)
        threaded = run_survey(generate_catalog(15), witness=True, jobs=4)
        assert serial.to_json() == threaded.to_json()

    def test_timing_only_on_request(self):
        result = run_survey(generate_catalog(4))
        assert "elapsed_ms" not in result.to_dict()["reports"][0]
        assert "elapsed_ms" in result.to_dict(include_timing=True)["reports"][0]

    def test_extra_table_spec(self, tmp_path):
        path = tmp_path / "order21.table"
        path.write_text(nonabelian21_text())
        result = run_survey(generate_catalog(4), extra_specs=(f"table:{path}",))
        assert result.consistent
        table_report = [r for r in result.reports if r.spec.startswith("table:")]
        assert len(table_report) == 1
        assert table_report[0].order == 21
        assert not table_report[0].overfull
        assert table_report[0].predicted_class == "class1"

    def test_survey_group_fields(self):
        report = survey_group("cyclic:15", witness=True, oracle_max_order=0)
        assert (report.order, report.edge_count, report.max_degree) == (15, 97, 14)
        assert (report.deficiency, report.budget, report.overfull) == (8, 6, False)
        assert report.is_cyclic and report.odd and not report.prime_power
        assert report.witness.colors_used == 14
        assert report.witness.strategy == "rhee"

    def test_mismatch_detection(self):
        report = survey_group("cyclic:9", witness=True)
        assert _check_report(report) == []
        report.predicted_class = "class1"  # fabricate an inconsistency
        problems = _check_report(report)
        assert problems and any("does not track" in p for p in problems)
