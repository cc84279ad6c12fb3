"""Overfullness decisions, deficiency budgets, and class prediction."""

import pytest

from powerchroma import (
    build_power_graph,
    complete_graph,
    construct_group,
    core_class1_check,
    deficiency_report,
    factorize,
    full_degree_vertices,
    generate_catalog,
    is_cyclic,
    is_overfull,
    max_degree,
    predict_class,
)


class TestIsOverfull:
    def test_k9_overfull(self):
        graph = build_power_graph(construct_group("cyclic:9"))
        assert graph.edge_count == 36
        assert is_overfull(graph)  # 36 > 8 * 4

    def test_c15_not_overfull(self):
        graph = build_power_graph(construct_group("cyclic:15"))
        assert not is_overfull(graph)  # 97 <= 14 * 7

    def test_even_order_never_overfull(self):
        assert not is_overfull(build_power_graph(construct_group("cyclic:6")))
        for spec in generate_catalog(30):
            group = construct_group(spec)
            if group.order % 2 == 0:
                assert not is_overfull(build_power_graph(group)), spec

    def test_degenerate_orders(self):
        assert not is_overfull(build_power_graph(construct_group("cyclic:1")))
        assert not is_overfull(build_power_graph(construct_group("cyclic:2")))


class TestDeficiencyReport:
    def test_c15(self):
        report = deficiency_report(build_power_graph(construct_group("cyclic:15")))
        assert (report.deficiency, report.budget, report.overfull) == (8, 6, False)

    def test_k9(self):
        report = deficiency_report(complete_graph(9))
        assert (report.deficiency, report.budget, report.overfull) == (0, 3, True)

    def test_c21(self):
        report = deficiency_report(build_power_graph(construct_group("cyclic:21")))
        assert report.edge_count == 198
        assert (report.deficiency, report.budget, report.overfull) == (12, 9, False)

    def test_budget_absent_for_even_order(self):
        report = deficiency_report(build_power_graph(construct_group("cyclic:8")))
        assert report.budget is None

    def test_budget_threshold_characterizes_overfull(self):
        # for odd n with a full-degree vertex: overfull <=> deficiency <= budget
        for spec in generate_catalog(27):
            group = construct_group(spec)
            if group.order % 2 == 0 or group.order < 3:
                continue
            report = deficiency_report(build_power_graph(group))
            assert report.max_degree == report.n - 1
            assert report.overfull == (report.deficiency <= report.budget), spec


class TestPredictClass:
    @pytest.mark.parametrize(
        "spec,label",
        [
            ("cyclic:27", "class2"),
            ("cyclic:15", "class1"),
            ("cyclic:16", "class1"),
            ("cyclic:1", "class1"),
            ("cyclic:2", "class1"),
            ("cyclic:3", "class2"),
            ("quaternion:2", "class1"),
            ("product:cyclic:3,cyclic:3", "class1"),
        ],
    )
    def test_examples(self, spec, label):
        assert predict_class(construct_group(spec)).class_label == label

    def test_reasons(self):
        assert predict_class(construct_group("cyclic:9")).reason == "odd-prime-power-cyclic-overfull"
        assert predict_class(construct_group("cyclic:6")).reason == "even-order"
        assert predict_class(construct_group("cyclic:15")).reason == "theorem-classification"
        assert predict_class(construct_group("cyclic:1")).reason == "core-small"

    def test_prediction_tracks_overfull_on_catalog(self):
        for spec in generate_catalog(27):
            group = construct_group(spec)
            graph = build_power_graph(group)
            prediction = predict_class(group)
            assert (prediction.class_label == "class2") == is_overfull(graph), spec


class TestCoreCheck:
    def test_dihedral3_single_vertex_core(self):
        witness = core_class1_check(build_power_graph(construct_group("dihedral:3")))
        assert witness is not None
        assert witness.condition == "core-small"
        assert witness.description == "core has 1 vertex"

    def test_q8_two_vertex_core(self):
        witness = core_class1_check(build_power_graph(construct_group("quaternion:2")))
        assert witness is not None
        assert (witness.condition, witness.core_size) == ("core-small", 2)
        assert witness.description == "core has 2 vertices"

    def test_k9_no_witness(self):
        assert core_class1_check(complete_graph(9)) is None

    def test_acyclic_core_branch(self):
        # star: every vertex has degree <= 3, core of max-degree vertices is edgeless
        from powerchroma import Graph

        star = Graph(5, [(0, i) for i in range(1, 5)])
        witness = core_class1_check(star)
        assert witness is not None and witness.condition == "core-small"
        # three disjoint stars: the three centers form an edgeless, acyclic core
        triple = Graph(
            12,
            [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7), (8, 9), (8, 10), (8, 11)],
        )
        witness = core_class1_check(triple)
        assert witness is not None
        assert witness.condition == "core-acyclic"
        assert witness.core_size == 3

    def test_core_witness_implies_class1_on_catalog(self):
        for spec in generate_catalog(27):
            group = construct_group(spec)
            graph = build_power_graph(group)
            if core_class1_check(graph) is not None:
                assert predict_class(group).class_label == "class1", spec


class TestIdentityOnlyJoinBudget:
    def test_deficiency_at_least_m(self):
        # odd order with only the identity full-degree forces deficiency >= (n-1)/2
        for spec in generate_catalog(27):
            group = construct_group(spec)
            if group.order % 2 == 0 or group.order < 3:
                continue
            graph = build_power_graph(group)
            if len(full_degree_vertices(graph)) == 1:
                report = deficiency_report(graph)
                assert report.deficiency >= (group.order - 1) // 2, spec
                assert not report.overfull
