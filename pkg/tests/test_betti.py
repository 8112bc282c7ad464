"""Betti tables from the subset sweep, checked entry-by-entry against the
no-shortcut enumeration oracle, plus the decision procedure and the
property harness."""

import random

import pytest

import naive_ref
from circreg.betti import (
    BettiTable,
    VertexLimitError,
    ZeroIdealError,
    betti_across_fields,
    decide_regularity,
    hochster_betti_table,
    projective_dimension,
    property_suite,
    regularity,
)
from circreg.complexes import euler_via_independence, independence_complex
from circreg.graphs import (
    Graph,
    circulant,
    cochordal_split_c4j,
    complete_graph,
    cycle_graph,
    empty_graph,
    moebius,
    path_graph,
    random_graph,
)
from circreg.homology import reduced_homology_dims


def oracle2(g):
    return hochster_betti_table(g, 2)


class TestKnownTables:
    def test_k3(self):
        t = hochster_betti_table(complete_graph(3))
        assert t.entries == {(0, 2): 3, (1, 3): 2}
        assert (t.regularity, t.projective_dimension) == (2, 1)

    def test_c4(self):
        t = hochster_betti_table(cycle_graph(4))
        assert t.entries == {(0, 2): 4, (1, 3): 4, (2, 4): 1}
        assert (t.regularity, t.projective_dimension) == (2, 2)

    def test_k4(self):
        t = hochster_betti_table(complete_graph(4))
        assert t.entries == {(0, 2): 6, (1, 3): 8, (2, 4): 3}

    def test_complete_graphs_reg_2(self):
        for n in range(2, 7):
            assert hochster_betti_table(complete_graph(n)).regularity == 2

    def test_complete_graph_closed_form(self):
        # Linear resolution of the complete graph's edge ideal:
        # beta_{i,i+2} = (i+1) * C(n, i+2), everything else zero.
        from math import comb

        for n in range(2, 7):
            t = hochster_betti_table(complete_graph(n))
            expected = {(i, i + 2): (i + 1) * comb(n, i + 2) for i in range(n - 1)}
            assert t.entries == expected
            assert t.projective_dimension == n - 2

    def test_quotient_normalizations(self):
        t = hochster_betti_table(complete_graph(4))
        assert t.regularity_quotient == t.regularity - 1
        assert t.projective_dimension_quotient == t.projective_dimension + 1


class TestAgainstNaiveSweep:
    @pytest.mark.parametrize("field", [2, 3, "Q"])
    def test_small_graphs_all_fields(self, field):
        rng = random.Random(83)
        graphs = [
            cycle_graph(5),
            complete_graph(4),
            path_graph(4),
            Graph(5, [(0, 1), (2, 3)]),
            circulant(6, {2, 3}),
        ]
        graphs += [random_graph(rng.randint(2, 6), rng.random(), rng) for _ in range(6)]
        for g in graphs:
            fast = hochster_betti_table(g, field)
            naive = naive_ref.betti_entries(g, field)
            assert fast.entries == naive, (g.edges, field)

    def test_generator_count_entry(self):
        rng = random.Random(89)
        for _ in range(15):
            g = random_graph(rng.randint(2, 9), rng.random(), rng)
            t = hochster_betti_table(g)
            if g.edges:
                assert t.beta(0, 2) == g.edge_count
            else:
                assert t.zero_ideal

    def test_index_ranges(self):
        rng = random.Random(97)
        for _ in range(10):
            g = random_graph(rng.randint(2, 8), 0.5, rng)
            t = hochster_betti_table(g)
            for (i, j), b in t.entries.items():
                assert 0 <= i <= max(g.n - 1, 0)
                assert 0 <= j <= g.n
                assert b > 0


class TestDegenerateAndLimits:
    def test_zero_ideal(self):
        t = hochster_betti_table(empty_graph(4))
        assert t.zero_ideal and t.entries == {}
        with pytest.raises(ZeroIdealError):
            regularity(t)
        with pytest.raises(ZeroIdealError):
            projective_dimension(t)

    def test_vertex_limit_names_the_limit(self):
        with pytest.raises(VertexLimitError, match="20"):
            hochster_betti_table(circulant(22, {1}), vertex_limit=20)

    def test_vertex_limit_override(self):
        t = hochster_betti_table(cycle_graph(6), vertex_limit=6)
        assert t.beta(0, 2) == 6


class TestDeterminismAndSymmetry:
    def test_workers_identical(self):
        g = moebius(5)
        t1 = hochster_betti_table(g, workers=1)
        t8 = hochster_betti_table(g, workers=8)
        assert t1 == t8 and t1.to_json_dict() == t8.to_json_dict()

    def test_symmetric_vs_asymmetric_relabelling(self):
        # Breaking the circulant labelling disables orbit reduction; the
        # sweep must still produce the same invariant table.
        g = circulant(9, {1, 3})
        perm = [3, 1, 4, 0, 5, 8, 2, 7, 6]
        h = Graph(9, [(perm[i], perm[j]) for (i, j) in g.edges])
        assert hochster_betti_table(g).entries == hochster_betti_table(h).entries

    def test_reflection_only_symmetry(self):
        # A star centered at 0 is fixed by v -> -v (mod n) but not by rotation.
        star = Graph(5, [(0, v) for v in range(1, 5)])
        for field in (2, "Q"):
            assert hochster_betti_table(star, field).entries == naive_ref.betti_entries(star, field)

    def test_column_n_alternating_sum_is_euler(self):
        for g in [cycle_graph(5), circulant(8, {1, 4}), circulant(6, {2, 3})]:
            t = hochster_betti_table(g)
            n = g.n
            cx = independence_complex(g)
            dims = reduced_homology_dims(cx, 2)
            for a in range(n):
                assert t.beta(a, n) == dims.get(n - a - 2, 0)
            signed = sum((-1) ** (n - a) * t.beta(a, n) for a in range(n + 1))
            assert signed == cx.euler_char()


class TestCrossField:
    def test_fields_agree_on_small_suite(self):
        for g in [cycle_graph(5), circulant(8, {1, 4}), moebius(3), complete_graph(4)]:
            tables, agree = betti_across_fields(g)
            assert agree, {k: t.entries for k, t in tables.items()}

    def test_json_round_trip(self):
        t = hochster_betti_table(cycle_graph(5))
        assert BettiTable.from_json_dict(t.to_json_dict()) == t

    def test_csv_shapes(self):
        t = hochster_betti_table(complete_graph(3))
        assert t.to_csv(nonzero_only=True) == "i,j,beta\n0,2,3\n1,3,2\n"
        assert t.to_csv().splitlines()[0].startswith("i\\j,")


class TestDecision:
    def test_loose_bound_cases(self):
        assert decide_regularity(10, 4, "n-r+1", 1).outcome == "regularity_determined"
        assert decide_regularity(10, 4, "n-r+1", 1).value == 4
        assert decide_regularity(10, 5, "n-r+1", -2).value == 5
        d = decide_regularity(10, 4, "n-r+1", -3)
        assert d.outcome == "pd_determined" and d.value == 7
        d = decide_regularity(10, 5, "n-r+1", 3)
        assert d.outcome == "pd_determined" and d.value == 6
        assert decide_regularity(10, 4, "n-r+1", 0).outcome == "inconclusive"

    def test_tight_bound_cases(self):
        assert decide_regularity(12, 4, "n-r", -1).value == 4
        assert decide_regularity(12, 4, "n-r", 5).value == 4
        assert decide_regularity(12, 4, "n-r", 0).outcome == "inconclusive"

    def test_rejects_bad_r(self):
        with pytest.raises(ValueError):
            decide_regularity(5, 0, "n-r", 1)
        with pytest.raises(ValueError):
            decide_regularity(5, 6, "n-r", 1)
        with pytest.raises(ValueError):
            decide_regularity(5, 2, "pd<=n", 1)

    def test_never_contradicts_oracle_on_k4(self):
        # K_4: reg <= 2 and pd <= n-r+1 = 3 both hold; chi = 3 > 0, r even.
        g = complete_graph(4)
        chi = euler_via_independence(g)
        d = decide_regularity(4, 2, "n-r+1", chi)
        assert d.is_regularity and d.value == hochster_betti_table(g).regularity


class TestPropertySuite:
    def test_two_disjoint_edges_additivity(self):
        g = Graph(4, [(0, 1), (2, 3)])
        report = property_suite(g, None, oracle2)
        check = {c.name: c for c in report.checks}["disjoint_union_additivity"]
        assert check.applicable and check.passed

    def test_c4_froberg(self):
        report = property_suite(cycle_graph(4), None, oracle2)
        check = {c.name: c for c in report.checks}["reg2_iff_complement_chordal"]
        assert check.applicable and check.passed

    def test_c8_14_vertex_deletion(self):
        g = circulant(8, {1, 4})
        t = oracle2(g)
        assert t.regularity == 3
        a = oracle2(g.without_closed_neighborhood(0)).regularity + 1
        b = oracle2(g.without_vertex(0)).regularity
        assert t.regularity in (a, b)
        report = property_suite(g, t, oracle2)
        check = {c.name: c for c in report.checks}["vertex_deletion_membership"]
        assert check.applicable and check.passed

    def test_cover_witness_bound(self):
        g = circulant(8, {1, 3, 4})
        report = property_suite(g, None, oracle2, cover_witness=list(cochordal_split_c4j(2)))
        check = {c.name: c for c in report.checks}["cochordal_cover_bound"]
        assert check.applicable and check.passed

    def test_edge_partition_subadditivity(self):
        g = cycle_graph(6)
        edges = sorted(g.edges)
        part = (Graph(6, edges[:3]), Graph(6, edges[3:]))
        report = property_suite(g, None, oracle2, edge_partition=part)
        check = {c.name: c for c in report.checks}["edge_split_subadditivity"]
        assert check.applicable and check.passed

    def test_failures_are_reported_not_raised(self):
        # Lying oracle: forces a visible failure entry.
        def bad_oracle(g):
            t = hochster_betti_table(g, 2)
            return BettiTable(t.n, 2, {(0, 5): 1})

        report = property_suite(cycle_graph(4), bad_oracle(cycle_graph(4)), bad_oracle)
        assert not report.all_passed
        assert report.failures()
