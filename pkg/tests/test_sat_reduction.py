from itertools import combinations

import pytest

from odcodes.codes import gamma, gamma_all_optima, verify
from odcodes.graphs import CodeKind, girth, is_bipartite, max_degree
from odcodes.sat_reduction import (
    LsatFormatError,
    LsatInstance,
    assignment_to_code,
    auxiliary_graph,
    brute_force_sat,
    build_gadget,
    clause_universe,
    code_to_assignment,
    enumerate_slsat,
    expected_od_size,
    expected_otd_size,
    format_lsat,
    parse_lsat,
    saturate,
)

UNSAT_2VAR = LsatInstance(2, (frozenset({1}), frozenset({-1, 2}), frozenset({-1, -2})))


class TestParse:
    def test_basic(self):
        inst = parse_lsat("p lsat 2 1\n1 -2 0\n")
        assert inst.n_vars == 2 and inst.clauses == (frozenset({1, -2}),)

    def test_comments_and_multiline_clause(self):
        inst = parse_lsat("c hi\np lsat 3 2\n1 2\n3 0\nc mid\n-1 0\n")
        assert inst.n_clauses == 2 and frozenset({1, 2, 3}) in inst.clauses

    def test_roundtrip(self):
        inst = LsatInstance(3, (frozenset({1, -2}), frozenset({2, 3}), frozenset({-3})))
        assert parse_lsat(format_lsat(inst)) == inst

    @pytest.mark.parametrize(
        "text,needle",
        [
            ("p lsat 1 1\n1 -1 0\n", "both literals"),
            ("p lsat 2 2\n1 2 0\n1 2 0\n", "duplicate clause"),
            ("p lsat 3 2\n1 2 0\n1 2 3 0\n", "share more than one"),
            ("p lsat 2 3\n1 0\n1 2 0\n1 -2 0\n", "appears in 3 clauses"),
            ("p lsat 1 1\n2 0\n", "out of range"),
            ("p lsat 2 1\n1 2 -1 4 0\n", "more than 3 literals"),
            ("p lsat 2 1\n0\n", "empty clause"),
            ("p lsat 2 2\n1 0\n", "announces 2 clauses"),
            ("p lsat 2 1\n1\n", "not terminated"),
            ("1 0\n", "header"),
            ("p cnf 2 1\n1 0\n", "header"),
        ],
    )
    def test_rejections_named(self, text, needle):
        with pytest.raises(LsatFormatError, match=needle):
            parse_lsat(text)


class TestSaturate:
    def test_single_positive_literal(self):
        inst = LsatInstance(1, (frozenset({1}),))
        out = saturate(inst)
        assert out.n_vars == 2
        assert set(out.clauses) == {frozenset({1}), frozenset({1, 2}), frozenset({2})}
        assert out.saturated

    def test_fixpoint(self):
        inst = LsatInstance(2, (frozenset({1}), frozenset({1, 2}), frozenset({2})))
        assert inst.saturated
        assert saturate(inst) == inst

    def test_size_bounds(self):
        inst = LsatInstance(3, (frozenset({1, -2, 3}),))
        out = saturate(inst)
        assert out.n_vars <= 9 and out.n_clauses <= 1 + 12

    def test_preserves_satisfiability_exhaustive(self):
        # every linear instance over 3 variables with up to 4 clauses
        universe = clause_universe(3)
        checked = 0
        for m in range(1, 5):
            for combo in combinations(universe, m):
                try:
                    inst = LsatInstance(3, combo)
                except LsatFormatError:
                    continue
                checked += 1
                before = brute_force_sat(inst) is not None
                after = brute_force_sat(saturate(inst)) is not None
                assert before == after, combo
        assert checked > 1000


class TestBruteForceSat:
    def test_single_literal(self):
        inst = LsatInstance(1, (frozenset({1}),))
        assert brute_force_sat(inst) == {1: True}

    def test_no_clauses(self):
        inst = LsatInstance(2, ())
        assert brute_force_sat(inst) == {1: False, 2: False}

    def test_unsat_instance(self):
        assert brute_force_sat(UNSAT_2VAR) is None

    def test_partial_assignment_rejected(self):
        with pytest.raises(ValueError, match="misses variables"):
            UNSAT_2VAR.evaluate({1: True})

    def test_guard(self):
        with pytest.raises(ValueError):
            brute_force_sat(LsatInstance(30, ()), limit=24)


def gadget_of(*clauses, n_vars):
    return build_gadget(saturate(LsatInstance(n_vars, tuple(frozenset(c) for c in clauses))))


class TestGadget:
    def test_needs_saturated(self):
        with pytest.raises(ValueError, match="saturated"):
            build_gadget(LsatInstance(1, (frozenset({1}),)))

    def test_unused_variable_rejected(self):
        inst = saturate(LsatInstance(1, (frozenset({1}),)))
        padded = LsatInstance(inst.n_vars + 1, inst.clauses)
        with pytest.raises(ValueError, match="occurs in no clause"):
            build_gadget(padded)

    def test_w_vertices_follow_occurrence(self):
        gg = gadget_of({1}, n_vars=1)
        # saturation leaves literal 1 and helper 2 positive only
        assert gg.w_pos[0] is not None and gg.w_neg[0] is None
        assert gg.w_pos[1] is not None and gg.w_neg[1] is None
        v1 = gg.v_triples[0][0]
        assert gg.graph.degree(v1) == 2

    def test_structure(self):
        gg = gadget_of({1, -2, 3}, {2, 3}, n_vars=3)
        g = gg.graph
        ok, _ = is_bipartite(g)
        assert ok and max_degree(g) <= 4 and girth(g) >= 6

    def test_partition_classes_are_stable_sets(self):
        gg = gadget_of({1, -2}, {-1, 2}, n_vars=2)
        g = gg.graph
        side1 = set()
        side2 = set()
        for u1, u2, u3 in gg.u_triples:
            side1 |= {u1, u3}
            side2 |= {u2}
        for v1, v2, v3 in gg.v_triples:
            side1 |= {v1, v3}
            side2 |= {v2}
        side2 |= {w for w in gg.w_pos if w is not None}
        side2 |= {w for w in gg.w_neg if w is not None}
        assert side1 | side2 == set(range(g.n))
        for side in (side1, side2):
            assert not any(g.has_edge(a, b) for a in side for b in side if a < b)

    def test_vertex_count(self):
        inst = saturate(LsatInstance(2, (frozenset({1, -2}),)))
        gg = build_gadget(inst)
        occurring = len(inst.literal_counts())
        assert gg.graph.n == 3 * inst.n_vars + 3 * inst.n_clauses + occurring


class TestAssignmentCode:
    def roundtrip(self, inst):
        gg = build_gadget(inst)
        assignment = brute_force_sat(inst)
        assert assignment is not None
        for total in (False, True):
            code = assignment_to_code(gg, assignment, total=total)
            expected = expected_otd_size(gg) if total else expected_od_size(gg)
            assert len(code) == expected
            kind = CodeKind.OTD if total else CodeKind.OD
            assert verify(gg.graph, code, kind).valid
        back = code_to_assignment(gg, assignment_to_code(gg, assignment))
        assert inst.evaluate(back)

    def test_small_instances(self):
        self.roundtrip(saturate(LsatInstance(1, (frozenset({1}),))))
        self.roundtrip(saturate(LsatInstance(2, (frozenset({1, -2}), frozenset({2})))))
        self.roundtrip(
            LsatInstance(2, (frozenset({1}), frozenset({2}), frozenset({1, 2})))
        )

    def test_unsatisfying_assignment_rejected(self):
        inst = LsatInstance(2, (frozenset({1}), frozenset({2}), frozenset({1, 2})))
        gg = build_gadget(inst)
        with pytest.raises(ValueError, match="does not satisfy"):
            assignment_to_code(gg, {1: False, 2: True})

    def test_missing_w_pair_rejected(self):
        inst = LsatInstance(2, (frozenset({1}), frozenset({2}), frozenset({1, 2})))
        gg = build_gadget(inst)
        with pytest.raises(ValueError, match="x1"):
            code_to_assignment(gg, set())


class TestAuxiliaryGraph:
    def test_structure(self):
        inst = saturate(LsatInstance(3, (frozenset({1, -2, 3}),)))
        aux = auxiliary_graph(inst)
        ok, _ = is_bipartite(aux)
        assert ok and girth(aux) >= 6
        for v, lab in aux.labels.items():
            if lab.startswith("c"):
                assert aux.degree(v) <= 3
            else:
                assert aux.degree(v) == 2

    def test_needs_saturated(self):
        with pytest.raises(ValueError):
            auxiliary_graph(LsatInstance(1, (frozenset({1}),)))


class TestEnumerator:
    def test_small_counts(self):
        # n=2 count hand-checked: singles+pair, the padded single, the four
        # singles with two pairs, all four pairs, and the five-clause mix
        assert sum(1 for _ in enumerate_slsat(1, 6)) == 0
        assert sum(1 for _ in enumerate_slsat(2, 6)) == 5

    def test_yielded_instances_are_valid(self):
        seen = set()
        for inst in enumerate_slsat(3, 6):
            assert inst.saturated
            counts = inst.literal_counts()
            assert {abs(l) for l in counts} == set(range(1, inst.n_vars + 1))
            assert inst.n_clauses <= 6
            assert inst not in seen
            seen.add(inst)
        assert len(seen) == 5 + 43

    def test_counting_lower_bound_on_optimal_codes(self):
        # every optimal code keeps at least 2 vertices per gadget path, one
        # less in total without the total-domination requirement
        checked = 0
        for inst in enumerate_slsat(2, 6):
            if brute_force_sat(inst) is None:
                continue
            gg = build_gadget(inst)
            triples = gg.v_triples + gg.u_triples
            t_mask = set()
            for t in triples:
                t_mask |= set(t)
            for kind, slack in ((CodeKind.OD, 1), (CodeKind.OTD, 0)):
                _, optima, _ = gamma_all_optima(gg.graph, kind, cap=500)
                for code in optima:
                    assert len(code & t_mask) >= 2 * len(triples) - slack
                checked += 1
        assert checked


class TestEquivalenceSampled:
    """Spot checks of the full equivalence; the exhaustive run lives in the
    acceptance suite."""

    def test_sat_and_unsat_examples(self):
        sat_inst = LsatInstance(2, (frozenset({1}), frozenset({2}), frozenset({1, 2})))
        gg = build_gadget(sat_inst)
        assert gamma(gg.graph, CodeKind.OD)[0] == expected_od_size(gg)
        assert gamma(gg.graph, CodeKind.OTD)[0] == expected_otd_size(gg)

        unsat = saturate(UNSAT_2VAR)
        assert brute_force_sat(unsat) is None
        gg2 = build_gadget(unsat)
        assert gamma(gg2.graph, CodeKind.OD)[0] >= expected_od_size(gg2) + 1
        assert gamma(gg2.graph, CodeKind.OTD)[0] >= expected_otd_size(gg2) + 1

    def test_solver_code_decodes(self):
        inst = LsatInstance(2, (frozenset({1}), frozenset({2}), frozenset({1, 2})))
        gg = build_gadget(inst)
        value, witness = gamma(gg.graph, CodeKind.OD)
        assert value == expected_od_size(gg)
        assignment = code_to_assignment(gg, witness)
        assert inst.evaluate(assignment)
