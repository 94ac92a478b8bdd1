"""Exhaustive scans: engines, partitioning, budgets, and witness statistics."""

import itertools

import pytest

from pinnacles.admissible import canonical_witness, is_admissible, max_pinnacles
from pinnacles.oracle import (
    BudgetExceeded,
    OracleBudget,
    collect_pinnacle_sets,
    count_admissible,
    enumerate_group,
    witnesses_of,
)
from pinnacles.wreath import (
    ColoredValue,
    GenPerm,
    GroupParams,
    PinSet,
    color_sum,
    in_subgroup,
)

CV = ColoredValue


class TestEnumeration:
    def test_orders(self):
        assert len(list(enumerate_group(GroupParams(1, 1, 3)))) == 6
        assert len(list(enumerate_group(GroupParams(2, 2, 3)))) == 24
        assert len(list(enumerate_group(GroupParams(3, 1, 2)))) == 18

    def test_elements_unique_and_in_subgroup(self):
        for params in (GroupParams(2, 2, 3), GroupParams(3, 3, 3), GroupParams(4, 2, 2)):
            seen = set()
            for w in enumerate_group(params):
                assert in_subgroup(w, params)
                assert w not in seen
                seen.add(w)
            assert len(seen) == params.order

    def test_canonical_stream_order(self):
        stream = list(enumerate_group(GroupParams(2, 1, 2)))
        # lexicographic words: magnitudes (1,2) before (2,1), colors odometer
        expected_head = [
            GenPerm.from_word(2, [(0, 1), (0, 2)]),
            GenPerm.from_word(2, [(0, 1), (1, 2)]),
            GenPerm.from_word(2, [(1, 1), (0, 2)]),
            GenPerm.from_word(2, [(1, 1), (1, 2)]),
        ]
        assert stream[:4] == expected_head

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceeded) as info:
            list(enumerate_group(GroupParams(3, 1, 7), OracleBudget(max_order=100)))
        assert info.value.required == 3**7 * 5040


class TestWitnessStreams:
    def test_degree_two_everything_witnesses_empty(self):
        found = list(witnesses_of(PinSet(1, 2), GroupParams(1, 1, 2)))
        assert len(found) == 2

    def test_inadmissible_set_has_no_witnesses(self):
        # same repeated-magnitude shape as the degree-7 example, shrunk to a
        # scannable group; the full-size group is a budget refusal instead
        P = PinSet(4, 4, ((3, 3), (2, 3), (0, 1)))
        assert list(witnesses_of(P, GroupParams(4, 1, 4))) == []
        big = PinSet(5, 7, ((4, 3), (2, 3), (0, 1)))
        with pytest.raises(BudgetExceeded):
            list(witnesses_of(big, GroupParams(5, 1, 7)))

    def test_witnesses_have_low_one_low_shape(self):
        P = PinSet(1, 3, ((0, 1),))
        found = list(witnesses_of(P, GroupParams(1, 1, 3)))
        assert canonical_witness(P) in found
        for w in found:
            assert w(2) == CV(0, 1)

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            list(witnesses_of(PinSet(2, 3), GroupParams(2, 1, 4)))


class TestReports:
    def test_totals_match_published_counts(self, reports):
        assert reports(2, 1, 5).total_admissible == 31
        assert reports(3, 1, 3).total_admissible == 8
        assert reports(1, 1, 3).total_admissible == 2

    def test_small_symmetric_group_membership(self, reports):
        assert set(reports(1, 1, 3).stats) == {
            PinSet(1, 3),
            PinSet(1, 3, ((0, 1),)),
        }

    def test_every_set_obeys_structural_bounds(self, reports):
        for m, n in [(2, 6), (3, 5)]:
            rep = reports(m, 1, n)
            for P in rep.stats:
                assert len(P) <= max_pinnacles(n)
                assert len(P.magnitude_set()) == len(P)

    def test_witness_counts_sum_to_group_order(self, reports):
        for m, p, n in [(2, 1, 4), (3, 1, 4), (2, 2, 5), (3, 3, 4)]:
            rep = reports(m, p, n)
            assert sum(s.witness_count for s in rep.stats.values()) == rep.scanned
            assert rep.scanned == GroupParams(m, p, n).order

    def test_count_up_to_and_grouping(self, reports):
        rep = reports(2, 1, 5)
        by_card = rep.by_cardinality()
        assert sorted(by_card) == [0, 1, 2]
        assert rep.count_up_to(0) == 1
        assert rep.count_up_to(1) == 1 + len(by_card[1])
        assert rep.count_up_to(2) == 31

    def test_eps_intervals_and_canonical_maximum(self, reports):
        # whole-group scans: every set's color sums fill an integer interval
        # whose right endpoint is the canonical witness's color sum
        for m, n in [(1, 5), (2, 5), (3, 5), (2, 4), (3, 4)]:
            for P, stats in reports(m, 1, n).stats.items():
                assert stats.eps_is_interval, str(P)
                assert stats.eps_max == color_sum(canonical_witness(P)), str(P)
                assert stats.witness_count == sum(c for _, c in stats.eps_histogram)

    def test_subgroup_membership_iff_interval_hits_residue(self, reports):
        # a full-group admissible set survives in G(m,p,n) exactly when its
        # color-sum interval contains a multiple of p
        for m, p, n in [(2, 2, 3), (2, 2, 5), (4, 2, 3), (4, 2, 5), (3, 3, 3), (4, 4, 5)]:
            sub = set(reports(m, p, n).stats)
            for P, stats in reports(m, 1, n).stats.items():
                hits = any(e % p == 0 for e in stats.eps_values)
                assert hits == (P in sub), (m, p, n, str(P))

    def test_low_color_sets_survive_in_subgroup(self, reports):
        # odd degree, m > p: a set using any color below m-p stays admissible
        for m, p, n in [(4, 2, 3), (4, 2, 5)]:
            sub = set(reports(m, p, n).stats)
            for P in reports(m, 1, n).stats:
                if any(cv.color < m - p for cv in P.elements):
                    assert P in sub

    def test_membership_matches_decider(self, reports):
        for m, n in [(2, 4), (2, 5), (3, 4)]:
            admissible_sets = set(reports(m, 1, n).stats)
            universe = [CV(c, x) for c in range(m) for x in range(1, n + 1)]
            for size in range(max_pinnacles(n) + 1):
                for combo in itertools.combinations(universe, size):
                    P = PinSet(m, n, combo)
                    assert is_admissible(P) == (P in admissible_sets)


class TestEnginesAndPartitioning:
    GRIDS = [(1, 1, 4), (2, 1, 4), (2, 2, 4), (3, 1, 4), (2, 1, 5), (5, 1, 3), (4, 2, 4), (3, 3, 4)]

    def test_reference_and_vectorized_agree(self):
        for m, p, n in self.GRIDS:
            g = GroupParams(m, p, n)
            assert collect_pinnacle_sets(g, engine="reference") == collect_pinnacle_sets(
                g, engine="vectorized"
            ), (m, p, n)

    def test_partition_invariance(self):
        g = GroupParams(3, 1, 4)
        one = collect_pinnacle_sets(g, OracleBudget(partitions=1))
        four = collect_pinnacle_sets(g, OracleBudget(partitions=4))
        many = collect_pinnacle_sets(g, OracleBudget(partitions=11))
        assert one == four == many

    def test_parallel_matches_serial(self):
        g = GroupParams(2, 1, 5)
        serial = collect_pinnacle_sets(g)
        parallel = collect_pinnacle_sets(g, OracleBudget(partitions=5), parallel=True)
        assert serial == parallel

    def test_huge_modulus_falls_back_to_reference(self):
        g = GroupParams(25, 1, 3)  # bitmap keys would overflow; auto must cope
        rep = collect_pinnacle_sets(g)
        assert rep.scanned == g.order
        from pinnacles.counting import count_pinnacle_sets

        assert rep.total_admissible == count_pinnacle_sets(25, 3)
        with pytest.raises(ValueError):
            collect_pinnacle_sets(g, engine="vectorized")

    def test_unknown_engine(self):
        with pytest.raises(ValueError):
            collect_pinnacle_sets(GroupParams(2, 1, 3), engine="magic")

    def test_budget_refusal_and_count_helper(self):
        with pytest.raises(BudgetExceeded):
            collect_pinnacle_sets(GroupParams(2, 1, 12))
        assert count_admissible(GroupParams(2, 2, 3)) == 4


class TestAgainstFormulas:
    def test_grid_counts(self, reports):
        from pinnacles.counting import count_pinnacle_sets

        for m in (1, 2, 3):
            for n in range(2, 6):
                rep = reports(m, 1, n)
                for d in range(max_pinnacles(n) + 1):
                    assert rep.count_up_to(d) == count_pinnacle_sets(m, n, d), (m, n, d)

    def test_odd_degree_complement_bijection(self, reports):
        # the sets lost when passing to G(m,p,2r+1) are exactly the color
        # shift by m-p of the sets lost when passing to G(p,p,2r+1)
        from pinnacles.shifts import ShiftParams, shift_set

        for m, p, n in [(4, 2, 3), (4, 2, 5), (3, 3, 3), (4, 4, 3)]:
            lost_small = set(reports(p, 1, n).stats) - set(reports(p, p, n).stats)
            lost_large = set(reports(m, 1, n).stats) - set(reports(m, p, n).stats)
            s = ShiftParams(p, m - p, n)
            assert {shift_set(P, s) for P in lost_small} == lost_large, (m, p, n)
