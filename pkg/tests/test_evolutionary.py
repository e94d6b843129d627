"""Random streams, the (1+1) EA, GSEMO, the Pareto archive and run records."""

import numpy as np
import pytest

from conftest import random_instances
from evolutionary import (
    FIRST_FEASIBLE,
    IMPROVED,
    OPTIMUM_REACHED,
    RATIO_REACHED,
    TERMINATED_BUDGET,
    TERMINATED_TARGET,
    EventTracker,
    ParetoArchive,
    RunRecord,
    derive_seed,
    gsemo,
    make_rng,
    mutation_mask,
    one_plus_one_ea,
    ratio_limit,
    standard_mutation,
)
from exceptions import WidthMismatchError
from fitness import FitnessVector
from graph_core import LabelSubset, build_graph, is_feasible


class TestRandomStreams:

    def test_derived_seeds_are_stable_and_distinct(self):
        seeds = [derive_seed(2024, trial) for trial in range(50)]
        assert seeds == [derive_seed(2024, trial) for trial in range(50)]
        assert len(set(seeds)) == 50
        assert all(0 <= seed < 2 ** 64 for seed in seeds)

    def test_same_seed_same_stream(self):
        assert make_rng(9).integers(0, 1000, 10).tolist() == make_rng(9).integers(0, 1000, 10).tolist()

    def test_seed_range(self):
        with pytest.raises(ValueError):
            make_rng(-1)
        with pytest.raises(ValueError):
            make_rng(2 ** 64)

    def test_reference_stream_for_seed_42(self):
        assert make_rng(42).random(5).tolist() == pytest.approx(
            [0.7739560485559633, 0.4388784397520523, 0.8585979199113825,
             0.6973680290593639, 0.09417734788764953], abs=1e-12)

    def test_reference_mutation_masks_for_seed_42(self):
        rng = make_rng(42)
        assert [mutation_mask(5, rng) for _ in range(3)] == [0b10000, 0b01000, 0]

    def test_mutation_flips_one_bit_on_average(self):
        rng = make_rng(17)
        flips = [bin(mutation_mask(20, rng)).count('1') for _ in range(20000)]
        assert 0.95 < np.mean(flips) < 1.05

    def test_standard_mutation_keeps_width(self):
        child = standard_mutation(LabelSubset.zeros(8), make_rng(1))
        assert child.width == 8

    def test_single_label_always_flips(self):
        rng = make_rng(4)
        for _ in range(100):
            assert standard_mutation(LabelSubset.zeros(1), rng) == LabelSubset.ones(1)

    def test_no_flip_probability_at_sixteen_labels(self):
        rng = make_rng(18)
        unchanged = sum(mutation_mask(16, rng) == 0 for _ in range(20000)) / 20000
        assert abs(unchanged - (15 / 16) ** 16) < 0.015
        assert 0.34 < unchanged < 0.372


class TestOnePlusOneEA:

    def test_reaches_optimum_on_g1(self, g1_k5):
        record = one_plus_one_ea(g1_k5.graph, init=LabelSubset.ones(5), budget=50000, target=2, seed=1)
        assert record.terminated_by == TERMINATED_TARGET
        assert record.best_cardinality == 2
        assert is_feasible(g1_k5.graph, record.best_solution)

    def test_reference_trace_on_g1(self, g1_k5):
        # seed 42 flips label 5, then label 4, then nothing
        record = one_plus_one_ea(g1_k5.graph, init=LabelSubset.ones(5), budget=3, seed=42, opt=2)
        assert record.to_dict() == {
            'algorithm': 'one-plus-one-ea',
            'seed': 42,
            'budget': 3,
            'iterations_used': 3,
            'best_solution': '11110',
            'best_fitness': [1, 4],
            'best_scalar': 4,
            'terminated_by': TERMINATED_BUDGET,
            'event_log': [{'iteration': 0, 'kind': FIRST_FEASIBLE}, {'iteration': 1, 'kind': IMPROVED}],
        }

    def test_deterministic_for_a_seed(self, g3_b3):
        g = g3_b3.graph
        first = one_plus_one_ea(g, budget=3000, seed=42)
        second = one_plus_one_ea(g, budget=3000, seed=42)
        assert first.to_dict() == second.to_dict()

    def test_zero_budget_returns_init(self, g3_b2):
        init = LabelSubset.from_labels(3, [1])
        record = one_plus_one_ea(g3_b2.graph, init=init, budget=0, seed=0)
        assert record.iterations_used == 0
        assert record.best_solution == init
        assert record.terminated_by == TERMINATED_BUDGET
        assert record.best_fitness == FitnessVector(3, 1)

    def test_init_width_mismatch(self, g3_b2):
        with pytest.raises(WidthMismatchError):
            one_plus_one_ea(g3_b2.graph, init=LabelSubset.zeros(4), budget=10)

    def test_fitness_never_worsens(self, g3_b3):
        record = one_plus_one_ea(g3_b3.graph, init=LabelSubset.zeros(11), budget=2000, seed=5)
        assert record.best_scalar <= (19 - 1) * 11 * 11
        improvements = [e.iteration for e in record.event_log if e.kind == IMPROVED]
        assert improvements == sorted(improvements)

    def test_single_label_instance_moves_to_connected(self):
        g = build_graph(2, 1, [(1, 2, 1)])
        record = one_plus_one_ea(g, init=LabelSubset.zeros(1), budget=200, seed=3)
        assert record.feasible

    def test_stays_feasible_once_feasible(self):
        # longer budgets replay the shorter run first
        for i, bundle in enumerate(random_instances(5, seed=51, max_n=12, max_extra=6)):
            g = bundle.graph
            seen_feasible = False
            for budget in range(0, 301, 15):
                record = one_plus_one_ea(g, init=LabelSubset.zeros(g.label_count), budget=budget, seed=i)
                if seen_feasible:
                    assert record.feasible, f"instance {i} lost feasibility at budget {budget}"
                seen_feasible = record.feasible


class TestGSEMO:

    def test_reaches_optimum_on_g1(self, g1_k5):
        record, archive = gsemo(g1_k5.graph, init=LabelSubset.zeros(5), budget=50000,
                                target=2, seed=4, check_archive=True)
        assert record.terminated_by == TERMINATED_TARGET
        assert record.best_cardinality == 2
        assert archive.violations() == []

    def test_reference_trace_on_g1(self, g1_k5):
        # a one-entry archive draws no parent index
        record, archive = gsemo(g1_k5.graph, init=LabelSubset.ones(5), budget=2, seed=42)
        data = record.to_dict()
        assert data['best_solution'] == '11110'
        assert data['event_log'] == [{'iteration': 0, 'kind': FIRST_FEASIBLE}, {'iteration': 1, 'kind': IMPROVED}]
        assert data['archive'] == [
            {'solution': '11110', 'fitness': [1, 4]},
            {'solution': '11100', 'fitness': [2, 3]},
        ]
        assert len(archive) == 2

    def test_archive_invariants_hold_throughout(self, g3_b3):
        record, archive = gsemo(g3_b3.graph, budget=3000, seed=12, check_archive=True)
        assert len(archive) <= 12
        assert len(record.archive) == len(archive)

    def test_deterministic_for_a_seed(self, g3_b2):
        first, _ = gsemo(g3_b2.graph, budget=500, seed=99)
        second, _ = gsemo(g3_b2.graph, budget=500, seed=99)
        assert first.to_dict() == second.to_dict()


class TestParetoArchive:

    def test_offer_rules(self):
        archive = ParetoArchive(k=4, check_invariants=True)
        x = LabelSubset.zeros(4)
        assert archive.offer(x, FitnessVector(1, 3))
        assert not archive.offer(x.with_labels(1), FitnessVector(1, 3))
        assert not archive.offer(x, FitnessVector(2, 3))
        assert archive.offer(x, FitnessVector(2, 1))
        assert len(archive) == 2
        assert archive.offer(x, FitnessVector(1, 1))
        assert len(archive) == 1
        assert archive.best_feasible().vector == FitnessVector(1, 1)

    def test_best_without_feasible_entry(self):
        archive = ParetoArchive(k=3)
        archive.offer(LabelSubset.zeros(3), FitnessVector(4, 0))
        archive.offer(LabelSubset.ones(3), FitnessVector(2, 3))
        assert archive.best_feasible() is None
        assert archive.best().vector == FitnessVector(2, 3)


class TestEventLog:

    def test_events_with_known_optimum(self):
        tracker = EventTracker(opt=4, ratios=['3/2', 2])
        tracker.observe(0, FitnessVector(2, 0), improved=False)
        tracker.observe(3, FitnessVector(1, 8))
        tracker.observe(7, FitnessVector(1, 6))
        tracker.observe(9, FitnessVector(1, 4))
        record = RunRecord('gsemo', 1, 10, 9, LabelSubset.ones(10), FitnessVector(1, 4),
                           event_log=tracker.events)
        assert record.iterations_to(FIRST_FEASIBLE) == 3
        assert record.iterations_to(RATIO_REACHED, 2) == 3
        assert record.iterations_to(RATIO_REACHED, '3/2') == 7
        assert record.iterations_to(OPTIMUM_REACHED) == 9
        assert record.count_events(IMPROVED) == 3

    def test_no_ratio_events_without_optimum(self):
        tracker = EventTracker(ratios=[2])
        tracker.observe(0, FitnessVector(1, 5), improved=False)
        assert [e.kind for e in tracker.events] == [FIRST_FEASIBLE]

    def test_ratio_limit_rounds_up(self):
        assert ratio_limit('3/2', 3) == 5
        assert ratio_limit(2, 4) == 8

    def test_record_dict_round_trip(self, g3_b2):
        record, _ = gsemo(g3_b2.graph, budget=200, seed=2)
        assert RunRecord.from_dict(record.to_dict()).to_dict() == record.to_dict()
