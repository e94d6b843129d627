"""Brute-force optimum and the exhaustive verifiers."""

import pytest

from conftest import random_instances
from exceptions import PreconditionViolatedError, TooManyLabelsError
from graph_core import LabelSubset, build_graph, is_feasible
from instances import gen_g1, gen_g_prime
from oracle import brute_force_opt, verify_component_halving, verify_corollary_1


class TestBruteForce:

    def test_g3(self, g3_b2, g3_b3):
        result = brute_force_opt(g3_b2.graph)
        assert result.opt_value == 2
        assert result.witness.labels() == (2, 3)
        assert brute_force_opt(g3_b3.graph).opt_value == g3_b3.opt_value

    def test_g1_witness(self, g1_k5):
        result = brute_force_opt(g1_k5.graph)
        assert (result.opt_value, result.witness.labels()) == (2, (1, 5))

    def test_g_prime(self):
        bundle = gen_g_prime(4, 12)
        assert bundle.graph.node_count == 32
        assert brute_force_opt(bundle.graph).opt_value == 4

    def test_matches_known_optima(self, g2_k10):
        assert brute_force_opt(g2_k10.graph).opt_value == g2_k10.opt_value

    def test_witness_is_feasible(self):
        for bundle in random_instances(10, seed=44, max_n=8, max_extra=3):
            result = brute_force_opt(bundle.graph)
            assert is_feasible(bundle.graph, result.witness)
            assert len(result.witness) == result.opt_value

    def test_label_limit(self):
        with pytest.raises(TooManyLabelsError):
            brute_force_opt(gen_g1(25).graph)


class TestCorollaryCheck:

    def test_holds_on_g3(self, g3_b2, g3_b3):
        small = verify_corollary_1(g3_b2.graph)
        assert small.holds
        assert (small.b, small.opt_value) == (2, 2)
        large = verify_corollary_1(g3_b3.graph, opt=g3_b3.opt_value)
        assert large.holds
        assert large.b == 3

    def test_needs_repeated_labels(self):
        g = build_graph(3, 2, [(1, 2, 1), (2, 3, 2)])
        with pytest.raises(PreconditionViolatedError):
            verify_corollary_1(g)

    def test_label_limit(self):
        with pytest.raises(TooManyLabelsError):
            verify_corollary_1(gen_g1(15).graph)


class TestComponentHalving:

    def test_g3_from_empty(self, g3_b2):
        result = verify_component_halving(g3_b2.graph, LabelSubset.zeros(3))
        assert result.holds
        assert (result.components, result.bound, result.label, result.resulting_components) == (5, 3, 2, 3)

    def test_g1_from_empty(self, g1_k5):
        result = verify_component_halving(g1_k5.graph, LabelSubset.zeros(5))
        assert result.holds
        assert (result.label, result.resulting_components) == (5, 2)

    def test_needs_more_than_two_components(self, g3_b2):
        with pytest.raises(PreconditionViolatedError):
            verify_component_halving(g3_b2.graph, LabelSubset.ones(3))


def recursive_minimum(g, chosen, next_label):
    """Smallest feasible superset of chosen using labels >= next_label, by plain recursion."""
    k = g.label_count
    best = len(chosen) if is_feasible(g, LabelSubset.from_labels(k, chosen)) else None
    for label in range(next_label, k + 1):
        found = recursive_minimum(g, chosen + [label], label + 1)
        if found is not None and (best is None or found < best):
            best = found
    return best


def test_oracle_matches_recursive_enumeration():
    for bundle in random_instances(8, seed=45, max_n=7, max_extra=2):
        if bundle.graph.label_count > 10:
            continue
        assert brute_force_opt(bundle.graph).opt_value == recursive_minimum(bundle.graph, [], 1)


def test_randomized_results_never_beat_the_optimum():
    from evolutionary import gsemo, one_plus_one_ea

    for i, bundle in enumerate(random_instances(6, seed=46, max_n=8, max_extra=3)):
        g = bundle.graph
        opt = brute_force_opt(g).opt_value
        ea = one_plus_one_ea(g, budget=2000, seed=i)
        record, _ = gsemo(g, budget=2000, seed=i)
        for result in (ea, record):
            if result.feasible:
                assert result.best_cardinality >= opt
