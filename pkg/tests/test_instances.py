"""Instance generators, bundles and instance files."""

import os

import pytest

from conftest import fixture_path
from exceptions import InfeasibleParamsError, ParamOutOfRangeError, ParseError, RetriesExhaustedError
from graph_core import LabelSubset, is_feasible, max_label_frequency
from heuristics import is_h_switch_local_optimum
from instances import (
    G3,
    TRAPS_2SWITCH,
    TRAPS_EA,
    InstanceBundle,
    check_g2_properties,
    g3_label_blocks,
    gen_g1,
    gen_g2,
    gen_g3,
    gen_g_prime,
    gen_random_mlst_b,
    load_bundle,
    load_instance,
    save_bundle,
    save_instance,
    sidecar_path,
)


class TestGenerators:

    def test_g_prime_shape(self):
        bundle = gen_g_prime(4, 12)
        g = bundle.graph
        assert (g.node_count, g.label_count) == (32, 12)
        assert bundle.opt_value == 4
        trap = bundle.local_optimum(TRAPS_EA)
        assert trap.labels() == tuple(range(5, 13))
        assert bundle.local_optimum(TRAPS_2SWITCH) == trap

    @pytest.mark.parametrize('a, k', [(3, 10), (4, 8)])
    def test_g_prime_parameter_range(self, a, k):
        with pytest.raises(ParamOutOfRangeError):
            gen_g_prime(a, k)

    def test_g1_shape(self, g1_k5):
        g = g1_k5.graph
        assert (g.node_count, g.label_count, g.edge_count) == (5, 5, 10)
        assert max_label_frequency(g) == 6
        assert g1_k5.known_opt[1].labels() == (1, 5)

    def test_g1_too_small(self):
        with pytest.raises(ParamOutOfRangeError):
            gen_g1(2)

    def test_g2_contract(self, g2_k10):
        g = g2_k10.graph
        assert (g.node_count, g.edge_count) == (15, 28)
        assert check_g2_properties(g) == []
        assert is_h_switch_local_optimum(g, g2_k10.local_optimum(), 2)

    def test_g2_contract_fails_elsewhere(self, g1_k5):
        assert check_g2_properties(g1_k5.graph)

    def test_g2_too_small(self):
        with pytest.raises(ParamOutOfRangeError):
            gen_g2(6)

    def test_g3_blocks(self):
        assert g3_label_blocks(3) == {'L3': [1, 2], 'L2': [3, 4, 5], 'Lopt': [6, 7, 8, 9, 10, 11]}

    def test_g3_shape(self, g3_b3):
        g = g3_b3.graph
        assert (g.node_count, g.label_count, g.edge_count) == (19, 11, 30)
        assert g3_b3.opt_value == 6
        assert max_label_frequency(g) == 3
        assert g3_b3.family == G3

    def test_g3_too_small(self):
        with pytest.raises(ParamOutOfRangeError):
            gen_g3(1)

    def test_no_local_optimum_known(self, g3_b2):
        with pytest.raises(LookupError):
            g3_b2.local_optimum()


class TestRandomInstances:

    def test_respects_parameters(self):
        bundle = gen_random_mlst_b(20, 40, 15, 4, seed=1)
        g = bundle.graph
        assert (g.node_count, g.edge_count, g.label_count) == (20, 40, 15)
        assert max_label_frequency(g) <= 4
        assert is_feasible(g, LabelSubset.ones(15))

    def test_same_seed_same_instance(self):
        assert gen_random_mlst_b(12, 20, 8, 3, seed=7).graph == gen_random_mlst_b(12, 20, 8, 3, seed=7).graph

    @pytest.mark.parametrize('n, m, k, b', [(5, 3, 2, 2), (5, 11, 2, 2), (6, 10, 11, 2), (6, 10, 3, 3)])
    def test_infeasible_parameters(self, n, m, k, b):
        with pytest.raises(InfeasibleParamsError):
            gen_random_mlst_b(n, m, k, b, seed=0)

    @pytest.mark.parametrize('n, m, k, b', [(12, 20, 10, 2), (12, 22, 12, 2), (12, 24, 12, 2),
                                            (10, 14, 7, 2), (9, 36, 12, 3)])
    def test_tight_frequency_bound_always_succeeds(self, n, m, k, b):
        for seed in range(50):
            g = gen_random_mlst_b(n, m, k, b, seed=seed).graph
            frequencies = g.label_frequencies()
            assert sorted(frequencies) == list(range(1, k + 1))
            assert max(frequencies.values()) <= b
            assert g.edge_count == m

    def test_full_label_budget_uses_every_label_b_times(self):
        g = gen_random_mlst_b(12, 24, 12, 2, seed=3).graph
        assert set(g.label_frequencies().values()) == {2}

    def test_no_attempts_left(self):
        with pytest.raises(RetriesExhaustedError):
            gen_random_mlst_b(9, 36, 12, 3, seed=0, retries=0)


class TestInstanceFiles:

    def test_fixture_matches_generator(self, g3_b3):
        assert load_instance(fixture_path('g3_b3.mlst')) == g3_b3.graph
        assert load_bundle(fixture_path('g3_b3.mlst')) is None

    def test_fixture_bundle(self):
        bundle = load_bundle(fixture_path('g3_b2.mlst'))
        assert bundle.family == G3
        assert bundle.opt_value == 2
        assert bundle.graph == gen_g3(2).graph

    def test_bundle_round_trip(self, tmp_path, g2_k10):
        path = str(tmp_path / 'g2.mlst')
        meta = save_bundle(g2_k10, path)
        assert meta == sidecar_path(path) == str(tmp_path / 'g2.meta.json')
        loaded = load_bundle(path)
        assert loaded.graph == g2_k10.graph
        assert loaded.known_opt == g2_k10.known_opt
        assert loaded.known_local_opts == g2_k10.known_local_opts

    def test_saved_text_is_canonical(self, tmp_path, g3_b2):
        path = tmp_path / 'g3.mlst'
        save_instance(g3_b2.graph, str(path))
        lines = path.read_text().splitlines()
        assert lines[0] == '5 3 6'
        assert lines[1:] == ['1 2 2', '1 3 1', '2 3 2', '3 4 3', '3 5 1', '4 5 3']
        assert not os.path.exists(str(path) + '.tmp')

    def test_parse_error_names_file_and_line(self, tmp_path):
        path = tmp_path / 'bad.mlst'
        path.write_text("3 2 2\n1 2 1\n2 3 7\n")
        with pytest.raises(ParseError) as excinfo:
            load_instance(str(path))
        assert excinfo.value.line_number == 3
        assert excinfo.value.path == str(path)
        assert str(path) in str(excinfo.value)

    def test_non_utf8_file_is_a_parse_error(self, tmp_path):
        path = tmp_path / 'latin1.mlst'
        path.write_bytes(b'# caf\xe9\n2 1 1\n1 2 1\n')
        with pytest.raises(ParseError) as excinfo:
            load_instance(str(path))
        assert excinfo.value.line_number == 1

    @pytest.mark.parametrize('sidecar', [
        '{"family": ',
        '{"params": {}}',
        '{"family": "g1", "local_optima": [{"bits": "1x"}]}',
    ])
    def test_malformed_sidecar_is_a_parse_error(self, tmp_path, g3_b2, sidecar):
        path = str(tmp_path / 'g3.mlst')
        save_bundle(g3_b2, path)
        (tmp_path / 'g3.meta.json').write_text(sidecar)
        with pytest.raises(ParseError) as excinfo:
            load_bundle(path)
        assert excinfo.value.path.endswith('g3.meta.json')

    def test_bundle_rejects_infeasible_witness(self, g3_b2):
        with pytest.raises(ValueError):
            InstanceBundle(g3_b2.graph, G3, {}, known_opt=(1, LabelSubset.from_labels(3, [1])))
