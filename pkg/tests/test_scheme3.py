"""Scheme III: regularization conditions, decoy-edge placement, round trips."""

import json

import numpy as np
import pytest

from conftest import random_ising
from isingcloak import (
    IsingModel,
    argmin_distribution,
    attack_complexity2,
    attack_complexity3,
    brute_force,
    check_conditions,
    decrypt3,
    encrypt3,
    generate,
    minimal_decoy_count,
    problem_graph,
    regular_edge_set,
)
from isingcloak.scheme2 import invert_permutation
from isingcloak.scheme3 import key3_from_dict, key3_to_dict

P3 = IsingModel(3, (0.0,) * 3, {(0, 1): 1.0, (1, 2): -1.0})
STAR = IsingModel(4, (0.0,) * 4, {(0, 1): 1.0, (0, 2): -1.0, (0, 3): 1.0})


class TestCheckConditions:
    def test_path_hand_case(self):
        # P3: degrees (1, 2, 1), d* = 2 -> s = 2, max_e = 1
        assert not check_conditions(3, 0, 2, 2, 1)
        assert check_conditions(3, 1, 2, 2, 1)

    def test_star_hand_case(self):
        # K1,3: degrees (3, 1, 1, 1), d* = 3 -> s = 6, max_e = 2
        assert not check_conditions(4, 1, 3, 6, 2)
        assert check_conditions(4, 2, 3, 6, 2)

    def test_already_regular(self):
        assert check_conditions(8, 0, 3, 0, 0)  # 8*3 even
        assert not check_conditions(5, 0, 3, 0, 0)  # 5*3 odd


class TestMinimalDecoyCount:
    def test_path(self):
        assert minimal_decoy_count((1, 2, 1), 2) == 1

    def test_star(self):
        assert minimal_decoy_count((3, 1, 1, 1), 3) == 2

    def test_regular_graph_needs_none(self):
        assert minimal_decoy_count((3,) * 8, 3) == 0

    def test_d_star_below_max_degree(self):
        with pytest.raises(ValueError):
            minimal_decoy_count((1, 2, 1), 1)

    def test_minimality_property(self):
        rng = np.random.default_rng(50)
        for _ in range(30):
            degs = problem_graph(random_ising(rng, n=int(rng.integers(3, 8)))).degrees
            d_star = max(degs) + int(rng.integers(0, 2))
            m = minimal_decoy_count(degs, d_star)
            if m > 0:
                n = len(degs)
                s = sum(d_star - d for d in degs)
                max_e = max(d_star - d for d in degs)
                assert not check_conditions(n, m - 1, d_star, s, max_e)


class TestRegularEdgeSet:
    def test_path_becomes_cycle(self):
        plan = regular_edge_set((1, 2, 1), 2, 1)
        assert plan.decoy_edges == ((0, 3), (2, 3))
        assert plan.deficiencies == (1, 0, 1)
        assert plan.total_deficiency == 2

    def test_star_with_two_decoys(self):
        plan = regular_edge_set((3, 1, 1, 1), 3, 2)
        degrees = [3, 1, 1, 1, 0, 0]
        for u, v in plan.decoy_edges:
            degrees[u] += 1
            degrees[v] += 1
        assert degrees == [3] * 6

    def test_no_primary_primary_edges(self):
        rng = np.random.default_rng(51)
        for _ in range(20):
            degs = problem_graph(random_ising(rng, n=int(rng.integers(3, 8)))).degrees
            d_star = max(degs)
            m = minimal_decoy_count(degs, d_star)
            plan = regular_edge_set(degs, d_star, m)
            n = len(degs)
            assert all(max(u, v) >= n for u, v in plan.decoy_edges)
            assert len(set(plan.decoy_edges)) == len(plan.decoy_edges)

    def test_zero_decoys_empty_plan(self):
        plan = regular_edge_set((3,) * 8, 3, 0)
        assert plan.decoy_edges == ()

    def test_infeasible_m_rejected(self):
        with pytest.raises(ValueError):
            regular_edge_set((1, 2, 1), 2, 0)


class TestEncrypt3:
    def test_output_graph_is_regular(self):
        rng = np.random.default_rng(52)
        for seed in range(15):
            family = ("ba1", "ba2", "sk", "er", "regular3")[seed % 5]
            n = 6 if family in ("regular3", "er") else 5
            model = generate(family, n, np.random.default_rng(seed))
            enc, key = encrypt3(model, rng)
            degrees = problem_graph(enc).degrees
            assert set(degrees) == {key.d_star}

    def test_primary_graph_embedded(self):
        rng = np.random.default_rng(53)
        model = generate("ba2", 6, rng)
        enc, key = encrypt3(model, rng)
        inv = invert_permutation(key.perm)
        unpermuted = {tuple(sorted((inv[u], inv[v]))) for u, v in problem_graph(enc).edges}
        primary = {e for e in unpermuted if max(e) < model.n}
        assert primary == set(problem_graph(model).edges)

    def test_round_trip_recovers_argmin(self):
        for seed in range(20):
            family = ("ba1", "ba2", "sk", "er", "regular3")[seed % 5]
            n = 6 if family in ("regular3", "er") else 4 + seed % 3
            model = generate(family, n, np.random.default_rng(seed))
            enc, key = encrypt3(model, np.random.default_rng(1000 + seed))
            assert model.n + key.m <= 14
            decoded = decrypt3(argmin_distribution(brute_force(enc)), key)
            assert decoded.support == brute_force(model).argmin_set

    def test_decoy_count_stays_below_n_on_ba(self):
        for seed in range(10):
            for n in (4, 6, 8):
                model = generate("ba1", n, np.random.default_rng(seed))
                _, key = encrypt3(model, np.random.default_rng(seed))
                assert key.m <= n

    def test_d_star_override_and_validation(self):
        rng = np.random.default_rng(54)
        enc, key = encrypt3(P3, rng, d_star=3)
        assert key.d_star == 3
        assert set(problem_graph(enc).degrees) == {3}
        with pytest.raises(ValueError):
            encrypt3(STAR, rng, d_star=2)

    def test_already_regular_needs_no_decoys(self):
        rng = np.random.default_rng(55)
        model = generate("sk", 5, rng)
        enc, key = encrypt3(model, rng)
        assert key.m == 0
        assert enc.n == 5
        decoded = decrypt3(argmin_distribution(brute_force(enc)), key)
        assert decoded.support == brute_force(model).argmin_set


class TestAttackComplexity3:
    def test_delegates_to_scheme2(self):
        for n in range(1, 6):
            for m in range(1, 4):
                assert attack_complexity3(n, m) == attack_complexity2(n, m)

    def test_monotone_in_m(self):
        assert attack_complexity3(4, 3) > attack_complexity3(4, 2)


class TestKeySerialization:
    def test_round_trip(self):
        rng = np.random.default_rng(56)
        _, key = encrypt3(generate("ba1", 5, rng), rng)
        rec = key3_to_dict(key)
        assert rec["scheme"] == "III"
        assert key3_from_dict(json.loads(json.dumps(rec))) == key
