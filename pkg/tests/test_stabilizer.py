"""Stabilizer engine against the dense path and the closed-form counts."""

import math

import numpy as np
import pytest

from graphsep import (
    GraphSpec,
    PauliString,
    StabilizerGroup,
    cg_nonzero_pattern,
    cg_norm_closed,
    chain_graph,
    complete_graph,
    expectation,
    full_weight_support,
    ghz_nonzero_pattern,
    ghz_state,
    graph_state,
    permutation_count,
    stabilizer_expectation,
    stabilizer_group,
    star_graph,
)
from graphsep.stabilizer import permutation_terms

from oracle import all_full_indices, dense_expectation, dense_full_tensor


def random_graph(n, rng):
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    return GraphSpec(n, tuple(e for e in pairs if rng.random() < 0.5))


def test_generators_of_reference_graphs():
    assert stabilizer_group(complete_graph(3)).generator_words() == ["+XZZ", "+ZXZ", "+ZZX"]
    assert stabilizer_group(chain_graph(3)).generator_words() == ["+XZI", "+ZXZ", "+IZX"]
    assert stabilizer_group(GraphSpec(2, ())).generator_words() == ["+XI", "+IX"]


def test_group_validation():
    # X1 and Z1 anticommute
    with pytest.raises(ValueError):
        StabilizerGroup(2, ((0b10, 0b00, 1), (0b10, 0b10, 1)))
    # dependent rows
    with pytest.raises(ValueError):
        StabilizerGroup(2, ((0b10, 0b00, 1), (0b10, 0b00, 1)))
    with pytest.raises(ValueError):
        StabilizerGroup(2, ((0b10, 0b00, 1), (0b01, 0b00, 2)))


def test_k3_expectations():
    grp = stabilizer_group(complete_graph(3))
    assert stabilizer_expectation(grp, PauliString("XZZ")) == 1
    assert stabilizer_expectation(grp, PauliString("XXX")) == -1
    assert stabilizer_expectation(grp, PauliString("ZZZ")) == 0
    with pytest.raises(ValueError):
        stabilizer_expectation(grp, PauliString("ZZ"))


def test_k3_support_entries():
    sup = full_weight_support(stabilizer_group(complete_graph(3)))
    assert dict(zip(sup.words(), sup.entries.values())) == {
        "XZZ": 1,
        "ZXZ": 1,
        "ZZX": 1,
        "XXX": -1,
    }


def test_k2_support_entries():
    sup = full_weight_support(stabilizer_group(complete_graph(2)))
    assert dict(zip(sup.words(), sup.entries.values())) == {"XZ": 1, "ZX": 1, "YY": 1}


def test_k6_support_count():
    assert len(full_weight_support(stabilizer_group(complete_graph(6)))) == 33


@pytest.mark.parametrize("n", range(2, 7))
def test_stabilizer_matches_dense_on_reference_graphs(n):
    rng = np.random.default_rng(1000 + n)
    specs = [complete_graph(n), chain_graph(n), star_graph(n), random_graph(n, rng)]
    letters = np.array(list("IXYZ"))
    for spec in specs:
        grp = stabilizer_group(spec)
        state = graph_state(spec)
        for idx in all_full_indices(n):
            ops = "".join("XYZ"[i - 1] for i in idx)
            assert stabilizer_expectation(grp, PauliString(ops)) == pytest.approx(
                expectation(state, PauliString(ops)), abs=1e-9
            )
        for _ in range(30):
            ops = "".join(rng.choice(letters, size=n))
            assert stabilizer_expectation(grp, PauliString(ops)) == pytest.approx(
                expectation(state, PauliString(ops)), abs=1e-9
            )


def test_group_closure_signs_against_dense():
    # products of generator pairs must sit in the group with the right sign
    rng = np.random.default_rng(8)
    for n in (3, 4, 5, 6):
        spec = random_graph(n, rng)
        grp = stabilizer_group(spec)
        state = graph_state(spec)
        for _ in range(10):
            combo = int(rng.integers(1, 1 << n))
            x, z, sign = grp.product_sign(combo)
            letters = []
            for a in range(n):
                bit = 1 << (n - 1 - a)
                letters.append("IZXY"[(2 if x & bit else 0) + (1 if z & bit else 0)])
            ops = "".join(letters)
            assert dense_expectation(state.amplitudes, ops) == pytest.approx(sign, abs=1e-9)


def test_cg_pattern_small_cases():
    assert cg_nonzero_pattern(3).words() == ["XZZ", "ZXZ", "ZZX", "XXX"]
    assert set(cg_nonzero_pattern(2).words()) == {"XZ", "ZX", "YY"}
    assert len(cg_nonzero_pattern(4)) == 9


@pytest.mark.parametrize("n", range(2, 13))
def test_cg_pattern_equals_support_index_set(n):
    pattern = cg_nonzero_pattern(n)
    support = full_weight_support(stabilizer_group(complete_graph(n)))
    assert pattern.packed_set() == support.packed_set()


def test_ghz_pattern_small_cases():
    assert set(ghz_nonzero_pattern(2).words()) == {"XX", "YY", "ZZ"}
    assert set(ghz_nonzero_pattern(3).words()) == {"XXX", "YYX", "YXY", "XYY"}
    assert len(ghz_nonzero_pattern(4)) == 9


@pytest.mark.parametrize("n", range(2, 7))
def test_ghz_pattern_matches_dense_support(n):
    state = ghz_state(n)
    dense = dense_full_tensor(((1.0, state),), n)
    assert set(dense) == set(ghz_nonzero_pattern(n).indices())


def test_cg_norm_closed_values():
    assert cg_norm_closed(5) == pytest.approx(4.0, abs=1e-12)
    assert cg_norm_closed(8) == pytest.approx(math.sqrt(129), abs=1e-12)
    assert cg_norm_closed(2) == pytest.approx(math.sqrt(3), abs=1e-12)


def test_permutation_count_values():
    assert permutation_count(3) == 4
    assert permutation_count(10) == 513
    assert permutation_count(21) == 1_048_576
    assert permutation_terms(10) == [(1, 10), (3, 120), (5, 252), (7, 120), (9, 10)]


@pytest.mark.parametrize("n", range(2, 41))
def test_permutation_count_closed_form(n):
    assert permutation_count(n) == 2 ** (n - 1) + (1 if n % 2 == 0 else 0)


@pytest.mark.parametrize("n", range(2, 11))
def test_support_count_identity(n):
    assert len(full_weight_support(stabilizer_group(complete_graph(n)))) == permutation_count(n)
