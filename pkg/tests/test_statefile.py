"""State-file parsing, validation and the amplitude round trip."""

import json

import numpy as np
import pytest

from graphsep import full_tensor, load_state_file, tensor_norm, write_amplitude_file
from graphsep.statefile import StateFileError, loads_state
from graphsep.states import cluster_state, complete_graph, ghz_state, graph_state, w_state


def test_family_file_pure():
    loaded = loads_state('{"family": "cg", "n": 4}')
    assert loaded.n == 4
    assert loaded.family == "cg"
    assert loaded.p is None
    assert len(loaded.ensemble.terms) == 1


def test_family_file_with_noise():
    loaded = loads_state('{"family": "ghz", "n": 3, "p": 0.25}')
    assert loaded.p == 0.25
    weights = sorted(w for w, _ in loaded.ensemble.terms)
    assert weights == pytest.approx([0.25, 0.75])


def test_graph_family_with_edges():
    loaded = loads_state('{"family": "graph", "n": 3, "edges": [[1, 2], [2, 3]]}')
    chain = cluster_state(3)
    assert np.allclose(loaded.ensemble.terms[0][1].amplitudes, chain.amplitudes)


def test_comment_lines_are_stripped():
    text = "# a comment\n" + '{"family": "w", "n": 3}' + "\n# trailing\n"
    assert loads_state(text).family == "w"


def test_raw_amplitude_file():
    amps = [[1.0, 0.0]] + [[0.0, 0.0]] * 7
    loaded = loads_state(json.dumps({"n": 3, "amplitudes": amps}))
    assert loaded.family is None
    state = loaded.ensemble.terms[0][1]
    assert state.amplitudes[0] == 1.0


def test_raw_amplitudes_renormalized_with_warning():
    off = 1.0 + 5e-7
    amps = [[off, 0.0]] + [[0.0, 0.0]] * 3
    with pytest.warns(UserWarning, match="renormalizing"):
        loaded = loads_state(json.dumps({"n": 2, "amplitudes": amps}))
    assert abs(loaded.ensemble.terms[0][1].amplitudes[0]) == pytest.approx(1.0, abs=1e-12)


def test_raw_amplitudes_too_far_off_rejected():
    amps = [[1.1, 0.0]] + [[0.0, 0.0]] * 3
    with pytest.raises(StateFileError):
        loads_state(json.dumps({"n": 2, "amplitudes": amps}))


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"family": "cg"}',
        '{"n": 3}',
        '{"family": "cg", "n": 3, "amplitudes": []}',
        '{"family": "bogus", "n": 3}',
        '{"family": "cg", "n": 3, "edges": [[1, 2]]}',
        '{"family": "graph", "n": 3}',
        '{"family": "graph", "n": 3, "edges": [[1, 2, 3]]}',
        '{"family": "cg", "n": 0}',
        '{"family": "cg", "n": 3, "p": 1.5}',
        '{"family": "cg", "n": 3, "extra": 1}',
        '{"n": 2, "amplitudes": [[1, 0]]}',
        '{"n": 1, "amplitudes": [[1, 0], "x"]}',
    ],
)
def test_malformed_files_rejected(text):
    with pytest.raises(StateFileError):
        loads_state(text)


@pytest.mark.parametrize(
    "build", [lambda: graph_state(complete_graph(4)), lambda: ghz_state(3), lambda: w_state(5)]
)
def test_amplitude_round_trip_preserves_norm(build, tmp_path):
    state = build()
    path = tmp_path / "state.json"
    write_amplitude_file(path, state)
    loaded = load_state_file(path)
    original = tensor_norm(full_tensor(state, method="dense"))
    reloaded = tensor_norm(full_tensor(loaded.ensemble, method="dense"))
    assert reloaded == pytest.approx(original, abs=1e-12)


def test_round_trip_header_documents_bit_order(tmp_path):
    path = tmp_path / "state.json"
    write_amplitude_file(path, ghz_state(2))
    first = path.read_text().splitlines()[0]
    assert first.startswith("#") and "most significant" in first
