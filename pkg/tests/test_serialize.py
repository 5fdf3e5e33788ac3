import io
import json
import math

import numpy as np
import pytest

from qentro.errors import NotADensityMatrix, ParseError
from qentro.serialize import (
    ensemble_from_json,
    load_json,
    matrix_from_json,
    matrix_to_json,
    probs_from_json,
    state_from_json,
    state_to_json,
    write_csv,
)
from qentro.states import DensityMatrix, PureState, mix


def test_matrix_round_trip():
    m = np.array([[0.5, 0.25 + 0.1j], [0.25 - 0.1j, 0.5]])
    obj = matrix_to_json(m)
    assert obj["dim"] == 2
    assert np.allclose(matrix_from_json(obj), m)
    assert json.loads(json.dumps(obj)) == obj  # JSON-serializable as-is


def test_matrix_schema_field_names():
    obj = matrix_to_json(np.eye(2))
    assert set(obj) == {"dim", "re", "im"}


def test_matrix_from_json_errors():
    with pytest.raises(ParseError):
        matrix_from_json({"dim": 2, "re": [[1, 0]], "im": [[0, 0], [0, 0]]})
    with pytest.raises(ParseError):
        matrix_from_json({"re": [[1]], "im": [[0]]})
    with pytest.raises(ParseError):
        matrix_from_json([1, 2, 3])


def test_state_round_trip():
    state = PureState([0.6, 0.8j])
    obj = state_to_json(state)
    assert obj["amplitudes"][1] == {"re": 0.0, "im": 0.8}
    back = state_from_json(obj)
    assert back.equals_up_to_phase(state, 1e-12)


def test_state_from_json_errors():
    with pytest.raises(ParseError):
        state_from_json({"amps": []})
    with pytest.raises(ParseError):
        state_from_json({"amplitudes": [{"re": 1.0}]})


def test_probs_from_json():
    assert np.allclose(probs_from_json({"probs": [0.5, 0.5]}), [0.5, 0.5])
    with pytest.raises(ParseError):
        probs_from_json({"p": [1.0]})


def test_ensemble_from_json_matches_direct_mix():
    root2 = 1 / math.sqrt(2)
    obj = {
        "pure_parts": [
            {"weight": 0.3, "state": {"amplitudes": [{"re": root2, "im": 0.0},
                                                     {"re": root2, "im": 0.0}]}}
        ],
        "mixed_part": {
            "weight": 0.7,
            "matrix": {"dim": 2, "re": [[0.8, 0.0], [0.0, 0.2]], "im": [[0, 0], [0, 0]]},
        },
    }
    ens = ensemble_from_json(obj)
    assert np.allclose(mix(ens).matrix, [[0.71, 0.15], [0.15, 0.29]])
    obj_no_mixed = {"pure_parts": obj["pure_parts"] + [
        {"weight": 0.7, "state": {"amplitudes": [{"re": 1.0, "im": 0.0},
                                                 {"re": 0.0, "im": 0.0}]}}
    ], "mixed_part": None}
    assert ensemble_from_json(obj_no_mixed).mixed_part is None


def test_ensemble_domain_errors_are_not_parse_errors():
    # a well-formed object with an invalid matrix inside must surface the
    # domain error, not ParseError
    obj = {
        "pure_parts": [],
        "mixed_part": {
            "weight": 1.0,
            "matrix": {"dim": 2, "re": [[0.9, 0.0], [0.0, 0.9]], "im": [[0, 0], [0, 0]]},
        },
    }
    with pytest.raises(NotADensityMatrix):
        ensemble_from_json(obj)


def test_load_json_missing_and_malformed(tmp_path):
    with pytest.raises(ParseError):
        load_json(str(tmp_path / "nope.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_json(str(bad))


def test_write_csv_full_precision_and_determinism():
    rows = [{"n": 2, "value": 1 / 3, "label": "x"}]
    out1, out2 = io.StringIO(), io.StringIO()
    write_csv(rows, out1)
    write_csv(rows, out2)
    assert out1.getvalue() == out2.getvalue()
    assert repr(1 / 3) in out1.getvalue()  # full precision, not rounded
    assert out1.getvalue().splitlines()[0] == "n,value,label"
