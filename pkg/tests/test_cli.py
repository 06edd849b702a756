import json
import logging

import pytest

from equal_biquadrates.cli import EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFICATION_FAILED, cli_main, main

from utils import ID_1_1_1_3P


@pytest.fixture()
def write_json(tmp_path):
    def write(name, record):
        path = tmp_path / name
        path.write_text(json.dumps(record), encoding="utf-8")
        return str(path)

    return write


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct(capsys, write_json) -> None:
    spec = write_json(
        "spec.json", {"form": "four", "coeffs": ["1", "1000", "1000", "1000"], "A": "2", "B": "0", "D": "3", "F": "0"}
    )
    code, out, _ = run(capsys, "construct", spec)
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["curve"] == {"f": "0", "g": "0", "h": "-324000000"}
    assert record["L1"] == "-18000"
    assert record["orientation"] == -1


def test_construct_integral(capsys, write_json) -> None:
    spec = write_json("spec.json", {"form": "three", "coeffs": ["1", "1", "1"], "A": "1/2", "B": "0"})
    code, out, _ = run(capsys, "construct", spec, "--integral")
    assert code == EXIT_OK
    record = json.loads(out)
    assert int(record["u"]) > 1
    assert all("/" not in record["curve"][name] for name in "fgh")


def test_search(capsys, write_json) -> None:
    curve = write_json("curve.json", {"f": "-243", "g": "-7290", "h": "-72900"})
    code, out, _ = run(capsys, "search", curve, "--numerator-bound", "500")
    assert code == EXIT_OK
    record = json.loads(out)
    assert {"x": "450", "y": "6210"} in record["points"]
    assert record["candidate_generator"] is not None
    assert record["bounds"] == {"numerator_bound": 500, "denominator_bound": 1}


def test_derive(capsys, write_json) -> None:
    spec = write_json("spec.json", {"form": "three", "coeffs": ["1", "1", "1"], "A": "-10", "B": "0"})
    code, out, _ = run(capsys, "derive", spec, "--point", '{"x": "450", "y": "6210"}')
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["m"] == "-23"
    assert record["p"] == ["16", "-50/3", "5/3"]
    assert record["solution"]["x"] == ["19", "74", "117"]

    code, out, _ = run(capsys, "derive", spec, "--point", '{"x": "450", "y": "6210"}', "--multiple", "3")
    assert code == EXIT_OK
    solution = json.loads(out)["solution"]
    assert solution["k"] == 3
    assert sorted(map(int, solution["x"])) in (sorted(ID_1_1_1_3P[1]), sorted(ID_1_1_1_3P[2]))


def test_derive_errors(capsys, write_json) -> None:
    spec = write_json("spec.json", {"form": "three", "coeffs": ["1", "1", "1"], "A": "-10", "B": "0"})
    code, _, err = run(capsys, "derive", spec, "--point", '{"x": "450", "y": "6211"}')
    assert code == EXIT_INPUT_ERROR
    assert "NotOnCurveError" in err
    code, _, err = run(capsys, "derive", spec, "--point", "450,6210")
    assert code == EXIT_INPUT_ERROR
    assert "InvalidInputError" in err
    code, _, err = run(capsys, "derive", spec, "--point", '{"infinity": true}')
    assert code == EXIT_INPUT_ERROR
    assert "PointAtInfinityError" in err


def test_solve_fixture(capsys) -> None:
    code, out, _ = run(capsys, "solve", "--fixture", "sums_1_1_1", "--multiples", "2")
    assert code == EXIT_OK
    record = json.loads(out)
    assert [solution["k"] for solution in record["solutions"]] == [1, 2]
    assert record["all_verified"] is True


def test_solve_request_file(capsys, write_json) -> None:
    request = write_json(
        "request.json",
        {
            "version": 1,
            "spec": {"form": "four", "coeffs": ["1", "1", "1", "1"], "A": "3", "B": "0", "D": "7", "F": "0"},
            "generator": {"x": "328", "y": "5608"},
        },
    )
    code, out, _ = run(capsys, "solve", request)
    assert code == EXIT_OK
    [solution] = json.loads(out)["solutions"]
    assert solution["x"] == ["207", "371", "412", "430"]


def test_solve_needs_input(capsys) -> None:
    code, _, err = run(capsys, "solve")
    assert code == EXIT_INPUT_ERROR
    assert "sums_1_1_1" in err


@pytest.mark.parametrize(
    "record, expected_code, verified",
    [
        ({"coeffs": [1, 2, 3], "x": [5169, 459, 1281], "y": [1447, 4181, 2441]}, EXIT_OK, True),
        ({"coeffs": [1, 1, 1], "x": [19, 74, 117], "y": [21, 64, 119]}, EXIT_OK, True),
        ({"coeffs": [1, 1, 1], "x": [19, 74, 117], "y": [21, 64, 118]}, EXIT_VERIFICATION_FAILED, False),
        (
            {
                "spec": {"form": "four", "coeffs": ["1", "1000", "1000", "1000"], "A": 2, "B": 0, "D": 3, "F": 0},
                "x": ["8", "24", "25", "29"],
                "y": ["44", "23", "27", "28"],
            },
            EXIT_OK,
            True,
        ),
    ],
)
def test_verify(capsys, write_json, record, expected_code, verified) -> None:
    code, out, _ = run(capsys, "verify", write_json("identity.json", record))
    assert code == expected_code
    assert json.loads(out) == {"verified": verified}


def test_bad_input_files(capsys, write_json, tmp_path) -> None:
    code, _, err = run(capsys, "verify", write_json("identity.json", {"coeffs": [1, 1], "x": [1], "y": [1]}))
    assert code == EXIT_INPUT_ERROR
    code, _, err = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert code == EXIT_INPUT_ERROR
    assert "FileNotFoundError" in err
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    code, _, err = run(capsys, "construct", str(broken))
    assert code == EXIT_INPUT_ERROR
    assert "JSONDecodeError" in err


def test_progress_logs_on_stderr(capsys, write_json) -> None:
    curve = write_json("curve.json", {"f": "-243", "g": "-7290", "h": "-72900"})
    argv = ["--log-level", "INFO", "--progress-period", "60", "search", curve, "--numerator-bound", "50"]
    code, _, err = run(capsys, *argv, "--denominator-bound", "3")
    assert code == EXIT_OK
    # Only the first of three progress logs gets through within the period.
    assert err.count("Searching denominator") == 1
    # The handler is removed again afterwards.
    assert not logging.getLogger("equal_biquadrates").handlers


def test_main_exits(capsys) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["solve", "--fixture", "sums_1_2_3"])
    assert exc_info.value.code == EXIT_OK
    assert json.loads(capsys.readouterr().out)["all_verified"] is True


@pytest.mark.parametrize(
    "record",
    [
        {},
        {"coeffs": [1, 1, 1], "x": "123", "y": "321"},
        {"x": [1], "y": [1]},
        {"coeffs": [], "x": [], "y": []},
        {"coeffs": [1, 1], "x": [1, 2]},
    ],
)
def test_verify_rejects_malformed_identities(capsys, write_json, record) -> None:
    code, out, err = run(capsys, "verify", write_json("identity.json", record))
    assert code == EXIT_INPUT_ERROR
    assert out == ""
    assert err.startswith("error: InvalidInputError")


def test_input_not_utf8(capsys, tmp_path) -> None:
    path = tmp_path / "identity.json"
    path.write_bytes(b'{"coeffs": [1], "x": ["\xff"], "y": ["1"]}')
    code, out, err = run(capsys, "verify", str(path))
    assert code == EXIT_INPUT_ERROR
    assert out == ""
    assert "UnicodeDecodeError" in err


def test_numbers_past_conversion_limit(capsys, tmp_path) -> None:
    nines = "9" * 5001
    path = tmp_path / "identity.json"
    # One side as a bare JSON integer, the other as a string.
    path.write_text(f'{{"coeffs": [1, 1], "x": [{nines}, "2"], "y": ["2", "{nines}"]}}', encoding="utf-8")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == EXIT_OK
    assert json.loads(out) == {"verified": True}

    code, out, _ = run(capsys, "solve", "--fixture", "sums_1_1_61", "--multiples", "8")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["all_verified"] is True
    assert max(len(solution["total"]) for solution in record["solutions"]) > 4300
