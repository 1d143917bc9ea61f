import json
import re
from unittest.mock import patch

from twobridge_surgery.cli import common, main
from twobridge_surgery.errors import InvariantBreach


def _run(args):
    try:
        main(args)
    except SystemExit as exc:
        return exc.code or 0
    return 0


def test_classify(capsys):
    assert _run(["classify", "C(2,2)@plus", "--format", "json"]) == 0
    assert "5/2" in capsys.readouterr().out


def test_classify_fold_mirror(capsys):
    assert _run(["classify", "C(-3)", "--fold-mirror", "--format", "json"]) == 0
    assert "3/1" in capsys.readouterr().out


def test_classify_zero_entry_is_a_usage_error(capsys):
    assert _run(["classify", "C(2,0,2)", "--format", "json"]) == 1
    assert "zero entry in reduced word" in capsys.readouterr().err


def test_classify_syntax_error(capsys):
    assert _run(["classify", "C(2,,2)", "--format", "json"]) == 1
    assert "position 4" in capsys.readouterr().err


def test_equiv(capsys):
    assert _run(["equiv", "C(2,2)@plus", "C(1,1,1,1)@plus", "--format", "json"]) == 0
    assert "equivalent" in capsys.readouterr().out
    assert _run(["equiv", "C(3)", "C(-3)", "--format", "json"]) == 0
    assert "distinct" in capsys.readouterr().out


def test_invariant(capsys):
    assert _run(["invariant", "C(3)", "--format", "json"]) == 0
    out = capsys.readouterr().out
    assert "1 + z^2" in out
    assert "t^-1 - 1 + t" in out


def test_invariant_of_a_link_fails(capsys):
    assert _run(["invariant", "C(2)", "--format", "json"]) == 1
    assert "link" in capsys.readouterr().err


@patch("twobridge_surgery.cli.invariant.knot_invariants")
def test_invariant_breach_exit_code(mock_invariants, capsys):
    mock_invariants.side_effect = InvariantBreach("routes disagree")
    assert _run(["invariant", "C(3)", "--format", "json"]) == 3
    assert "routes disagree" in capsys.readouterr().err


def test_diagram(capsys):
    assert _run(["diagram", "C(2,2)", "--format", "json"]) == 0
    out = capsys.readouterr().out
    assert "PD[X[" in out
    assert "writhe" in out


def test_family_json_lines(capsys):
    assert _run(["family", "--count", "3", "--no-cache", "--format", "json"]) == 0
    lines = [line for line in capsys.readouterr().out.splitlines() if line.strip()]
    records = [json.loads(line) for line in lines]
    assert [r["degree"] for r in records] == [2, 4, 6]
    assert [r["index"] for r in records] == [1, 2, 3]


def test_family_random_needs_seed(capsys):
    assert _run(["family", "--strategy", "random", "--format", "json"]) == 1
    assert "seed" in capsys.readouterr().err


def test_family_unknown_strategy(capsys):
    assert _run(["family", "--strategy", "spiral", "--format", "json"]) == 1
    assert "spiral" in capsys.readouterr().err


def test_km(capsys):
    assert _run(["km", "C(2,2)", "--format", "json"]) == 0
    assert "expressible" in capsys.readouterr().out
    args = ["km", "5/1", "--max-length", "6", "--max-entry", "3", "--format", "json"]
    assert _run(args) == 0
    assert "inconclusive" in capsys.readouterr().out


def test_km_rejects_bad_fraction(capsys):
    assert _run(["km", "6/4", "--format", "json"]) == 1


def test_surgery_trefoil(capsys):
    assert _run(["surgery", "--scenario", "k3-trefoil", "--format", "json"]) == 0
    out = capsys.readouterr().out
    assert re.search(r'"lower_bound":\s*4', out)


def test_surgery_list_and_missing(capsys):
    assert _run(["surgery", "--list", "--format", "json"]) == 0
    assert "k3-ladder" in capsys.readouterr().out
    assert _run(["surgery", "--format", "json"]) == 1
    assert _run(["surgery", "--scenario", "nowhere", "--format", "json"]) == 1
    assert "not found" in capsys.readouterr().err


def test_verify_small_sweep(capsys):
    assert _run(["verify", "--max-p", "11", "--format", "json"]) == 0
    out = capsys.readouterr().out
    assert '"failures": []' in out or re.search(r'"failures":\s*\[\s*\]', out)


def test_verify_fuzz_needs_seed(capsys):
    assert _run(["verify", "--max-p", "5", "--fuzz", "10", "--format", "json"]) == 1
    assert "--seed" in capsys.readouterr().err


def test_verify_fuzz_with_seed(capsys):
    args = ["verify", "--max-p", "7", "--fuzz", "25", "--seed", "3", "--format", "json"]
    assert _run(args) == 0


@patch("twobridge_surgery.cli.verify.check_convention")
def test_verify_fixture_mismatch_exit_code(mock_check, capsys):
    from twobridge_surgery.convention import survey_readings

    mock_check.return_value = (False, survey_readings(max_p=5, use_cache=False))
    assert _run(["verify", "--max-p", "5", "--format", "json"]) == 2


def test_verbosity_and_format_parsing():
    assert common.explicit_verbosity(["-vv"]) == 2
    assert common.explicit_verbosity(["--debug"]) == 2
    assert common.explicit_verbosity(["classify", "C(3)"]) == 0
    assert common.explicit_output_format(["--format=json"]) == "json"
    assert common.explicit_output_format(["--format", "table"]) == "table"


def test_verify_reports_domain_errors_in_the_route_sweep(capsys):
    from twobridge_surgery.errors import NotNormalizableError
    from twobridge_surgery.knotpoly import compute_class_invariants

    def broken(p, q):
        if (p, q) == (7, 2):
            raise NotNormalizableError("Delta(1) = 0")
        return compute_class_invariants(p, q)

    with patch("twobridge_surgery.knotpoly.compute_class_invariants", side_effect=broken):
        code = _run(["verify", "--max-p", "9", "--no-cache", "--format", "json"])
    assert code == 2
    assert "route mismatch 7/2" in capsys.readouterr().out
