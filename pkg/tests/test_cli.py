import io
import json
import subprocess
import sys

import pytest

from fractions import Fraction

from quadconj import Moebius, conjugate, parse_map
from quadconj.parser import parse_moebius
from quadconj.cli import run


def call(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err, stdin=io.StringIO(stdin) if stdin else None)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    return code, json.loads(out)


def test_classify_c2():
    code, doc = call_json("classify", "2z + 5/z")
    assert code == 0
    assert doc["schema"] == 1 and doc["errors"] == []
    assert doc["aut_class"] == "C2"
    assert doc["normal_form"]["params"] == {"k": "2", "b": "5"}


def test_invariants_example():
    code, doc = call_json("invariants", "(2z^2+2z+2)/(-z^2+2z+2)")
    assert code == 0 and doc["sigma"] == ["0", "0"]


def test_rationals_are_strings():
    code, doc = call_json("invariants", "2z + 5/z")
    assert doc["sigma"] == ["13/2", "12"]


def test_same_class_false_exits_zero():
    code, doc = call_json("same-class", "1/z^2", "2/z^2", "--witness")
    assert code == 0
    assert doc["conjugate"] is False and doc["witness"] is None


def test_same_class_with_witness():
    code, doc = call_json("same-class", "z^2", "z/2 + 2/z", "--witness")
    assert doc["conjugate"] is True
    h = Moebius(*(Fraction(x) for x in doc["witness"]["matrix"]))
    assert parse_moebius(doc["witness"]["map"]) == h
    assert conjugate(parse_map("z^2"), h) == parse_map("z/2 + 2/z")


def test_normalize_trivial_has_witness():
    code, doc = call_json("normalize", "z^2 + 1")
    assert doc["normal_form"]["case"] == "Trivial"
    assert doc["normal_form"]["map"] == "2*z^2/(-z^2 + 4*z - 4)"
    assert doc["witness"]["matrix"]


def test_prime_field():
    code, doc = call_json("classify", "1/z^2", "--field", "fp", "--p", "7")
    assert code == 0 and doc["field"] == "F_7" and doc["aut_class"] == "S3"


def test_output_maps_reparse():
    for text in ("z^2 + 1", "2z+5/z", "(z^2-4z+2)/(z^2-2z+2)", "z^2"):
        code, doc = call_json("normalize", text)
        for m in doc["inputs"] + [doc["normal_form"]["map"]]:
            assert parse_map(m) is not None
        assert parse_map(doc["inputs"][0]) == parse_map(text)


def test_deterministic():
    assert call("classify", "z^2 - 2")[1] == call("classify", "z^2 - 2")[1]


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "2z+"),
        ("classify", "z^3"),
        ("classify", "z^2", "--bogus"),
        ("frobnicate",),
        ("classify", "z^2", "--field", "fp"),
        ("classify", "z^2", "--field", "fp", "--p", "9"),
        ("classify", "z^2", "--p", "7"),
        (),
    ],
)
def test_user_errors(argv):
    code, out, err = call(*argv)
    assert code == 1
    assert err.startswith("quadconj:")
    assert json.loads(out)["errors"]


def test_parse_error_is_positioned():
    code, out, err = call("classify", "z^2 + (1")
    assert "position 8" in err and "^" in err


def test_pretty():
    code, out, _ = call("classify", "2z + 5/z", "--pretty")
    assert code == 0 and "aut_class: C2" in out


def test_census_single_prime():
    code, doc = call_json("census", "--p", "5")
    assert code == 0
    (rep,) = doc["reports"]
    assert rep["orbits"] == 30 and rep["mismatches"] == []


def test_census_bad_prime():
    assert call("census", "--p", "4")[0] == 1


def test_selftest():
    code, doc = call_json("selftest")
    assert code == 0 and doc["passed"]


def test_batch():
    code, out, err = call("--batch", stdin="classify 1/z^2\n\ninvariants 'z^2 - 1'\nclassify z^\n")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 1
    assert [d["command"] for d in lines] == ["classify", "invariants", "classify"]
    assert lines[1]["sigma"] == ["2", "-4"]
    assert lines[2]["errors"]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quadconj.cli", "invariants", "z^2 + 1"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["sigma"] == ["2", "4"]
