import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import ulmkit

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = pathlib.Path(os.environ.get("ULMKIT_SCHEMA", ROOT / "schema" / "ulmkit-output.schema.json"))
DATA = pathlib.Path(os.environ.get("ULMKIT_DATA", ROOT / "data"))
CLI = os.environ.get("ULMKIT_CLI")


@pytest.fixture(scope="module")
def validator():
    schema = json.loads(SCHEMA.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


def test_ulm_of_v3():
    module = ulmkit.parse_zmod((DATA / "v3.zmod").read_text())
    assert ulmkit.ulm(module) == {"ulm": [0, 0, 1]}
    assert module == ulmkit.cyclic(2, 3)


def test_decompose_group_algebra():
    module = (3, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    report = ulmkit.decompose(module)
    assert report["blocks"] == [{"n": 3, "mult": 1}]


def test_double_dual():
    module = ulmkit.cyclic(5, 4)
    assert ulmkit.dual(ulmkit.dual(module)) == module
    assert ulmkit.ulm(ulmkit.dual(module)) == ulmkit.ulm(module)


def test_spectrum_and_char_height():
    assert ulmkit.spectrum(3, 20) == {"heights": {"0": 7, "2": 19}}
    assert ulmkit.char_height(3, [7, 19])["height"] == 0
    assert ulmkit.char_height(3, [109])["height"] == 8
    assert ulmkit.char_height(3, [19], m=2)["height_bounds"] == [1, 2]


def test_present():
    pres = ulmkit.present(3, 1, {1: 1})
    assert len(pres["generators"]) == 3
    assert [r["rhs"] for r in pres["relations"]] == [["C1_0.x1"], ["C1_0.x2"], ["C1_0.x0"]]


def test_errors():
    with pytest.raises(ulmkit.ParseError):
        ulmkit.parse_zmod("l 2\ndim 1\nsigma\n5\n")
    with pytest.raises(ulmkit.UlmkitError):
        ulmkit.char_height(3, [5])
    with pytest.raises(ValueError):
        ulmkit.ulm((2, [[1, 1], [1, 1]]))


def test_selftest_single_criterion():
    ok, line = ulmkit.selftest(1)
    assert ok, line


def test_python_reports_validate(validator):
    validator.validate(ulmkit.ulm(ulmkit.cyclic(2, 3)))
    validator.validate(ulmkit.decompose(ulmkit.cyclic(3, 4)))
    validator.validate(ulmkit.spectrum(3, 10000, detailed=True))
    validator.validate(ulmkit.char_height(3, [19, 109], m=3))
    validator.validate(ulmkit.present(2, 1, {0: 1, 1: 2}, free_mult=1, trunc=3))


CLI_CASES = [
    (["ulm", "-i", "{data}/v3.zmod"], 0),
    (["decompose", "-i", "{data}/v3.zmod"], 0),
    (["height", "-i", "{data}/v3.zmod", "--vector", "0 1 0"], 0),
    (["height", "-i", "{data}/v3.zmod", "--eta", "0 0 1"], 0),
    (["solve-embed", "-i", "{data}/v3.zmod", "--phi", "1 0 0", "--n", "3"], 0),
    (["group-ep", "--G", "{data}/c9.zgrp", "--Gamma", "{data}/c3.zgrp", "--H", "{data}/c9.zgrp",
      "--alpha", "0,1,2,0,1,2,0,1,2", "--beta", "0,1,2,0,1,2,0,1,2"], 0),
    (["spectrum", "--l", "5", "--pmax", "1000", "--detailed"], 0),
    (["char-height", "--l", "3", "--ramified", "7,19"], 0),
    (["present", "--l", "3", "--N", "2", "--mult", "0=1,2=1", "--free", "1", "--trunc", "4"], 0),
    (["char-height", "--l", "3", "--ramified", "5"], 1),
    (["ulm", "-i", "{data}/c3.zgrp"], 1),
]


@pytest.mark.skipif(CLI is None, reason="ULMKIT_CLI not set")
@pytest.mark.parametrize("args,code", CLI_CASES)
def test_cli_documents_validate(validator, args, code):
    argv = [CLI] + [a.format(data=DATA) for a in args]
    proc = subprocess.run(argv, capture_output=True, text=True)
    assert proc.returncode == code, proc.stderr
    doc = json.loads(proc.stdout if code == 0 else proc.stderr)
    validator.validate(doc)
