import json
import random

import pytest

from bipolarsoft import (
    BadEntry,
    ConsistencyViolation,
    DuplicateIdentifier,
    Parameter,
    ParameterSpace,
    ParseError,
    Universe,
    UnknownParameter,
    WeightOutOfRange,
    equals,
    load_dataset,
    new_bipolar_soft_set,
    save_dataset,
    to_tri_table,
)
from bipolarsoft import datasets
from bipolarsoft.io import dumps_dataset, load_weights, loads_dataset

from helpers import make_context, random_context, random_set


@pytest.mark.parametrize("fmt", ["json", "csv"])
@pytest.mark.parametrize("name", datasets.NAMES)
def test_fixture_round_trip(name, fmt, tmp_path):
    x = datasets.load(name)
    out = tmp_path / f"x.{fmt}"
    save_dataset(x, out)
    y = load_dataset(out)
    assert equals(x, y)
    assert y.space == x.space
    assert to_tri_table(y) == to_tri_table(x)


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_random_round_trip(fmt):
    rng = random.Random(21)
    for _ in range(200):
        universe, space = random_context(rng)
        x = random_set(rng, universe, space)
        assert equals(loads_dataset(dumps_dataset(x, fmt), fmt), x)


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_empty_domain_round_trip(fmt):
    universe, space = make_context(3, 2)
    x = new_bipolar_soft_set(universe, space, [], {}, {})
    y = loads_dataset(dumps_dataset(x, fmt), fmt)
    assert equals(x, y) and y.domain == ()


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_custom_negation_labels_survive(fmt):
    space = ParameterSpace([Parameter("cheap", "expensive"), Parameter("e2")])
    x = new_bipolar_soft_set(Universe(["a", "b"]), space, None, {"cheap": ["a"]}, {"expensive": ["b"]})
    y = loads_dataset(dumps_dataset(x, fmt), fmt)
    assert y.space.resolve("cheap").negation_label == "expensive"
    assert equals(x, y)


def test_houses_fixture_contents():
    x = datasets.load("houses_x")
    e2 = x.space.resolve("e2")
    assert x.positive(e2) == {"h1", "h2", "h5"}
    assert x.negative(e2) == {"h3", "h4"}
    assert [e.positive_label for e in x.domain] == ["e1", "e2", "e3", "e6"]


def test_candidates_csv_matches_json():
    assert equals(load_dataset(datasets.path("candidates.csv")), datasets.load("candidates"))


def test_consistency_violation(tmp_path):
    doc = {
        "universe": ["h1", "h2"],
        "parameters": ["e3"],
        "positive": {"e3": ["h1"]},
        "negative": {"e3": ["h1", "h2"]},
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(ConsistencyViolation) as info:
        load_dataset(path)
    assert info.value.exit_code == 3
    assert "e3" in str(info.value)


def test_csv_parse_errors():
    with pytest.raises(BadEntry) as info:
        loads_dataset("object,e1\nu1,2\n", "csv")
    assert info.value.line == 2
    with pytest.raises(BadEntry):
        loads_dataset("object,e1\nu1,x\n", "csv")
    with pytest.raises(ParseError):
        loads_dataset("object,e1\nu1,1,0\n", "csv")
    with pytest.raises(ParseError):
        loads_dataset("# only a comment\n", "csv")
    with pytest.raises(DuplicateIdentifier):
        loads_dataset("object,e1\nu1,1\nu1,0\n", "csv")


def test_csv_comments_and_space_directive():
    text = "# parameters: e1;e2|bad_e2\n# a note\nobject,e2|bad_e2\nu1,-1\nu2,1\n"
    x = loads_dataset(text, "csv")
    assert len(x.space) == 2
    assert [e.positive_label for e in x.domain] == ["e2"]
    assert x.negative(x.space.resolve("e2")) == {"u1"}


def test_json_parse_errors():
    with pytest.raises(ParseError):
        loads_dataset("{not json", "json")
    with pytest.raises(ParseError):
        loads_dataset("[]", "json")
    with pytest.raises(ParseError):
        loads_dataset('{"universe": "h1", "parameters": []}', "json")
    with pytest.raises(ParseError):
        loads_dataset('{"universe": ["h1"], "parameters": [3]}', "json")
    with pytest.raises(DuplicateIdentifier):
        loads_dataset('{"universe": ["h1", "h1"], "parameters": ["e1"]}', "json")


def test_json_unknown_parameter():
    with pytest.raises(UnknownParameter):
        loads_dataset('{"universe": ["h1"], "parameters": ["e1"], "positive": {"e9": ["h1"]}}', "json")


def test_weights_json_and_csv(tmp_path):
    assert load_weights(datasets.path("candidate_weights.json")) == datasets.candidate_weights()
    p = tmp_path / "w.csv"
    p.write_text("label,weight\ne1,0.9\n# skip\ne3,0.8\n")
    assert load_weights(p) == {"e1": 0.9, "e3": 0.8}


@pytest.mark.parametrize("bad", ['{"e1": 1.5}', '{"e1": -0.1}', '{"e1": NaN}'])
def test_weights_out_of_range(bad, tmp_path):
    p = tmp_path / "w.json"
    p.write_text(bad)
    with pytest.raises(WeightOutOfRange) as info:
        load_weights(p)
    assert info.value.exit_code == 5


def test_weights_not_numbers(tmp_path):
    p = tmp_path / "w.json"
    p.write_text('{"e1": "high"}')
    with pytest.raises(ParseError):
        load_weights(p)
