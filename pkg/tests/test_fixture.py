import copy
import json

import pytest

from bicrossed.exactlin import Fraction
from bicrossed.fixture import (
    FixtureError,
    fixture_from_dict,
    load_fixture,
    parse_commutative,
    parse_linear,
    parse_terms,
)

from oracles import FIXTURES, raw_fixture


def base():
    return copy.deepcopy(raw_fixture("e1-borel-sl2"))


def test_parse_terms_rationals():
    assert parse_terms("2/4*f") == [(Fraction(1, 2), [[("f", 1)]])]
    assert parse_terms("-f^2 + 3") == [(Fraction(-1), [[("f", 2)]]), (Fraction(3), [[]])]


def test_parse_commutative_legs():
    v = parse_commutative("f|1 + 1|f", ["f"], 2)
    assert v == {((1,), (0,)): 1, ((0,), (1,)): 1}
    assert parse_commutative("e^-1 - 1/3*e^2", ["e"]) == {(-1,): 1, (2,): Fraction(-1, 3)}
    with pytest.raises(FixtureError, match="tensor legs"):
        parse_commutative("f", ["f"], 2)


@pytest.mark.parametrize("text", ["", "2 f", "f +", "f/g", "3^2"])
def test_parse_errors(text):
    with pytest.raises(FixtureError):
        parse_commutative(text, ["f", "g"])


def test_parse_linear_rejects_products():
    assert parse_linear("2*E - H", ["H", "E"]) == {1: 2, 0: -1}
    with pytest.raises(FixtureError):
        parse_linear("H*E", ["H", "E"])


def test_empty_object_rejected():
    with pytest.raises(FixtureError, match="non-empty"):
        fixture_from_dict({})


def test_schema_version():
    data = base()
    data["schema_version"] = 2
    with pytest.raises(FixtureError, match="schema_version"):
        fixture_from_dict(data)
    del data["schema_version"]
    with pytest.raises(FixtureError, match="missing field"):
        fixture_from_dict(data)


def test_json_error_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n  "name": "x",\n  oops\n}', encoding="utf-8")
    with pytest.raises(FixtureError) as err:
        load_fixture(p)
    assert f"{p}:3:3" in str(err.value)


def test_missing_file(tmp_path):
    with pytest.raises(FixtureError):
        load_fixture(tmp_path / "nope.json")


@pytest.mark.parametrize(
    "mutate, where",
    [
        (lambda d: d["split"].update(g2=[]), "split"),
        (lambda d: d["action"]["H"].update(g="1"), "action.H.g"),
        (lambda d: d["coaction"].update(F={"H": "1"}), "coaction.F"),
        (lambda d: d["hopf"]["generators"][0].update(antipode="f^-1"), "antipode"),
        (lambda d: d.update(levi=["H"]), "levi"),
        (lambda d: d["modules"].append({"name": "trivial", "kind": "trivial"}), "modules"),
        (lambda d: d["modules"][0].update(kind="weird"), "kind"),
        (lambda d: d.update(pairing={"f": {"coefficient": ["F", "H"]}}), "pairing.f.coefficient"),
        (lambda d: d.update(matched_overrides={"left": {"H, F": "H"}}), "matched_overrides.left"),
    ],
)
def test_schema_errors_locate_field(mutate, where):
    data = base()
    mutate(data)
    with pytest.raises(FixtureError) as err:
        fixture_from_dict(data)
    assert where in err.value.path


def test_only_delta_twist_mutable():
    data = base()
    data["mutations"] = {"sigma": "f"}
    with pytest.raises(FixtureError, match="delta_twist"):
        fixture_from_dict(data)
    data["mutations"] = {"delta_twist": False}
    assert fixture_from_dict(data).mutations == {"delta_twist": False}


def test_shipped_fixtures_load():
    names = sorted(p.stem for p in FIXTURES.glob("*.json"))
    assert {"e0-trivial", "e1-borel-sl2", "e2-axb", "e3-laurent"} <= set(names)
    for n in names:
        fx = load_fixture(FIXTURES / f"{n}.json")
        assert fx.name == n
        if n.startswith("e1-broken"):
            assert set(fx.expect) == {"suite", "identity"}


def test_explicit_module_round_trip():
    data = base()
    data["modules"].append({
        "name": "std",
        "basis": ["a"],
        "g1_action": {"H": {"a": "2*a"}},
        "coaction": {"a": {"a": "1"}},
    })
    fx = fixture_from_dict(json.loads(json.dumps(data)))
    M = fx.module("std")
    assert M.g1.act(0, {0: Fraction(1)}) == {0: 2}
    assert M.coaction({0: Fraction(1)}) == {(0, (0,)): 1}
