import json

import pytest

import pygoldman as pg


def element(genus, alpha=None, loops=None, h2=None, h0="0/1"):
    empty = {"genus": genus, "terms": []}
    return json.dumps(
        {
            "genus": genus,
            "h0": h0,
            "h1": {
                "alpha": alpha or ["0/1"] * (2 * genus),
                "loops": loops or empty,
            },
            "h2": h2 or empty,
        }
    )


def test_torus_bracket():
    assert pg.bracket(1, "(1,0)", "(0,1)") == {"(1,1)": "1/1"}
    assert pg.bracket(1, "(2,1)", "(2,1)") == {}
    assert pg.bracket(1, "(0,1)", "(1,0)") == {"(1,1)": "-1/1"}


def test_genus_two_bracket():
    assert pg.bracket(2, "a1", "b1") == {"a1 b1": "1/1"}
    assert pg.bracket(2, "a1", "a2") == {}


def test_classes_and_canonical():
    cls = pg.classes(2, 1)
    assert len(cls) == 9
    assert cls[0] == ""
    assert len(set(cls)) == len(cls)
    assert pg.canonical(2, "b1 a1 B1") == "a1"


def test_cup_and_delta():
    x = element(1, alpha=["1/1", "0/1"])
    y = element(1, alpha=["0/1", "1/1"])
    out = json.loads(pg.cup(x, y))
    assert out["h2"]["terms"] == [{"coeff": "1/1", "class": "(0,0)"}]

    z = element(1, h2={"genus": 1, "terms": [{"coeff": "1/1", "class": "(1,1)"}]})
    dz = json.loads(pg.delta(z))
    assert dz["h1"]["loops"]["terms"] == [{"coeff": "1/1", "class": "(1,1)"}]


def test_gerstenhaber_matches_goldman_on_loops():
    x = element(1, loops={"genus": 1, "terms": [{"coeff": "1/1", "class": "(1,0)"}]})
    y = element(1, loops={"genus": 1, "terms": [{"coeff": "1/1", "class": "(0,1)"}]})
    out = json.loads(pg.gerstenhaber(x, y))
    assert out["h1"]["loops"]["terms"] == [{"coeff": "1/1", "class": "(1,1)"}]


def test_verify_axioms():
    report = json.loads(pg.verify_axioms(1, samples=15))
    assert report["all_passed"] is True
    assert len(report["checks"]) == 6

    literal = json.loads(pg.verify_axioms(1, samples=15, signs="(+,+,+,+)"))
    assert literal["all_passed"] is False


def test_resolve_signs():
    result = json.loads(pg.resolve_signs(1, samples=10))
    assert result["selected"] == "(+,+,-,+)"
    assert len(result["passing"]) == 8


def test_relator_residual():
    assert pg.relator_residual(2) < 1e-9
    assert pg.relator_residual(3) < 1e-9


def test_input_errors():
    with pytest.raises(pg.InputError):
        pg.bracket(2, "a3", "b1")
    with pytest.raises(pg.InputError):
        pg.bracket(1, "(1,0", "(0,1)")
