import json

import pytest
from hypothesis import given, settings

from conftest import random_categories
from fincat.core import chain_category, structural_eq, walking_arrow
from fincat.errors import ParseError
from fincat.finset import FinSetMor
from fincat.functor import enumerate_functors, enumerate_nat_trans, thin_functor
from fincat.grothendieck import constant_fibers
from fincat.adjunction import identity_adjunction
from fincat.jsonio import (
    adjunction_doc,
    cat_valued_doc,
    category_doc,
    dumps,
    function_doc,
    functor_doc,
    load_file,
    nat_trans_doc,
    parse_json,
    read_doc,
    read_file,
)


def round_trip(kind, doc):
    return read_doc(kind, json.loads(dumps(doc)))


@settings(max_examples=40, deadline=None)
@given(random_categories())
def test_category_round_trip(C):
    D = round_trip("category", category_doc(C))
    assert structural_eq(C, D)
    assert dumps(category_doc(D)) == dumps(category_doc(C))


def test_other_kinds_round_trip():
    two, c3 = walking_arrow(), chain_category(3)
    F, G = enumerate_functors(two, c3)[:2]
    assert round_trip("functor", functor_doc(F)) == F
    (eta,) = enumerate_nat_trans(F, G)
    assert round_trip("nat_trans", nat_trans_doc(eta)) == eta
    f = FinSetMor(2, 3, [2, 0])
    assert round_trip("function", function_doc(f)) == f
    P = constant_fibers(two, c3)
    assert round_trip("cat_valued", cat_valued_doc(P)) == P
    A = identity_adjunction(two)
    assert round_trip("adjunction", adjunction_doc(A)) == A


def test_canonical_text():
    text = dumps(category_doc(walking_arrow()))
    assert text.endswith("\n") and " " not in text
    assert json.loads(text)["objects"] == 2


def test_unknown_key_has_path():
    doc = category_doc(walking_arrow())
    doc["morphisms"][0]["bogus"] = 1
    with pytest.raises(ParseError) as e:
        read_doc("category", doc)
    assert str(e.value) == "$.morphisms[0].bogus: unknown key 'bogus'"


def test_type_errors_have_paths():
    doc = category_doc(walking_arrow())
    doc["identity"][1] = "x"
    with pytest.raises(ParseError, match=r"\$\.identity\[1\]"):
        read_doc("category", doc)
    del doc["identity"]
    with pytest.raises(ParseError, match="missing key 'identity'"):
        read_doc("category", doc)
    with pytest.raises(ParseError, match="expected an object"):
        read_doc("category", [])


def test_syntax_error_position():
    with pytest.raises(ParseError, match=r"^f\.json:2:"):
        parse_json('{"objects": 1,\n ]', "f.json")


def test_missing_file(tmp_path):
    with pytest.raises(ParseError, match="cannot read file"):
        load_file(str(tmp_path / "nope.json"))


def test_file_references(tmp_path):
    sub = tmp_path / "cats"
    sub.mkdir()
    (sub / "two.json").write_text(dumps(category_doc(walking_arrow())))
    (sub / "three.json").write_text(dumps(category_doc(chain_category(3))))
    F = thin_functor(walking_arrow(), chain_category(3), [0, 2])
    doc = {"source": "cats/two.json", "target": "cats/three.json", "ob": [0, 2], "mor": list(F.mor)}
    (tmp_path / "f.json").write_text(json.dumps(doc))
    assert read_file("functor", str(tmp_path / "f.json")) == F
