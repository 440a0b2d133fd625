import json
import random

import pytest

from acmcurves import jsonio
from acmcurves.construct import build_linear_pair, gorenstein_generators, skew_matrix_G
from acmcurves.matforms import FormMatrix
from acmcurves.ring import PolyRing, random_form


@pytest.fixture
def ring():
    return PolyRing()


def test_form_round_trip(ring):
    f = random_form(3, ring, random.Random(0))
    doc = jsonio.form_to_doc(f)
    assert jsonio.form_from_doc(doc) == f


def test_form_pairs_sorted_for_determinism(ring):
    f = random_form(2, ring, random.Random(1))
    pairs = jsonio.form_to_pairs(f)
    assert pairs == sorted(pairs, key=lambda p: p[1])


def test_matrix_round_trip_bit_exact(ring):
    rng = random.Random(2)
    ent = [[random_form(d, ring, rng) for d in (3, 2, 1)] for _ in range(2)]
    m = FormMatrix(ring, ent, [[3, 2, 1], [3, 2, 1]])
    doc = m_doc = jsonio.matrix_to_doc(m)
    back = jsonio.matrix_from_doc(json.loads(jsonio.dumps(doc)))
    assert back == m
    assert jsonio.dumps(jsonio.matrix_to_doc(back)) == jsonio.dumps(m_doc)


def test_matrix_zero_entries_keep_degree_slots():
    pair = build_linear_pair(4, 2, random.Random(3))
    doc = jsonio.matrix_to_doc(pair.m_big)
    back = jsonio.matrix_from_doc(doc)
    assert back == pair.m_big
    assert back.degree_matrix == pair.m_big.degree_matrix


def test_skew_matrix_serializes_as_plain_matrix():
    pair = build_linear_pair(3, 1, random.Random(4))
    doc = jsonio.matrix_to_doc(skew_matrix_G(pair))
    assert doc["rows"] == doc["cols"] == 5
    back = jsonio.matrix_from_doc(doc)
    assert back.entry(1, 0) == -back.entry(0, 1)


def test_ideal_round_trip():
    pair = build_linear_pair(3, 2, random.Random(5))
    gens = gorenstein_generators(pair)
    back = jsonio.ideal_from_doc(jsonio.ideal_to_doc(gens))
    assert back.generators == gens.generators


def test_ideal_doc_rejects_zero_generator(ring):
    doc = {"p": ring.p, "nvars": 4, "generators": [[]]}
    with pytest.raises(ValueError):
        jsonio.ideal_from_doc(doc)


def test_canonical_dumps_is_stable():
    doc = {"b": 1, "a": [3, 2], "c": {"y": None, "x": True}}
    assert jsonio.dumps(doc) == jsonio.dumps(json.loads(jsonio.dumps(doc)))
