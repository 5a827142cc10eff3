import itertools

import pytest
from hypothesis import given, settings, strategies as st

from coxkit.diagram import load_diagram, parse_diagram
from coxkit.errors import CoxkitError, InfiniteCellError, OrbitCapExceeded
from coxkit.words import (LeavesCell, Longer, OracleStatus, Shorter, batch_oracle, braid_orbit,
                          cell_table, enumerate_small_cell, format_word, induced_bijection,
                          intersection, is_rigid, left_multiply, oracle_unique_reduced,
                          parabolic_core_check, parse_word, sort_words)

from graphgen import LABELS_345INF, diagram_classes


@pytest.fixture
def star(fixtures_dir):
    return load_diagram(fixtures_dir / "ex1.cox")


@pytest.fixture
def ex2(fixtures_dir):
    return load_diagram(fixtures_dir / "ex2.cox")


@pytest.fixture
def edq7(fixtures_dir):
    return load_diagram(fixtures_dir / "edq7.cox")


def w(d, text):
    return parse_word(d, text)


# -- parsing -------------------------------------------------------------------

def test_parse_compact_and_spaced(ex2):
    assert w(ex2, "12321") == ("1", "2", "3", "2", "1")
    assert w(ex2, "1 2 3") == ("1", "2", "3")
    assert w(ex2, "e") == () and w(ex2, "") == ()
    assert format_word(ex2, ()) == "e"


def test_compact_form_needs_single_character_names():
    d = parse_diagram("edge ab cd")
    assert parse_word(d, "ab cd") == ("ab", "cd")
    assert parse_word(d, "ab") == ("ab",)
    assert format_word(d, ("ab", "cd")) == "ab cd"
    with pytest.raises(CoxkitError, match="compact"):
        parse_word(d, "abcd")


def test_parse_rejects_unknown_letters(ex2):
    with pytest.raises(CoxkitError, match="unknown generator"):
        parse_word(ex2, "129")


def test_sort_order(ex2):
    words = [w(ex2, x) for x in ("32", "2", "123", "21", "1")]
    assert [format_word(ex2, x) for x in sort_words(ex2, words)] == ["1", "2", "21", "32", "123"]


# -- rigidity --------------------------------------------------------------------

@pytest.mark.parametrize("text, rigid", [
    ("12321", True), ("212321", False), ("11", False), ("232", True),
    ("2323", False), ("13", False), ("1", True),
])
def test_is_rigid_examples(ex2, text, rigid):
    assert bool(is_rigid(ex2, w(ex2, text))) is rigid


def test_rigidity_positions(ex2):
    assert is_rigid(ex2, w(ex2, "212321")).position == 0
    assert is_rigid(ex2, w(ex2, "12323")).position == 1
    assert is_rigid(ex2, w(ex2, "2112")).position == 1
    assert is_rigid(ex2, w(ex2, "2134")) == (False, 1, "1 and 3 commute")
    assert is_rigid(ex2, w(ex2, "134")).position == 0
    assert not is_rigid(ex2, ())


def test_is_rigid_rejects_unknown_letters(ex2):
    for word in [("9",), ("1", "9"), ("1", "3", "9")]:
        with pytest.raises(CoxkitError):
            is_rigid(ex2, word)


diagrams_4 = st.integers(1, 4).flatmap(lambda n: st.sampled_from(diagram_classes(n, LABELS_345INF)))


@settings(max_examples=200, deadline=None)
@given(diagrams_4, st.data())
def test_rigid_iff_unique_reduced_random_long_words(d, data):
    word = tuple(data.draw(st.lists(st.sampled_from(d.vertices), min_size=1, max_size=11)))
    rep = oracle_unique_reduced(d, word, cap=200_000)
    assert bool(is_rigid(d, word)) == (rep.status is OracleStatus.REDUCED_UNIQUE)


@settings(max_examples=100, deadline=None)
@given(diagrams_4, st.data())
def test_rigidity_closed_under_factors_and_reversal(d, data):
    word = tuple(data.draw(st.lists(st.sampled_from(d.vertices), min_size=1, max_size=9)))
    if is_rigid(d, word):
        assert is_rigid(d, word[::-1])
        for i, j in itertools.combinations(range(len(word) + 1), 2):
            assert is_rigid(d, word[i:j])


# -- enumeration -------------------------------------------------------------------

def test_cell_sizes(star, ex2):
    assert len(enumerate_small_cell(star)) == 25
    assert len(enumerate_small_cell(ex2)) == 38
    single = enumerate_small_cell(parse_diagram("vertex a"))
    assert single.words == (("a",),)


def test_enumeration_equals_brute_force_filter(ex2):
    cell = enumerate_small_cell(ex2)
    longest = max(len(x) for x in cell)
    brute = [x for n in range(1, longest + 2) for x in itertools.product(ex2.vertices, repeat=n)
             if is_rigid(ex2, x)]
    assert list(cell) == sort_words(ex2, brute)


@settings(max_examples=40, deadline=None)
@given(diagrams_4)
def test_truncated_enumeration_matches_filter(d):
    cell = enumerate_small_cell(d, max_len=5)
    brute = [x for n in range(1, 6) for x in itertools.product(d.vertices, repeat=n) if is_rigid(d, x)]
    assert list(cell) == sort_words(d, brute)
    longer = any(is_rigid(d, x) for x in itertools.product(d.vertices, repeat=6))
    assert cell.truncated == longer


def test_infinite_cell_needs_cap(fixtures_dir):
    d = load_diagram(fixtures_dir / "affine_triangle.cox")
    with pytest.raises(InfiniteCellError):
        enumerate_small_cell(d)
    capped = enumerate_small_cell(d, max_len=4)
    assert capped.truncated and max(len(x) for x in capped) == 4
    with pytest.raises(CoxkitError):
        enumerate_small_cell(d, max_len=-1)


def test_threads_do_not_change_output(ex2, edq7):
    for d in (ex2, edq7):
        assert enumerate_small_cell(d, workers=3).words == enumerate_small_cell(d).words


# -- left multiplication ----------------------------------------------------------

@pytest.mark.parametrize("t, word, expected", [
    ("1", "2321", Longer(("1", "2", "3", "2", "1"))),
    ("1", "12321", Shorter(("2", "3", "2", "1"))),
    ("2", "232", Shorter(("3", "2"))),
    ("3", "232", LeavesCell()),
    ("4", "1", LeavesCell()),
    ("1", "1", Shorter(())),
])
def test_left_multiply(ex2, t, word, expected):
    assert left_multiply(ex2, t, w(ex2, word)) == expected


def test_left_multiply_requires_rigid(ex2):
    with pytest.raises(CoxkitError):
        left_multiply(ex2, "1", w(ex2, "2323"))


# -- tables and intersections -------------------------------------------------------

def test_cell_entries(star, ex2):
    assert cell_table(star).cell("5", "1") == (w(star, "541"),)
    assert cell_table(ex2).cell("1", "1") == (w(ex2, "1"), w(ex2, "12321"))
    assert cell_table(ex2).cell("2", "1") == (w(ex2, "21"), w(ex2, "2321"))


def test_table_inverse_symmetry(ex2, edq7):
    for d in (ex2, edq7):
        table = cell_table(d)
        for s in d.vertices:
            for t in d.vertices:
                assert sorted(x[::-1] for x in table.cell(t, s)) == sorted(table.cell(s, t))


def test_intersections(star, ex2):
    assert intersection(star, "3", "2") == [w(star, "243")]
    assert intersection(ex2, "4", "4") == [w(ex2, "4"), w(ex2, "43234")]


def test_table_text_and_json(ex2):
    table = cell_table(ex2)
    text = table.to_text().splitlines()
    assert text[0].split("|")[1].strip() == "1"
    assert text[3].startswith("2 | 21,2321")
    assert table.to_json()["rows"][1] == {"t": "2", "cells": [["21", "2321"], ["2", "232"], ["23"],
                                                              ["234"], ["235"]]}


# -- oracle ---------------------------------------------------------------------------

def test_braid_orbits():
    d = parse_diagram("edge 1 2")
    assert braid_orbit(d, ("1", "2")) == {("1", "2")}
    assert braid_orbit(d, ("1", "2", "1")) == {("1", "2", "1"), ("2", "1", "2")}


def test_orbit_of_printed_entry(ex2):
    orbit = braid_orbit(ex2, w(ex2, "212321"))
    assert len(orbit) > 1 and w(ex2, "121321") in orbit


def test_oracle_reports(star, ex2):
    assert oracle_unique_reduced(ex2, w(ex2, "12321")).to_json() == {"status": "ReducedUnique",
                                                                     "orbit_size": 1}
    assert oracle_unique_reduced(ex2, w(ex2, "11")).status is OracleStatus.NOT_REDUCED
    assert oracle_unique_reduced(parse_diagram("edge 1 2"), ("1", "2", "1", "2", "1")).status \
        is OracleStatus.NOT_REDUCED
    # 1424 -> 1242 -> 2142: three reduced expressions, none with a repeated letter
    assert oracle_unique_reduced(star, w(star, "1424")).to_json() == {"status": "ReducedMultiple",
                                                                      "orbit_size": 3}
    assert oracle_unique_reduced(star, w(star, "12")).status is OracleStatus.REDUCED_MULTIPLE


def test_orbit_cap(fixtures_dir):
    d = load_diagram(fixtures_dir / "ex1.cox")
    assert len(braid_orbit(d, w(d, "135"))) == 6
    with pytest.raises(OrbitCapExceeded):
        braid_orbit(d, w(d, "135"), cap=3)


def test_batch_oracle_agrees_on_labeled_example(ex2):
    for length in range(1, 7):
        b = batch_oracle(ex2, length)
        for i in range(0, len(b.letters), 7):
            assert b.report(i) == oracle_unique_reduced(ex2, b.word(i))


# -- transport to the rank-two core ---------------------------------------------------------

def test_induced_bijection_examples(ex2):
    f = induced_bijection(ex2, "1", "1")
    assert f == {w(ex2, "2"): w(ex2, "1"), w(ex2, "232"): w(ex2, "12321")}
    assert induced_bijection(ex2, "1", "3") == {w(ex2, "32"): w(ex2, "321")}


def test_parabolic_core(ex2, edq7):
    assert parabolic_core_check(ex2)
    assert parabolic_core_check(edq7)
    assert parabolic_core_check(parse_diagram("edge s t 5"))
    with pytest.raises(CoxkitError):
        parabolic_core_check(parse_diagram("edge a b\nedge b c"))
