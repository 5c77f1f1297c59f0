import os

import pytest

import triangle_words as tw

DATA_DIR = os.environ.get(
    "TRIANGLE_WORDS_DATA_DIR",
    os.path.join(os.path.dirname(__file__), "..", "..", "data"),
)


def group(name):
    return tw.Group.load(os.path.join(DATA_DIR, "groups", name + ".json"))


def test_classify():
    assert tw.classify_burnside(2, 3, 7, 5) == (False, "NONE")
    assert tw.classify_burnside(2, 3, 5, 7) == (True, "SUM_AT_LEAST_ONE")
    assert tw.classify_honda(3, 4, 5) == (True, "RSTAR_IS_PM1")
    assert tw.classify_honda_via_burnside(5, 7, 2)[0] is False
    assert tw.crt_star(3, 4, 5) == 11


def test_errors_carry_code():
    with pytest.raises(tw.Error, match="invalid-r"):
        tw.classify_burnside(2, 3, 7, 6)
    with pytest.raises(ValueError):
        tw.multiplier_set(1, 3, 7)


def test_lattice():
    assert tw.multiplier_set(2, 3, 7) == [1, 41]
    assert tw.multiplier_set(3, 3, 3) == [1, 2]
    assert tw.region_of(3, 3, 3, 1, 1, 1) == "T"
    enumerated, closed = tw.fiber_count(2, 3, 7, 1, 1)
    assert enumerated == closed == 1


def test_groups():
    s3 = group("s3")
    assert s3.order == 6 and len(s3) == 6
    assert sorted(s3.class_sizes) == [1, 2, 3]
    assert tw.multiplier_set_finite(s3, 2, 2, 3) == [1, 5]
    assert tw.burnside_count_check(group("s4"), 5)
    z2 = tw.Group.from_table([[0, 1], [1, 0]])
    assert z2.multiply(1, 1) == 0
    assert tw.universal_witness(2, 2, 3, 1) == ("()", "()")
    assert tw.lemma42_check(2, 5, 3)


def test_words_and_psl2():
    s3 = group("s3")
    assert tw.reduce_word(s3, "g:1 b b- g:2") == "g:3"
    assert tw.reduce_word(s3, "b g:3 b-") == "g:0 b g:3 b- g:0"
    assert tw.orevkov_solvable("1/3", "1/3", "1/3")
    assert not tw.orevkov_solvable("1/2", "1/2", "1/2")
    assert tw.numeric_triple_solvable("1/2", "1/3", "1/7")
