import pytest

import altwords as aw


def test_alternating_words():
    assert aw.alternating_words(3, 3) == [[1, 2, 1], [1, 3, 1], [1, 3, 2], [2, 3, 1], [2, 3, 2]]
    assert aw.is_alternating([1, 2, 1, 4])
    assert not aw.is_alternating([1, 2, 1, 4], "down-up")


def test_occurrences():
    w = [1, 2, 4, 4, 2, 5, 4]
    assert aw.count_occurrences(w, "1-32") == 4
    assert aw.count_occurrences(w, "132") == 1
    assert aw.avoids([3, 1, 5, 2, 6, 7], "3-2-1")


def test_counts_and_tables():
    assert aw.count_avoiders(5, 8, "132") == 1701
    assert aw.count_avoiders(5, 9, "312") == 4089
    t = aw.table("312", 5, 9)
    assert t[(5, 7)] == 874
    assert t[(3, 1)] == 3
    assert len(aw.avoiders(4, 4, "132")) == 25
    assert "k,n,count" in aw.table_text("132", 3, 3, "csv")


def test_formulas_return_exact_ints():
    assert aw.stirling2(8, 4) == 1701
    assert aw.narayana(5, 1) == 10
    big = aw.binomial(200, 100)
    assert isinstance(big, int) and big > 2**64
    assert aw.n123_even(5, 1) == 10
    assert aw.count_3_21(5, 4) == 85
    assert aw.gf_coefficients("132", 3, 6) == [1, 3, 3, 4, 7, 8, 15]


def test_prediction():
    p = aw.predicted_count("21-3", 4, 4)
    assert p["value"] == 25 and p["wilf_class"] == "A" and p["closed_form"]
    q = aw.predicted_count("2-13", 4, 5)
    assert not q["closed_form"]
    assert q["value"] == aw.count_avoiders(4, 5, "2-13")


def test_wilf():
    blocks = aw.wilf_partition(["123", "132", "213", "231", "312", "321"], 5, 8, "even")
    assert sorted(sorted(b) for b in blocks) == [["123", "321"], ["132", "213"], ["231", "312"]]
    assert len(aw.all_patterns()) == 24
    assert aw.wilf_class("3-21", "even") == "E"


def test_classes_and_dyck():
    classes = aw.enumerate_classes(5)
    assert classes == [[], [(2, 3)], [(2, 4)], [(3, 4)], [(3, 4), (2, 3)]]
    assert aw.class_to_dyck(5, [(3, 4), (2, 3)]) == "UDUDUD"
    assert aw.dyck_to_class("UUDUDD", 5) == [(2, 4)]
    assert aw.valleys("UUDDUUUUDDDUDUDD") == 3
    assert aw.cut_pairs([4, 6, 4, 5, 2, 5, 2, 5, 1, 2], 6) == [(4, 5)]
    assert [aw.class_word_count(5, f, 1) for f in classes] == [7, 1, 1, 1, 0]
    assert len(aw.class_members(5, [(2, 4)], 2)) == 7


def test_errors_become_value_errors():
    with pytest.raises(ValueError):
        aw.count_avoiders(3, 3, "1-1-2")
    with pytest.raises(ValueError):
        aw.dyck_to_class("UUD", 4)


def test_verify_bijection():
    report = aw.verify("bijection")
    assert report["bijection"]["passed"]
