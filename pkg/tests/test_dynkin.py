import pytest

from stgon.dynkin import (DynkinType, DynkinTypeError, far_end_choices, folding_data, info,
                          source_type, standard_orientation)


@pytest.mark.parametrize("tag,h", [("A1", 2), ("A5", 6), ("B3", 6), ("C4", 8), ("D4", 6),
                                   ("D7", 12), ("E6", 12), ("E7", 18), ("E8", 30), ("F4", 12),
                                   ("G2", 6)])
def test_coxeter_numbers(tag, h):
    assert DynkinType.parse(tag).h == h


@pytest.mark.parametrize("tag", ["E5", "E9", "D3", "B1", "F3", "G3", "X2", "A0", "", "E"])
def test_bad_tags_rejected(tag):
    with pytest.raises(DynkinTypeError):
        DynkinType.parse(tag)


def test_parse_is_lenient_about_case_and_underscore():
    assert DynkinType.parse("e_8") == DynkinType("E", 8)


def test_symmetry_flags():
    assert not DynkinType.parse("E6").symmetric
    assert not DynkinType.parse("A3").symmetric
    for tag in ["E7", "E8", "D5", "B3", "C3", "F4", "G2"]:
        assert DynkinType.parse(tag).symmetric


def test_e_orientation_and_special_vertices():
    o = standard_orientation(DynkinType.parse("E8"))
    assert set(o.arrows) == {(2, 1), (4, 2), (4, 3), (4, 5), (5, 6), (6, 7), (7, 8)}
    assert (o.mid_end, o.near_end, o.far_end) == (1, 3, 8)
    assert sorted(o.leaves()) == [1, 3, 8]


def test_d_orientation_fork():
    o = standard_orientation(DynkinType.parse("D6"))
    assert o.fork == (5, 6)
    assert o.degree(4) == 3


def test_d4_far_end_choices_give_distinct_forks():
    t = DynkinType.parse("D4")
    forks = {c: standard_orientation(t, c).fork for c in far_end_choices(t)}
    assert forks == {1: (3, 4), 3: (1, 4), 4: (1, 3)}


def test_non_simply_laced_has_no_orientation():
    with pytest.raises(DynkinTypeError):
        standard_orientation(DynkinType.parse("F4"))


@pytest.mark.parametrize("tag,src,weights", [("B3", "D4", (1, 1, 2)), ("C3", "A5", (2, 2, 1)),
                                             ("B2", "A3", (2, 1)), ("F4", "E6", (1, 1, 2, 2)),
                                             ("G2", "D4", (1, 3))])
def test_folding_tables(tag, src, weights):
    fd = folding_data(DynkinType.parse(tag))
    assert str(fd.source) == src
    assert fd.weights == weights
    assert sum(weights) == fd.source.rank
    # iota is an involution or a 3-cycle fixing its orbits setwise
    for orbit in fd.orbits:
        assert {fd.iota[v] for v in orbit} == set(orbit)


def test_folded_coxeter_number_matches_source():
    for tag in ["B3", "C4", "F4", "G2"]:
        t = DynkinType.parse(tag)
        assert source_type(t).h == t.h


def test_info_keys():
    d = info(DynkinType.parse("F4"))
    assert d["folded_from"] == "E6" and d["rank"] == 4
