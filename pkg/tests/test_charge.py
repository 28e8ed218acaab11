import numpy as np
import pytest

from stgon.arquiver import build
from stgon.charge import (CentralCharge, all_orbit_polygons, charge_from_hgon, farend_polygon,
                          iota_action, linearity_residual, orbit_closure_residual, quiver_for,
                          read_charge, symmetrized, verify_mesh, write_charge)
from stgon.dynkin import DynkinType, folding_data
from stgon.hgon import (HGon, InvalidHGon, build_cores, is_positively_convex, is_stable, regular,
                        sample_near_regular)
from stgon.io import dumps_charge, loads_charge

from conftest import ALL_TYPES, SIMPLY_LACED

T = DynkinType.parse

CHOICES = [("A4", None), ("A4", 4), ("D4", None), ("D4", 3), ("D4", 4), ("D5", None),
           ("E6", None), ("E6", 1), ("E7", None), ("E8", None), ("A1", None)]


@pytest.mark.parametrize("tag,choice", CHOICES)
def test_mesh_and_linearity(tag, choice):
    t = T(tag)
    q = quiver_for(t, choice)
    for seed in range(10):
        g = sample_near_regular(t, 0.1, seed, far_end_choice=choice)
        Z = charge_from_hgon(g, q)
        assert verify_mesh(Z, q) < 1e-12
        assert linearity_residual(Z, q) < 1e-12
        assert orbit_closure_residual(Z, q) < 1e-12


def test_d5_second_orbit_is_length_two_diagonal():
    g = sample_near_regular(T("D5"), 0.1, 4)
    q = quiver_for(g.type)
    tab = charge_from_hgon(g, q).label_values(q)
    for j in range(g.h):
        assert abs(tab[1, j] - (g.V(j + 2) - g.V(j))) < 1e-14


def test_d_fork_orbits_use_punctures():
    g = sample_near_regular(T("D6"), 0.1, 2)
    q = quiver_for(g.type)
    tab = charge_from_hgon(g, q).label_values(q)
    bp, bm = g.punctures
    assert abs(tab[4, 0] - (bp - g.V(0))) < 1e-14
    assert abs(tab[5, 0] - (bm - g.V(0))) < 1e-14
    assert abs(tab[4, 1] - (bm - g.V(1))) < 1e-14


@pytest.mark.parametrize("j", range(12))
def test_e6_third_orbit_realized_four_ways(j):
    # the segment from X to Y means Y - X
    g = sample_near_regular(T("E6"), 0.2, 3)
    W = build_cores(g).W
    w = lambda k: complex(W[k % 12])
    V = g.V
    ways = [V(j + 4) - w(j + 6), w(j) - V(j - 2), V(j + 2) - w(j + 1), w(j + 7) - V(j + 8)]
    q = quiver_for(g.type)
    z = charge_from_hgon(g, q)(q, (3, j - 1))
    assert max(abs(x - z) for x in ways) < 1e-13


def test_e6_far_and_mid_orbits_are_shifts():
    g = sample_near_regular(T("E6"), 0.2, 5)
    q = quiver_for(g.type)
    tab = charge_from_hgon(g, q).label_values(q)
    assert np.abs(tab[0] + np.roll(tab[5], 6)).max() < 1e-13
    assert np.abs(tab[1] + np.roll(tab[4], 6)).max() < 1e-13


def test_core_edges_are_differences_of_core_vertices():
    for tag in ("E6", "E7", "E8"):
        g = sample_near_regular(T(tag), 0.2, 1)
        c = build_cores(g)
        assert c.residuals["core_edges"] < 1e-13


def test_mesh_detects_perturbed_entry():
    t = T("E7")
    q = quiver_for(t)
    Z = charge_from_hgon(regular(t), q)
    tab = Z.table.copy()
    delta = 1e-3
    tab[3, 5] += delta
    bad = CentralCharge(t, Z.values, tab)
    assert verify_mesh(bad, q) >= delta - 1e-12
    assert linearity_residual(bad, q) >= delta - 1e-12
    zero = CentralCharge(t, np.zeros(7), np.zeros((7, 18)))
    assert verify_mesh(zero, q) == 0


def test_invalid_polygon_rejected():
    g = regular(T("E6"))
    v = g.vertices.copy()
    v[0] += 0.1
    with pytest.raises(InvalidHGon):
        charge_from_hgon(HGon(g.type, v))


def test_quiver_type_mismatch():
    with pytest.raises(ValueError):
        charge_from_hgon(regular(T("E6")), build(T("E7")))


def test_e8_gepner_far_end_is_regular_30_gon():
    t = T("E8")
    back = farend_polygon(charge_from_hgon(regular(t)))
    r = np.abs(back.vertices - back.center)
    assert np.ptp(r) < 1e-12
    assert np.abs(back.vertices - regular(t).vertices).max() < 1e-12


@pytest.mark.parametrize("tag,choice", CHOICES)
def test_roundtrip(tag, choice):
    t = T(tag)
    for seed in range(10):
        g = sample_near_regular(t, 0.1, seed, far_end_choice=choice)
        back = farend_polygon(charge_from_hgon(g))
        assert back.far_end_choice == choice
        shift = g.center - back.center
        assert np.abs(back.vertices + shift - g.vertices).max() < 1e-12


@pytest.mark.parametrize("tag", ["B3", "C3", "F4", "G2", "B2"])
def test_folded_roundtrip_returns_folded_type(tag):
    g = sample_near_regular(T(tag), 0.1, 0)
    Z = charge_from_hgon(g)
    assert Z.folded_from == T(tag)
    back = farend_polygon(Z)
    assert back.type == T(tag)
    assert np.abs(back.vertices - back.center - (g.vertices - g.center)).max() < 1e-12


def test_d4_three_far_end_hexagons_differ():
    t = T("D4")
    g = sample_near_regular(t, 0.2, 11)
    Z = charge_from_hgon(g)
    polys = [farend_polygon(Z, quiver_for(t, c)) for c in (1, 3, 4)]
    for a in range(3):
        for b in range(a + 1, 3):
            assert np.abs(polys[a].vertices - polys[b].vertices).max() > 1e-3
    for p in polys:
        assert is_stable(p).is_stable


@pytest.mark.parametrize("tag", SIMPLY_LACED)
def test_orbit_polygons_convex_when_stable(tag):
    t = T(tag)
    g = sample_near_regular(t, 0.05, 0)
    assert is_stable(g).is_stable
    q = quiver_for(t)
    for poly in all_orbit_polygons(charge_from_hgon(g, q), q):
        if len(poly) > 2:
            assert is_positively_convex(poly)[0]


def test_a2_orbit_triangles():
    g = regular(T("A2"))
    q = quiver_for(g.type)
    polys = all_orbit_polygons(charge_from_hgon(g, q), q)
    for p in polys:
        side = np.abs(np.diff(np.append(p, p[0])))
        assert np.ptp(side) < 1e-12


@pytest.mark.parametrize("tag", SIMPLY_LACED)
def test_rotation_equivariance(tag):
    t = T(tag)
    g = sample_near_regular(t, 0.1, 2)
    a = 1.7 * np.exp(0.4j)
    q = quiver_for(t)
    z1 = charge_from_hgon(g.transform(a), q).label_values(q)
    z2 = charge_from_hgon(g, q).label_values(q)
    assert np.abs(z1 - a * z2).max() < 1e-12
    assert np.abs(charge_from_hgon(g.translate(3 - 2j), q).label_values(q) - z2).max() < 1e-12


def test_e6_far_end_choices_reflect():
    # choosing vertex 1 as the far end swaps the far-end and mid-end roles
    t = T("E6")
    g = sample_near_regular(t, 0.1, 6)
    g1 = HGon(t, g.vertices, None, g.tol, 1)
    q6, q1 = quiver_for(t), quiver_for(t, 1)
    a = charge_from_hgon(g, q6).label_values(q6)
    b = charge_from_hgon(g1, q1).label_values(q1)
    assert np.abs(a[5] - b[0]).max() < 1e-13


@pytest.mark.parametrize("tag", ["B3", "B4", "C3", "C4", "F4", "G2", "B2"])
def test_folded_charge_is_iota_invariant(tag):
    t = T(tag)
    q = quiver_for(t)
    for seed in range(5):
        Z = charge_from_hgon(sample_near_regular(t, 0.2, seed), q)
        S = symmetrized(Z, q, t)
        assert np.abs(S.table - Z.table).max() < 1e-13


def test_generic_source_charge_is_not_iota_invariant():
    t = T("F4")
    q = quiver_for(t)
    Z = charge_from_hgon(sample_near_regular(T("E6"), 0.2, 1), q)
    assert np.abs(symmetrized(Z, q, t).table - Z.table).max() > 1e-3


def test_iota_action_is_quiver_automorphism():
    for tag in ("B3", "C3", "F4", "G2"):
        t = T(tag)
        q = quiver_for(t)
        perm, off = iota_action(t, q)
        assert perm == folding_data(t).iota
        fixed = [v for v, w in perm.items() if v == w]
        assert all(off[v] == 0 for v in fixed[:1])
    with pytest.raises(ValueError):
        iota_action(T("E6"), quiver_for(T("E6")))


def test_charge_serialization():
    Z = charge_from_hgon(sample_near_regular(T("F4"), 0.1, 2))
    doc = write_charge(Z)
    assert doc["type"] == "F4"
    back = read_charge(doc)
    assert back.folded_from == T("F4") and np.array_equal(back.values, Z.values)
    again = loads_charge(dumps_charge(Z))
    assert np.array_equal(again.values, Z.values)


def test_evaluate_on_dimension_vectors():
    t = T("D5")
    q = quiver_for(t)
    Z = charge_from_hgon(sample_near_regular(t, 0.1, 0), q)
    tab = Z.label_values(q)
    for i in range(1, 6):
        for j in range(q.h):
            assert abs(Z.evaluate(q, q.dims[i - 1, j]) - tab[i - 1, j]) < 1e-12


def test_charge_value_count():
    with pytest.raises(ValueError):
        CentralCharge(T("A3"), [1, 2])
