import numpy as np
import pytest

from stgon.dynkin import DynkinType, standard_orientation
from stgon.rootsys import (build_root_system, cartan_matrix, char_poly, coxeter_action,
                           coxeter_element, coxeter_transformation, matrix_order, path_matrix)

TYPES = ["A1", "A2", "A4", "D4", "D5", "E6", "E7", "E8"]


@pytest.mark.parametrize("tag", TYPES)
def test_root_count(tag):
    t = DynkinType.parse(tag)
    assert len(build_root_system(t).roots) == t.n * t.h


@pytest.mark.parametrize("tag", TYPES)
def test_roots_have_norm_two(tag):
    rs = build_root_system(DynkinType.parse(tag))
    a = rs.as_array()
    assert set(np.einsum("ij,jk,ik->i", a, rs.cartan, a)) == {2}


def test_e8_highest_root():
    rs = build_root_system(DynkinType.parse("E8"))
    top = max(rs.roots, key=sum)
    # sum of coefficients of the highest root is h - 1
    assert sum(top) == 29


@pytest.mark.parametrize("tag", TYPES)
def test_coxeter_transformation_order_and_no_fixed_vector(tag):
    t = DynkinType.parse(tag)
    o = standard_orientation(t)
    phi = coxeter_transformation(o)
    assert matrix_order(phi) == t.h
    assert round(np.linalg.det(phi - np.eye(t.n))) != 0


def test_char_poly_a2():
    # Coxeter polynomial of A2 is x^2 + x + 1
    assert char_poly(coxeter_element(DynkinType.parse("A2"))) == (1, 1, 1)


def test_path_matrix_column_is_projective_dimension():
    o = standard_orientation(DynkinType.parse("A3"))
    c = path_matrix(o)
    # arrows i+1 -> i: P_3 reaches every vertex
    assert list(c[:, 2]) == [1, 1, 1]
    assert list(c[:, 0]) == [1, 0, 0]


def test_cartan_e6_is_positive_definite():
    a = cartan_matrix(DynkinType.parse("E6"))
    assert np.all(np.linalg.eigvalsh(a) > 0)
    assert round(np.linalg.det(a)) == 3


@pytest.mark.parametrize("tag", ["A3", "D5", "E6", "E8"])
def test_plane_projection_rotates_by_zeta(tag):
    t = DynkinType.parse(tag)
    c = coxeter_action(t)
    zeta = np.exp(2j * np.pi / t.h)
    for r in build_root_system(t).as_array()[:10]:
        assert abs(c.project(c.w @ r) - zeta * c.project(r)) < 1e-10
