import numpy as np
import pytest

from stgon.arquiver import build
from stgon.dynkin import DynkinType, far_end_choices
from stgon.rootsys import build_root_system

TYPES = ["A1", "A2", "A5", "D4", "D5", "D7", "E6", "E7", "E8"]


@pytest.mark.parametrize("tag", TYPES)
def test_gabriel_bijection(tag):
    t = DynkinType.parse(tag)
    q = build(t)
    dims = {tuple(int(x) for x in d) for d in q.dims.reshape(-1, t.n)}
    assert dims == set(build_root_system(t).roots)


@pytest.mark.parametrize("tag", TYPES)
def test_meshes_and_orbit_sums_vanish(tag):
    q = build(DynkinType.parse(tag))
    assert q.mesh_residuals().max() == 0
    for i in range(1, q.n + 1):
        assert not q.orbit_class_sum(i).any()


@pytest.mark.parametrize("tag", TYPES)
def test_shift_is_negation_and_an_involution(tag):
    q = build(DynkinType.parse(tag))
    for lab in q.labels():
        s = q.shift(lab)
        assert (q.dim_vector(s) == -q.dim_vector(lab)).all()
        assert q.shift(s) == lab


def test_d_fork_swap_under_shift_depends_on_parity():
    # D_n with n odd swaps the two fork orbits under [1]; n even fixes them
    assert build(DynkinType.parse("D5")).shift_offset[4][0] == 5
    assert build(DynkinType.parse("D7")).shift_offset[6][0] == 7
    assert build(DynkinType.parse("D4")).shift_offset[3][0] == 3
    assert build(DynkinType.parse("D6")).shift_offset[5][0] == 5


def test_e6_and_a_shift_offsets():
    assert build(DynkinType.parse("E6")).shift_offset[6] == (1, 6)
    q = build(DynkinType.parse("A4"))
    assert all(q.shift_offset[i] == (5 - i, i) for i in range(1, 5))


def test_mesh_shape():
    q = build(DynkinType.parse("E6"))
    m = next(m for m in q.meshes if m.start == (4, 0))
    assert m.end == (4, 1)
    assert set(m.middles) == {(2, 1), (3, 1), (5, 1)}


def test_arrow_count():
    t = DynkinType.parse("E7")
    q = build(t)
    assert len(q.arrows) == 2 * (t.n - 1) * t.h


def test_d4_automorphisms():
    q = build(DynkinType.parse("D4"))
    off = q.twisted_automorphism({1: 3, 3: 4, 4: 1, 2: 2}, 2)
    assert off == {2: 0, 1: 5, 3: 0, 4: 1}
    with pytest.raises(ValueError):
        q.twisted_automorphism({1: 2, 2: 1, 3: 3, 4: 4}, 3)


def test_far_end_choices_share_the_quiver():
    t = DynkinType.parse("D4")
    base = build(t).dims
    for c in far_end_choices(t):
        assert (build(t, c).dims == base).all()


def test_named_objects_e6():
    q = build(DynkinType.parse("E6"))
    assert q.named("C", 1) == (1, 0)
    assert q.named("M", 3) == (3, 2)
    assert q.named("B", 12) == (6, 11)


def test_dump_lists_every_label():
    q = build(DynkinType.parse("A2"))
    assert len(q.dump().splitlines()) == 6
