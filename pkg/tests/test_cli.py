import numpy as np
import pytest

from stgon.cli import main
from stgon.dynkin import DynkinType
from stgon.hgon import HGon, regular, sample_near_regular
from stgon.io import dumps_polygon, loads_polygon, read_polygon, write_polygon

T = DynkinType.parse


@pytest.fixture
def files(tmp_path):
    good = tmp_path / "good.json"
    write_polygon(good, sample_near_regular(T("E6"), 0.05, 0))
    unstable = tmp_path / "unstable.json"
    write_polygon(unstable, sample_near_regular(T("E6"), 0.3, 22))
    g = regular(T("E6"))
    v = g.vertices.copy()
    v[0] += 0.1
    invalid = tmp_path / "invalid.json"
    write_polygon(invalid, HGon(g.type, v))
    trunc = tmp_path / "trunc.json"
    trunc.write_text(good.read_text()[:40])
    d5 = tmp_path / "d5.json"
    write_polygon(d5, regular(T("D5")))
    d4 = tmp_path / "d4.json"
    write_polygon(d4, sample_near_regular(T("D4"), 0.1, 1))
    return dict(good=good, unstable=unstable, invalid=invalid, trunc=trunc, d5=d5, d4=d4,
                missing=tmp_path / "nope.json", dir=tmp_path)


def test_check_exit_codes(files, capsys):
    assert main(["check", str(files["good"])]) == 0
    assert "stable True" in capsys.readouterr().out
    assert main(["check", str(files["unstable"])]) == 1
    assert main(["check", str(files["invalid"])]) == 1
    assert main(["check", str(files["trunc"])]) == 2
    assert main(["check", str(files["missing"])]) == 2


def test_tost_command(files, capsys):
    assert main(["tost", str(files["good"])]) == 0
    out = capsys.readouterr().out
    assert "total True" in out and "gldim" in out
    assert main(["tost", str(files["unstable"])]) == 1
    assert "formula-gldim" in capsys.readouterr().out
    assert main(["tost", str(files["invalid"])]) == 1


def test_render_and_tiling(files, capsys):
    out = files["dir"] / "a.svg"
    assert main(["render", str(files["good"]), "-o", str(out), "--tiling", "1"]) == 0
    assert out.read_text().startswith("<svg")
    assert main(["render", str(files["d5"]), "-o", str(out), "--tiling", "1"]) == 1
    assert "only defined for E6" in capsys.readouterr().out
    assert main(["render", str(files["good"]), "-o", str(out), "--layers", "edges,bogus"]) == 1
    assert main(["render", str(files["d4"]), "-o", str(out), "--far-end-panels"]) == 0
    assert 'id="panel2"' in out.read_text()
    assert main(["render", str(files["good"]), "-o", str(out), "--far-end-panels"]) == 1


def test_gepner_svg_is_deterministic(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["gepner", "E6", "-o", str(tmp_path / "p.json"), "--svg", str(a)]) == 0
    assert main(["gepner", "E6", "-o", str(tmp_path / "q.json"), "--svg", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert (tmp_path / "p.json").read_bytes() == (tmp_path / "q.json").read_bytes()


def test_info_and_bad_type(capsys):
    assert main(["info", "E7"]) == 0
    out = capsys.readouterr().out
    assert "relation_rank: 2" in out and "moduli_dimension: 7" in out
    assert main(["info", "Q3"]) == 2
    assert main([]) == 2


def test_sample_command(capsys):
    assert main(["sample", "D5", "-n", "20", "--mag", "0.1", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert "disagreements 0" in out
    assert main(["sample", "D5", "-n", "0"]) == 2


def test_selftest(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and out.count("PASS") > 20


@pytest.mark.parametrize("tag", ["A3", "D5", "E8", "B3", "G2"])
def test_polygon_files_roundtrip_exactly(tag, tmp_path):
    g = sample_near_regular(T(tag), 0.2, 4)
    back = loads_polygon(dumps_polygon(g))
    assert back.type == g.type and np.array_equal(back.vertices, g.vertices)
    assert (back.punctures is None) == (g.punctures is None)
    if g.punctures is not None:
        assert tuple(back.punctures) == tuple(g.punctures)
    p = tmp_path / "x.json"
    write_polygon(p, g)
    assert dumps_polygon(read_polygon(p)) == p.read_text()


def test_malformed_documents():
    from stgon.io import FileFormatError
    for text in ("[]", '{"type": "E6"}', '{"type": "E6", "vertices": [[1, 2, 3]]}',
                 '{"type": "Z9", "vertices": [[0, 0]]}'):
        with pytest.raises(FileFormatError):
            loads_polygon(text)
