import json

import pytest

from surgtorsion.exceptions import HypothesisError, InputParseError
from surgtorsion.groups import builtin_group
from surgtorsion.matrix import Matrix
from surgtorsion.record_loader import RecordLoader


def test_bundled_fixtures(loader):
    for name in ("trefoil.json", "figure8.json", "kt.json", "conway.json"):
        marked = loader.load_knot(name)
        assert marked.meridian in marked.generators
        assert marked.presentation.abelian_invariants() == [0]
    assert loader.load_knot("trefoil.json").name == "trefoil"


def test_presentation_knot_file(loader):
    unknot = loader.load_knot("unknot.json")
    assert unknot.generators == ("a",)
    assert unknot.relators == ()
    assert unknot.orientation == 1


def test_mirror_reverses_the_longitude(loader):
    plain = loader.load_knot("trefoil.json")
    mirrored = RecordLoader(mirror=True).load_knot("trefoil.json")
    assert mirrored.orientation == -1
    assert mirrored.generators == plain.generators


def test_malformed_knot_files(tmp_path, loader):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputParseError):
        loader.load_knot(str(bad))
    bad.write_text(json.dumps({"name": "x"}))
    with pytest.raises(InputParseError):
        loader.load_knot(str(bad))
    bad.write_text(json.dumps({"presentation": {"generators": ["a"], "meridian": "b"}}))
    with pytest.raises(InputParseError):
        loader.load_knot(str(bad))
    with pytest.raises(InputParseError):
        loader.load_knot(str(tmp_path / "missing.json"))


def test_text_presentation_in_knot_record(loader, tmp_path):
    path = tmp_path / "t23.json"
    path.write_text(json.dumps({
        "name": "T(2,3)",
        "presentation": "generators: x, y\nrelators: x y x y^-1 x^-1 y^-1",
        "meridian": "x",
        "longitude": "y x x y x^-4",
    }))
    marked = loader.load_knot(str(path))
    assert marked.generators == ("x", "y")
    assert marked.meridian == "x"
    assert len(marked.relators) == 1
    assert marked.presentation.abelian_invariants() == [0]
    path.write_text(json.dumps({"presentation": "relators: x"}))
    with pytest.raises(InputParseError):
        loader.load_knot(str(path))


def test_builtin_and_file_groups(loader, tmp_path):
    assert loader.load_group("A5").order == 60
    assert loader.load_group("A4.group").order == 12
    path = tmp_path / "c4.group"
    path.write_text("# cyclic of order four\n4\n(1 2 3 4)\n")
    group = loader.load_group(str(path))
    assert group.order == 4
    assert group.name == "c4"


def test_representation_names(loader, a5, trivial):
    assert loader.load_representation("A5-standard", a5).dimension == 4
    assert loader.load_representation("trivial-2", trivial).dimension == 2
    with pytest.raises(InputParseError):
        loader.load_representation("A5-standard", builtin_group("A4"))
    with pytest.raises(InputParseError):
        loader.load_representation("trivial-x", trivial)


def test_representation_file(loader, tmp_path):
    c3 = builtin_group("C3")
    path = tmp_path / "rot.json"
    path.write_text(json.dumps({"dimension": 2, "images": [[[0, -1], [1, -1]]]}))
    rep = loader.load_representation(str(path), c3)
    assert rep.name == "rot"
    assert rep.matrix_idx(0) == Matrix.identity(2)
    path.write_text(json.dumps({"dimension": 3, "images": [[[0, -1], [1, -1]]]}))
    with pytest.raises(InputParseError):
        loader.load_representation(str(path), c3)
    path.write_text(json.dumps({"images": [[[1, 1], [0, 1]]]}))
    with pytest.raises(HypothesisError):
        loader.load_representation(str(path), c3)


def test_params(loader):
    from_file = loader.load_params("m_3_2_-3_-5.params")
    assert from_file == loader.load_params("3/2, -3, -5")
    assert from_file.homology_order() == 6
    with pytest.raises(InputParseError):
        loader.load_params("3/2")
