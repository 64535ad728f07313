import pytest

from lefcon import fixtures
from lefcon.errors import WorkspaceError
from lefcon.workspace import parse_workspace, serialize_workspace

MINIMAL = """
# a hollow triangle
complex circle
  simplex a b
  simplex b c
  simplex a c
"""


def test_parse_minimal_complex():
    doc = parse_workspace(MINIMAL)
    circle = doc.complex("circle")
    assert len(circle.simplices_of_dim(0)) == 3
    assert len(circle.simplices_of_dim(1)) == 3


def test_dangling_reference():
    with pytest.raises(WorkspaceError) as err:
        parse_workspace("pair p nowhere -\n")
    assert "nowhere" in str(err.value)


def test_duplicate_name():
    text = MINIMAL + "\ncomplex circle\n  simplex x\n"
    with pytest.raises(WorkspaceError) as err:
        parse_workspace(text)
    assert "duplicate" in str(err.value)


def test_duplicate_map_name():
    text = MINIMAL + """
pair cp circle -

map f cp cp
  send a -> a
  send b -> b
  send c -> c

map f cp cp
  send a -> b
  send b -> a
  send c -> c
"""
    with pytest.raises(WorkspaceError) as err:
        parse_workspace(text)
    assert "duplicate map name 'f'" in str(err.value)


def test_unknown_keyword_line_number():
    with pytest.raises(WorkspaceError) as err:
        parse_workspace("complex c\n  simplex a\nbogus stuff\n")
    assert "line 3" in str(err.value)


def test_invalid_simplicial_map_rejected():
    text = """
complex hexagon
  simplex 0 1
  simplex 1 2
  simplex 2 3
  simplex 3 4
  simplex 4 5
  simplex 0 5

pair hexp hexagon -

map skip hexp hexp
  send 0 -> 0
  send 1 -> 2
  send 2 -> 4
  send 3 -> 0
  send 4 -> 2
  send 5 -> 4
"""
    with pytest.raises(WorkspaceError):
        parse_workspace(text)


def test_fixture_workspace_round_trip():
    text = fixtures.workspace_text()
    doc = parse_workspace(text)
    out = serialize_workspace(doc)
    assert out == text
    assert parse_workspace(out) == doc


def test_fixture_workspace_contents():
    doc = parse_workspace(fixtures.workspace_text())
    assert doc.complex("torus9").dimension == 2
    assert doc.pair("mobiusp").sub.dimension == 1
    sys_obj = doc.system("arm1")
    assert sys_obj.dimension == 1
    doubling = doc.system("doubling")
    assert doubling.refined


def test_shipped_file_matches_generator(tmp_path):
    import pathlib

    shipped = pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "standard.lef"
    assert shipped.read_text(encoding="utf-8") == fixtures.workspace_text()
