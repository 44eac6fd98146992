import pytest

from tricount import EdgeListParseError, read_edge_list, write_edge_list
from tricount.edgelist import parse_edge_line


def test_parse_line_basics():
    assert parse_edge_line("1 2") == (1, 2)
    assert parse_edge_line("  7\t3 ") == (3, 7)
    assert parse_edge_line("") is None
    assert parse_edge_line("   ") is None
    assert parse_edge_line("# comment") is None
    assert parse_edge_line("  # indented comment") is None


def test_parse_line_errors():
    with pytest.raises(EdgeListParseError):
        parse_edge_line("1 2 3")
    with pytest.raises(EdgeListParseError):
        parse_edge_line("a b")
    with pytest.raises(EdgeListParseError):
        parse_edge_line("4 4")
    with pytest.raises(EdgeListParseError):
        parse_edge_line("-1 2")


def test_read_reports_line_numbers(tmp_path):
    f = tmp_path / "bad.el"
    f.write_text("# header\n0 1\n1 2\noops\n")
    with pytest.raises(EdgeListParseError) as ei:
        read_edge_list(f)
    assert ei.value.lineno == 4
    assert "line 4" in str(ei.value)


def test_read_rejects_duplicates(tmp_path):
    f = tmp_path / "dup.el"
    f.write_text("0 1\n2 3\n1 0\n")
    with pytest.raises(EdgeListParseError) as ei:
        read_edge_list(f)
    assert "duplicate" in str(ei.value)
    assert ei.value.lineno == 3


def test_round_trip(tmp_path):
    edges = [(0, 1), (1, 2), (0, 5), (3, 4)]
    f = tmp_path / "g.el"
    n = write_edge_list(f, edges, comment="toy graph\nfour edges")
    assert n == 4
    text = f.read_text()
    assert text.startswith("# toy graph\n# four edges\n")
    assert read_edge_list(f) == edges


def test_read_skips_comments_and_blanks(tmp_path):
    f = tmp_path / "g.el"
    f.write_text("# top\n\n0 1\n\n# middle\n1 2\n")
    assert read_edge_list(f) == [(0, 1), (1, 2)]
