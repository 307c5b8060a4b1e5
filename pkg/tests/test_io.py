import pytest
from hypothesis import given

from rainbowpan.io import (
    InstanceFormatError,
    format_instance,
    parse_instance,
    read_instance,
    write_instance,
)
from .strategies import collections


@given(collections())
def test_format_parse_roundtrip(coll):
    assert parse_instance(format_instance(coll)) == coll


@given(collections())
def test_format_is_canonical_fixed_point(coll):
    text = format_instance(coll)
    assert format_instance(parse_instance(text)) == text


def test_comments_and_blank_lines_ignored():
    text = """
    # a tiny instance
    3 2

    graph 0
    0 1  # an edge
    end
    graph 1
    end
    """
    coll = parse_instance(text)
    assert coll.n == 3 and coll.m == 2
    assert coll.has_edge(0, 0, 1)
    assert coll[1].edge_count() == 0


def test_file_roundtrip(tmp_path):
    coll = parse_instance("2 1\ngraph 0\n0 1\nend\n")
    path = tmp_path / "inst.txt"
    write_instance(path, coll)
    assert read_instance(path) == coll


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "empty"),
        ("3\ngraph 0\nend\n", "header"),
        ("a b\n", "integers"),
        ("3 1\ngraph 1\nend\n", "expected 'graph 0'"),
        ("3 2\ngraph 0\nend\n", "missing block 'graph 1'"),
        ("3 1\ngraph 0\n0 1\n", "not terminated"),
        ("3 1\ngraph 0\n0 1 2\nend\n", "expected edge"),
        ("3 1\ngraph 0\n0 x\nend\n", "integers"),
        ("3 1\ngraph 0\n0 3\nend\n", "graph 0"),
        ("3 1\ngraph 0\n1 1\nend\n", "graph 0"),
        ("3 1\ngraph 0\nend\ngraph 1\nend\n", "trailing"),
    ],
)
def test_malformed_instances_rejected(text, fragment):
    with pytest.raises(InstanceFormatError, match=fragment):
        parse_instance(text)


def test_error_carries_line_number():
    with pytest.raises(InstanceFormatError, match="line 3"):
        parse_instance("3 1\ngraph 0\n0 1 2\nend\n")
