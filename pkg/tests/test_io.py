import pytest
from hypothesis import given

from conftest import k5_instance, one_planar_instances
from onepmaxcut.graph import WeightedGraph
from onepmaxcut.instance_io import (
    InstanceParseError,
    parse_instance,
    read_instance,
    serialize_instance,
    write_instance,
)
from onepmaxcut.onep import OnePlanarInstance

K5_TEXT = """c K5 drawn with one crossing
p onep 5 10 1
e 1 2 1
e 1 3 1
e 1 4 1
e 1 5 1
e 2 3 1
e 2 4 1
e 2 5 1
e 3 4 1
e 3 5 1
e 4 5 1
x 1 3 2 4
"""


def error_line(text):
    with pytest.raises(InstanceParseError) as info:
        parse_instance(text)
    return info.value.line


class TestParse:
    def test_k2(self):
        inst = parse_instance("p onep 2 1 0\ne 1 2 5\n")
        assert inst.graph.edges == {(1, 2): 5} and inst.k == 0

    def test_k5(self):
        assert parse_instance(K5_TEXT) == k5_instance()

    def test_isolated_nodes_kept(self):
        assert parse_instance("p onep 4 1 0\ne 1 2 -3\n").graph.nodes == {1, 2, 3, 4}

    def test_header_only(self):
        inst = parse_instance("p onep 0 0 0\n")
        assert inst.graph.number_of_nodes() == 0 and inst.k == 0

    def test_blank_lines_and_comments(self):
        assert parse_instance("c hi\n\np onep 2 1 0\nc mid\ne 2 1 4\n").graph.edges == {(1, 2): 4}

    def test_undeclared_edge_in_crossing(self):
        assert error_line("p onep 4 2 1\ne 1 3 1\ne 2 3 1\nx 1 3 2 4\n") == 4

    def test_missing_header(self):
        assert error_line("c only a comment\ne 1 2 3\n") == 2

    def test_malformed_header(self):
        assert error_line("p graph 2 1 0\n") == 1
        assert error_line("p onep 2 1\n") == 1
        assert error_line("p onep 2 x 0\n") == 1

    def test_duplicate_header(self):
        assert error_line("p onep 2 1 0\np onep 2 1 0\n") == 2

    def test_duplicate_edge(self):
        assert error_line("p onep 3 2 0\ne 1 2 1\ne 2 1 1\n") == 3

    def test_self_loop(self):
        assert error_line("p onep 3 1 0\ne 2 2 1\n") == 2

    def test_node_out_of_range(self):
        assert error_line("p onep 3 1 0\ne 1 4 1\n") == 2
        assert error_line("p onep 3 1 0\ne 0 1 1\n") == 2

    def test_weight_out_of_range(self):
        assert error_line(f"p onep 2 1 0\ne 1 2 {2**63}\n") == 2

    def test_wrong_counts(self):
        assert error_line("p onep 3 2 0\ne 1 2 1\n") == 2
        assert error_line("p onep 3 1 0\ne 1 2 1\ne 2 3 1\n") == 3
        assert error_line("p onep 4 2 1\ne 1 3 1\ne 2 4 1\n") == 3

    def test_edge_after_crossing(self):
        assert error_line("p onep 4 3 1\ne 1 3 1\ne 2 4 1\nx 1 3 2 4\ne 1 2 1\n") == 5

    def test_crossing_repeated_endpoint(self):
        assert error_line("p onep 3 2 1\ne 1 2 1\ne 2 3 1\nx 1 2 2 3\n") == 4

    def test_unknown_tag(self):
        assert error_line("p onep 2 1 0\nv 1 2\n") == 2


class TestSerialize:
    def test_header_only(self):
        assert serialize_instance(OnePlanarInstance(WeightedGraph())) == "p onep 0 0 0\n"

    def test_comments_dropped_on_parse(self):
        text = serialize_instance(k5_instance(), comments=("hello",))
        assert text.startswith("c hello\n")
        assert serialize_instance(parse_instance(text)) == K5_TEXT.split("\n", 1)[1]

    def test_requires_dense_ids(self):
        with pytest.raises(ValueError):
            serialize_instance(OnePlanarInstance(WeightedGraph((), {(1, 3): 1})))

    @given(one_planar_instances(max_nodes=12))
    def test_round_trip(self, inst):
        assert parse_instance(serialize_instance(inst)) == inst.canonical()

    def test_files(self, tmp_path):
        path = tmp_path / "k5.txt"
        write_instance(k5_instance(), path)
        assert read_instance(path) == k5_instance()
