"""Graph file round-trips and strict parse errors."""

import pytest

from fvsbound.errors import ParseError
from fvsbound.fileio import read_graph, write_graph
from fvsbound.graph import Graph
from fvsbound.instances import make_named
from fvsbound.planar import faces_of


def weighted_sample():
    return Graph([0, 1, 2, 3, 9], [(0, 1, 2), (1, 2, 0), (2, 0, 1), (2, 3, 5)])


class TestTextRoundTrip:
    def test_cube_with_rotation(self, tmp_path):
        inst = make_named("cube")
        path = tmp_path / "cube.g"
        write_graph(str(path), inst.graph, rotation=inst.rotation,
                    name="cube", meta={"girth": "4", "phi": "3"})
        gf = read_graph(str(path))
        assert gf.graph == inst.graph
        assert gf.rotation is not None
        assert gf.rotation.order == inst.rotation.order
        assert gf.name == "cube"
        assert gf.meta == {"girth": "4", "phi": "3"}
        faces_of(gf.graph, gf.rotation)

    def test_weights_and_isolated_vertices(self, tmp_path):
        g = weighted_sample()
        path = tmp_path / "w.g"
        write_graph(str(path), g)
        gf = read_graph(str(path))
        assert gf.graph == g
        assert gf.rotation is None

    def test_bytes_stable(self, tmp_path):
        inst = make_named("dodecahedron")
        p1, p2 = tmp_path / "a.g", tmp_path / "b.g"
        write_graph(str(p1), inst.graph, rotation=inst.rotation, name="dodecahedron")
        gf = read_graph(str(p1))
        write_graph(str(p2), gf.graph, rotation=gf.rotation, name=gf.name,
                    meta=gf.meta)
        assert p1.read_bytes() == p2.read_bytes()

    def test_comments_and_blank_lines_ignored(self, tmp_path):
        path = tmp_path / "c.g"
        path.write_text("# a triangle\n\ngraph 1 3\nv 0\nv 1\nv 2\ne 0 1\ne 1 2\ne 0 2\n")
        gf = read_graph(str(path))
        assert gf.graph.m == 3


class TestJsonRoundTrip:
    def test_round_trip(self, tmp_path):
        inst = make_named("prism")
        path = tmp_path / "prism.json"
        write_graph(str(path), inst.graph, rotation=inst.rotation,
                    name="prism", meta={"phi": "2"})
        gf = read_graph(str(path))
        assert gf.graph == inst.graph
        assert gf.rotation.order == inst.rotation.order
        assert gf.name == "prism"
        assert gf.meta == {"phi": "2"}

    def test_bytes_stable(self, tmp_path):
        g = weighted_sample()
        p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
        write_graph(str(p1), g)
        gf = read_graph(str(p1))
        write_graph(str(p2), gf.graph)
        assert p1.read_bytes() == p2.read_bytes()

    def test_rejects_foreign_json(self, tmp_path):
        path = tmp_path / "x.json"
        path.write_text('{"hello": 1}')
        with pytest.raises(ParseError):
            read_graph(str(path))


class TestParseErrors:
    def _expect(self, tmp_path, text, fragment, line_no=None):
        path = tmp_path / "bad.g"
        path.write_text(text)
        with pytest.raises(ParseError) as err:
            read_graph(str(path))
        assert fragment in str(err.value)
        if line_no is not None:
            assert err.value.line_no == line_no

    def test_malformed_edge_line(self, tmp_path):
        self._expect(tmp_path, "graph 1 2\nv 0\nv 1\ne 0 x\n",
                     "edge line", line_no=4)

    def test_missing_header(self, tmp_path):
        self._expect(tmp_path, "v 0\nv 1\ne 0 1\n", "missing 'graph' header")

    def test_duplicate_header(self, tmp_path):
        self._expect(tmp_path, "graph 1 1\ngraph 1 1\nv 0\n",
                     "duplicate header", line_no=2)

    def test_wrong_vertex_count(self, tmp_path):
        self._expect(tmp_path, "graph 1 3\nv 0\nv 1\n", "2 vertices declared")

    def test_undeclared_endpoint(self, tmp_path):
        self._expect(tmp_path, "graph 1 2\nv 0\nv 1\ne 0 7\n", "undeclared vertex")

    def test_negative_weight(self, tmp_path):
        self._expect(tmp_path, "graph 1 2\nv 0\nv 1\ne 0 1 -3\n", "non-negative",
                     line_no=4)

    def test_parallel_edges(self, tmp_path):
        self._expect(tmp_path, "graph 1 2\nv 0\nv 1\ne 0 1\ne 1 0\n", "parallel")

    def test_duplicate_rotation(self, tmp_path):
        self._expect(tmp_path, "graph 1 2\nv 0\nv 1\ne 0 1\nr 0: 1\nr 0: 1\n",
                     "duplicate rotation", line_no=6)

    def test_partial_rotation(self, tmp_path):
        self._expect(tmp_path, "graph 1 2\nv 0\nv 1\ne 0 1\nr 0: 1\n",
                     "rotation missing")

    def test_unknown_record(self, tmp_path):
        self._expect(tmp_path, "graph 1 1\nv 0\nq zzz\n", "unknown record",
                     line_no=3)
