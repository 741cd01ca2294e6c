import re

import numpy as np
import pytest

from relalg import (
    Poset,
    ValidationError,
    build_semigroup,
    generate_strings,
    semigroup_from_dict,
    string_partial_order,
    transitive_closure,
)
from relalg.dot import bipartite_dot, cayley_dot, hasse_dot, multigraph_dot

EDGE = re.compile(r'"([^"]+)" -> "([^"]+)"')


def edges_of(doc):
    return EDGE.findall(doc.text)


class TestHasse:
    def test_chain_reduces_to_two_covers(self):
        po = Poset(["a", "b", "c"], [[1, 1, 1], [0, 1, 1], [0, 0, 1]])
        assert edges_of(hasse_dot(po)) == [("a", "b"), ("b", "c")]

    def test_reduction_closes_back_to_the_order(self, netcs):
        po = string_partial_order(generate_strings(netcs))
        labels = list(po.labels)
        pos = {x: i for i, x in enumerate(labels)}
        m = np.eye(len(labels), dtype=bool)
        for x, y in edges_of(hasse_dot(po)):
            m[pos[x], pos[y]] = True
        assert (transitive_closure(m) == po.matrix).all()

    def test_reduction_closes_back_on_a_diamond(self):
        order = transitive_closure(
            np.array(
                [
                    [1, 1, 1, 0],
                    [0, 1, 0, 1],
                    [0, 0, 1, 1],
                    [0, 0, 0, 1],
                ],
                dtype=bool,
            )
        )
        po = Poset(["w", "x", "y", "z"], order)
        got = edges_of(hasse_dot(po))
        assert sorted(got) == [("w", "x"), ("w", "y"), ("x", "z"), ("y", "z")]

    def test_bottom_element_is_the_unique_source(self, ncc):
        po = string_partial_order(generate_strings(ncc))
        got = edges_of(hasse_dot(po))
        with_incoming = {y for _, y in got}
        sources = set(po.labels) - with_incoming
        assert sources == {"K"}

    def test_deterministic(self, netcs):
        po = string_partial_order(generate_strings(netcs))
        assert hasse_dot(po).text == hasse_dot(po).text

    def test_cycle_rejected(self):
        po = Poset(["a", "b"], [[1, 1], [1, 1]])
        with pytest.raises(ValidationError):
            hasse_dot(po)

    def test_drop_incomparable(self):
        po = Poset(
            ["a", "b", "lone"],
            [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
        )
        kept = hasse_dot(po)
        assert '"lone"' in kept.text
        dropped = hasse_dot(po, drop_incomparable=True)
        assert '"lone"' not in dropped.text
        assert edges_of(dropped) == [("a", "b")]

    def test_renders_via_str(self, ncc):
        po = string_partial_order(generate_strings(ncc))
        doc = hasse_dot(po)
        assert str(doc) == doc.text
        assert doc.text.startswith("digraph hasse {")
        assert doc.text.rstrip().endswith("}")


class TestCayley:
    def test_one_edge_per_element_and_generator(self, netcs):
        sg = build_semigroup(generate_strings(netcs), "symbolic")
        doc = cayley_dot(sg)
        assert len(edges_of(doc)) == sg.order * len(sg.generator_elements())

    def test_edges_follow_the_table(self, ncc):
        sg = build_semigroup(generate_strings(ncc), "symbolic")
        doc = cayley_dot(sg)
        st = sg.st
        for line in doc.text.splitlines():
            m = EDGE.search(line)
            if not m:
                continue
            lab = re.search(r'label="([^"]+)"', line).group(1)
            x, y = m.groups()
            assert sg.table[st.index(x)][st.index(lab)] == y

    def test_generator_legend_present(self, ncc):
        sg = build_semigroup(generate_strings(ncc), "symbolic")
        text = cayley_dot(sg).text
        for letter, _ in sg.generator_elements():
            assert f"// generator {letter}:" in text

    def test_table_without_generators_rejected(self):
        sg = semigroup_from_dict({"st": ["a", "b"], "table": [[1, 2], [2, 1]]})
        with pytest.raises(ValidationError):
            cayley_dot(sg)


class TestNetworkDrawings:
    def test_multigraph_edge_count(self, ncc):
        ties = sum(int(s.cells.sum()) for s in ncc.slices)
        assert len(edges_of(multigraph_dot(ncc))) == ties

    def test_multigraph_ncc_has_seven_arcs(self, ncc):
        assert len(edges_of(multigraph_dot(ncc))) == 7

    def test_bipartite_edge_count(self, g20):
        doc = bipartite_dot(g20)
        links = re.findall(r'"[^"]+" -- "[^"]+"', doc.text)
        assert len(links) == int(g20.incidence.sum()) == 55

    def test_bipartite_node_shapes(self, g20):
        text = bipartite_dot(g20).text
        assert "shape=box" in text and "shape=ellipse" in text
