import json

import pydot

from modaltheory.emit import class_frame_doc, class_frame_dot, class_frame_json, frame_dot, hasse_edges, to_dot
from modaltheory.frames import KripkeFrame, cluster, powerset_frame, pretree_q
from modaltheory.structures import add_fixed_point, class_frame, submodel_structures, sum_of_cycles


def parse_dot(text):
    graphs = pydot.graph_from_dot_data(text)
    assert graphs and len(graphs) == 1
    return graphs[0]


def node_names(graph):
    return [n.get_name() for n in graph.get_nodes() if n.get_name() not in ("node", "edge", "graph")]


def edge_set(graph):
    return {(int(e.get_source()), int(e.get_destination())) for e in graph.get_edges()}


def test_hasse_of_a_chain():
    chain = KripkeFrame(3, frozenset((a, b) for a in range(3) for b in range(3) if a <= b))
    assert hasse_edges(chain) == [(0, 1), (1, 2)]


def test_hasse_keeps_cluster_edges():
    assert hasse_edges(cluster(2)) == [(0, 1), (1, 0)]


def test_hasse_of_non_transitive_frame_keeps_everything():
    f = KripkeFrame(3, frozenset({(0, 1), (1, 2)}))
    assert hasse_edges(f) == [(0, 1), (1, 2)]


def test_powerset_dot_parses():
    g = parse_dot(frame_dot(powerset_frame(3)))
    assert len(node_names(g)) == 8
    assert len(edge_set(g)) == 12


def test_pretree_dot_parses():
    g = parse_dot(to_dot(pretree_q(2), name="Q 2 \"quoted\""))
    assert len(node_names(g)) == 6


def test_class_frame_dot_and_json():
    s = add_fixed_point(sum_of_cycles([1, 2, 3]), constant="c")
    cf = class_frame(submodel_structures(s), "sub")
    g = parse_dot(class_frame_dot(cf))
    assert len(edge_set(g)) == 12
    doc = json.loads(class_frame_json(cf))
    assert doc == json.loads(json.dumps(class_frame_doc(cf)))
    assert doc["kind"] == "sub" and "orientation" in doc
    assert len(doc["classes"]) == 8 and len(doc["relation"]) == 27
