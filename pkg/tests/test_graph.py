import networkx as nx
import numpy as np
import pytest

from twowalk.graph import (
    CATALOG_NAMES,
    Graph,
    GraphError,
    build_arc_table,
    catalog,
    cayley_tree,
    complete_graph,
    format_graph,
    hypercube,
    parse_graph,
    read_graph_file,
    remove_edges,
    write_graph_file,
)

from oracles import path_graph


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_complete_graph():
    g = complete_graph(8)
    assert g.n == 8 and g.num_edges == 28 and set(g.degrees) == {7}
    assert len(build_arc_table(g)) == 56
    loops = complete_graph(8, self_loops=True)
    assert set(loops.degrees) == {8} and len(build_arc_table(loops)) == 64
    k2 = build_arc_table(complete_graph(2))
    assert k2.arcs == ((0, 1), (1, 0))
    assert list(k2.reverse) == [1, 0]
    with pytest.raises(GraphError):
        complete_graph(1)


@pytest.mark.parametrize("dim,edges", [(1, 1), (2, 4), (3, 12), (4, 32)])
def test_hypercube(dim, edges):
    g = hypercube(dim)
    assert g.n == 2**dim and g.num_edges == edges
    assert set(g.degrees) == {dim}
    assert nx.is_isomorphic(to_nx(g), nx.hypercube_graph(dim))


def test_hypercube_rejects_zero():
    with pytest.raises(GraphError):
        hypercube(0)


def test_cayley_tree_unjoined():
    g = cayley_tree(3, 2)
    assert g.n == 10 and g.num_edges == 9
    assert sorted(g.degrees) == [1] * 6 + [3] * 4
    assert nx.is_tree(to_nx(g))
    star = cayley_tree(3, 1)
    assert star.n == 4 and star.degrees == (3, 1, 1, 1)


def test_cayley_tree_joined_is_cubic_and_connected():
    g = cayley_tree(3, 2, joined=True)
    h = to_nx(g)
    assert g.n == 10 and g.num_edges == 15
    assert all(d == 3 for _, d in h.degree())
    assert nx.is_connected(h)
    # leaf cycle in ascending order
    for a, b in [(4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (4, 9)]:
        assert g.has_edge(a, b)


def test_cayley_tree_bad_parameters():
    with pytest.raises(GraphError):
        cayley_tree(1, 2)
    with pytest.raises(GraphError):
        cayley_tree(3, 0)
    with pytest.raises(GraphError):
        cayley_tree(2, 1, joined=True)


def test_modified_k8():
    g = catalog("k8-modified")
    h = to_nx(g)
    assert g.num_edges == 18 and nx.is_connected(h)
    assert g.degrees == (4, 4, 4, 4, 5, 5, 4, 6)
    assert [d for _, d in sorted(h.degree())] == list(g.degrees)


def test_modified_q3():
    g = catalog("q3-modified")
    h = to_nx(g)
    assert g.num_edges == 8 and nx.is_connected(h)
    assert g.degrees == (1, 2, 2, 2, 3, 2, 3, 1)


def test_remove_edges_errors():
    k4 = complete_graph(4)
    with pytest.raises(GraphError, match="not in the graph"):
        remove_edges(hypercube(3), [(0, 7)])
    with pytest.raises(GraphError, match="twice"):
        remove_edges(k4, [(0, 1), (1, 0)])
    with pytest.raises(GraphError, match="isolated"):
        remove_edges(k4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(GraphError, match="disconnects"):
        remove_edges(hypercube(2), [(0, 1), (2, 3)])
    split = remove_edges(hypercube(2), [(0, 1), (2, 3)], require_connected=False)
    assert not split.is_connected()


def test_catalog():
    assert catalog("k8").neighbors == complete_graph(8).neighbors
    assert catalog("3ct2-unjoined").neighbors == cayley_tree(3, 2).neighbors
    assert catalog("3ct2-joined").neighbors == cayley_tree(3, 2, True).neighbors
    assert catalog("q3").neighbors == hypercube(3).neighbors
    with pytest.raises(GraphError, match="unknown"):
        catalog("qq")


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_catalog_invariants(name):
    g = catalog(name)
    arcs = build_arc_table(g)
    assert sum(g.degrees) == 2 * g.num_edges + g.num_self_loops == len(arcs)
    assert np.array_equal(arcs.reverse[arcs.reverse], np.arange(len(arcs)))
    assert list(arcs.arcs) == sorted(arcs.arcs)
    assert g.is_connected()
    for a, (t, h) in enumerate(arcs.arcs):
        assert arcs.arcs[arcs.reverse[a]] == (h, t)
        port = a - arcs.offsets[t]
        assert g.neighbors[t][port] == h


def test_self_loop_arc_is_own_reverse():
    g = Graph.from_edges(2, [(0, 1), (1, 1)])
    arcs = build_arc_table(g)
    loop = arcs.index(1, 1)
    assert arcs.reverse[loop] == loop
    assert g.degrees == (1, 2)


def test_path_arc_order():
    arcs = build_arc_table(path_graph(3))
    assert arcs.arcs == ((0, 1), (1, 0), (1, 2), (2, 1))
    assert list(arcs.reverse) == [1, 0, 3, 2]


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        Graph(2, ((1,), ()))
    with pytest.raises(GraphError):
        Graph(2, ((1,), (1,)))
    with pytest.raises(GraphError):
        Graph(3, ((2, 1), (0,), (0,)))


def test_graph_file_roundtrip(tmp_path):
    g = catalog("q3-modified")
    path = tmp_path / "q3m.graph"
    write_graph_file(g, path)
    text = path.read_text()
    assert "n 8" in text and text.count("\ne ") == 8
    back = read_graph_file(path)
    assert back.neighbors == g.neighbors


def test_parse_graph_comments_and_self_loops():
    g = parse_graph("# demo\nn 3\ne 0 1  # edge\ne 1 2\ne 2 2\n")
    assert g.neighbors == ((1,), (0, 2), (1, 2))
    assert format_graph(g).endswith("e 0 1\ne 1 2\ne 2 2\n")


@pytest.mark.parametrize("text", ["e 0 1\n", "n 2\ne 0\n", "n 2\ne 0 5\n", "n 2\ne 0 1\ne 1 0\n", "n x\n", "n 3\ne 0 1\n"])
def test_parse_graph_errors(text):
    with pytest.raises(GraphError):
        parse_graph(text)
