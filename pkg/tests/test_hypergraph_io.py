import pytest

from conftest import planted_bipartite
from gadgetlab.hypergraph import (
    Coloring,
    ExplicitHypergraph,
    dumps_coloring,
    dumps_hgr,
    dumps_vertex_map,
    dumps_vertex_set,
    loads_coloring,
    loads_hgr,
    loads_vertex_map,
    loads_vertex_set,
    read_hypergraph,
    write_hypergraph,
)
from gadgetlab.reduction import build_2k_gadget, completeness_coloring, materialize


def test_hgr_format(l1_toy):
    h = materialize(l1_toy)
    text = dumps_hgr(h)
    assert text.splitlines()[0] == "p hgr 6 9 4"
    assert text.splitlines()[1] == "1 2 4 5"
    again = loads_hgr(text)
    assert again.edges == h.edges and again.uniformity == 4
    assert dumps_hgr(again) == text


def test_hgr_comments_and_errors():
    h = loads_hgr("c a comment\np hgr 3 1 2\nc another\n1 3\n")
    assert h.edges == ((0, 2),)
    with pytest.raises(ValueError):
        loads_hgr("p hgr 3 2 2\n1 3\n")
    with pytest.raises(ValueError):
        loads_hgr("1 2\n")
    with pytest.raises(ValueError):
        loads_hgr("p hgr 2 1 2\n1 3\n")


def test_vertex_map_round_trip(tmp_path, l2_toy):
    h = materialize(l2_toy)
    text = dumps_vertex_map(h.vertices)
    assert loads_vertex_map(text) == h.vertices
    assert dumps_vertex_map(loads_vertex_map(text)) == text
    write_hypergraph(h, tmp_path / "g.hgr", tmp_path / "g.json")
    again = read_hypergraph(tmp_path / "g.hgr", tmp_path / "g.json")
    assert again == h
    assert (tmp_path / "g.hgr").read_text() == dumps_hgr(h)


def test_coloring_and_set_round_trip():
    inst, A = planted_bipartite(n_left=2, n_right=1, L=2, R=2, left_degree=1)
    g = build_2k_gadget(inst, 3, 2)
    col = completeness_coloring(g, A)
    text = dumps_coloring(col)
    assert loads_coloring(text) == col and dumps_coloring(loads_coloring(text)) == text
    S = col.color_class(2)
    stext = dumps_vertex_set(S)
    assert loads_vertex_set(stext) == S and dumps_vertex_set(loads_vertex_set(stext)) == stext
    assert min(loads_vertex_set('{"vertices": [1]}')) == 0


def test_explicit_hypergraph_validation():
    with pytest.raises(ValueError):
        ExplicitHypergraph(2, ((0, 0),))
    with pytest.raises(ValueError):
        ExplicitHypergraph(2, ((0, 2),))
    with pytest.raises(ValueError):
        ExplicitHypergraph(3, ((0, 1, 2),), 2)
    with pytest.raises(ValueError):
        ExplicitHypergraph(3, ((),))
    assert ExplicitHypergraph(3, ((2, 0),)).edges == ((0, 2),)


def test_coloring_validation():
    with pytest.raises(ValueError):
        Coloring((1, 3), 2)
