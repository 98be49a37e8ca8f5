"""Graph builders, the coordinate codec, distances, and edge-list I/O."""

import itertools
import random

import numpy as np
import pytest

from tensordim import (
    INF,
    CliqueFactors,
    EdgeListError,
    Graph,
    all_pairs_distances,
    build_bipartite_minus_matching,
    build_clique,
    check_k2_kn_isomorphism,
    diameter,
    parse_edge_list,
    read_edge_list,
    tensor_clique_distances,
    tensor_of_cliques,
    tensor_product,
    write_edge_list,
)

from conftest import oracle_bfs


def test_clique_edges():
    g = build_clique(5)
    assert g.n == 5
    assert g.edge_count() == 10
    assert all(g.has_edge(u, v) for u in range(5) for v in range(5) if u != v)
    assert not g.has_edge(2, 2)


def test_clique_of_one_has_no_edges():
    g = build_clique(1)
    assert g.n == 1 and g.edge_count() == 0


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])


def test_builders_reject_too_few_vertices():
    with pytest.raises(ValueError):
        build_clique(0)
    with pytest.raises(ValueError):
        build_bipartite_minus_matching(1)


def test_bipartite_minus_matching_degrees():
    n = 5
    g = build_bipartite_minus_matching(n)
    assert g.n == 2 * n
    assert g.edge_count() == n * (n - 1)
    for v in range(g.n):
        assert g.degree(v) == n - 1
    # no edge inside a part, and the matching (i, n+i) is absent
    for i in range(n):
        assert not g.has_edge(i, n + i)
        for j in range(i + 1, n):
            assert not g.has_edge(i, j)
            assert not g.has_edge(n + i, n + j)


def test_bipartite_minus_matching_smallest_cases():
    # n=2 leaves exactly the two cross edges
    assert set(build_bipartite_minus_matching(2).edges()) == {(0, 3), (1, 2)}
    assert diameter(build_bipartite_minus_matching(3)) == 3


def test_tensor_product_edge_rule():
    g = build_clique(3)
    h = build_clique(4)
    gh = tensor_product(g, h)
    assert gh.n == 12
    for (u, v), (x, y) in itertools.combinations(
            [(u, v) for u in range(3) for v in range(4)], 2):
        want = g.has_edge(u, x) and h.has_edge(v, y)
        assert gh.has_edge(u * 4 + v, x * 4 + y) == want
    # |E(GxH)| = 2 |E(G)| |E(H)|
    assert gh.edge_count() == 2 * g.edge_count() * h.edge_count()
    assert gh.edge_count() == 36
    assert tensor_of_cliques(CliqueFactors((3, 3))).edge_count() == 18


def test_tensor_degree_is_product_of_factor_degrees():
    # 27 vertices, each of degree 2*2*2
    g = tensor_of_cliques(CliqueFactors((3, 3, 3)))
    assert g.n == 27
    assert all(g.degree(v) == 8 for v in range(g.n))
    gh = tensor_product(build_clique(4), cycle := Graph(5, [(i, (i + 1) % 5) for i in range(5)]))
    for u in range(4):
        for v in range(5):
            assert gh.degree(u * 5 + v) == 3 * cycle.degree(v)


def test_tensor_product_commutes_up_to_coordinate_swap():
    g = build_clique(3)
    h = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 2)])
    gh = tensor_product(g, h)
    hg = tensor_product(h, g)
    swapped = set()
    for a, b in gh.edges():
        u, v = divmod(a, h.n)
        x, y = divmod(b, h.n)
        swapped.add((v * g.n + u, y * g.n + x))
    assert Graph(hg.n, swapped) == hg


def test_coordinate_codec_roundtrip():
    f = CliqueFactors((3, 4, 2))
    seen = set()
    for coords in itertools.product(range(3), range(4), range(2)):
        flat = f.flat_index(coords)
        assert f.coords_of(flat) == coords
        seen.add(flat)
    assert seen == set(range(f.vertex_count))
    table = f.coordinates()
    for flat in range(f.vertex_count):
        assert tuple(int(c) for c in table[flat]) == f.coords_of(flat)


def test_codec_known_values():
    f = CliqueFactors((3, 4))
    assert f.flat_index((2, 3)) == 11
    assert f.coords_of(5) == (1, 1)


def test_codec_rejects_out_of_range():
    f = CliqueFactors((3, 4))
    with pytest.raises(ValueError):
        f.flat_index((3, 0))
    with pytest.raises(ValueError):
        f.flat_index((0, -1))
    with pytest.raises(ValueError):
        f.coords_of(12)


def test_factor_sizes_validated():
    with pytest.raises(ValueError):
        CliqueFactors((1, 3))
    with pytest.raises(ValueError):
        CliqueFactors(())


def test_bfs_distances_match_oracle(rng):
    for _ in range(25):
        n = rng.randrange(2, 10)
        edges = set()
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.4:
                    edges.add((u, v))
        g = Graph(n, edges)
        dist = all_pairs_distances(g)
        ref = oracle_bfs(n, edges)
        for u in range(n):
            for v in range(n):
                want = ref[u][v]
                got = dist.d(u, v)
                assert got == (INF if want == -1 else want)


def test_distance_table_is_a_metric(rng):
    for _ in range(15):
        n = rng.randrange(2, 12)
        edges = {tuple(sorted(rng.sample(range(n), 2)))
                 for _ in range(rng.randrange(1, 3 * n))}
        dist = all_pairs_distances(Graph(n, edges))
        for u in range(n):
            assert dist.d(u, u) == 0
            for v in range(n):
                assert dist.d(u, v) == dist.d(v, u)
        finite = [(u, v) for u in range(n) for v in range(n) if dist.d(u, v) != INF]
        for u, v in finite:
            for w in range(n):
                if dist.d(u, w) != INF and dist.d(w, v) != INF:
                    assert dist.d(u, v) <= dist.d(u, w) + dist.d(w, v)


def test_closed_form_distances_equal_bfs():
    # the shortcut for products with every factor >= 3 must agree with BFS
    for sizes in [(3, 3), (3, 4), (4, 4), (3, 5), (5, 5),
                  (3, 3, 3), (3, 3, 4), (3, 4, 5), (5, 5, 5)]:
        f = CliqueFactors(sizes)
        fast = tensor_clique_distances(f)
        slow = all_pairs_distances(tensor_of_cliques(f))
        n = f.vertex_count
        a = np.array([[fast.d(u, v) for v in range(n)] for u in range(n)])
        b = np.array([[slow.d(u, v) for v in range(n)] for u in range(n)])
        assert np.array_equal(a, b)


def test_distance_rule_for_all_big_factors():
    # distinct vertices: adjacent iff they differ in every coordinate,
    # otherwise at distance two
    f = CliqueFactors((3, 4, 5))
    dist = tensor_clique_distances(f)
    rng = random.Random(7)
    for _ in range(300):
        u = rng.randrange(f.vertex_count)
        v = rng.randrange(f.vertex_count)
        cu, cv = f.coords_of(u), f.coords_of(v)
        if u == v:
            want = 0
        elif all(a != b for a, b in zip(cu, cv)):
            want = 1
        else:
            want = 2
        assert dist.d(u, v) == want


def test_diameter_cases():
    assert diameter(tensor_of_cliques(CliqueFactors((2, 2)))) is None
    for n in range(3, 7):
        assert diameter(tensor_of_cliques(CliqueFactors((2, n)))) == 3
    for sizes in itertools.chain(
            itertools.combinations_with_replacement(range(3, 6), 2),
            itertools.combinations_with_replacement(range(3, 6), 3)):
        assert diameter(tensor_of_cliques(CliqueFactors(sizes))) == 2
    assert diameter(build_clique(4)) == 1
    assert diameter(build_clique(1)) == 0
    assert diameter(Graph(3, [(0, 1)])) is None


def test_distance_pins():
    k4 = all_pairs_distances(build_clique(4))
    for u in range(4):
        for v in range(4):
            assert k4.d(u, v) == (0 if u == v else 1)
    # K_2 x K_3 is a six-cycle: antipodal vertices sit at distance 3
    g = tensor_of_cliques(CliqueFactors((2, 3)))
    assert g.edge_count() == 6
    assert all(g.degree(v) == 2 for v in range(6))
    dist = all_pairs_distances(g)
    assert dist.connected
    assert dist.d(0, 3) == 3  # (0,0) vs (1,0)


def test_disconnected_table_flags():
    dist = all_pairs_distances(Graph(4, [(0, 1), (2, 3)]))
    assert not dist.connected
    assert dist.d(0, 2) == INF
    assert dist.d(0, 1) == 1


def test_two_by_two_product_is_two_disjoint_edges():
    g = tensor_of_cliques(CliqueFactors((2, 2)))
    assert g.edge_count() == 2
    assert not all_pairs_distances(g).connected


def test_k2_kn_matches_bipartite_builder():
    for n in range(2, 9):
        assert check_k2_kn_isomorphism(n)


def test_edge_list_roundtrip(tmp_path, rng):
    for _ in range(10):
        n = rng.randrange(1, 12)
        edges = {tuple(sorted(rng.sample(range(n), 2)))
                 for _ in range(rng.randrange(0, 2 * n))} if n > 1 else set()
        g = Graph(n, edges)
        path = tmp_path / "g.txt"
        write_edge_list(g, path)
        assert read_edge_list(path) == g


def test_edge_list_is_lf_terminated(tmp_path):
    path = tmp_path / "g.txt"
    write_edge_list(build_clique(3), path)
    raw = path.read_bytes()
    assert b"\r" not in raw
    assert raw.endswith(b"\n")


def test_parse_accepts_comments_and_blank_lines():
    text = "# triangle\n3 3\n\n0 1\n1 2\n# done soon\n0 2\n"
    assert parse_edge_list(text) == build_clique(3)


@pytest.mark.parametrize("text,lineno", [
    ("", 1),                                # missing header
    ("x 3\n", 1),                           # bad header token
    ("3\n", 1),                             # header needs two fields
    ("3 1\n0 5\n", 2),                      # endpoint out of range
    ("3 1\n1 1\n", 2),                      # self loop
    ("3 2\n0 1\n0 1\n", 3),                 # duplicate edge
    ("3 1\n0 1 2\n", 2),                    # extra field
    ("3 2\n0 1\n", 3),                      # fewer edges than declared
    ("3 1\n0 1\n1 2\n", 3),                 # more edges than declared
    ("3 1\na b\n", 2),                      # non-integer endpoint
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(EdgeListError) as err:
        parse_edge_list(text)
    assert err.value.line == lineno


def test_graph_equality_ignores_edge_order():
    assert Graph(3, [(0, 1), (1, 2)]) == Graph(3, [(2, 1), (0, 1)])
    assert Graph(3, [(0, 1)]) != Graph(3, [(0, 2)])
    assert Graph(3, []) != Graph(4, [])
