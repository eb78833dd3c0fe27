import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy

from graphforms import (
    CliqueComplex,
    Graph,
    betti,
    coboundary_matrix,
    euler_characteristic,
    matrix_product,
    rational_rank,
)
from graphforms.cohomology import CoboundaryMatrix
from graphforms.errors import CapacityError, DomainError

from conftest import CORPUS

# Independently derived with an exact sympy rank oracle and a union-find
# component count before being written down here.
BETTI_GOLDENS = {
    "K3": (1, 0, 0),
    "K4": (1, 0, 0, 0),
    "K5": (1, 0, 0, 0, 0),
    "C4": (1, 1),
    "C5": (1, 1),
    "C6": (1, 1),
    "petersen": (1, 6),
    "octahedron": (1, 0, 1),
}


def sympy_rank(m):
    if m.shape[0] == 0 or m.shape[1] == 0:
        return 0
    return sympy.Matrix(m.shape[0], m.shape[1], lambda i, j: m.entry(i, j)).rank()


def union_find_components(g):
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in range(g.n)})


def test_single_edge_matrix():
    cx = CliqueComplex.full(Graph(["a", "b"], [(0, 1)]))
    m = coboundary_matrix(cx, 0)
    assert m.shape == (1, 2)
    assert (m.entry(0, 0), m.entry(0, 1)) == (-1, 1)
    assert m.to_triplet_text() == "1 2\n0 0 -1\n0 1 1\n"


def test_triangle_matrix_signs(complexes):
    cx = complexes("K3")
    m = coboundary_matrix(cx, 1)
    # row for (0,1,2) over columns (0,1), (0,2), (1,2)
    assert m.shape == (1, 3)
    assert [m.entry(0, j) for j in range(3)] == [1, -1, 1]


def test_composition_vanishes(complexes):
    for name in CORPUS:
        cx = complexes(name)
        for k in range(cx.top_cardinality - 1):
            a = coboundary_matrix(cx, k + 1)
            b = coboundary_matrix(cx, k)
            prod = matrix_product(a, b)
            assert all(v == 0 for row in prod for v in row), (name, k)


def test_matrix_shapes_track_levels(complexes):
    cx = complexes("octahedron")
    m = coboundary_matrix(cx, 1)
    assert m.shape == (len(cx.level(3)), len(cx.level(2)))
    assert m.degree == 1


def test_matrix_product_shape_mismatch():
    with pytest.raises(DomainError):
        matrix_product(
            CoboundaryMatrix(0, ((0, 1),), ((0,), (1,)), ((-1, 1),)),
            CoboundaryMatrix(0, ((0, 1),), ((0,), (1,)), ((-1, 1),)),
        )


def test_rational_rank_on_known_matrices():
    assert rational_rank([]) == 0
    assert rational_rank([[0, 0], [0, 0]]) == 0
    assert rational_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_rank([[1, 2], [3, 4]]) == 2
    assert (
        rational_rank([[Fraction(1, 2), 1], [1, 2], [0, Fraction(1, 3)]]) == 2
    )


def test_triangle_vertex_matrix_rank(complexes):
    # 3x3 edge-by-vertex matrix of the triangle drops exactly one dimension
    assert rational_rank(coboundary_matrix(complexes("K3"), 0).data) == 2


def test_rational_rank_against_sympy(rng):
    for _ in range(40):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [
            [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(cols)]
            for _ in range(rows)
        ]
        assert rational_rank(m) == sympy.Matrix(m).rank()


def test_betti_matches_goldens(complexes):
    for name, want in BETTI_GOLDENS.items():
        assert betti(complexes(name)) == want, name


def test_betti_matches_rank_oracle(complexes):
    for name in ("C4", "K4", "petersen", "octahedron"):
        cx = complexes(name)
        top = cx.top_cardinality
        sizes = [len(cx.level(k)) for k in range(1, top + 1)]
        ranks = [sympy_rank(coboundary_matrix(cx, k)) for k in range(top)]
        expected = tuple(
            sizes[k] - ranks[k] - (ranks[k - 1] if k else 0) for k in range(top)
        )
        assert betti(cx) == expected, name


def test_b0_counts_components(complexes):
    for name in CORPUS:
        cx = complexes(name)
        assert betti(cx)[0] == union_find_components(cx.graph)
    two = CliqueComplex.full(Graph(["a", "b", "c", "d"], [(0, 1), (2, 3)]))
    assert betti(two) == (2, 0)


def test_euler_characteristic(complexes):
    for name in CORPUS:
        cx = complexes(name)
        b = betti(cx)
        assert euler_characteristic(cx) == sum(
            (-1) ** k * bk for k, bk in enumerate(b)
        ), name
    assert euler_characteristic(complexes("petersen")) == -5
    assert euler_characteristic(complexes("octahedron")) == 2


def test_betti_needs_one_level_of_headroom():
    tight = CliqueComplex.build(Graph.builtin("K4"), max_card=4)
    with pytest.raises(CapacityError):
        betti(tight)
    ok = CliqueComplex.build(Graph.builtin("K4"), max_card=5)
    assert betti(ok) == (1, 0, 0, 0)


def test_betti_invariant_under_relabeling(complexes, rng):
    for name in ("C5", "K4", "octahedron", "petersen"):
        g = Graph.builtin(name)
        perm = list(range(g.n))
        rng.shuffle(perm)
        labels = [None] * g.n
        for i, p in enumerate(perm):
            labels[p] = g.label(i)
        edges = [tuple(sorted((perm[u], perm[v]))) for u, v in g.edges]
        h = Graph(labels, edges)
        assert betti(CliqueComplex.full(h)) == betti(complexes(name)), name


def test_betti_of_trivial_graphs():
    assert betti(CliqueComplex.full(Graph([], []))) == ()
    assert betti(CliqueComplex.full(Graph(["a"], []))) == (1,)


def test_triplet_text_round_trips_by_eye(complexes):
    cx = complexes("C4")
    text = coboundary_matrix(cx, 0).to_triplet_text()
    lines = text.strip().split("\n")
    assert lines[0] == "4 4"
    # one -1/+1 pair per edge
    assert len(lines) == 1 + 2 * 4
    for line in lines[1:]:
        i, j, v = line.split()
        assert v in ("-1", "1")
