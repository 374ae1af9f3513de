import random

from clubsplit.cced import grow_two_club, run_2cced, score_vertices
from clubsplit.graph import Graph, is_two_club
from clubsplit.oracle import verify_solution

from conftest import complete, cycle, random_graph


def two_triangles():
    return Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def bridged_triangles():
    # a,b,c = 0,1,2 and d,e,f = 3,4,5, bridge c-d
    return Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


class TestScores:
    def test_c4(self):
        assert score_vertices(cycle(4)) == [(0, 1), (1, 1), (2, 1), (3, 1)]

    def test_triangle(self):
        assert [s for _, s in score_vertices(cycle(3))] == [0, 0, 0]

    def test_pendant_ranks_last(self):
        g = cycle(4)
        g.add_edge(0, 4)
        table = score_vertices(g)
        assert table[-1][0] == 4
        assert len(table) == 5


class TestGrow:
    def test_two_triangles(self):
        g = two_triangles()
        assert grow_two_club(g, 4, set(g.adj)) == {3, 4, 5}

    def test_c5_stops_at_three(self):
        # relabelled 1..5 in the hand simulation; here 0..4
        g = cycle(5)
        assert grow_two_club(g, 0, set(g.adj)) == {0, 1, 2}

    def test_star(self):
        g = Graph(edges=[(0, i) for i in range(1, 5)])
        assert grow_two_club(g, 0, set(g.adj)) == {0, 1, 2, 3, 4}

    def test_respects_unclustered(self):
        g = two_triangles()
        assert grow_two_club(g, 0, {0, 2}) == {0, 2}


class TestRun:
    def test_two_triangles(self):
        c, log = run_2cced(two_triangles())
        assert sorted(map(sorted, c.clusters)) == [[0, 1, 2], [3, 4, 5]]
        assert log == []

    def test_bridged_triangles(self):
        c, log = run_2cced(bridged_triangles())
        assert sorted(map(sorted, c.clusters)) == [[0, 1, 2, 3], [4, 5]]
        assert {frozenset((op.u, op.v)) for op in log} == {frozenset((3, 4)), frozenset((3, 5))}

    def test_c5_is_not_optimal(self):
        # C5 is already a 2-club, but the greedy order pays 2
        c, log = run_2cced(cycle(5))
        assert sorted(map(sorted, c.clusters)) == [[0, 1, 2], [3, 4]]
        assert len(log) == 2

    def test_input_untouched(self):
        g = bridged_triangles()
        before = g.edges()
        run_2cced(g)
        assert g.edges() == before and g.log == []

    def test_disjoint_cliques(self):
        rng = random.Random(3)
        for _ in range(20):
            edges, start, blocks = [], 0, []
            for _ in range(rng.randint(1, 5)):
                k = rng.randint(1, 6)
                blocks.append(set(range(start, start + k)))
                edges += complete(range(start, start + k))
                start += k
            c, log = run_2cced(Graph(range(start), edges))
            assert log == []
            assert sorted(map(sorted, c.clusters)) == sorted(map(sorted, blocks))

    def test_properties_random(self):
        rng = random.Random(11)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 30), rng.uniform(0.05, 0.5))
            c, log = run_2cced(g)
            owner = {x: i for i, cl in enumerate(c.clusters) for x in cl}
            assert sorted(owner) == sorted(g.adj)
            cut = {(u, v) for u, v in g.edges() if owner[u] != owner[v]}
            assert {(min(o.u, o.v), max(o.u, o.v)) for o in log} == cut
            assert len(log) == len(cut)
            assert all(is_two_club(g, cl) for cl in c.clusters)
            assert verify_solution(g, log, c)
