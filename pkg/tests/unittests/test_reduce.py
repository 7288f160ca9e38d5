import unittest
from collections import deque
from itertools import combinations

from plane_draw.errors import PreconditionError, SizeError, StateError
from plane_draw.generators import cycle, k4, octahedron, random_triangulation, stacked, triangle, wheel
from plane_draw.augment import triangulate
from plane_draw.reduce import (STRATEGIES, contract, expand, reduce, select_edge_footnote,
                               select_edge_main, separating_triangles)


def brute_force_separating(graph):
    '''Every 3-cycle that is not a face and whose removal disconnects the graph.'''
    facial = {frozenset(face.vertices) for face in graph.faces()}
    found = set()
    for a, b, c in combinations(graph.vertices, 3):
        if not (graph.has_edge(a, b) and graph.has_edge(b, c) and graph.has_edge(a, c)):
            continue
        if frozenset((a, b, c)) in facial:
            continue
        rest = [v for v in graph.vertices if v not in (a, b, c)]
        seen = {rest[0]}
        queue = deque([rest[0]])
        while queue:
            v = queue.popleft()
            for u in graph.rotation(v):
                if u not in seen and u not in (a, b, c):
                    seen.add(u)
                    queue.append(u)
        if len(seen) < len(rest):
            found.add((a, b, c))
    return found


class TestSeparatingTriangles(unittest.TestCase):

    def test_k4_has_none(self):
        self.assertEqual(separating_triangles(k4()), [])

    def test_octahedron_has_none(self):
        self.assertEqual(separating_triangles(octahedron()), [])

    def test_stacked_nesting(self):
        '''Each stacked level adds a triangle whose interior shrinks by one.'''
        graph = stacked(3)
        triangles = separating_triangles(graph)
        self.assertEqual(len(triangles), 3)
        self.assertEqual(sorted(len(t.interior) for t in triangles), [1, 2, 3])

    def test_matches_brute_force(self):
        for seed in range(10):
            graph = random_triangulation(14, seed=seed, flips=seed * 3)
            found = {t.cycle for t in separating_triangles(graph)}
            self.assertEqual(found, brute_force_separating(graph))

    def test_interior_is_the_side_without_the_outer_face(self):
        graph = random_triangulation(16, seed=2)
        outer = set(graph.outer_face.vertices)
        for triangle_ in separating_triangles(graph):
            self.assertFalse(triangle_.interior & outer)

    def test_requires_triangulation(self):
        with self.assertRaises(StateError):
            separating_triangles(cycle(5))


class TestContract(unittest.TestCase):

    def test_record_shape(self):
        graph = octahedron()
        contracted, record = contract(graph, (0, 1))
        self.assertEqual((record.s, record.v, record.w), (0, 0, 1))
        self.assertEqual((record.p, record.q), graph.face_triangle_of((0, 1)))
        self.assertEqual(graph.rotation_from(0, record.p), (record.p, 1, record.q, *record.xs))
        self.assertEqual(graph.rotation_from(1, record.q), (record.q, 0, record.p, *record.ys))
        self.assertEqual(contracted.vertex_count, 5)
        self.assertEqual(contracted.edge_count, 9)
        self.assertTrue(contracted.is_triangulation())

    def test_expand_undoes_contract(self):
        for seed in range(6):
            graph = random_triangulation(12, seed=seed, flips=8)
            for v, w in graph.edges():
                if len(graph.common_neighbours(v, w)) != 2:
                    continue
                if frozenset((v, w)) in {frozenset(d) for d in graph.outer_face.darts}:
                    continue
                contracted, record = contract(graph, (v, w))
                self.assertEqual(contracted.rotation_from(record.s, record.p),
                                 (record.p, *record.ys, record.q, *record.xs))
                self.assertEqual(expand(contracted, record), graph)

    def test_edge_on_separating_triangle(self):
        '''An edge with three common neighbours cannot be contracted.'''
        graph = stacked(1)
        triangle_ = separating_triangles(graph)[0]
        a, b, _ = triangle_.cycle
        with self.assertRaises(PreconditionError):
            contract(graph, (a, b))

    def test_outer_edge(self):
        graph = octahedron()
        with self.assertRaises(PreconditionError):
            contract(graph, tuple(graph.outer_dart))

    def test_too_small(self):
        with self.assertRaises(SizeError):
            contract(triangle(), (0, 1))


class TestReduce(unittest.TestCase):

    def assertReduces(self, graph, strategy):
        sequence = reduce(graph, strategy)
        self.assertEqual(len(sequence.records), graph.vertex_count - 3)
        self.assertEqual(sequence.base.vertex_count, 3)
        self.assertEqual(sequence.base.edge_count, 3)
        self.assertEqual(sequence.rebuild(), graph)
        for step in sequence.replay():
            self.assertTrue(step.is_triangulation())
            self.assertEqual(step.edge_count, 3 * step.vertex_count - 6)

    def test_strategies(self):
        graphs = [k4(), octahedron(), stacked(4), random_triangulation(30, seed=5, flips=20)]
        graphs.append(triangulate(wheel(9)).triangulated)
        for strategy in STRATEGIES:
            for graph in graphs:
                self.assertReduces(graph, strategy)

    def test_triangle_is_its_own_base(self):
        sequence = reduce(triangle())
        self.assertEqual(sequence.records, ())
        self.assertEqual(sequence.base, triangle())

    def test_main_strategy_contracts_inside_the_innermost_triangle(self):
        graph = stacked(3)
        innermost = min(separating_triangles(graph), key=lambda t: len(t.interior))
        v, w = select_edge_main(graph)
        self.assertIn(v, innermost.interior)

    def test_footnote_strategy_picks_smallest_contractible_edge(self):
        graph = octahedron()
        self.assertEqual(select_edge_footnote(graph), (0, 1))

    def test_requires_triangulation(self):
        with self.assertRaises(StateError):
            reduce(cycle(6))


if __name__ == '__main__':
    unittest.main()
