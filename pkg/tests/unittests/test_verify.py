import unittest
from fractions import Fraction

from plane_draw.errors import GraphArgumentError
from plane_draw.generators import octahedron
from plane_draw.geometry import Point
from plane_draw.layout import Drawing
from plane_draw.plane_graph import PlaneGraph, same_cycle
from plane_draw.verify import realized_outer_walk, realized_rotation, verify, verify_local

from tests.unittests.helpers import load_fixture

OCTAHEDRON_POINTS = {0: (6, 2), 1: (8, 6), 2: (4, 6), 3: (0, 0), 4: (12, 0), 5: (6, 10)}


def drawing_of(points):
    return Drawing({v: Point(Fraction(x), Fraction(y)) for v, (x, y) in points.items()})


class TestVerify(unittest.TestCase):

    def test_k4_passes(self):
        graph, drawing = load_fixture('k4.json')
        report = verify(graph, drawing)
        self.assertTrue(report.passed, report.violations)
        self.assertEqual(report.violations, ())

    def test_octahedron_passes(self):
        report = verify(octahedron(), drawing_of(OCTAHEDRON_POINTS))
        self.assertTrue(report.passed, report.violations)

    def test_reversed_rotation(self):
        '''Reversing the inner vertex of K4 breaks exactly its own rotation.'''
        graph, drawing = load_fixture('k4_reversed.json', require_planar=False)
        report = verify(graph, drawing)
        self.assertFalse(report.passed)
        self.assertEqual(len(report.violations), 1)
        violation = report.violations[0]
        self.assertEqual(violation['kind'], 'rotation_mismatch')
        self.assertEqual(violation['vertex'], 3)
        self.assertEqual(violation['realized'], [0, 2, 1])

    def test_bowtie_crossing(self):
        graph, drawing = load_fixture('bowtie.json')
        report = verify(graph, drawing)
        self.assertEqual(report.count('crossing'), 1)
        self.assertEqual(len(report.violations), 1)
        crossing = report.violations[0]
        self.assertEqual(crossing['edges'], [[0, 1], [2, 3]])
        self.assertEqual(crossing['witness'], ['1/1', '1/1'])

    def test_coincident_vertices(self):
        points = dict(OCTAHEDRON_POINTS)
        points[1] = points[0]
        report = verify(octahedron(), drawing_of(points))
        self.assertEqual(report.count('coincident'), 1)
        self.assertEqual(report.violations[0]['vertices'], [0, 1])
        self.assertEqual(report.count('outer_face_mismatch'), 0)

    def test_vertex_on_edge(self):
        points = dict(OCTAHEDRON_POINTS)
        points[0] = (6, 0)
        report = verify(octahedron(), drawing_of(points))
        self.assertGreaterEqual(report.count('vertex_on_edge'), 1)
        self.assertIn({'kind': 'vertex_on_edge', 'vertex': 0, 'edge': [3, 4]}, report.violations)

    def test_adjacent_edges_overlap(self):
        '''A flattened triangle: both edges at vertex 0 leave it towards +x.'''
        graph, _ = load_fixture('thirds.json')
        drawing = drawing_of({0: (0, 0), 1: (2, 0), 2: (1, 0)})
        report = verify(graph, drawing)
        self.assertGreaterEqual(report.count('overlap'), 1)

    def test_mirrored_drawing_swaps_the_outer_face(self):
        '''A mirror image realizes every rotation backwards.'''
        graph, _ = load_fixture('k4.json')
        drawing = drawing_of({0: (0, 0), 1: (-4, 0), 2: (-2, 3), 3: (-2, 1)})
        report = verify(graph, drawing)
        self.assertEqual(report.count('rotation_mismatch'), 4)
        self.assertEqual(report.count('outer_face_mismatch'), 1)

    def test_inner_face_drawn_outside(self):
        '''Same rotations, but the nominated outer face is an inner triangle.'''
        graph, drawing = load_fixture('k4.json')
        moved = PlaneGraph(graph.rotation_map(), (0, 1))
        report = verify(moved, drawing)
        self.assertEqual([v['kind'] for v in report.violations], ['outer_face_mismatch'])
        self.assertTrue(same_cycle(report.violations[0]['realized'], (0, 2, 1)))

    def test_missing_coordinates(self):
        graph, drawing = load_fixture('k4.json')
        coords = dict(drawing.coords)
        del coords[3]
        with self.assertRaises(GraphArgumentError):
            verify(graph, drawing._replace(coords=coords))

    def test_witness_is_in_drawing_coordinates(self):
        '''The bowtie at half size crosses at (1/2, 1/2), whatever scale the checks run at.'''
        graph, drawing = load_fixture('bowtie.json')
        half = drawing._replace(coords={v: p.scaled(Fraction(1, 2)) for v, p in drawing.coords.items()})
        report = verify(graph, half)
        self.assertEqual([v['witness'] for v in report.violations], [['1/2', '1/2']])

    def test_report_summary(self):
        graph, drawing = load_fixture('bowtie.json')
        self.assertEqual(verify(graph, drawing).summary(), '1 violation(s): crossing x1')
        graph, drawing = load_fixture('k4.json')
        self.assertTrue(verify(graph, drawing).summary().startswith('drawing verified'))


class TestRealized(unittest.TestCase):

    def test_realized_rotation(self):
        graph, drawing = load_fixture('k4.json')
        self.assertTrue(same_cycle(realized_rotation(graph, drawing, 3), (0, 2, 1)))
        self.assertTrue(same_cycle(realized_rotation(graph, drawing, 0), (1, 2, 3)))

    def test_realized_outer_walk(self):
        graph, drawing = load_fixture('k4.json')
        self.assertEqual(realized_outer_walk(graph, drawing), (0, 2, 1))


class TestVerifyLocal(unittest.TestCase):

    def test_reports_crossings_at_the_focus(self):
        graph, drawing = load_fixture('bowtie.json')
        self.assertEqual(verify_local(graph, drawing, (0,)).count('crossing'), 1)

    def test_every_vertex_in_focus_matches_the_full_scan(self):
        for name in ('bowtie.json', 'k4.json', 'k4_reversed.json'):
            graph, drawing = load_fixture(name, require_planar=False)
            self.assertEqual(verify_local(graph, drawing, graph.vertices), verify(graph, drawing))

    def test_focus_pairs_against_every_edge(self):
        '''Each bowtie vertex ends one of the two crossing edges.'''
        graph, drawing = load_fixture('bowtie.json')
        for v in graph.vertices:
            self.assertEqual(verify_local(graph, drawing, (v,)).count('crossing'), 1)

    def test_skips_outer_face(self):
        graph, drawing = load_fixture('k4.json')
        moved = PlaneGraph(graph.rotation_map(), (0, 1))
        self.assertTrue(verify_local(moved, drawing, (3,)).passed)


if __name__ == '__main__':
    unittest.main()
