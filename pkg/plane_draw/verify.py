"""
Brute-force certifier for straight-line plane drawings.

Every pair of vertices and every pair of edges is examined; nothing is pruned,
so the checker stays simple enough to trust as the oracle for the layout code.
"""
from itertools import chain, combinations, product
from typing import NamedTuple

import singer

from .errors import GraphArgumentError
from .geometry import (SegmentRelation, angle_key, crossing_point, format_point, integer_coords,
                       on_segment, orientation, segments_intersect)
from .plane_graph import Dart, canonical_cycle, same_cycle, trace_face

LOGGER = singer.get_logger()


class VerifyReport(NamedTuple):
    passed: bool
    violations: tuple

    def count(self, kind):
        return sum(1 for violation in self.violations if violation['kind'] == kind)

    def to_dict(self):
        return {'passed': self.passed, 'violations': [dict(v) for v in self.violations]}

    def summary(self):
        if self.passed:
            return 'drawing verified: straight-line, crossing-free, embedding realized'
        kinds = sorted({violation['kind'] for violation in self.violations})
        return '{} violation(s): {}'.format(
            len(self.violations), ', '.join(f'{kind} x{self.count(kind)}' for kind in kinds))


def _edge(edge):
    return [edge[0], edge[1]]


def realized_rotation(graph, drawing, v):
    """Neighbours of `v` in clockwise order of their drawn directions, starting nearest +x."""
    origin = drawing.coords[v]
    ordered = sorted(graph.rotation(v), key=lambda u: angle_key(drawing.coords[u] - origin))
    if not ordered:
        return ()
    return (ordered[0],) + tuple(reversed(ordered[1:]))


def realized_outer_walk(graph, drawing):
    '''
    Trace the unbounded face. The lowest-then-leftmost vertex sees the
    unbounded region straight below it, so the unbounded face leaves it towards
    the neighbour with the largest counterclockwise angle.
    '''
    coords = drawing.coords
    start = min(graph.vertices, key=lambda u: (coords[u].y, coords[u].x))
    if graph.degree(start) == 0:
        return ()
    head = max(graph.rotation(start), key=lambda u: angle_key(coords[u] - coords[start]))
    rotation = {u: realized_rotation(graph, drawing, u) for u in graph.vertices}
    return trace_face(rotation, Dart(start, head))


def _point_pairs(vertices, focus):
    if focus is None:
        return combinations(vertices, 2)
    return ((u, v) for u, v in combinations(vertices, 2) if u in focus or v in focus)


def _vertex_edge_pairs(vertices, edges, focus):
    if focus is None:
        return ((u, edge) for u in vertices for edge in edges)
    focus_edges = [edge for edge in edges if edge[0] in focus or edge[1] in focus]
    return chain(((u, edge) for u in sorted(focus) for edge in edges),
                 ((u, edge) for u in vertices if u not in focus for edge in focus_edges))


def _edge_pairs(edges, focus):
    if focus is None:
        return combinations(edges, 2)
    focus_edges = [edge for edge in edges if edge[0] in focus or edge[1] in focus]
    others = [edge for edge in edges if edge[0] not in focus and edge[1] not in focus]
    return chain(combinations(focus_edges, 2), product(focus_edges, others))


def _check_points(vertices, edges, coords, kernel, focus, violations):
    coincident = set()
    for u, v in _point_pairs(vertices, focus):
        if kernel.coincident(coords[u], coords[v]):
            coincident.update((u, v))
            violations.append({'kind': 'coincident', 'vertices': [u, v]})

    for u, (a, b) in _vertex_edge_pairs(vertices, edges, focus):
        if u in (a, b) or {u, a, b} & coincident:
            continue
        if on_segment(coords[u], coords[a], coords[b], kernel):
            violations.append({'kind': 'vertex_on_edge', 'vertex': u, 'edge': [a, b]})
    return coincident


def _check_edges(edges, coords, original, kernel, focus, violations):
    for first, second in _edge_pairs(edges, focus):
        shared = set(first) & set(second)
        if not shared:
            a, b, c, d = (coords[u] for u in first + second)
            relation = segments_intersect(a, b, c, d, kernel)
            if relation is SegmentRelation.CROSSING:
                witness = crossing_point(*(original[u] for u in first + second))
                violations.append({'kind': 'crossing', 'edges': [_edge(first), _edge(second)],
                                   'witness': format_point(witness)})
            elif relation is SegmentRelation.OVERLAP:
                violations.append({'kind': 'overlap', 'edges': [_edge(first), _edge(second)]})
        elif len(shared) == 1:
            apex = shared.pop()
            b = coords[first[0] if first[1] == apex else first[1]]
            c = coords[second[0] if second[1] == apex else second[1]]
            a = coords[apex]
            if orientation(a, b, c, kernel) == 0 and kernel.dot_sign(b - a, c - a) > 0:
                violations.append({'kind': 'overlap', 'edges': [_edge(first), _edge(second)]})


def _check_rotations(graph, drawing, vertices, coincident, violations):
    for v in vertices:
        if v in coincident or graph.neighbours(v) & coincident:
            continue
        realized = realized_rotation(graph, drawing, v)
        if canonical_cycle(realized) != canonical_cycle(graph.rotation(v)):
            violations.append({'kind': 'rotation_mismatch', 'vertex': v,
                               'expected': list(canonical_cycle(graph.rotation(v))),
                               'realized': list(canonical_cycle(realized))})


def _check(graph, drawing, focus=None):
    missing = [v for v in graph.vertices if v not in drawing.coords]
    if missing:
        raise GraphArgumentError(f'vertices without coordinates: {missing}')

    kernel = drawing.kernel
    # Every predicate below is a sign of a polynomial that is homogeneous in
    # the coordinates, so scaling to integers leaves all answers unchanged.
    scaled = drawing._replace(coords=integer_coords(drawing.coords, kernel))
    vertices, edges = graph.vertices, graph.edges()
    violations = []
    coincident = _check_points(vertices, edges, scaled.coords, kernel, focus, violations)
    _check_edges(edges, scaled.coords, drawing.coords, kernel, focus, violations)

    if focus is None:
        around = vertices
    else:
        around = sorted(set(focus).union(*(graph.neighbours(v) for v in focus)))
    _check_rotations(graph, scaled, around, coincident, violations)

    geometric_ok = not any(v['kind'] != 'rotation_mismatch' for v in violations)
    if focus is None and geometric_ok and graph.edge_count > 0:
        expected = graph.outer_face.vertices
        realized = realized_outer_walk(graph, scaled)
        if not same_cycle(realized, expected):
            violations.append({'kind': 'outer_face_mismatch',
                               'expected': list(expected), 'realized': list(realized)})

    return VerifyReport(not violations, tuple(violations))


def verify(graph, drawing):
    report = _check(graph, drawing)
    LOGGER.debug('Verification of %s: %s', graph, report.summary())
    return report


def verify_local(graph, drawing, vertices):
    """Checks (a) through (e) restricted to `vertices`, their edges and their neighbours' rotations."""
    return _check(graph, drawing, frozenset(vertices))
