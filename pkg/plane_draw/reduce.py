from collections import deque
from typing import NamedTuple

import singer

from .errors import InvariantViolation, PreconditionError, SizeError
from .plane_graph import Dart, PlaneGraph

LOGGER = singer.get_logger()


class SeparatingTriangle(NamedTuple):
    cycle: tuple
    interior: frozenset


class ContractionRecord(NamedTuple):
    '''
    Contraction of edge vw into s (s keeps the id of v). Before the contraction
    rotation(v) = (p, w, q, *xs) and rotation(w) = (q, v, p, *ys); afterwards
    rotation(s) = (p, *ys, q, *xs).
    '''
    s: int
    v: int
    w: int
    p: int
    q: int
    xs: tuple
    ys: tuple
    outer_dart: Dart


class ReductionSequence(NamedTuple):
    records: tuple
    base: PlaneGraph

    def replay(self):
        """Yield the graphs from the base triangle back up to the input."""
        graph = self.base
        yield graph
        for record in reversed(self.records):
            graph = expand(graph, record)
            yield graph

    def rebuild(self):
        graph = None
        for graph in self.replay():
            pass
        return graph


def _face_triples(graph):
    return {frozenset(face.vertices) for face in graph.faces()}


def _interior(graph, cycle):
    '''
    Flood fill over the faces, never crossing an edge of the cycle. The side
    holding the outer face is the exterior; the other side's vertices, minus
    the cycle, are the interior.
    '''
    faces = graph.faces()
    face_index = {dart: i for i, face in enumerate(faces) for dart in face.darts}
    a, b, c = cycle
    blocked = {frozenset(pair) for pair in ((a, b), (b, c), (c, a))}

    outer = next(i for i, face in enumerate(faces) if face.outer)
    reached = {outer}
    queue = deque([outer])
    while queue:
        i = queue.popleft()
        for dart in faces[i].darts:
            if frozenset(dart) in blocked:
                continue
            j = face_index[dart.reversed()]
            if j not in reached:
                reached.add(j)
                queue.append(j)

    inside = set()
    for i, face in enumerate(faces):
        if i not in reached:
            inside.update(face.vertices)
    exterior = set()
    for i in reached:
        exterior.update(faces[i].vertices)
    return frozenset(inside - set(cycle)), frozenset(exterior - set(cycle))


def three_cycles(graph):
    for v, w in graph.edges():
        for u in sorted(graph.common_neighbours(v, w)):
            if u > w:
                yield (v, w, u)


def separating_triangles(graph):
    graph.require_triangulation()
    facial = _face_triples(graph)
    found = []
    for cycle in three_cycles(graph):
        if frozenset(cycle) in facial:
            continue
        interior, exterior = _interior(graph, cycle)
        if not interior or not exterior:
            raise InvariantViolation(f'non-facial 3-cycle {cycle} does not separate the graph')
        found.append(SeparatingTriangle(cycle, interior))
    return found


def _outer_edges(graph):
    face = graph.outer_face
    return {frozenset(dart) for dart in face.darts}


def _contractible(graph, v, w):
    return len(graph.common_neighbours(v, w)) == 2


def _require_reducible(graph):
    graph.require_triangulation()
    if graph.vertex_count < 4:
        raise SizeError(f'a triangulation with {graph.vertex_count} vertices has no contractible edge')


def select_edge_main(graph):
    """
    An edge at a vertex inside an innermost separating triangle, or the first
    edge off the outer face when there is no separating triangle.
    """
    _require_reducible(graph)
    outer = _outer_edges(graph)
    triangles = separating_triangles(graph)

    if not triangles:
        for v, w in graph.edges():
            if frozenset((v, w)) not in outer:
                return (v, w)
        raise InvariantViolation('every edge lies on the outer face')

    innermost = min(triangles, key=lambda triangle: (len(triangle.interior), triangle.cycle))
    u = min(innermost.interior)
    for nbr in sorted(graph.neighbours(u)):
        if _contractible(graph, u, nbr):
            LOGGER.debug('Innermost separating triangle %s, contracting at interior vertex %s',
                         innermost.cycle, u)
            return (u, nbr)
    raise InvariantViolation(
        f'no edge at vertex {u} inside innermost separating triangle {innermost.cycle} '
        f'has exactly two common neighbours')


def select_edge_footnote(graph):
    """The lexicographically smallest edge off the outer face with two common neighbours."""
    _require_reducible(graph)
    outer = _outer_edges(graph)
    for v, w in graph.edges():
        if frozenset((v, w)) not in outer and _contractible(graph, v, w):
            return (v, w)
    raise InvariantViolation('no edge with exactly two common neighbours')


STRATEGIES = {
    'main': select_edge_main,
    'footnote': select_edge_footnote,
}


def contract(graph, edge):
    _require_reducible(graph)
    v, w = edge
    common = graph.common_neighbours(v, w)
    if len(common) != 2:
        raise PreconditionError(
            f'edge ({v}, {w}) has {len(common)} common neighbours, contraction needs exactly 2')
    if frozenset(edge) in _outer_edges(graph):
        raise PreconditionError(f'edge ({v}, {w}) lies on the outer face')

    p, q = graph.face_triangle_of(Dart(v, w))
    around_v = graph.rotation_from(v, p)
    around_w = graph.rotation_from(w, q)
    if around_v[:3] != (p, w, q) or around_w[:3] != (q, v, p):
        raise InvariantViolation(f'rotations around edge ({v}, {w}) do not match its flanking faces')
    xs, ys = around_v[3:], around_w[3:]

    s = v
    rotation = {}
    for t in graph.vertices:
        if t in (v, w):
            continue
        merged = []
        for u in graph.rotation(t):
            u = s if u in (v, w) else u
            if not (merged and merged[-1] == s and u == s):
                merged.append(u)
        if len(merged) > 1 and merged[0] == s and merged[-1] == s:
            merged.pop()
        rotation[t] = merged
    rotation[s] = [p, *ys, q, *xs]

    tail, head = graph.outer_dart
    outer = Dart(s if tail in (v, w) else tail, s if head in (v, w) else head)
    record = ContractionRecord(s, v, w, p, q, xs, ys, graph.outer_dart)
    return PlaneGraph(rotation, outer), record


def expand(contracted, record):
    """Undo one contraction combinatorially."""
    s, v, w, p, q, xs, ys, outer = record
    rotation = {}
    for t in contracted.vertices:
        if t == s:
            continue
        around = []
        for u in contracted.rotation(t):
            if u != s:
                around.append(u)
            elif t == p:
                around.extend((w, v))
            elif t == q:
                around.extend((v, w))
            elif t in xs:
                around.append(v)
            else:
                around.append(w)
        rotation[t] = around
    rotation[v] = [p, w, q, *xs]
    rotation[w] = [q, v, p, *ys]
    return PlaneGraph(rotation, outer)


def _check_step(graph):
    n = graph.vertex_count
    if graph.edge_count != 3 * n - 6 or not graph.is_triangulation():
        raise InvariantViolation(f'contraction left a graph that is not a triangulation on {n} vertices')


def reduce(graph, strategy='main'):
    graph.require_triangulation()
    if graph.vertex_count < 3:
        raise SizeError(f'cannot reduce a graph with {graph.vertex_count} vertices')
    select = STRATEGIES[strategy]

    LOGGER.info('Reducing triangulation on %s vertices with strategy %s', graph.vertex_count, strategy)
    records = []
    while graph.vertex_count > 3:
        edge = select(graph)
        graph, record = contract(graph, edge)
        _check_step(graph)
        records.append(record)
        LOGGER.debug('Contracted %s into %s, %s vertices left', edge, record.s, graph.vertex_count)

    return ReductionSequence(tuple(records), graph)
