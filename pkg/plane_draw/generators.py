"""
Instance generators. Seeded families draw only through `random.Random`
(Mersenne Twister MT19937) and its `randrange`, so a seed always yields the
same graph.
"""
import random
from typing import NamedTuple

import singer

from .errors import SizeError, StructuralError
from .plane_graph import Dart, PlaneGraph

LOGGER = singer.get_logger()


class GeneratorSpec(NamedTuple):
    family: str
    size: int = None
    seed: int = 0
    flips: int = 0
    delete: float = 0.0


def triangle():
    return PlaneGraph({0: (1, 2), 1: (2, 0), 2: (0, 1)}, (0, 2))


def k4():
    """Vertex 0 inside the outer triangle 1, 2, 3."""
    return PlaneGraph({0: (1, 3, 2), 1: (0, 2, 3), 2: (0, 3, 1), 3: (0, 1, 2)}, (1, 3))


def octahedron():
    """Inner triangle 0, 1, 2 inside the outer triangle 3, 4, 5."""
    rotation = {
        0: (1, 4, 3, 2),
        1: (0, 2, 5, 4),
        2: (0, 3, 5, 1),
        3: (0, 4, 5, 2),
        4: (0, 1, 5, 3),
        5: (1, 2, 3, 4),
    }
    return PlaneGraph(rotation, (3, 5))


def _require(condition, message):
    if not condition:
        raise SizeError(message)


def wheel(n):
    """Hub 0 and rim 1..n-1, n vertices in total."""
    _require(n is not None and n >= 4, 'a wheel needs at least 4 vertices')
    rim = list(range(1, n))
    rotation = {0: tuple(reversed(rim))}
    for i, v in enumerate(rim):
        rotation[v] = (rim[i - 1], 0, rim[(i + 1) % len(rim)])
    return PlaneGraph(rotation, (2, 1))


def cycle(n):
    _require(n is not None and n >= 3, 'a cycle needs at least 3 vertices')
    rotation = {v: ((v - 1) % n, (v + 1) % n) for v in range(n)}
    return PlaneGraph(rotation, (1, 0))


def star(n):
    """Centre 0 and leaves 1..n-1."""
    _require(n is not None and n >= 2, 'a star needs at least 2 vertices')
    rotation = {0: tuple(range(n - 1, 0, -1))}
    rotation.update({leaf: (0,) for leaf in range(1, n)})
    return PlaneGraph(rotation, (0, 1))


def stack_vertex(graph, face):
    '''
    Insert a new vertex inside a triangular face and join it to the three
    corners. The new vertex takes the next free id.
    '''
    a, b, c = face.vertices
    x = max(graph.vertices) + 1
    rotation = graph.rotation_map()
    for corner, anchor in ((a, c), (b, a), (c, b)):
        around = rotation[corner]
        around.insert(around.index(anchor) + 1, x)
    rotation[x] = [a, c, b]
    return PlaneGraph(rotation, graph.outer_dart)


def stacked(depth):
    '''
    K4 with `depth` vertices stacked one inside the other: each new vertex
    goes into the face at the previous one's smallest neighbour, so every level
    adds one separating triangle.
    '''
    _require(depth is not None and depth >= 0, 'stacking depth must be non-negative')
    graph = k4()
    newest = 0
    for _ in range(depth):
        face = graph.face_of(Dart(newest, min(graph.rotation(newest))))
        graph = stack_vertex(graph, face)
        newest = max(graph.vertices)
    return graph


def flip(graph, edge):
    """Replace edge vw by pq, the diagonal of the two triangles on vw."""
    v, w = edge
    p, q = graph.face_triangle_of(Dart(v, w))
    rotation = graph.rotation_map()
    rotation[v].remove(w)
    rotation[w].remove(v)
    rotation[p].insert(rotation[p].index(w) + 1, q)
    rotation[q].insert(rotation[q].index(v) + 1, p)
    return PlaneGraph(rotation, graph.outer_dart)


def _flip_randomly(graph, rng, attempts):
    for _ in range(attempts):
        edges = graph.edges()
        v, w = edges[rng.randrange(len(edges))]
        outer = {frozenset(dart) for dart in graph.outer_face.darts}
        if frozenset((v, w)) in outer:
            continue
        p, q = graph.face_triangle_of(Dart(v, w))
        if graph.has_edge(p, q):
            continue
        graph = flip(graph, (v, w))
    return graph


def delete_edge(graph, edge):
    a, b = edge
    rotation = {v: [u for u in graph.rotation(v) if (v, u) not in ((a, b), (b, a))]
                for v in graph.vertices}
    outer = graph.outer_dart
    if set(outer) == {a, b}:
        outer = next(dart for dart in graph.outer_face.darts if set(dart) != {a, b})
    return PlaneGraph(rotation, outer)


def _thin(graph, rng, fraction):
    target = round(fraction * graph.edge_count)
    edges = graph.edges()
    order = []
    while edges:
        order.append(edges.pop(rng.randrange(len(edges))))

    removed = 0
    for edge in order:
        if removed >= target:
            break
        try:
            graph = delete_edge(graph, edge)
        except StructuralError as err:
            if err.rule != 'connected':
                raise
            continue
        removed += 1
    LOGGER.debug('Deleted %s of %s requested edges', removed, target)
    return graph


def random_triangulation(n, seed=0, flips=0, delete=0.0):
    '''
    Stack n - 3 vertices into uniformly chosen faces of a triangle, then
    optionally apply random edge flips and delete a fraction of the edges
    while keeping the graph connected.
    '''
    _require(n is not None and n >= 3, 'a random triangulation needs at least 3 vertices')
    _require(0.0 <= delete < 1.0, 'the deleted fraction must lie in [0, 1)')
    rng = random.Random(seed)
    graph = triangle()
    while graph.vertex_count < n:
        faces = graph.faces()
        graph = stack_vertex(graph, faces[rng.randrange(len(faces))])
    if flips:
        graph = _flip_randomly(graph, rng, flips)
    if delete:
        graph = _thin(graph, rng, delete)
    return graph


NAMED = {
    'triangle': lambda spec: triangle(),
    'k4': lambda spec: k4(),
    'octahedron': lambda spec: octahedron(),
    'wheel': lambda spec: wheel(spec.size),
    'cycle': lambda spec: cycle(spec.size),
    'star': lambda spec: star(spec.size),
    'stacked': lambda spec: stacked(spec.size),
    'random': lambda spec: random_triangulation(spec.size, spec.seed, spec.flips, spec.delete),
}


def gen(spec):
    if spec.family not in NAMED:
        raise SizeError(f'unknown family {spec.family!r}, expected one of {sorted(NAMED)}')
    graph = NAMED[spec.family](spec)
    LOGGER.info('Generated %s: %s', spec.family, graph)
    return graph
