from typing import NamedTuple

import singer

from .errors import InvariantViolation, SizeError
from .plane_graph import PlaneGraph

LOGGER = singer.get_logger()


class Augmentation(NamedTuple):
    triangulated: PlaneGraph
    added_edges: tuple
    original: PlaneGraph


def _insert_after(sequence, anchor, value):
    i = sequence.index(anchor)
    sequence.insert(i + 1, value)


def _chord_candidates(walk):
    """
    Distance-two corner pairs of a face walk, as walk indices i meaning the
    chord walk[i] -- walk[i + 2]. The fan chord from the lowest-id apex comes
    first, then the zig-zag chord across that apex, then every other pair.
    """
    m = len(walk)
    apex = walk.index(min(walk))
    fan = apex
    zigzag = (apex - 1) % m
    yield fan
    yield zigzag
    for i in range(m):
        if i not in (fan, zigzag):
            yield i


def _find_chord(graph, walk):
    m = len(walk)
    for i in _chord_candidates(walk):
        a, c = walk[i], walk[(i + 2) % m]
        if a != c and not graph.has_edge(a, c):
            return i
    raise InvariantViolation(f'no chord can be added inside face {walk}')


def _add_chord(rotation, walk, i):
    '''
    Insert chord walk[i] -- walk[i + 2] into the angles the face occupies at
    both ends, cutting off the triangle walk[i], walk[i + 1], walk[i + 2].
    '''
    m = len(walk)
    before, a, b, c = walk[(i - 1) % m], walk[i], walk[(i + 1) % m], walk[(i + 2) % m]
    _insert_after(rotation[c], b, a)
    _insert_after(rotation[a], before, c)
    return a, c


def triangulate(graph):
    """
    Add edges until every face, the outer one included, is a triangle. The
    outer dart of the input stays the outer dart, so the new outer face is the
    triangle of the old outer face that contains it.
    """
    if graph.vertex_count < 3:
        raise SizeError(f'cannot triangulate a graph with {graph.vertex_count} vertices')

    LOGGER.info('Triangulating graph with %s vertices and %s edges', graph.vertex_count, graph.edge_count)

    current = graph
    added = []
    while True:
        open_face = next((face for face in current.faces() if len(face) > 3), None)
        if open_face is None:
            break
        walk = open_face.vertices
        rotation = current.rotation_map()
        chord = _add_chord(rotation, walk, _find_chord(current, walk))
        # The constructor re-checks simplicity, symmetry and Euler on every step.
        current = PlaneGraph(rotation, current.outer_dart)
        added.append(chord)
        LOGGER.debug('Added chord %s inside face of length %s', chord, len(walk))

    LOGGER.info('Triangulation added %s edges', len(added))
    return Augmentation(current, tuple(added), graph)


def strip(augmentation, drawing):
    """Restrict a drawing of the triangulation to the edges of the original graph."""
    return drawing.restricted_to(augmentation.original.edges())
