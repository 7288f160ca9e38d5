"""
Straight-line layout by vertex splitting.

The base triangle is drawn at fixed points and every contraction of the
reduction is undone in reverse: the merged vertex s is replaced by v and w,
placed on a line through s that separates p from q, close enough to s that
none of the edges at v or w can reach another edge.
"""
from typing import NamedTuple

import backoff
import singer

from .augment import strip, triangulate
from .errors import (EpsilonRejected, GeometryDegeneracyError, KernelError,
                     PreconditionError, VerificationFailed)
from .geometry import EXACT, Point, dot, in_ccw_sector, left_perpendicular, norm2
from .reduce import expand, reduce
from .verify import verify, verify_local

LOGGER = singer.get_logger()

MAX_HALVINGS = 64
SNAP_BITS = (4, 8, 16, 32, 64)
BASE_POINTS = ((0, 0), (2, 3), (4, 0))


class Drawing(NamedTuple):
    coords: dict
    kernel: object = EXACT
    edges: frozenset = None
    halvings: tuple = ()

    def restricted_to(self, edges):
        return self._replace(edges=frozenset(tuple(sorted(edge)) for edge in edges))


class Line(NamedTuple):
    origin: Point
    normal: Point
    direction: Point

    def side(self, point, kernel=EXACT):
        return kernel.dot_sign(self.normal, point - self.origin)


def _point(x, y, kernel):
    return Point(kernel.coerce(x), kernel.coerce(y))


def draw_base(base, kernel=EXACT):
    '''
    Place a triangle so that its outer face walk runs clockwise, which makes
    that face the unbounded region.
    '''
    if base.vertex_count != 3 or base.edge_count != 3:
        raise PreconditionError(f'the base case needs a triangle, got {base}')
    walk = base.outer_face.vertices
    coords = {v: _point(x, y, kernel) for v, (x, y) in zip(walk, BASE_POINTS)}
    return Drawing(coords, kernel, frozenset(base.edges()))


def separating_line(s, p, q, kernel=EXACT):
    """
    A line through s with p strictly on its positive side and q strictly on
    its negative side, built without square roots.
    """
    to_p, to_q = p - s, q - s
    if kernel.coincident(p, s) or kernel.coincident(q, s):
        raise GeometryDegeneracyError('p or q coincides with s')

    turn = kernel.cross_sign(to_p, to_q)
    alignment = kernel.dot_sign(to_p, to_q)
    if turn == 0 and alignment > 0:
        raise GeometryDegeneracyError('edges sp and sq leave s in the same direction')

    if turn == 0:
        normal = to_p
    else:
        normal = to_p - to_q
        if not _separates(normal, to_p, to_q, kernel):
            # Acute angle: r * to_p - to_q separates for any r strictly between
            # the two bounds, and the interval is nonempty by Cauchy-Schwarz.
            low = dot(to_p, to_q) / norm2(to_p)
            high = norm2(to_q) / dot(to_p, to_q)
            normal = to_p.scaled((low + high) / 2) - to_q
    if not _separates(normal, to_p, to_q, kernel):
        raise GeometryDegeneracyError(f'no separating line found at {s} for {p} and {q}')
    return Line(s, normal, left_perpendicular(normal))


def _separates(normal, to_p, to_q, kernel):
    return kernel.dot_sign(normal, to_p) > 0 > kernel.dot_sign(normal, to_q)


def _snapped_direction(line, to_p, to_q, kernel):
    """A short integer direction for the line that still separates p from q."""
    direction = line.direction
    largest = max(abs(direction.x), abs(direction.y))
    for bits in SNAP_BITS:
        scale = 2 ** bits / largest
        candidate = Point(kernel.coerce(round(direction.x * scale)), kernel.coerce(round(direction.y * scale)))
        normal = Point(candidate.y, -candidate.x)
        if _separates(normal, to_p, to_q, kernel):
            return candidate
    return direction


def log_backoff(details):
    '''
    Logs a rejected split radius
    '''
    LOGGER.warning('Split of vertex %s rejected, halving the radius (attempt %s)',
                   details['args'][0].record.s, details['tries'])


class _Split:
    def __init__(self, drawing, record, graph, debug):
        self.drawing = drawing
        self.record = record
        self.graph = graph
        self.debug = debug
        self.edges = frozenset(graph.edges())
        self.halvings = 0

        kernel = drawing.kernel
        coords = drawing.coords
        s, p, q = coords[record.s], coords[record.p], coords[record.q]
        self.centre = s
        line = separating_line(s, p, q, kernel)
        direction = _snapped_direction(line, p - s, q - s, kernel)

        # v goes to the side of the line facing the x-neighbours, i.e. inside
        # the clockwise sweep from s->q to s->p.
        if not in_ccw_sector(direction, p - s, q - s, kernel):
            direction = direction.scaled(-1)
        self.direction = direction

        nearest = min(norm2(coords[t] - s) for t in self._old_neighbours())
        self.scale = kernel.largest_power_of_two_within_sqrt(nearest / (4 * norm2(direction)))

    def _old_neighbours(self):
        record = self.record
        return (record.p, record.q) + tuple(record.xs) + tuple(record.ys)

    def attempt(self):
        record = self.record
        offset = self.direction.scaled(self.scale)
        coords = dict(self.drawing.coords)
        coords[record.v] = self.centre + offset
        coords[record.w] = self.centre - offset
        candidate = self.drawing._replace(coords=coords, edges=self.edges)

        if self.debug:
            report = verify(self.graph, candidate)
        else:
            report = verify_local(self.graph, candidate, (record.v, record.w))
        if not report.passed:
            self.scale /= 2
            self.halvings += 1
            raise EpsilonRejected(report.summary())
        return candidate._replace(halvings=self.drawing.halvings + (self.halvings,))


def _check_record(graph, record):
    v, w = record.v, record.w
    if (not graph.has_edge(v, w) or graph.rotation_from(v, record.p) != (record.p, w, record.q, *record.xs)
            or graph.rotation_from(w, record.q) != (record.q, v, record.p, *record.ys)):
        raise PreconditionError(f'contraction record for ({v}, {w}) does not match the expanded graph')


def split_vertex(drawing, record, graph, max_halvings=MAX_HALVINGS, debug=False):
    """Replace the drawn vertex s by v and w on a short segment through s."""
    _check_record(graph, record)
    split = _Split(drawing, record, graph, debug)
    retrying = backoff.on_exception(
        backoff.constant,
        EpsilonRejected,
        max_tries=max_halvings + 1,
        interval=0,
        jitter=None,
        on_backoff=log_backoff,
    )(_Split.attempt)
    try:
        result = retrying(split)
    except EpsilonRejected as err:
        raise KernelError(
            f'splitting vertex {record.s} into ({record.v}, {record.w}) failed after '
            f'{max_halvings} halvings; last rejection: {err}') from err

    LOGGER.debug('Split %s into (%s, %s) after %s halvings', record.s, record.v, record.w, split.halvings)
    return result


def _draw_small(graph, kernel):
    points = ((0, 0), (4, 0))
    coords = {v: _point(x, y, kernel) for v, (x, y) in zip(graph.vertices, points)}
    return Drawing(coords, kernel, frozenset(graph.edges()))


def draw(graph, strategy='main', kernel=EXACT, max_halvings=MAX_HALVINGS, debug=False):
    """Triangulate, reduce to a triangle, draw it, and split back up to the input graph."""
    if graph.vertex_count < 3:
        return _draw_small(graph, kernel)

    augmentation = triangulate(graph)
    sequence = reduce(augmentation.triangulated, strategy)

    LOGGER.info('Expanding %s contractions', len(sequence.records))
    current = sequence.base
    drawing = draw_base(current, kernel)
    for record in reversed(sequence.records):
        current = expand(current, record)
        drawing = split_vertex(drawing, record, current, max_halvings, debug)

    drawing = strip(augmentation, drawing)
    report = verify(graph, drawing)
    if not report.passed:
        raise VerificationFailed(f'final drawing failed verification: {report.summary()}', report)
    LOGGER.info('Drew %s vertices, %s halvings in total', graph.vertex_count, sum(drawing.halvings))
    return drawing
