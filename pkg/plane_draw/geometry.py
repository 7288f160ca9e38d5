"""
Points, arithmetic kernels and sign predicates.

The exact kernel works over Fractions, so every predicate is decided without
rounding. The floating kernel uses the same formulas over floats and treats a
cross or dot product as zero when it is within `tolerance` times the product
of its operands' sizes. Near-degenerate configurations become reported
degeneracies rather than silent passes, at any drawing scale.
"""
import enum
import functools
import math
from fractions import Fraction
from typing import NamedTuple

from .errors import GeometryDegeneracyError


class Point(NamedTuple):
    x: object
    y: object

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def scaled(self, factor):
        return Point(self.x * factor, self.y * factor)


def dot(a, b):
    return a.x * b.x + a.y * b.y


def cross(a, b):
    return a.x * b.y - a.y * b.x


def norm2(a):
    return dot(a, a)


def left_perpendicular(a):
    return Point(-a.y, a.x)


def _size(a):
    return abs(a.x) + abs(a.y)


class ExactKernel:
    name = 'exact'
    tolerance = 0

    def coerce(self, value):
        return Fraction(value)

    def sign(self, value, size=None):
        return (value > 0) - (value < 0)

    def cross_sign(self, a, b):
        return self.sign(cross(a, b))

    def dot_sign(self, a, b):
        return self.sign(dot(a, b))

    def coincident(self, p, q):
        return p.x == q.x and p.y == q.y

    def largest_power_of_two_within_sqrt(self, bound):
        """Largest 2**k with (2**k)**2 <= bound, for a positive rational bound."""
        bound = Fraction(bound)
        if bound <= 0:
            raise GeometryDegeneracyError(f'no split radius fits under {bound}')
        exponent = (bound.numerator.bit_length() - bound.denominator.bit_length()) // 2
        scale = Fraction(2) ** exponent
        while scale * scale > bound:
            scale /= 2
        while (scale * 2) ** 2 <= bound:
            scale *= 2
        return scale

    def to_dict(self):
        return {'kernel': self.name}

    def __eq__(self, other):
        return isinstance(other, ExactKernel)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return 'ExactKernel()'


class FloatKernel(ExactKernel):
    name = 'float'

    def __init__(self, tolerance=1e-9):
        self.tolerance = tolerance

    def coerce(self, value):
        return float(value)

    def sign(self, value, size=None):
        """Zero inside the band; `size` makes the band relative to the operands."""
        band = self.tolerance if size is None else self.tolerance * size
        if abs(value) <= band:
            return 0
        return 1 if value > 0 else -1

    def cross_sign(self, a, b):
        return self.sign(cross(a, b), _size(a) * _size(b))

    def dot_sign(self, a, b):
        return self.sign(dot(a, b), _size(a) * _size(b))

    def coincident(self, p, q):
        return _size(p - q) <= self.tolerance * max(_size(p), _size(q))

    def largest_power_of_two_within_sqrt(self, bound):
        if bound <= 0:
            raise GeometryDegeneracyError(f'no split radius fits under {bound}')
        scale = 1.0
        while scale * scale > bound:
            scale /= 2
        while (scale * 2) ** 2 <= bound:
            scale *= 2
        return scale

    def to_dict(self):
        return {'kernel': self.name, 'tolerance': self.tolerance}

    def __eq__(self, other):
        return isinstance(other, FloatKernel) and other.tolerance == self.tolerance

    def __hash__(self):
        return hash((self.name, self.tolerance))

    def __repr__(self):
        return f'FloatKernel(tolerance={self.tolerance})'


EXACT = ExactKernel()


def get_kernel(name, tolerance=1e-9):
    if name == 'exact':
        return EXACT
    if name == 'float':
        return FloatKernel(tolerance)
    raise ValueError(f'unknown kernel {name!r}, expected exact or float')


def orientation(a, b, c, kernel=EXACT):
    """+1 if a, b, c turn counterclockwise, -1 if clockwise, 0 if collinear."""
    return kernel.cross_sign(b - a, c - a)


class SegmentRelation(enum.Enum):
    DISJOINT = 'disjoint'
    CROSSING = 'proper crossing'
    TOUCHING = 'touching'
    OVERLAP = 'collinear overlap'


def on_segment(point, a, b, kernel=EXACT):
    """True if `point` lies on the closed segment ab."""
    if orientation(a, b, point, kernel) != 0:
        return False
    return kernel.dot_sign(point - a, point - b) <= 0


def _collinear_relation(a, b, c, d, kernel):
    direction = b - a
    length = norm2(direction)
    tc, td = dot(c - a, direction), dot(d - a, direction)
    low = max(min(tc, td), 0)
    high = min(max(tc, td), length)
    gap = kernel.sign(high - low, length)
    if gap > 0:
        return SegmentRelation.OVERLAP
    if gap == 0:
        return SegmentRelation.TOUCHING
    return SegmentRelation.DISJOINT


def segments_intersect(a, b, c, d, kernel=EXACT):
    d1 = orientation(c, d, a, kernel)
    d2 = orientation(c, d, b, kernel)
    d3 = orientation(a, b, c, kernel)
    d4 = orientation(a, b, d, kernel)

    if d1 == d2 == d3 == d4 == 0:
        if norm2(b - a) >= norm2(d - c):
            return _collinear_relation(a, b, c, d, kernel)
        return _collinear_relation(c, d, a, b, kernel)

    if d1 * d2 < 0 and d3 * d4 < 0:
        return SegmentRelation.CROSSING

    if ((d1 == 0 and on_segment(a, c, d, kernel)) or (d2 == 0 and on_segment(b, c, d, kernel))
            or (d3 == 0 and on_segment(c, a, b, kernel)) or (d4 == 0 and on_segment(d, a, b, kernel))):
        return SegmentRelation.TOUCHING
    return SegmentRelation.DISJOINT


def crossing_point(a, b, c, d):
    """Intersection of the lines ab and cd; the segments must properly cross."""
    ab, cd = b - a, d - c
    t = cross(c - a, cd) / cross(ab, cd)
    return a + ab.scaled(t)


def _half(direction):
    """0 for counterclockwise angles in [0, pi), 1 for [pi, 2 pi)."""
    return 0 if direction.y > 0 or (direction.y == 0 and direction.x > 0) else 1


def compare_angles(first, second):
    """Order two nonzero directions by counterclockwise angle from +x."""
    half_first, half_second = _half(first), _half(second)
    if half_first != half_second:
        return half_first - half_second
    turn = cross(first, second)
    return (turn < 0) - (turn > 0)


angle_key = functools.cmp_to_key(compare_angles)


def in_ccw_sector(direction, start, end, kernel=EXACT):
    """True if `direction` lies strictly inside the counterclockwise sweep from `start` to `end`."""
    opening = kernel.cross_sign(start, end)
    after_start = kernel.cross_sign(start, direction)
    before_end = kernel.cross_sign(direction, end)
    if opening > 0:
        return after_start > 0 and before_end > 0
    if opening < 0:
        return not (after_start <= 0 and before_end <= 0)
    if kernel.dot_sign(start, end) < 0:
        return after_start > 0
    return not (after_start == 0 and kernel.dot_sign(start, direction) > 0)


def format_scalar(value):
    """Exact "num/den" literal in lowest terms; floats convert without rounding."""
    value = Fraction(value)
    return f'{value.numerator}/{value.denominator}'


def format_point(point):
    return [format_scalar(point.x), format_scalar(point.y)]


def integer_coords(coords, kernel=EXACT):
    """
    Exact coordinates multiplied by their common denominator. Split points are
    dyadic, so the scaled integers stay small and predicates avoid Fractions.
    Float coordinates are returned unchanged.
    """
    if kernel.name != EXACT.name:
        return coords
    exact = {v: (Fraction(point.x), Fraction(point.y)) for v, point in coords.items()}
    denominator = math.lcm(*(c.denominator for pair in exact.values() for c in pair))
    return {v: Point(x.numerator * (denominator // x.denominator), y.numerator * (denominator // y.denominator))
            for v, (x, y) in exact.items()}
