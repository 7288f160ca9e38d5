"""
Combinatorial plane graphs given by a rotation system.

Rotation lists are clockwise as seen with x to the right and y up. Faces are
the orbits of the next-dart rule: from dart u->v the walk continues along v->w,
where w is the neighbour immediately after u in the clockwise rotation of v.
With that rule a face lies to the left of each of its darts, so bounded faces
are walked counterclockwise and the outer face clockwise.
"""
from collections import deque
from typing import NamedTuple

import singer
from methodtools import lru_cache

from .errors import GraphArgumentError, StateError, StructuralError

LOGGER = singer.get_logger()


class Dart(NamedTuple):
    tail: int
    head: int

    def reversed(self):
        return Dart(self.head, self.tail)


class Face(NamedTuple):
    darts: tuple
    outer: bool = False

    @property
    def vertices(self):
        return tuple(dart.tail for dart in self.darts)

    def __len__(self):
        return len(self.darts)


def canonical_cycle(sequence):
    """Rotate a cyclic sequence so that it starts at its smallest element."""
    sequence = tuple(sequence)
    if not sequence:
        return sequence
    start = sequence.index(min(sequence))
    return sequence[start:] + sequence[:start]


def same_cycle(first, second):
    """True if `second` is a cyclic shift of `first`. Face walks may repeat vertices."""
    first, second = tuple(first), tuple(second)
    if len(first) != len(second):
        return False
    if not first:
        return True
    doubled = second * 2
    return any(doubled[i:i + len(first)] == first for i in range(len(second)))


def trace_face(rotation, dart):
    """
    Walk the face containing `dart` over a plain rotation mapping
    (vertex -> clockwise neighbour sequence). Returns the vertex walk.
    """
    walk = []
    seen = set()
    current = Dart(*dart)
    while current not in seen:
        seen.add(current)
        walk.append(current.tail)
        around = rotation[current.head]
        current = Dart(current.head, around[(list(around).index(current.tail) + 1) % len(around)])
    return tuple(walk)


class PlaneGraph:
    '''
    Immutable plane graph. `rotation` maps each vertex id to its neighbours in
    clockwise order; `outer_dart` is any dart on the nominated outer face.
    '''

    def __init__(self, rotation, outer_dart=None, *, require_planar=True):
        self._rotation = {int(v): canonical_cycle(int(u) for u in nbrs)
                          for v, nbrs in rotation.items()}
        self._position = {v: {u: i for i, u in enumerate(nbrs)}
                          for v, nbrs in self._rotation.items()}
        self._outer_dart = Dart(*outer_dart) if outer_dart is not None else None
        self._validate(require_planar)

    # -- validation -------------------------------------------------------

    def _validate(self, require_planar):
        if not self._rotation:
            raise StructuralError('vertex_ids', 'a plane graph needs at least one vertex')

        for v, nbrs in self._rotation.items():
            if v < 0:
                raise StructuralError('vertex_ids', f'vertex id {v} is negative')
            if v in nbrs:
                raise StructuralError('no_loops', f'vertex {v} lists itself', pair=(v, v))
            if len(set(nbrs)) != len(nbrs):
                repeated = next(u for u in nbrs if nbrs.count(u) > 1)
                raise StructuralError('simple', f'vertex {v} lists {repeated} twice', pair=(v, repeated))
            for u in nbrs:
                if u not in self._rotation:
                    raise StructuralError('symmetric', f'vertex {v} lists unknown vertex {u}', pair=(v, u))
                if v not in self._position[u]:
                    raise StructuralError(
                        'symmetric', f'{u} is a neighbour of {v} but {v} is not a neighbour of {u}',
                        pair=(v, u))

        if not self._is_connected():
            raise StructuralError('connected', 'the graph is disconnected')

        if self.edge_count == 0:
            if self._outer_dart is not None:
                raise StructuralError('outer_face', 'a graph without edges has no outer dart')
        else:
            if self._outer_dart is None:
                raise StructuralError('outer_face', 'no outer face dart given')
            if not self.has_edge(*self._outer_dart):
                raise StructuralError('outer_face', f'outer dart {tuple(self._outer_dart)} is not an edge',
                                      pair=tuple(self._outer_dart))

        if require_planar:
            face_count = len(self.faces())
            euler = len(self._rotation) - self.edge_count + face_count
            if euler != 2:
                raise StructuralError(
                    'euler', f'|V| - |E| + |F| = {euler}, the rotation system is not planar')

    def _is_connected(self):
        start = next(iter(self._rotation))
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in self._rotation[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == len(self._rotation)

    # -- accessors --------------------------------------------------------

    @property
    def vertices(self):
        return tuple(sorted(self._rotation))

    @property
    def outer_dart(self):
        return self._outer_dart

    @property
    def vertex_count(self):
        return len(self._rotation)

    @property
    def edge_count(self):
        return sum(len(nbrs) for nbrs in self._rotation.values()) // 2

    def rotation(self, v):
        return self._rotation[v]

    def rotation_map(self):
        """A mutable copy of the rotation system, for building modified graphs."""
        return {v: list(nbrs) for v, nbrs in self._rotation.items()}

    def rotation_from(self, v, start):
        """The clockwise rotation of `v` shifted to begin at neighbour `start`."""
        nbrs = self._rotation[v]
        i = self._position[v][start]
        return nbrs[i:] + nbrs[:i]

    def degree(self, v):
        return len(self._rotation[v])

    def neighbours(self, v):
        return frozenset(self._rotation[v])

    def has_edge(self, v, w):
        return v in self._position and w in self._position[v]

    def edges(self):
        return [(v, u) for v in self.vertices for u in sorted(self._rotation[v]) if v < u]

    def darts(self):
        return [Dart(v, u) for v in self.vertices for u in sorted(self._rotation[v])]

    def next_dart(self, dart):
        tail, head = dart
        around = self._rotation[head]
        return Dart(head, around[(self._position[head][tail] + 1) % len(around)])

    # -- faces ------------------------------------------------------------

    @lru_cache()
    def faces(self):
        if self.edge_count == 0:
            return (Face((), outer=True),)

        seen = set()
        walks = []
        for dart in self.darts():
            if dart in seen:
                continue
            walk = []
            current = dart
            while current not in seen:
                seen.add(current)
                walk.append(current)
                current = self.next_dart(current)
            if current != dart:
                raise StructuralError('faces', f'face walk from {tuple(dart)} does not close')
            walks.append(tuple(walk))

        return tuple(Face(walk, outer=self._outer_dart in walk) for walk in walks)

    def face_of(self, dart):
        dart = Dart(*dart)
        if not self.has_edge(*dart):
            raise GraphArgumentError(f'{tuple(dart)} is not a dart of the graph')
        for face in self.faces():
            if dart in face.darts:
                return face
        raise StructuralError('faces', f'dart {tuple(dart)} is on no face')

    @property
    def outer_face(self):
        return next(face for face in self.faces() if face.outer)

    def is_triangulation(self):
        return self.edge_count > 0 and all(len(face) == 3 for face in self.faces())

    def require_triangulation(self):
        if not self.is_triangulation():
            raise StateError('the graph is not a plane triangulation')

    def common_neighbours(self, v, w):
        if not self.has_edge(v, w):
            raise GraphArgumentError(f'({v}, {w}) is not an edge')
        return self.neighbours(v) & self.neighbours(w)

    def face_triangle_of(self, dart):
        """
        Apexes (p, q) of the two triangles on edge vw: p closes the face on the
        left of v->w and q the face on the left of w->v. In rotation(v), p comes
        just before w and q just after it.
        """
        self.require_triangulation()
        v, w = dart
        if not self.has_edge(v, w):
            raise GraphArgumentError(f'({v}, {w}) is not an edge')
        around = self._rotation[v]
        i = self._position[v][w]
        return around[i - 1], around[(i + 1) % len(around)]

    # -- construction helpers ---------------------------------------------

    @classmethod
    def from_faces(cls, faces, outer_dart, **kwargs):
        '''
        Rebuild a rotation system from its face walks. Consecutive darts
        u->v, v->w of a walk say that w follows u clockwise around v.
        '''
        successor = {}
        for face in faces:
            darts = face.darts if isinstance(face, Face) else tuple(Dart(*d) for d in face)
            for i, (u, v) in enumerate(darts):
                _, w = darts[(i + 1) % len(darts)]
                successor.setdefault(v, {})[u] = w

        rotation = {}
        for v, after in successor.items():
            start = min(after)
            cycle = [start]
            while after[cycle[-1]] != start:
                cycle.append(after[cycle[-1]])
            rotation[v] = cycle

        if not rotation and outer_dart is None:
            rotation = {0: ()}
        return cls(rotation, outer_dart, **kwargs)

    # -- comparison -------------------------------------------------------

    def _outer_key(self):
        if self._outer_dart is None:
            return None
        return frozenset(self.outer_face.darts)

    def __eq__(self, other):
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return self._rotation == other._rotation and self._outer_key() == other._outer_key()

    def __hash__(self):
        return hash(tuple(sorted(self._rotation.items())))

    def __repr__(self):
        return f'PlaneGraph(|V|={self.vertex_count}, |E|={self.edge_count}, outer={self._outer_dart})'
