import json
import os
import re
from fractions import Fraction

import singer
from singer import Transformer
from singer.transform import SchemaMismatch

from .errors import GraphFormatError, StructuralError
from .geometry import EXACT, Point, format_point, get_kernel
from .layout import Drawing
from .plane_graph import PlaneGraph

LOGGER = singer.get_logger()

FORMAT_VERSION = 1
RATIONAL = re.compile(r'^-?\d+(/\d+)?$')


def get_abs_path(path):
    return os.path.join(os.path.dirname(os.path.realpath(__file__)), path)


def load_schema(name):
    schema_path = get_abs_path(f'schemas/{name}.json')
    with open(schema_path, encoding='utf-8') as file:
        return json.load(file)


def conform(document, schema_name):
    """Run a document through its schema the way records are transformed before writing."""
    try:
        with Transformer() as transformer:
            return transformer.transform(document, load_schema(schema_name))
    except SchemaMismatch as err:
        raise GraphFormatError(str(err), rule='schema') from err


def _is_integer(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _check_integers(raw):
    '''
    Vertex ids and counts must be JSON integers. The schema transform alone
    would turn 1.9 into 1 and "1" into 1.
    '''
    for key in ('version', 'vertex_count'):
        if key in raw and not _is_integer(raw[key]):
            raise GraphFormatError(f'{key} must be an integer, got {raw[key]!r}', rule='schema')
    rotation = raw.get('rotation')
    if isinstance(rotation, list):
        for v, nbrs in enumerate(rotation):
            if isinstance(nbrs, list):
                for u in nbrs:
                    if not _is_integer(u):
                        raise GraphFormatError(f'rotation of vertex {v}: {u!r} is not a vertex id', rule='schema')
    outer = raw.get('outer_face')
    if isinstance(outer, list):
        for u in outer:
            if not _is_integer(u):
                raise GraphFormatError(f'outer_face: {u!r} is not a vertex id', rule='schema')


def _parse_scalar(literal, where):
    if not isinstance(literal, str) or not RATIONAL.match(literal.strip()):
        raise GraphFormatError(f'{where}: {literal!r} is not a rational literal like "1/3"',
                               rule='coordinates')
    try:
        return Fraction(literal.strip())
    except ZeroDivisionError as err:
        raise GraphFormatError(f'{where}: {literal!r} has a zero denominator', rule='coordinates') from err


def parse_graph(text, require_planar=True):
    '''
    Parse a graph document. Returns (graph, drawing) where drawing is None
    unless the document carries coordinates.
    '''
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise GraphFormatError(err.msg, line=err.lineno, column=err.colno, rule='json') from err
    if not isinstance(raw, dict):
        raise GraphFormatError('a graph document is a JSON object', line=1, column=1, rule='schema')

    _check_integers(raw)
    document = conform(raw, 'graph')
    for key in ('version', 'vertex_count', 'rotation'):
        if key not in document:
            raise GraphFormatError(f'missing required field {key!r}', rule='schema')
    if document['version'] != FORMAT_VERSION:
        raise GraphFormatError(f'unsupported version {document["version"]}', rule='version')

    rotation = document['rotation']
    if len(rotation) != document['vertex_count']:
        raise GraphFormatError(
            f'vertex_count is {document["vertex_count"]} but {len(rotation)} rotation lists are given',
            rule='vertex_count')

    outer = document.get('outer_face')
    if outer is not None and len(outer) != 2:
        raise GraphFormatError('outer_face must be a dart [tail, head]', rule='outer_face')

    graph = PlaneGraph(dict(enumerate(rotation)), tuple(outer) if outer else None,
                       require_planar=require_planar)

    coordinates = document.get('coordinates')
    if coordinates is None:
        return graph, None
    if len(coordinates) != len(rotation):
        raise GraphFormatError('one coordinate pair per vertex is required', rule='coordinates')

    kernel = get_kernel(document.get('kernel') or 'exact', float(document.get('tolerance') or 1e-9))
    coords = {}
    for v, pair in enumerate(coordinates):
        if len(pair) != 2:
            raise GraphFormatError(f'vertex {v}: a coordinate is a pair of literals', rule='coordinates')
        x, y = (_parse_scalar(literal, f'vertex {v}') for literal in pair)
        coords[v] = Point(kernel.coerce(x), kernel.coerce(y))
    return graph, Drawing(coords, kernel, frozenset(graph.edges()))


def emit_graph(graph, drawing=None):
    if graph.vertices != tuple(range(graph.vertex_count)):
        raise StructuralError('vertex_ids', 'graph files need dense vertex ids 0..n-1')
    document = {
        'version': FORMAT_VERSION,
        'vertex_count': graph.vertex_count,
        'rotation': [list(graph.rotation(v)) for v in graph.vertices],
        'outer_face': list(graph.outer_dart) if graph.outer_dart else None,
    }
    if drawing is not None:
        kernel = drawing.kernel
        if kernel.name != EXACT.name:
            document['kernel'] = kernel.name
            document['tolerance'] = kernel.tolerance
        document['coordinates'] = [format_point(drawing.coords[v]) for v in graph.vertices]
    return json.dumps(document, indent=2) + '\n'


def read_graph(path, require_planar=True):
    with open(path, encoding='utf-8') as file:
        return parse_graph(file.read(), require_planar)
