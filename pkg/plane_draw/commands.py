import json
import sys
from collections import Counter

import singer

from .augment import triangulate
from .errors import GraphFormatError, VerificationFailed
from .generators import GeneratorSpec, gen
from .geometry import get_kernel
from .graph_file import conform, emit_graph, parse_graph, read_graph
from .layout import draw
from .reduce import separating_triangles
from .svg import emit_svg
from .verify import verify

LOGGER = singer.get_logger()


def read_input(path, require_planar=True):
    if path in (None, '-'):
        return parse_graph(sys.stdin.read(), require_planar)
    return read_graph(path, require_planar)


def write_output(path, text):
    if path:
        with open(path, 'w', encoding='utf-8') as file:
            file.write(text)
    else:
        sys.stdout.write(text)


def write_report(args, report):
    if args.json:
        sys.stdout.write(json.dumps(conform(report.to_dict(), 'verify_report'), sort_keys=True) + '\n')
    else:
        sys.stdout.write(report.summary() + '\n')
        for violation in report.violations:
            sys.stdout.write(json.dumps(violation, sort_keys=True) + '\n')


def halving_histogram(drawing):
    """How many splits needed each number of radius halvings."""
    return dict(sorted(Counter(drawing.halvings).items()))


def do_draw(args, config):
    graph, _ = read_input(args.input)
    kernel = get_kernel(args.kernel or config['kernel'], config['tolerance'])
    strategy = args.strategy or config['strategy']
    if args.seed is not None:
        LOGGER.info('Ignoring --seed %s, drawing is deterministic', args.seed)

    try:
        drawing = draw(graph, strategy, kernel, config['max_halvings'], config['debug'])
    except VerificationFailed as err:
        LOGGER.error(str(err))
        write_report(args, err.report)
        return 1
    LOGGER.info('Halvings per split: %s', halving_histogram(drawing))

    write_output(args.output, emit_graph(graph, drawing))
    if args.svg:
        write_output(args.svg, emit_svg(graph, drawing, config['svg']))
    return 0


def do_verify(args, config):
    graph, drawing = read_input(args.input, require_planar=False)
    if drawing is None:
        raise GraphFormatError('the document has no coordinates to verify', rule='coordinates')

    report = verify(graph, drawing)
    write_report(args, report)
    if args.svg:
        if report.passed or args.unverified:
            write_output(args.svg, emit_svg(graph, drawing, config['svg'], report))
        else:
            LOGGER.warning('Not rendering %s, the drawing failed verification (see --unverified)', args.svg)

    if not report.passed:
        LOGGER.error('Verification failed: %s', report.summary())
        return 1
    return 0


def do_triangulate(args, config):
    graph, _ = read_input(args.input)
    augmentation = triangulate(graph)
    LOGGER.info('Added edges: %s', list(augmentation.added_edges))
    write_output(args.output, emit_graph(augmentation.triangulated))
    return 0


def do_gen(args, config):
    spec = GeneratorSpec(args.family, args.size, args.seed, args.flips, args.delete)
    write_output(args.output, emit_graph(gen(spec)))
    return 0


def census(graph):
    counts = {
        'vertices': graph.vertex_count,
        'edges': graph.edge_count,
        'faces': len(graph.faces()),
        'triangulation': graph.is_triangulation(),
        'separating_triangles': None,
    }
    if counts['triangulation']:
        triangles = separating_triangles(graph)
        counts['separating_triangles'] = len(triangles)
        counts['interior_sizes'] = dict(sorted(Counter(len(t.interior) for t in triangles).items()))
    return counts


def do_stats(args, config):
    graph, _ = read_input(args.input)
    counts = census(graph)
    if args.json:
        sys.stdout.write(json.dumps(counts, sort_keys=True) + '\n')
    else:
        for key, value in counts.items():
            sys.stdout.write(f'{key}: {value}\n')
    return 0


COMMANDS = {
    'draw': do_draw,
    'verify': do_verify,
    'triangulate': do_triangulate,
    'gen': do_gen,
    'stats': do_stats,
}
