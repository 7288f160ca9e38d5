"""
SVG 1.1 rendering of a drawing. Presentation only: coordinates are converted
to floats, scaled into the viewport and flipped so that y grows downwards.
"""
import drawsvg as draw

DEFAULT_OPTIONS = {
    'width': 600,
    'height': 600,
    'margin': 20,
    'vertex_radius': 4,
}

STYLE = ('.edge{stroke:black;stroke-width:1}.violation{stroke:red;stroke-width:2}'
         '.vertex{fill:white;stroke:black}')


def _viewport_transform(points, options):
    xs = [float(point.x) for point in points]
    ys = [float(point.y) for point in points]
    low_x, high_x, low_y, high_y = min(xs), max(xs), min(ys), max(ys)
    span = max(high_x - low_x, high_y - low_y) or 1.0
    margin = options['margin']
    scale = min(options['width'] - 2 * margin, options['height'] - 2 * margin) / span

    def transform(point):
        return (margin + (float(point.x) - low_x) * scale,
                options['height'] - margin - (float(point.y) - low_y) * scale)
    return transform


def _flagged_edges(report):
    flagged = set()
    if report is None:
        return flagged
    for violation in report.violations:
        for edge in violation.get('edges', ()):
            flagged.add(tuple(sorted(edge)))
        if 'edge' in violation:
            flagged.add(tuple(sorted(violation['edge'])))
    return flagged


def emit_svg(graph, drawing, options=None, report=None):
    '''
    Render vertices as circles and edges as lines. Edges named by a violation
    in `report` get the "violation" class so a failed drawing can be inspected.
    '''
    options = {**DEFAULT_OPTIONS, **(options or {})}
    edges = sorted(drawing.edges) if drawing.edges is not None else graph.edges()
    transform = _viewport_transform([drawing.coords[v] for v in graph.vertices], options)
    flagged = _flagged_edges(report)

    d = draw.Drawing(options['width'], options['height'])
    d.append_css(STYLE)
    for a, b in edges:
        x1, y1 = transform(drawing.coords[a])
        x2, y2 = transform(drawing.coords[b])
        d.append(draw.Line(x1, y1, x2, y2, class_='violation' if (a, b) in flagged else 'edge'))
    for v in graph.vertices:
        cx, cy = transform(drawing.coords[v])
        vertex = draw.Circle(cx, cy, options['vertex_radius'], class_='vertex')
        vertex.append_title(str(v))
        d.append(vertex)
    return d.as_svg() + '\n'
