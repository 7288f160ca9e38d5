import os

from plane_draw.graph_file import parse_graph


def fixture_path(name):
    return os.path.join(os.path.dirname(os.path.dirname(os.path.realpath(__file__))), 'fixtures', name)


def load_fixture(name, require_planar=True):
    with open(fixture_path(name), encoding='utf-8') as file:
        return parse_graph(file.read(), require_planar)
