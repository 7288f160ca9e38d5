#!/usr/bin/env python3
import argparse
import json
import sys

import singer

from plane_draw.commands import COMMANDS
from plane_draw.errors import PlaneDrawError

LOGGER = singer.get_logger()

DEFAULT_CONFIG = {
    'kernel': 'exact',
    'tolerance': 1e-9,
    'strategy': 'main',
    'max_halvings': 64,
    'debug': False,
    'svg': {},
}


def load_config(path):
    config = dict(DEFAULT_CONFIG)
    if path:
        config.update(singer.utils.load_json(path))
    return config


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON config file')
    common.add_argument('--json', action='store_true', help='machine-readable output')

    parser = argparse.ArgumentParser(prog='plane-draw', parents=[common])
    subparsers = parser.add_subparsers(dest='command', required=True)

    draw = subparsers.add_parser('draw', parents=[common], help='compute a straight-line drawing')
    draw.add_argument('input', nargs='?', default='-')
    draw.add_argument('-o', '--output')
    draw.add_argument('--svg')
    draw.add_argument('--strategy', choices=['main', 'footnote'])
    draw.add_argument('--kernel', choices=['exact', 'float'])
    draw.add_argument('--seed', type=int, help='accepted for symmetry with gen; drawing is deterministic')

    verify = subparsers.add_parser('verify', parents=[common], help='certify a drawing')
    verify.add_argument('input', nargs='?', default='-')
    verify.add_argument('--svg', help='render the drawing')
    verify.add_argument('--unverified', action='store_true',
                        help='render the svg even when verification fails, violations highlighted')

    triangulate = subparsers.add_parser('triangulate', parents=[common], help='add edges up to a triangulation')
    triangulate.add_argument('input', nargs='?', default='-')
    triangulate.add_argument('-o', '--output')

    gen = subparsers.add_parser('gen', parents=[common], help='generate an instance')
    gen.add_argument('family')
    gen.add_argument('size', nargs='?', type=int)
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--flips', type=int, default=0)
    gen.add_argument('--delete', type=float, default=0.0)
    gen.add_argument('-o', '--output')

    stats = subparsers.add_parser('stats', parents=[common], help='counts and separating-triangle census')
    stats.add_argument('input', nargs='?', default='-')
    return parser


def cli(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code

    try:
        config = load_config(args.config)
        return COMMANDS[args.command](args, config)
    except (PlaneDrawError, OSError, ValueError) as err:
        LOGGER.critical(str(err))
        if args.json:
            sys.stderr.write(json.dumps({'error': type(err).__name__, 'message': str(err)}) + '\n')
        return 2


@singer.utils.handle_top_exception(LOGGER)
def main():
    sys.exit(cli(sys.argv[1:]))


if __name__ == '__main__':
    main()
