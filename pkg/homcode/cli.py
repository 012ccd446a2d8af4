"""Command-line front end.

Exit codes: 0 success, 1 file I/O failure, 2 invalid input or map,
3 budget exceeded or a computed value disagreeing with its formula.
"""

import argparse
import logging
import os
import sys
from math import comb
from homcode import generators, tables
from homcode.constants import budget, distance_method, family, table_name
from homcode.covering import cover_spec, d_cover, find_gluing_cycle
from homcode.css import build_css, make_report
from homcode.distance import distance, witness_labels
from homcode.errors import (ChainConditionError, FormulaMismatch,
                            MethodTooExpensive, NoNontrivialCycle)
from homcode.gf2 import write_spm
from homcode.oracle import oracle_distance
from homcode.polygonal_map import read_map, write_map

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class crosscheck_failed(RuntimeError):
    pass


def _parse_cycle(text: str) -> list[int]:
    try:
        return [int(token) - 1 for token in text.replace(' ', '').split(',')]
    except ValueError as error:
        raise ValueError(f'Invalid cycle {text!r}, expected "v1,v2,..."') \
            from error


def cmd_gen(args) -> int:
    if args.family is family.ODD:
        params = generators.odd_family_params(args.m1, args.m2)
        m = generators.gen_odd(params)
    else:
        params = generators.even_family_params(args.m1, args.m2)
        m = generators.gen_even(params)
    write_map(m, args.out, comments=[str(params)])
    print(m.summary())
    return EXIT_OK


def cmd_builtin(args) -> int:
    m = generators.builtin(args.name)
    write_map(m, args.out, comments=[f'builtin {args.name.lower()}'])
    print(m.summary())
    return EXIT_OK


def cmd_info(args) -> int:
    m = read_map(args.map)
    print(m.summary())
    print(f'orientable={"yes" if m.is_orientable() else "no"}')
    code = build_css(m)
    entry = tables.match_catalog(make_report(m, code))
    if entry is not None:
        print(f'catalog={entry.code} maps={",".join(entry.maps)}')
    return EXIT_OK


def _crosscheck(code, d: int):
    """Confirm a breadth-first distance by enumeration, unless C(n, d)
    exceeds the budget.
    """
    if comb(code.n, d) > budget.SUBSETS:
        logger.info('Skipping enumeration check, C(%d, %d) exceeds the '
                    'budget of %d', code.n, d, budget.SUBSETS)
        return
    check = oracle_distance(code, d)
    if check != d:
        raise crosscheck_failed(f'bfs gives d={d}, enumeration gives {check}')
    logger.info('Enumeration confirms d=%d', d)


def cmd_code(args) -> int:
    m = read_map(args.map)
    code = build_css(m)
    if args.hx:
        write_spm(code.hx, args.hx)
    if args.hz:
        write_spm(code.hz, args.hz)
    d, witness = None, None
    if code.k == 0:
        print('k=0: the code has no logical operators, distance undefined',
              file=sys.stderr)
    elif args.distance is not distance_method.NONE:
        result = distance(code, args.distance)
        d = result.d_min
        if args.distance is distance_method.BFS \
                and code.n <= budget.CROSSCHECK_MAX_N:
            _crosscheck(code, d)
        if args.witness:
            _, edges = result.best_witness()
            witness = witness_labels(code.edges, edges)
    report = make_report(m, code, provenance=os.path.basename(args.map),
                         d=d, witness=witness)
    print(report)
    entry = tables.match_catalog(report)
    if entry is not None:
        print(f'catalog={entry.code} maps={",".join(entry.maps)}')
    return EXIT_OK


def cmd_cover(args) -> int:
    m = read_map(args.map)
    if args.cycle:
        cycle = _parse_cycle(args.cycle)
    else:
        cycle = find_gluing_cycle(m)
    print('cycle=C(' + ','.join(str(v + 1) for v in cycle) + ')')
    cover = d_cover(m, cover_spec(tuple(cycle), args.d))
    write_map(cover, args.out, comments=[
        f'{args.d}-sheeted cover of {os.path.basename(args.map)}'])
    print(cover.summary())
    return EXIT_OK


def cmd_table(args) -> int:
    with_distance = not args.no_distance
    if args.which is table_name.T1_K3:
        rows = tables.catalog_rows(with_distance)
    elif args.which is table_name.T2_FAMILIES:
        rows = tables.family_rows(args.m1_max, args.m2_max, with_distance)
    else:
        rows = tables.cover_rows(args.d_max, with_distance)
    sys.stdout.write(tables.render(rows))
    tables.check_rows(rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='homcode',
        description='Homological CSS codes from polygonal maps.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress to stderr (repeat for debug)')
    commands = parser.add_subparsers(dest='command', required=True)

    gen = commands.add_parser('gen', help='generate a family map')
    gen.add_argument('family', type=family, choices=list(family),
                     metavar='{odd,even}')
    gen.add_argument('m1', type=int)
    gen.add_argument('m2', type=int)
    gen.add_argument('-o', '--out', required=True, help='.map file to write')
    gen.set_defaults(run=cmd_gen)

    builtin = commands.add_parser('builtin', help='write a built-in map')
    builtin.add_argument('name', help=', '.join(sorted(generators.BUILTINS)))
    builtin.add_argument('-o', '--out', required=True)
    builtin.set_defaults(run=cmd_builtin)

    info = commands.add_parser('info', help='describe a map')
    info.add_argument('map')
    info.set_defaults(run=cmd_info)

    code = commands.add_parser('code', help='build the code of a map')
    code.add_argument('map')
    code.add_argument('--distance', type=distance_method,
                      choices=list(distance_method),
                      default=distance_method.BFS,
                      metavar='{bfs,oracle,none}')
    code.add_argument('--hx', help='write H_X as .spm')
    code.add_argument('--hz', help='write H_Z as .spm')
    code.add_argument('--witness', action='store_true',
                      help='print a minimum weight logical')
    code.set_defaults(run=cmd_code)

    cover = commands.add_parser('cover', help='build a cyclic cover')
    cover.add_argument('map')
    cover.add_argument('d', type=int)
    cover.add_argument('--cycle', help='gluing cycle "v1,v2,..." (1-based)')
    cover.add_argument('-o', '--out', required=True)
    cover.set_defaults(run=cmd_cover)

    table = commands.add_parser('table', help='reproduce a code table')
    table.add_argument('which', type=table_name, choices=list(table_name),
                       metavar='{t1-k3,t2-families,t3-covers}')
    table.add_argument('--m1-max', type=int, default=4)
    table.add_argument('--m2-max', type=int, default=3)
    table.add_argument('--d-max', type=int, default=3)
    table.add_argument('--no-distance', action='store_true',
                       help='skip distance computation')
    table.set_defaults(run=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        budget.from_environment()
        return args.run(args)
    except OSError as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_IO
    except (MethodTooExpensive, FormulaMismatch, ChainConditionError,
            crosscheck_failed) as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, NoNontrivialCycle) as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_INPUT
