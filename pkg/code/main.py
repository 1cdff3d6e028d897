#!/usr/bin/env python3
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from config import setting
import exceptions
from algebra_types import AlgebraTypeNames, Bracket, RepKind
from commands import (BracketCommand, CheckCommand, Command, EmbedCommand, EvalCommand, HermCommand, InnerCommand,
                      ProductCommand, RootsCommand, StarCommand, WeightsCommand)
from expr_parser import parse_scalar
from forms import SuperSpace, load_space, orthonormal_space, witt_basis_space
from message_log import MessageLog
from suites import SUITES

logger = logging.getLogger(__name__)

# verb: (command, algebra, operand names)
OPERAND_VERBS = {
    'clmul': (ProductCommand, RepKind.EXT, ('left', 'right')),
    'wlmul': (ProductCommand, RepKind.SYM, ('left', 'right')),
    'mul': (ProductCommand, RepKind.CLW, ('left', 'right')),
    'clbracket': (BracketCommand, RepKind.EXT, ('left', 'right')),
    'wlbracket': (BracketCommand, RepKind.SYM, ('left', 'right')),
    'bracket': (BracketCommand, RepKind.CLW, ('left', 'right')),
    'inner': (InnerCommand, RepKind.CLW, ('left', 'right')),
    'star': (StarCommand, RepKind.CLW, ('operand',)),
    'herm': (HermCommand, RepKind.CLW, ('left', 'right')),
}
EMBED_PARTS = {'o': RepKind.EXT, 'sp': RepKind.SYM, 'osp': RepKind.CLW}


class MessageLogLogging(logging.Handler):
    """ Forwards warnings raised while a command runs into that command's report. """
    def __init__(self) -> None:
        super().__init__(logging.WARNING)
        self.log: Optional[MessageLog] = None

    def emit(self, record: logging.LogRecord) -> None:
        if self.log is not None:
            self.log.add_message(record.getMessage(), 'error' if record.levelno >= logging.ERROR else 'info')


log_handler = MessageLogLogging()


def parse_witt(text: str) -> SuperSpace:
    """ 'n,m' or 'n,odd,m' """
    parts = [p.strip() for p in text.split(',')]
    try:
        if len(parts) == 2:
            return witt_basis_space(int(parts[0]), False, int(parts[1]))
        if len(parts) == 3 and parts[1] == 'odd':
            return witt_basis_space(int(parts[0]), True, int(parts[2]))
    except ValueError:
        pass
    raise exceptions.UsageError(f'--witt expects n,m or n,odd,m, got {text!r}')


def parse_dim(text: str) -> SuperSpace:
    """ 'n0' or 'n0,n1' with even n1: identity Gram and standard symplectic form. """
    try:
        dims = [int(p) for p in text.split(',')]
    except ValueError:
        dims = []
    if len(dims) not in (1, 2) or (len(dims) == 2 and dims[1] % 2):
        raise exceptions.UsageError(f'--dim expects n0 or n0,n1 with n1 even, got {text!r}')
    return orthonormal_space(dims[0], dims[1] // 2 if len(dims) == 2 else 0)


def parse_matrix(text: str) -> list[list]:
    """ Rows separated by ';', entries by ','. Entries are scalars such as 1/2 or -i*r2. """
    rows = [row for row in text.split(';') if row.strip()]
    matrix = [[parse_scalar(entry) for entry in row.split(',')] for row in rows]
    if not matrix or any(len(row) != len(matrix) for row in matrix):
        raise exceptions.UsageError(f'--matrix expects a square matrix, got {text!r}')
    return matrix


def select_space(args: argparse.Namespace) -> SuperSpace:
    chosen = [name for name in ('space', 'witt', 'dim') if getattr(args, name, None)]
    if len(chosen) != 1:
        raise exceptions.UsageError('Give exactly one of --space, --witt or --dim')
    if args.space:
        return load_space(args.space)
    if args.witt:
        return parse_witt(args.witt)
    return parse_dim(args.dim)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='clw', description='Exact Clifford, Weyl and Clifford-Weyl algebra.')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    sub = parser.add_subparsers(dest='command', required=True)

    def space_options(p: argparse.ArgumentParser) -> None:
        p.add_argument('--space', help='space descriptor file')
        p.add_argument('--witt', help='Witt space n,m or n,odd,m')
        p.add_argument('--dim', help='identity Gram space n0[,n1]')

    default_format = setting('format', 'table')

    p = sub.add_parser('eval', help='evaluate expressions')
    space_options(p)
    p.add_argument('-e', '--expr', action='append', default=[])
    p.add_argument('--script', help='file with one expression per line')

    p = sub.add_parser('roots', help='root table of osp(V)')
    space_options(p)
    p.add_argument('--format', choices=['table', 'tsv'], default=default_format)
    p.add_argument('--closed-form', action='store_true', help='also compare with the closed form root lists')

    p = sub.add_parser('weights', help='weight table of a representation')
    space_options(p)
    p.add_argument('--rep', required=True, help='ext:m, sym:m or clw:k')
    p.add_argument('--format', choices=['table', 'tsv'], default=default_format)
    p.add_argument('--degree-cap', type=int, default=8)

    for verb, (command, _, names) in OPERAND_VERBS.items():
        p = sub.add_parser(verb, help=command.__doc__)
        space_options(p)
        p.add_argument('operands', nargs=len(names), metavar=names)
        if command is BracketCommand:
            p.add_argument('--super', action='store_true', help='super bracket with physical parities')

    p = sub.add_parser('osp-embed', help='order 2 element acting on V as a matrix')
    space_options(p)
    p.add_argument('--matrix', required=True, help="rows separated by ';', entries by ','")
    p.add_argument('--part', choices=list(EMBED_PARTS), default='osp',
                   help='o(V0), sp(V1) or the whole osp(V)')

    p = sub.add_parser('check', help='randomized verification suites')
    p.add_argument('--seed', type=int, default=setting('seed', 1729))
    p.add_argument('--cases', type=int, default=setting('cases', 200))
    p.add_argument('--max-order', type=int, default=setting('max_order', 3))
    p.add_argument('--dims', type=int, default=setting('dims', 4))
    p.add_argument('--suite', choices=['all', 'oracle', 'laws'], default='all')
    p.add_argument('--check-oracle', action='store_true', help='same as --suite oracle')
    return parser


def make_command(args: argparse.Namespace) -> Command:
    match args.command:
        case 'eval':
            expressions = list(args.expr)
            if args.script:
                expressions += Path(args.script).read_text().splitlines()
            if not expressions:
                raise exceptions.UsageError('eval needs -e EXPR or --script FILE')
            return EvalCommand(select_space(args), expressions)
        case 'roots':
            return RootsCommand(select_space(args), AlgebraTypeNames[args.format], args.closed_form)
        case 'weights':
            return WeightsCommand(select_space(args), args.rep, AlgebraTypeNames[args.format], args.degree_cap)
        case verb if verb in OPERAND_VERBS:
            command, kind, _ = OPERAND_VERBS[verb]
            if command is BracketCommand:
                variant = Bracket.SUPER if args.super else Bracket.LIE
                return BracketCommand(select_space(args), args.operands, kind, variant)
            return command(select_space(args), args.operands, kind)
        case 'osp-embed':
            return EmbedCommand(select_space(args), parse_matrix(args.matrix), EMBED_PARTS[args.part])
        case 'check':
            suite = 'oracle' if args.check_oracle else args.suite
            suites = list(SUITES) if suite == 'all' else [suite]
            return CheckCommand(args.seed, args.cases, args.max_order, args.dims, suites)
    raise exceptions.UsageError(f'Unknown command {args.command!r}')


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else setting('level', 'WARNING')
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')
    if log_handler not in logging.getLogger().handlers:
        logging.getLogger().addHandler(log_handler)
    try:
        command = make_command(args)
        log_handler.log = command.report
        return command.perform()
    except exceptions.UsageError as exc:
        sys.stderr.write(f'clw: {exc.message}\n')
        return exc.code
    except (exceptions.AlgebraError, OSError) as exc:
        sys.stderr.write(f'clw: {exc}\n')
        return 2
    finally:
        log_handler.log = None


if __name__ == '__main__':
    sys.exit(main())
