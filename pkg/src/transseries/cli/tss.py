#!/usr/bin/env python3
#
# Copyright (c) 2016-2018, Neil Booth
# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Command line interface to the transseries kernel.

Exit codes: 0 for a determinate answer, 2 for an indeterminate one and 1
for errors.'''


import argparse
import logging
import sys

import transseries
from transseries.lib import text
from transseries.lib.asymptotics import axiom_suite, eventual_compare
from transseries.lib.constants import lookup_field, use_field
from transseries.lib.errors import BudgetExhausted, TransseriesError
from transseries.lib.hahn import Verdict
from transseries.lib.util import CompactFormatter, make_logger
from transseries.shell.env import Env
from transseries.shell.evaluator import EvaluationError, evaluate_text
from transseries.shell.parser import ParseError
from transseries.shell.session import Session

EXIT_OK, EXIT_ERROR, EXIT_INDETERMINATE = 0, 1, 2

commands = {
    'repl': (
        'read commands interactively or from standard input',
    ),
    'eval': (
        'print the expansion of an expression',
        ['expr'], {
            'type': str,
            'help': 'e.g. "1/(1-1/x)"',
        },
    ),
    'compare': (
        'compare two expressions at infinity',
        ['left'], {
            'type': str,
            'help': 'first expression',
        }, ['right'], {
            'type': str,
            'help': 'second expression',
        },
    ),
    'axioms': (
        'run the exponential field axiom suite',
        ['-v', '--verbose'], {
            'action': 'store_true',
            'help': 'list passing instances too',
        },
    ),
}


def options_parser():
    '''Options shared by every command; they override the environment.'''
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--budget', type=int, metavar='n',
                        help='cancelled coefficients skipped per term found')
    parser.add_argument('--terms', type=int, metavar='k',
                        help='number of terms displayed')
    parser.add_argument('--field', choices=('rational', 'exprational'),
                        help='constant field')
    return parser


def build_parser():
    main_parser = argparse.ArgumentParser(
        'tss',
        description='Compute with transseries at infinity'
    )
    main_parser.add_argument('--version', action='version',
                             version=f'tss {transseries.__version__}')
    subparsers = main_parser.add_subparsers(help='sub-command help',
                                            dest='command', required=True)
    shared = options_parser()
    for command, data in commands.items():
        parser_help, *arguments = data
        parser = subparsers.add_parser(command, help=parser_help,
                                       parents=[shared])
        for n in range(0, len(arguments), 2):
            args, kwargs = arguments[n: n+2]
            parser.add_argument(*args, **kwargs)
    return main_parser


def run_eval(args, budget):
    try:
        f = evaluate_text(args.expr, budget)
        print(text.safe_series_string(f, args.terms, budget))
    except BudgetExhausted as e:
        print(f'indeterminate: {e}', file=sys.stderr)
        return EXIT_INDETERMINATE
    return EXIT_OK


def run_compare(args, budget):
    verdict = eventual_compare(evaluate_text(args.left, budget),
                               evaluate_text(args.right, budget), budget)
    print(text.verdict_line(args.left, args.right, verdict))
    return EXIT_INDETERMINATE if verdict is Verdict.INDETERMINATE else EXIT_OK


def run_axioms(args, budget):
    report = axiom_suite(budget)
    for line in text.axiom_lines(report, verbose=args.verbose):
        print(line)
    if report.failed:
        return EXIT_ERROR
    return EXIT_INDETERMINATE if report.indeterminate else EXIT_OK


def run_repl(args, budget):
    session = Session(budget.max_terms, args.terms, args.field)
    return EXIT_INDETERMINATE if session.run() else EXIT_OK


runners = {
    'repl': run_repl,
    'eval': run_eval,
    'compare': run_compare,
    'axioms': run_axioms,
}


def main(argv=None):
    '''Run one tss command and return its exit code.'''
    args = build_parser().parse_args(argv)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(CompactFormatter(Env.default('LOG_FORMAT', Env.DEFAULT_LOG_FORMAT)))
    logger = make_logger('transseries', handler=handler, level=logging.WARNING)

    try:
        env = Env()
        logger.setLevel(env.log_level)
        if args.budget is not None:
            env.budget = args.budget
        if args.terms is None:
            args.terms = env.display_terms
        args.field = lookup_field(args.field) if args.field else env.constant_field
        budget = env.apply()
        with use_field(args.field):
            return runners[args.command](args, budget)
    except Env.Error as e:
        logger.error(f'bad environment: {e}')
        return EXIT_ERROR
    except (ParseError, EvaluationError, TransseriesError, ValueError) as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_ERROR
    finally:
        logger.removeHandler(handler)


if __name__ == '__main__':
    sys.exit(main())
