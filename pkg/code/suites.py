"""
Randomized verification suites behind `clw check`.

Each suite draws its cases from one random.Random and records every comparison in a MessageLog.
"""
from __future__ import annotations

import logging
import random
from typing import Callable

from clifford import cl_mul
from cliffordweyl import ClwElem, clw_mul, clw_scalar, clw_super_bracket
from message_log import MessageLog
from oracle import oracle_for, oracle_cl_mul, oracle_wl_mul
from sampling import random_clw, random_ext, random_space, random_sym
from weyl import wl_mul

logger = logging.getLogger(__name__)


def oracle_suite(rng: random.Random, report: MessageLog, cases: int, max_order: int, dims: int) -> None:
    """ Insertion products against the rewrite oracle on CLW, CL and WL. """
    for case in range(cases):
        space = random_space(rng, dims, dims)
        X = random_clw(rng, space, max_order)
        Y = random_clw(rng, space, max_order)
        oracle = oracle_for(space)
        report.check(clw_mul(X, Y) == oracle.mul(X, Y), f'clw_mul differs from the oracle on {space}: {X} * {Y}')
        x, y = random_ext(rng, space, max_order + 1), random_ext(rng, space, max_order + 1)
        report.check(cl_mul(x, y) == oracle_cl_mul(x, y), f'cl_mul differs from the oracle on {space}: {x} * {y}')
        xi, eta = random_sym(rng, space, max_order + 1), random_sym(rng, space, max_order + 1)
        report.check(wl_mul(xi, eta) == oracle_wl_mul(xi, eta), f'wl_mul differs from the oracle on {space}: {xi} * {eta}')
        if case % 50 == 49:
            logger.info('oracle suite: %d/%d cases', case + 1, cases)


def _super_jacobi(X: ClwElem, Y: ClwElem, Z: ClwElem, x: int, y: int) -> bool:
    left = clw_super_bracket(X, clw_super_bracket(Y, Z))
    right = clw_super_bracket(clw_super_bracket(X, Y), Z)
    swapped = clw_super_bracket(Y, clw_super_bracket(X, Z))
    return left == right + (-swapped if x * y else swapped)


def laws_suite(rng: random.Random, report: MessageLog, cases: int, max_order: int, dims: int) -> None:
    """ Associativity, unit, super Jacobi and rewrite confluence. """
    for case in range(cases):
        space = random_space(rng, dims, dims)
        X, Y, Z = (random_clw(rng, space, max_order, terms=2) for _ in range(3))
        report.check(clw_mul(clw_mul(X, Y), Z) == clw_mul(X, clw_mul(Y, Z)), f'clw_mul is not associative on {space}')
        one = clw_scalar(space)
        report.check(clw_mul(one, X) == X and clw_mul(X, one) == X, f'1 is not a unit for {X}')
        x, y, z = (rng.randint(0, 1) for _ in range(3))
        A, B, C = (random_clw(rng, space, max_order, terms=2, parity=p) for p in (x, y, z))
        report.check(_super_jacobi(A, B, C, x, y), f'super Jacobi fails on {space}')
        oracle = oracle_for(space)
        letters = tuple(rng.randrange(space.dimension) for _ in range(rng.randint(0, 6))) if space.dimension else ()
        report.check(oracle.normalize_word(letters, rng) == oracle.normalize_word(letters),
                     f'normal form depends on the rewrite order on {space}')
        if case % 50 == 49:
            logger.info('laws suite: %d/%d cases', case + 1, cases)


SUITES: dict[str, Callable[[random.Random, MessageLog, int, int, int], None]] = {
    'oracle': oracle_suite,
    'laws': laws_suite,
}


def run_suites(names: list[str], seed: int, cases: int, max_order: int, dims: int,
               report: MessageLog | None = None) -> MessageLog:
    if report is None:
        report = MessageLog()
    report.title = f'check: seed {seed}, {cases} cases, order <= {max_order}, dims <= {dims}'
    if 'oracle' in names and max_order > 4:
        logger.warning('oracle inputs of order %d expand into many free words; expect a slow run', max_order)
    rng = random.Random(seed)
    for name in names:
        SUITES[name](rng, report, cases, max_order, dims)
        logger.info('%s suite done, %d checks so far', name, report.checked)
    return report
