from __future__ import annotations

from itertools import combinations, product
from math import comb
from typing import Hashable, Iterator, Sequence

from scalars import Scalar, ZERO


def add_terms(*tables: dict) -> dict:
    """ Merge coefficient tables, summing shared keys and dropping zero coefficients. """
    new_table: dict = {}
    for table in tables:
        for key, val in table.items():
            if not isinstance(val, Scalar):
                raise TypeError(f'Expected Scalar, not {type(val)}')
            new_table[key] = new_table.get(key, ZERO) + val
    return {k: v for k, v in new_table.items() if v}


def accumulate(table: dict, key: Hashable, val: Scalar) -> None:
    """ table[key] += val in place, deleting the key when it cancels. """
    if not val:
        return
    total = table.get(key, ZERO) + val
    if total:
        table[key] = total
    else:
        table.pop(key, None)


def inversions(seq: Sequence) -> int:
    count = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                count += 1
    return count


def permutation_sign(seq: Sequence) -> int:
    """ +1 or -1 according to the parity of the inversion count of `seq`. """
    return -1 if inversions(seq) % 2 else 1


def shuffles(k: int, l: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Yield (chosen, rest, sign) for every (l, k-l) shuffle of range(k).

    `chosen` and `rest` keep their increasing order and `sign` is the sign of the
    permutation chosen + rest.
    """
    for chosen in combinations(range(k), l):
        rest = tuple(p for p in range(k) if p not in chosen)
        yield chosen, rest, permutation_sign(chosen + rest)


def sub_multisets(exps: Sequence[int], size: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (sub, count) for every sub multiset of exponent vector `exps` with `size` letters.

    `count` is the number of position subsets of the full word giving that sub multiset.
    """
    for sub in product(*(range(e + 1) for e in exps)):
        if sum(sub) != size:
            continue
        count = 1
        for e, s in zip(exps, sub):
            count *= comb(e, s)
        yield tuple(sub), count


def expand_exponents(exps: Sequence[int]) -> list[int]:
    """ (2, 0, 1) -> [0, 0, 2] """
    letters: list[int] = []
    for index, e in enumerate(exps):
        letters.extend([index] * e)
    return letters

