"""
Cartan subalgebra, weights and roots of osp(V) realized inside CLW^(2)(V).

Every Witt monomial is a simultaneous eigenvector of ad(H_i) and ad(K_j), so a weight is read
off by bracketing each Cartan generator against the monomial and comparing with the monomial.
"""
from __future__ import annotations

import logging
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Iterator, Optional

import exceptions
import linalg
from algebra_types import AlgebraTypeNames, Parity, RepKind
from cliffordweyl import ClwElem, Key, clw_super_bracket, order_two_basis
from forms import WeightVector
from message_log import MessageLog
from scalars import HALF, ONE
from utils import sub_multisets

if TYPE_CHECKING:
    from forms import SuperSpace

logger = logging.getLogger(__name__)


class CartanBasis:
    """ H_i = 1/2 e_i ^ e_i* and K_j = 1/2 xi_j v xi^j, with dual functionals H^i, K^j. """
    def __init__(self, space: SuperSpace) -> None:
        if space.witt is None:
            raise exceptions.FormError(f'{space} was not built with a Witt basis')
        self.space = space
        n, m = space.witt.n, space.witt.m
        zero = (0,) * space.n1
        self.H = [ClwElem._new(space, {((i, n + i), zero): HALF}) for i in range(n)]
        self.K = [ClwElem._new(space, {((), tuple(1 if t in (j, m + j) else 0 for t in range(2 * m))): HALF})
                  for j in range(m)]
        self.labels = [f'H{i + 1}' for i in range(n)] + [f'K{j + 1}' for j in range(m)]
        for a, b in combinations(self.generators, 2):
            if not clw_super_bracket(a, b).is_zero():
                raise exceptions.AlgebraError('Cartan generators do not commute')

    @property
    def n(self) -> int:
        return len(self.H)

    @property
    def m(self) -> int:
        return len(self.K)

    @property
    def generators(self) -> list[ClwElem]:
        return self.H + self.K

    def weight_of(self, X: ClwElem) -> WeightVector:
        """ The weight of a single monomial; raises when it is not a simultaneous eigenvector. """
        if len(X) != 1:
            raise exceptions.AlgebraError('weight_of needs a single monomial')
        key, coeff = next(iter(X))
        values = []
        for h in self.generators:
            image = clw_super_bracket(h, X)
            value = image.coefficient(key) / coeff
            if image != X * value:
                raise exceptions.AlgebraError(f'{X} is not an eigenvector of ad({h})')
            values.append(value.to_int())
        return WeightVector(tuple(values[:self.n]), tuple(values[self.n:]))

    def value(self, weight: WeightVector, index: int) -> int:
        return weight.coords[index]


def cartan_basis(space: SuperSpace) -> CartanBasis:
    return CartanBasis(space)


class WeightEntry:
    def __init__(self, weight: WeightVector, eigenvectors: list[ClwElem],
                 parity: Optional[Parity] = None, isotropic: Optional[bool] = None) -> None:
        self.weight = weight
        self.eigenvectors = eigenvectors
        self.parity = parity
        self.isotropic = isotropic

    @property
    def multiplicity(self) -> int:
        return len(self.eigenvectors)

    def __repr__(self) -> str:
        return f'WeightEntry({self.weight}, x{self.multiplicity})'


class WeightTable:
    """ Weights with multiplicities and eigenvector certificates, ordered by decreasing coordinates. """
    def __init__(self, n: int, m: int, entries: Iterable[WeightEntry] = ()) -> None:
        self.n = n
        self.m = m
        self.entries = sorted(entries, key=lambda e: e.weight.coords, reverse=True)

    def __iter__(self) -> Iterator[WeightEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def weights(self) -> set[WeightVector]:
        return {e.weight for e in self.entries}

    def find(self, weight: WeightVector) -> Optional[WeightEntry]:
        return next((e for e in self.entries if e.weight == weight), None)

    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def merged(self, other: WeightTable) -> WeightTable:
        return WeightTable(self.n, self.m, self.entries + other.entries)


def _group(cartan: CartanBasis, keys: Iterable[Key], parity: Optional[Parity] = None,
           skip_zero: bool = False) -> list[WeightEntry]:
    groups: dict[WeightVector, list[ClwElem]] = {}
    for key in keys:
        X = ClwElem._new(cartan.space, {key: ONE})
        weight = cartan.weight_of(X)
        if skip_zero and weight.is_zero():
            continue
        groups.setdefault(weight, []).append(X)
    return [WeightEntry(w, vectors, parity) for w, vectors in groups.items()]


def rep_keys(space: SuperSpace, kind: RepKind, degree: int) -> list[Key]:
    """ Monomial basis of Lambda^m V0, Sym^m V1 or CLW^(k). """
    zero = (0,) * space.n1
    match kind:
        case RepKind.EXT:
            return [(w, zero) for w in combinations(range(space.n0), degree)]
        case RepKind.SYM:
            return [((), p) for p, _ in sub_multisets((degree,) * space.n1, degree)]
        case RepKind.CLW:
            keys: list[Key] = []
            for r in range(min(degree, space.n0) + 1):
                for w in combinations(range(space.n0), r):
                    keys += [(w, p) for p, _ in sub_multisets((degree - r,) * space.n1, degree - r)]
            return keys
    raise exceptions.AlgebraError(f'Unsupported representation {kind}')


def parse_rep(tag: str) -> tuple[RepKind, int]:
    """ 'ext:3' -> (RepKind.EXT, 3) """
    name, _, degree = tag.partition(':')
    kind = AlgebraTypeNames.get(name.strip().lower())
    if not isinstance(kind, RepKind) or not degree.strip().isdigit():
        raise exceptions.AlgebraError(f'Unsupported representation tag {tag!r}')
    return kind, int(degree)


def weights_on(space: SuperSpace, rep: str | tuple[RepKind, int], degree_cap: int = 8) -> WeightTable:
    kind, degree = parse_rep(rep) if isinstance(rep, str) else rep
    if degree < 0:
        raise exceptions.AlgebraError('Representation degree must be non-negative')
    if kind is not RepKind.EXT and degree > degree_cap:
        raise exceptions.AlgebraError(f'Degree {degree} exceeds the cap {degree_cap}')
    cartan = CartanBasis(space)
    table = WeightTable(cartan.n, cartan.m, _group(cartan, rep_keys(space, kind, degree)))
    logger.debug('weights of %s:%d on %s: %d distinct', kind.name, degree, space, len(table))
    return table


def roots(space: SuperSpace) -> tuple[WeightTable, WeightTable]:
    """ Even roots from Lambda^2 V0 + Sym^2 V1, odd roots from V0 (x) V1, zero weights dropped. """
    cartan = CartanBasis(space)
    even_keys = rep_keys(space, RepKind.EXT, 2) + rep_keys(space, RepKind.SYM, 2)
    odd_keys = [key for key in rep_keys(space, RepKind.CLW, 2) if len(key[0]) == 1]
    even = WeightTable(cartan.n, cartan.m, _group(cartan, even_keys, Parity.EVEN, skip_zero=True))
    even_weights = even.weights()
    odd_entries = _group(cartan, odd_keys, Parity.ODD, skip_zero=True)
    for entry in odd_entries:
        entry.isotropic = entry.weight.scaled(2) not in even_weights
    return even, WeightTable(cartan.n, cartan.m, odd_entries)


def roots_odd_dim(space: SuperSpace) -> tuple[WeightTable, WeightTable]:
    if space.witt is None or not space.witt.odd_extra:
        raise exceptions.FormError('roots_odd_dim needs an odd dimensional V0 Witt space')
    return roots(space)


def verify_eigens(table: WeightTable, cartan: CartanBasis) -> MessageLog:
    report = MessageLog('eigenvector certificates')
    for entry in table:
        for X in entry.eigenvectors:
            for index, h in enumerate(cartan.generators):
                value = cartan.value(entry.weight, index)
                report.check(clw_super_bracket(h, X) == X * value,
                             f'{X} fails ad({cartan.labels[index]}) = {value} for weight {entry.weight}')
    return report


def is_self_normalizing(cartan: CartanBasis) -> bool:
    """The zero weight space of CLW^(2) is exactly the span of the Cartan generators.

    A monomial basis diagonalizes ad of b, so the normalizer of b in CLW^(2) is that zero weight space.
    """
    zero_keys = [next(iter(X.terms)) for X in order_two_basis(cartan.space) if cartan.weight_of(X).is_zero()]
    if not zero_keys:
        return not cartan.generators
    rows = [[g.coefficient(key) for key in zero_keys] for g in cartan.generators]
    if any(len(g) != sum(1 for v in row if v) for g, row in zip(cartan.generators, rows)):
        return False
    return linalg.rank(linalg.scalar_matrix(rows, (len(rows), len(zero_keys)))) == len(zero_keys)


def closed_form_roots(n: int, odd_extra: bool, m: int) -> tuple[set[WeightVector], dict[WeightVector, bool]]:
    """The root lists written down by hand: returns (even roots, odd root -> isotropic).

    Multiplicities are all one, so sets suffice.
    """
    def H(i: int, c: int = 1) -> WeightVector:
        return WeightVector(tuple(c if t == i else 0 for t in range(n)), (0,) * m)

    def K(j: int, c: int = 1) -> WeightVector:
        return WeightVector((0,) * n, tuple(c if t == j else 0 for t in range(m)))

    even: set[WeightVector] = set()
    for i, j in combinations(range(n), 2):
        for a in (1, -1):
            for b in (1, -1):
                even.add(H(i, a) + H(j, b))
    for i, j in combinations(range(m), 2):
        for a in (1, -1):
            for b in (1, -1):
                even.add(K(i, a) + K(j, b))
    for j in range(m):
        even.update({K(j, 2), K(j, -2)})
    if odd_extra:
        for i in range(n):
            even.update({H(i), H(i, -1)})
    odd: dict[WeightVector, bool] = {}
    for i in range(n):
        for j in range(m):
            for a in (1, -1):
                for b in (1, -1):
                    odd[H(i, a) + K(j, b)] = True
    if odd_extra:
        for j in range(m):
            odd[K(j)] = False
            odd[K(j, -1)] = False
    return even, odd
