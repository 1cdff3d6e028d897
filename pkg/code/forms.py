from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

import exceptions
import linalg
from scalars import Scalar, ZERO, ONE, I, R2

logger = logging.getLogger(__name__)


class StarPairing:
    """A star structure given on basis vectors: b_j* = factor_j * b_perm(j).

    Indices are global, V0 first then V1. The star extends conjugate-linearly.
    """
    def __init__(self, perm: Sequence[int], factors: Sequence[Scalar] | None = None) -> None:
        self.perm = tuple(perm)
        if factors is None:
            factors = [ONE] * len(self.perm)
        self.factors = tuple(Scalar.coerce(f) for f in factors)
        if len(self.factors) != len(self.perm):
            raise exceptions.StarError('Star pairing needs one factor per basis vector')
        for j, target in enumerate(self.perm):
            if not 0 <= target < len(self.perm) or self.perm[target] != j:
                raise exceptions.StarError(f'Star pairing is not an involution at index {j}')
            if self.factors[j].conj() * self.factors[target] != ONE:
                raise exceptions.StarError(f'Star pairing does not square to the identity at index {j}')

    @classmethod
    def selfadjoint(cls, size: int) -> StarPairing:
        return cls(range(size))

    def image(self, index: int) -> tuple[int, Scalar]:
        return self.perm[index], self.factors[index]

    def check_compatible(self, space: SuperSpace) -> None:
        """ Raise StarError unless <b_i*, b_j*> = conj(<b_i, b_j>) on all basis pairs. """
        total = space.n0 + space.n1
        if len(self.perm) != total:
            raise exceptions.StarError(f'Star pairing covers {len(self.perm)} vectors, space has {total}')
        for i in range(total):
            if space.parity_of(i) != space.parity_of(self.perm[i]):
                raise exceptions.StarError(f'Star pairing mixes V0 and V1 at index {i}')
        for i in range(total):
            for j in range(total):
                pi, fi = self.image(i)
                pj, fj = self.image(j)
                if fi * fj * space.form(pi, pj) != space.form(i, j).conj():
                    raise exceptions.StarError(
                        f'Star pairing is not compatible with the form on ({space.label(i)}, {space.label(j)})')


@dataclass(frozen=True)
class WittInfo:
    n: int
    odd_extra: bool
    m: int


class SuperSpace:
    """V = V0 + V1 with a symmetric form G on V0 and an alternating form W on V1.

    The global basis lists V0 vectors first (indices 0..n0-1), then V1 vectors.
    The two parts are orthogonal for the supersymmetric form.
    """
    def __init__(
        self,
        n0: int,
        n1: int,
        G: np.ndarray,
        W: np.ndarray,
        labels: Optional[Sequence[str]] = None,
        star: Optional[StarPairing] = None,
        nondegenerate: bool = True,
        witt: Optional[WittInfo] = None,
    ) -> None:
        if n0 < 0 or n1 < 0:
            raise exceptions.FormError('Dimensions must be non-negative')
        G = linalg.scalar_matrix([list(row) for row in G], (n0, n0))
        W = linalg.scalar_matrix([list(row) for row in W], (n1, n1))
        for i in range(n0):
            for j in range(i + 1, n0):
                if G[i, j] != G[j, i]:
                    raise exceptions.FormError(f'G is not symmetric at ({i}, {j})')
        for i in range(n1):
            if W[i, i]:
                raise exceptions.FormError(f'W is not alternating: W[{i}][{i}] != 0')
            for j in range(i + 1, n1):
                if W[i, j] != -W[j, i]:
                    raise exceptions.FormError(f'W is not alternating at ({i}, {j})')
        if nondegenerate and n1 % 2:
            raise exceptions.FormError('W must be even dimensional to be non-degenerate')

        self.n0 = n0
        self.n1 = n1
        self.G = linalg.frozen(G)
        self.W = linalg.frozen(W)
        self.det_G = linalg.determinant(self.G) if n0 else ONE
        self.det_W = linalg.determinant(self.W) if n1 else ONE
        self.nondegenerate = bool(self.det_G) and bool(self.det_W)
        if nondegenerate and not self.nondegenerate:
            raise exceptions.FormError('Form is degenerate')

        if labels is None:
            labels = [f'e{k + 1}' for k in range(n0)] + [f'x{k + 1}' for k in range(n1)]
        self.labels = tuple(labels)
        if len(self.labels) != n0 + n1 or len(set(self.labels)) != len(self.labels):
            raise exceptions.FormError('Labels must be unique, one per basis vector')
        self._label_index = {label: k for k, label in enumerate(self.labels)}

        self.witt = witt
        self.star = star
        if star is not None:
            star.check_compatible(self)
        logger.debug('built space (%d|%d), nondegenerate=%s', n0, n1, self.nondegenerate)

    @property
    def dimension(self) -> int:
        return self.n0 + self.n1

    @property
    def has_star(self) -> bool:
        return self.star is not None

    def parity_of(self, index: int) -> int:
        return 0 if index < self.n0 else 1

    def label(self, index: int) -> str:
        return self.labels[index]

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise exceptions.ParseError(f'Unknown basis symbol {label!r}') from None

    def has_label(self, label: str) -> bool:
        return label in self._label_index

    def g(self, i: int, j: int) -> Scalar:
        return self.G[i, j]

    def w(self, i: int, j: int) -> Scalar:
        return self.W[i, j]

    def form(self, i: int, j: int) -> Scalar:
        """ The supersymmetric form on global basis indices. """
        if i < self.n0 and j < self.n0:
            return self.G[i, j]
        if i >= self.n0 and j >= self.n0:
            return self.W[i - self.n0, j - self.n0]
        return ZERO

    def __repr__(self) -> str:
        return f'SuperSpace({self.n0}|{self.n1})'


def make_space(n0: int, n1: int, G, W, *, nondegenerate: bool = True, labels=None, star=None) -> SuperSpace:
    return SuperSpace(n0, n1, G, W, labels=labels, star=star, nondegenerate=nondegenerate)


def witt_basis_space(n: int, odd_extra: bool, m: int) -> SuperSpace:
    """Witt basis e_1..e_n, e_1*..e_n* (+ e) of V0 and symplectic basis xi_1..xi_m, xi^1..xi^m of V1.

    The star swaps e_i and e_i*, fixes e, and sends xi_j to i*xi^j and xi^j to i*xi_j.
    """
    if n < 0 or m < 0:
        raise exceptions.FormError('Witt dimensions must be non-negative')
    n0 = 2 * n + (1 if odd_extra else 0)
    n1 = 2 * m
    G = linalg.zeros(n0, n0)
    for k in range(n):
        G[k, n + k] = ONE
        G[n + k, k] = ONE
    if odd_extra:
        G[2 * n, 2 * n] = ONE
    W = linalg.zeros(n1, n1)
    for k in range(m):
        W[k, m + k] = ONE
        W[m + k, k] = -ONE
    labels = [f'e{k + 1}' for k in range(n)] + [f'e{k + 1}*' for k in range(n)]
    if odd_extra:
        labels.append('e')
    labels += [f'x{k + 1}' for k in range(m)] + [f'x{k + 1}^' for k in range(m)]
    perm = [n + k for k in range(n)] + list(range(n))
    if odd_extra:
        perm.append(2 * n)
    perm += [n0 + m + k for k in range(m)] + [n0 + k for k in range(m)]
    factors = [ONE] * n0 + [I] * n1
    return SuperSpace(n0, n1, G, W, labels=labels, star=StarPairing(perm, factors), witt=WittInfo(n, odd_extra, m))


def orthonormal_space(d: int, m: int = 0) -> SuperSpace:
    """ Identity Gram on V0 with a selfadjoint basis; V1 in symplectic form. """
    G = linalg.identity(d)
    W = linalg.zeros(2 * m, 2 * m)
    for k in range(m):
        W[k, m + k] = ONE
        W[m + k, k] = -ONE
    labels = [f'e{k + 1}' for k in range(d)] + [f'x{k + 1}' for k in range(m)] + [f'x{k + 1}^' for k in range(m)]
    perm = list(range(d)) + [d + m + k for k in range(m)] + [d + k for k in range(m)]
    factors = [ONE] * d + [I] * (2 * m)
    return SuperSpace(d, 2 * m, G, W, labels=labels, star=StarPairing(perm, factors))


def orthonormal_to_witt(space: SuperSpace) -> tuple[SuperSpace, np.ndarray]:
    """Return the Witt space and the matrix C whose columns are e_1..e_n, e_1*..e_n* in v coordinates.

    e_k = (v_{2k-1} + i v_{2k}) / r2 and e_k* = (v_{2k-1} - i v_{2k}) / r2.
    """
    if space.n0 % 2:
        raise exceptions.FormError('orthonormal_to_witt needs an even dimensional V0')
    if not linalg.matrices_equal(space.G, linalg.identity(space.n0)):
        raise exceptions.FormError('orthonormal_to_witt needs an identity Gram matrix')
    if space.star is not None:
        for k in range(space.n0):
            if space.star.image(k) != (k, ONE):
                raise exceptions.FormError('orthonormal_to_witt needs a selfadjoint V0 basis')
    n = space.n0 // 2
    witt = witt_basis_space(n, False, space.n1 // 2)
    if not linalg.matrices_equal(space.W, witt.W):
        raise exceptions.FormError('V1 is not in standard symplectic form')
    half_r2 = R2 / 2
    C = linalg.zeros(space.n0, space.n0)
    for k in range(n):
        C[2 * k, k] = half_r2
        C[2 * k + 1, k] = I * half_r2
        C[2 * k, n + k] = half_r2
        C[2 * k + 1, n + k] = -I * half_r2
    return witt, C


def transported_gram(space: SuperSpace, C: np.ndarray) -> np.ndarray:
    return C.T @ space.G @ C


@dataclass(frozen=True, order=True)
class WeightVector:
    """ Integer coordinates on H^1..H^n and K^1..K^m. """
    h: tuple[int, ...]
    k: tuple[int, ...]

    @property
    def coords(self) -> tuple[int, ...]:
        return self.h + self.k

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __neg__(self) -> WeightVector:
        return WeightVector(tuple(-a for a in self.h), tuple(-b for b in self.k))

    def __add__(self, other: WeightVector) -> WeightVector:
        return WeightVector(tuple(a + b for a, b in zip(self.h, other.h)), tuple(a + b for a, b in zip(self.k, other.k)))

    def scaled(self, factor: int) -> WeightVector:
        return WeightVector(tuple(factor * a for a in self.h), tuple(factor * b for b in self.k))

    def __str__(self) -> str:
        text = ''
        for name, values in (('H', self.h), ('K', self.k)):
            for index, value in enumerate(values):
                if not value:
                    continue
                mag = '' if abs(value) == 1 else str(abs(value))
                if text:
                    text += ' - ' if value < 0 else ' + '
                elif value < 0:
                    text += '-'
                text += f'{mag}{name}{index + 1}'
        return text or '0'


def load_space(path: str | Path) -> SuperSpace:
    return parse_space(Path(path).read_text())


def _row(line: str) -> list[Scalar]:
    from expr_parser import parse_scalar
    cells = line.split(',') if ',' in line else line.split()
    return [parse_scalar(cell) for cell in cells]


def parse_space(text: str) -> SuperSpace:
    """Read the descriptor format.

        space n0 n1
        G
        <n0 rows>
        W
        <n1 rows>
        labels <n0 + n1 names>          (optional)
        star                            (optional)
        <label> <label> [factor]        (one line per basis vector)
    """
    lines = [ln.split('#', 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0].split()[0] != 'space':
        raise exceptions.FormError("Space file must start with 'space n0 n1'")
    try:
        _, n0_text, n1_text = lines[0].split()
        n0, n1 = int(n0_text), int(n1_text)
    except ValueError:
        raise exceptions.FormError(f'Bad header line {lines[0]!r}') from None
    pos = 1

    def block(name: str, size: int) -> list[list[Scalar]]:
        nonlocal pos
        if size == 0 and (pos >= len(lines) or lines[pos] != name):
            return []
        if pos >= len(lines) or lines[pos] != name:
            raise exceptions.FormError(f'Expected {name!r} section')
        rows = [_row(ln) for ln in lines[pos + 1:pos + 1 + size]]
        pos += 1 + size
        return rows

    G = linalg.scalar_matrix(block('G', n0), (n0, n0))
    W = linalg.scalar_matrix(block('W', n1), (n1, n1))
    labels = None
    if pos < len(lines) and lines[pos].split()[0] == 'labels':
        labels = lines[pos].split()[1:]
        pos += 1
    space = SuperSpace(n0, n1, G, W, labels=labels)
    if pos < len(lines) and lines[pos] == 'star':
        perm = [0] * space.dimension
        factors = [ONE] * space.dimension
        for ln in lines[pos + 1:pos + 1 + space.dimension]:
            source, target, *rest = ln.split(maxsplit=2)
            k = space.index_of(source)
            perm[k] = space.index_of(target)
            if rest:
                from expr_parser import parse_scalar
                factors[k] = parse_scalar(rest[0])
        space = SuperSpace(n0, n1, G, W, labels=labels, star=StarPairing(perm, factors))
    return space


def save_space(space: SuperSpace) -> str:
    out = [f'space {space.n0} {space.n1}', 'G']
    out += [', '.join(str(v) for v in row) for row in space.G]
    out.append('W')
    out += [', '.join(str(v) for v in row) for row in space.W]
    out.append('labels ' + ' '.join(space.labels))
    if space.star is not None:
        out.append('star')
        for k in range(space.dimension):
            target, factor = space.star.image(k)
            out.append(f'{space.label(k)} {space.label(target)} {factor}')
    return '\n'.join(out) + '\n'
