from __future__ import annotations

import logging
import sys
from typing import TYPE_CHECKING, Iterable, Optional, TextIO

import exceptions
import linalg
from algebra_types import Bracket, OutputFormat, Parity, RepKind
from clifford import cl_bracket, cl_mul, o_embed, o_project
from cliffordweyl import ClwElem, clw_bracket, clw_inner, clw_mul, clw_scalar, clw_super_bracket, osp_embed, \
    osp_project
from elements import Element
from expr_parser import evaluate_text, format_value
from message_log import MessageLog
from osp_roots import CartanBasis, WeightTable, closed_form_roots, parse_rep, roots, verify_eigens, weights_on
from star import cl_hermitian, hermitian, star_clw, wl_hermitian
from suites import SUITES, run_suites
from weyl import sp_embed, sp_project, wl_bracket, wl_mul

if TYPE_CHECKING:
    from forms import SuperSpace

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1


class Command:
    """ One CLI subcommand. `perform` writes to `out` and returns the exit code. """
    def __init__(self, out: Optional[TextIO] = None) -> None:
        self.out = out if out is not None else sys.stdout
        self.report = MessageLog()

    def perform(self) -> int:
        """Run the command.

        This method must be overridden by Command subclasses.
        """
        raise NotImplementedError()

    def write(self, text: str) -> None:
        self.out.write(text + '\n')

    def finish(self) -> int:
        """ Exit code from the report; failures go to stderr. """
        if self.report.ok:
            return EXIT_OK
        sys.stderr.write(self.report.render() + '\n')
        return EXIT_FAILED


class EvalCommand(Command):
    def __init__(self, space: SuperSpace, expressions: Iterable[str], out: Optional[TextIO] = None) -> None:
        super().__init__(out)
        self.space = space
        self.expressions = list(expressions)

    def perform(self) -> int:
        for text in self.expressions:
            text = text.split('#', 1)[0].strip()
            if not text:
                continue
            self.write(format_value(evaluate_text(text, self.space)))
        return self.finish()


def restrict(X: ClwElem, kind: RepKind) -> Element:
    """ The CL(V0) or WL(V1) element carried by X; CLW leaves X as it is. """
    match kind:
        case RepKind.EXT:
            return X.ext_part()
        case RepKind.SYM:
            return X.sym_part()
    return X


class OperandCommand(Command):
    """ A verb applied to operand expressions evaluated in one space. """
    def __init__(self, space: SuperSpace, operands: Iterable[str], kind: RepKind = RepKind.CLW,
                 out: Optional[TextIO] = None) -> None:
        super().__init__(out)
        self.space = space
        self.operands = list(operands)
        self.kind = kind

    def elements(self) -> list[Element]:
        out = []
        for text in self.operands:
            value = evaluate_text(text, self.space)
            X = value if isinstance(value, ClwElem) else clw_scalar(self.space, value)
            out.append(restrict(X, self.kind))
        return out

    def apply(self, *elements: Element):
        raise NotImplementedError()

    def perform(self) -> int:
        self.write(format_value(self.apply(*self.elements())))
        return self.finish()


class ProductCommand(OperandCommand):
    """ clmul, wlmul and mul. """
    def apply(self, x: Element, y: Element) -> Element:
        match self.kind:
            case RepKind.EXT:
                return cl_mul(x, y)
            case RepKind.SYM:
                return wl_mul(x, y)
        return clw_mul(x, y)


class BracketCommand(OperandCommand):
    """ clbracket, wlbracket and bracket, as commutators or with --super as super brackets. """
    def __init__(self, space: SuperSpace, operands: Iterable[str], kind: RepKind = RepKind.CLW,
                 variant: Bracket = Bracket.LIE, out: Optional[TextIO] = None) -> None:
        super().__init__(space, operands, kind, out)
        self.variant = variant

    def apply(self, x: Element, y: Element) -> Element:
        match self.kind:
            case RepKind.EXT:
                return cl_bracket(x, y, self.variant)
            case RepKind.SYM:
                return wl_bracket(x, y, self.variant)
        return clw_super_bracket(x, y) if self.variant is Bracket.SUPER else clw_bracket(x, y)


class InnerCommand(OperandCommand):
    def apply(self, X: ClwElem, Y: ClwElem):
        return clw_inner(X, Y)


class StarCommand(OperandCommand):
    def apply(self, X: ClwElem) -> ClwElem:
        return star_clw(X)


class HermCommand(OperandCommand):
    """ Pure exterior or pure symmetric operands use the Clifford or Weyl Hermitian product. """
    def apply(self, X: ClwElem, Y: ClwElem):
        if X.is_pure_ext() and Y.is_pure_ext():
            return cl_hermitian(X.ext_part(), Y.ext_part())
        if X.is_pure_sym() and Y.is_pure_sym():
            return wl_hermitian(X.sym_part(), Y.sym_part())
        return hermitian(X, Y)


class EmbedCommand(Command):
    """ The order 2 element acting on V as a matrix, checked by projecting it back. """
    EMBEDDINGS = {
        RepKind.EXT: (o_embed, o_project),
        RepKind.SYM: (sp_embed, sp_project),
        RepKind.CLW: (osp_embed, osp_project),
    }

    def __init__(self, space: SuperSpace, matrix: list[list], kind: RepKind = RepKind.CLW,
                 out: Optional[TextIO] = None) -> None:
        super().__init__(out)
        self.space = space
        self.matrix = linalg.scalar_matrix(matrix)
        self.kind = kind

    def perform(self) -> int:
        embed, project = self.EMBEDDINGS[self.kind]
        X = embed(self.space, self.matrix)
        self.report.check(linalg.matrices_equal(project(X), self.matrix), 'embedding does not project back')
        self.write(format_value(X))
        return self.finish()


def _space_shape(space: SuperSpace) -> tuple[int, int]:
    if space.witt is None:
        raise exceptions.FormError(f'{space} was not built with a Witt basis; use --witt')
    return space.witt.n, space.witt.m


class RootsCommand(Command):
    def __init__(self, space: SuperSpace, fmt: OutputFormat = OutputFormat.TABLE,
                 closed_form: bool = False, out: Optional[TextIO] = None) -> None:
        super().__init__(out)
        self.space = space
        self.fmt = fmt
        self.closed_form = closed_form

    def perform(self) -> int:
        n, m = _space_shape(self.space)
        cartan = CartanBasis(self.space)
        even, odd = roots(self.space)
        self.report.extend(verify_eigens(even, cartan))
        self.report.extend(verify_eigens(odd, cartan))
        if self.closed_form:
            expected_even, expected_odd = closed_form_roots(n, self.space.witt.odd_extra, m)
            self.report.check(even.weights() == expected_even, 'even roots differ from the closed form')
            self.report.check({e.weight: e.isotropic for e in odd} == expected_odd,
                              'odd roots or isotropy differ from the closed form')
        self.write(emit_tables([even, odd], self.fmt))
        return self.finish()


class WeightsCommand(Command):
    def __init__(self, space: SuperSpace, rep: str, fmt: OutputFormat = OutputFormat.TABLE,
                 degree_cap: int = 8, out: Optional[TextIO] = None) -> None:
        super().__init__(out)
        self.space = space
        self.rep = parse_rep(rep)
        self.fmt = fmt
        self.degree_cap = degree_cap

    def perform(self) -> int:
        _space_shape(self.space)
        table = weights_on(self.space, self.rep, self.degree_cap)
        self.report.extend(verify_eigens(table, CartanBasis(self.space)))
        self.write(emit_table(table, self.fmt))
        return self.finish()


class CheckCommand(Command):
    def __init__(self, seed: int, cases: int, max_order: int, dims: int, suites: list[str],
                 out: Optional[TextIO] = None) -> None:
        super().__init__(out)
        unknown = [name for name in suites if name not in SUITES]
        if unknown:
            raise exceptions.UsageError(f'Unknown suite {unknown[0]!r}')
        self.seed = seed
        self.cases = cases
        self.max_order = max_order
        self.dims = dims
        self.suites = suites

    def perform(self) -> int:
        run_suites(self.suites, self.seed, self.cases, self.max_order, self.dims, self.report)
        self.write(self.report.render())
        return EXIT_OK if self.report.ok else EXIT_FAILED


def _columns(table: WeightTable) -> list[str]:
    return [f'H{i + 1}' for i in range(table.n)] + [f'K{j + 1}' for j in range(table.m)]


def _rows(table: WeightTable) -> list[tuple[list[str], str]]:
    rows = []
    for entry in table:
        parity = '-' if entry.parity is None else entry.parity.name.lower()
        if entry.parity is not Parity.ODD:
            isotropy = '-'
        else:
            isotropy = 'isotropic' if entry.isotropic else 'non-isotropic'
        cells = [str(c) for c in entry.weight.coords] + [parity, isotropy, str(entry.multiplicity)]
        rows.append((cells, str(entry.weight)))
    return rows


def emit_tables(tables: list[WeightTable], fmt: OutputFormat) -> str:
    """TSV: coordinate columns then parity, isotropy and multiplicity, one row per weight.

    The table format puts the weight as a formula first and pads columns.
    """
    header = _columns(tables[0]) + ['parity', 'isotropy', 'multiplicity']
    rows = [row for table in tables for row in _rows(table)]
    if fmt is OutputFormat.TSV:
        return '\n'.join(['\t'.join(header)] + ['\t'.join(cells) for cells, _ in rows])
    grid = [['weight'] + header] + [[name] + cells for cells, name in rows]
    widths = [max(len(line[c]) for line in grid) for c in range(len(grid[0]))]
    return '\n'.join('  '.join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip() for line in grid)


def emit_table(table: WeightTable, fmt: OutputFormat) -> str:
    return emit_tables([table], fmt)
