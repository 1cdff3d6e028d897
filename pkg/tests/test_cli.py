import io
from fractions import Fraction

import pytest

import exceptions
import suites
from algebra_types import OutputFormat
from commands import CheckCommand, EvalCommand, RootsCommand, StarCommand, emit_table
from config import SETTINGS, refresh_settings, setting
from forms import witt_basis_space
from main import main, parse_dim, parse_matrix, parse_witt
from osp_roots import roots
from scalars import I, R2, Scalar


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval(capsys):
    code, out, _ = run(capsys, 'eval', '--dim', '2', '-e', 'e1 * e1', '-e', 'e2 * e1')
    assert code == 0
    assert out == '1\n-e1^e2\n'


def test_eval_brackets_and_inner_products(capsys):
    code, out, _ = run(capsys, 'eval', '--witt', '0,1', '-e', '[1&x1, 1&x1^]s', '-e', '[1&x1, 1&x1^]',
                       '-e', '<x1, x1^>')
    assert code == 0
    assert out.splitlines() == ['2*x1.x1^', '2', '1']


def test_eval_script(capsys, tmp_path):
    script = tmp_path / 'script.clw'
    script.write_text('# products\ne1 * e2\n\ne1 + e1  # doubled\n')
    code, out, _ = run(capsys, 'eval', '--dim', '2', '--script', str(script))
    assert code == 0
    assert out == 'e1^e2\n2*e1\n'


def test_parse_errors_exit_with_2(capsys):
    code, out, err = run(capsys, 'eval', '--dim', '2', '-e', 'e1^^e2')
    assert code == 2
    assert out == ''
    assert 'column 4' in err


@pytest.mark.parametrize('argv', [
    ['roots'],
    ['roots', '--witt', '2,0', '--dim', '2'],
    ['roots', '--witt', 'two'],
    ['eval', '--dim', '2'],
    ['eval', '--dim', '2,1', '-e', '1'],
    ['roots', '--dim', '2'],
])
def test_usage_errors_exit_with_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith('clw: ')


def test_argparse_errors_exit_with_2():
    with pytest.raises(SystemExit) as info:
        main(['roots', '--format', 'csv', '--witt', '1,0'])
    assert info.value.code == 2


def test_space_options():
    assert parse_witt('2,odd,1').n0 == 5
    assert parse_witt('1, 2').n1 == 4
    assert parse_dim('3,2').n1 == 2
    with pytest.raises(exceptions.UsageError):
        parse_witt('1,even,1')


@pytest.mark.parametrize('witt, name', [('2,0', 'roots_2_0.tsv'), ('0,2', 'roots_0_2.tsv')])
def test_root_tables_are_stable(capsys, golden, witt, name):
    code, out, _ = run(capsys, 'roots', '--witt', witt, '--format', 'tsv', '--closed-form')
    assert code == 0
    assert out == golden(name)


def test_root_table_layout(capsys):
    code, out, _ = run(capsys, 'roots', '--witt', '1,1')
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ['weight', 'H1', 'K1', 'parity', 'isotropy', 'multiplicity']
    assert len(lines) == 1 + 2 + 4
    assert sum('non-isotropic' in line for line in lines) == 0
    assert sum('isotropic' in line for line in lines) == 4


def test_empty_table_is_a_header():
    _, odd = roots(witt_basis_space(1, False, 0))
    assert emit_table(odd, OutputFormat.TSV) == 'H1\tparity\tisotropy\tmultiplicity'


def test_weights(capsys):
    code, out, _ = run(capsys, 'weights', '--witt', '1,1', '--rep', 'ext:1', '--format', 'tsv')
    assert code == 0
    assert out.splitlines()[1:] == ['1\t0\t-\t-\t1', '-1\t0\t-\t-\t1']
    code, _, err = run(capsys, 'weights', '--witt', '1,1', '--rep', 'spin:1')
    assert code == 2


def test_check(capsys):
    code, out, _ = run(capsys, 'check', '--seed', '3', '--cases', '2', '--max-order', '2', '--dims', '2')
    assert code == 0
    assert out.rstrip().endswith('checks, ok')


def test_failing_check_exits_with_1(capsys, monkeypatch):
    def broken(rng, report, cases, max_order, dims):
        report.check(False, 'broken law')

    monkeypatch.setitem(suites.SUITES, 'laws', broken)
    code, out, _ = run(capsys, 'check', '--suite', 'laws')
    assert code == 1
    assert 'FAIL: broken law' in out


def test_commands_write_to_their_stream():
    out = io.StringIO()
    assert EvalCommand(witt_basis_space(1, False, 0), ['e1 * e1*'], out).perform() == 0
    assert out.getvalue() == '1 + e1^e1*\n'
    out = io.StringIO()
    assert RootsCommand(witt_basis_space(2, False, 0), OutputFormat.TSV, out=out).perform() == 0
    assert out.getvalue().count('\n') == 5
    with pytest.raises(exceptions.UsageError):
        CheckCommand(1, 1, 1, 1, ['nope'])


def test_warnings_reach_the_report(capsys):
    code, out, _ = run(capsys, 'check', '--suite', 'oracle', '--cases', '0', '--max-order', '5')
    assert code == 0
    assert 'expect a slow run' in out


def test_settings_come_from_the_ini_file():
    SETTINGS.clear()
    refresh_settings()
    assert setting('seed') == 1729
    assert setting('format') == 'table'
    assert setting('missing', 'fallback') == 'fallback'


@pytest.mark.parametrize('argv, expected', [
    (['clmul', '--dim', '2', 'e1', 'e2'], 'e1^e2'),
    (['clmul', '--dim', '2', 'e2', 'e1'], '-e1^e2'),
    (['clbracket', '--dim', '2', 'e1', 'e2'], '2*e1^e2'),
    (['clbracket', '--dim', '2', '--super', 'e1', 'e2'], '0'),
    (['wlmul', '--witt', '0,1', 'x1', 'x1^'], '1 + x1.x1^'),
    (['wlbracket', '--witt', '0,1', 'x1', 'x1^'], '2'),
    (['wlbracket', '--witt', '0,1', '--super', 'x1', 'x1^'], '2*x1.x1^'),
    (['mul', '--witt', '1,1', 'e1', 'x1'], 'e1 & x1'),
    (['bracket', '--witt', '0,1', '1&x1', '1&x1^'], '2'),
    (['bracket', '--witt', '0,1', '--super', '1&x1', '1&x1^'], '2*x1.x1^'),
    (['inner', '--witt', '0,1', 'x1', 'x1^'], '1'),
    (['star', '--witt', '1,1', 'x1'], 'i*x1^'),
    (['herm', '--witt', '1,1', 'e1', 'e1'], '1'),
    (['herm', '--witt', '1,1', 'x1', 'x1'], '-1'),
])
def test_algebra_verbs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected + '\n'


def test_algebra_verbs_check_their_operands(capsys):
    code, _, err = run(capsys, 'clmul', '--witt', '1,1', 'e1', 'x1')
    assert code == 2
    assert 'symmetric part' in err
    code, _, _ = run(capsys, 'wlmul', '--witt', '1,1', 'x1', 'e1')
    assert code == 2
    with pytest.raises(SystemExit):
        main(['star', '--witt', '1,1', 'x1', 'x1^'])


@pytest.mark.parametrize('argv, expected', [
    (['--witt', '1,0', '--part', 'o', '--matrix=1,0;0,-1'], '1/2*e1^e1*'),
    (['--witt', '0,1', '--part', 'sp', '--matrix=-1,0;0,1'], '1/2*x1.x1^'),
    (['--witt', '1,1', '--matrix', '1,0,0,0; 0,-1,0,0; 0,0,0,0; 0,0,0,0'], '1/2*e1^e1*'),
])
def test_osp_embed(capsys, argv, expected):
    code, out, _ = run(capsys, 'osp-embed', *argv)
    assert code == 0
    assert out == expected + '\n'


def test_osp_embed_rejects_non_members(capsys):
    code, _, err = run(capsys, 'osp-embed', '--witt', '1,1', '--matrix', '1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1')
    assert code == 2
    assert 'osp(V)' in err


def test_matrix_option():
    assert parse_matrix('1/2, i; 0, r2') == [[Scalar(Fraction(1, 2)), I], [0, R2]]
    for text in ('1,0;0', '', '1,0'):
        with pytest.raises(exceptions.UsageError):
            parse_matrix(text)


def test_star_command_writes_to_its_stream():
    out = io.StringIO()
    assert StarCommand(witt_basis_space(1, False, 0), ["(1 + i)*e1"], out=out).perform() == 0
    assert out.getvalue() == '(1 - i)*e1*\n'
