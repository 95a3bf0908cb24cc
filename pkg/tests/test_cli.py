"""
The pathhom command line.

Core claims:
    - every command prints its one-line report and exits with 0
    - --json prints the same report as a JSON object
    - malformed input exits with 2, exhausted budgets with 3
"""

import json

import pytest

from pathhom_tools import cli, preferences
from pathhom_tools.dg_parser import format_digraph
from pathhom_tools.digraph import make_digraph


# -- Helpers -----------------------------------------------------------------

def _run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding='utf-8')
    return str(path)


# -- hom ---------------------------------------------------------------------

def test_hom_of_s5(capsys):
    code, out, _ = _run(capsys, 'hom', '@s5', '--max-dim', '2')

    assert code == cli.EXIT_OK
    assert out == ['H0: 1, H1: 1, H2: 0']


def test_hom_of_cube(capsys):
    code, out, _ = _run(capsys, 'hom', '@cube3', '--max-dim', '3')

    assert code == cli.EXIT_OK
    assert out == ['H0: 1, H1: 0, H2: 0, H3: 0']


def test_hom_json(capsys):
    code, out, _ = _run(capsys, 'hom', '@bipyramid', '--max-dim', '2', '--ring', 'z', '--json')
    data = json.loads('\n'.join(out))

    assert code == cli.EXIT_OK
    assert data['ring'] == 'z'
    assert data['betti'] == [1, 0, 1]
    assert data['torsion'] == [[], [], []]
    assert data['generators'] is None


def test_hom_generators(capsys):
    _, out, _ = _run(capsys, 'hom', '@s5', '--max-dim', '1', '--generators')

    assert out[0] == 'H0: 1, H1: 1'
    assert any(line.startswith('H1 generator: ') for line in out)


def test_hom_of_file(capsys, tmp_path):
    path = _write(tmp_path, 'line.dg', "v a\nv b\nv c\ne a b\ne c b\n")
    _, out, _ = _run(capsys, 'hom', path, '--max-dim', '1')

    assert out == ['H0: 1, H1: 0']


def test_path_budget_exit_code(capsys):
    code, out, err = _run(capsys, 'hom', '@cube3', '--path-budget', '1')

    assert code == cli.EXIT_BUDGET
    assert out == []
    assert err.startswith('error: ')


def test_preferences_are_restored(capsys):
    _run(capsys, 'hom', '@triangle', '--path-budget', '7')
    assert preferences.get_preferences().path_budget == preferences.Preferences().path_budget


# -- Input errors ------------------------------------------------------------

def test_syntax_error_exit_code(capsys, tmp_path):
    path = _write(tmp_path, 'bad.dg', "x a b\n")
    code, _, err = _run(capsys, 'hom', path)

    assert code == cli.EXIT_INPUT
    assert 'line 1' in err


def test_missing_file_exit_code(capsys, tmp_path):
    code, _, _ = _run(capsys, 'hom', str(tmp_path / 'missing.dg'))
    assert code == cli.EXIT_INPUT


@pytest.mark.parametrize('command, name', [('hom', 'bad.dg'), ('sperner', 'bad.json')])
def test_undecodable_file_exit_code(capsys, tmp_path, command, name):
    path = tmp_path / name
    path.write_bytes(b'v a\xff\xfe\n')
    code, out, err = _run(capsys, command, str(path))

    assert code == cli.EXIT_INPUT
    assert out == []
    assert 'UTF-8' in err


def test_unknown_fixture(capsys):
    code, _, err = _run(capsys, 'reduce', '@nothing')

    assert code == cli.EXIT_INPUT
    assert 'Unknown fixture' in err


def test_error_as_json(capsys):
    code, out, _ = _run(capsys, 'pi1', '@triangle', '--loop', 'a b', '--json')

    assert code == cli.EXIT_INPUT
    assert json.loads('\n'.join(out))['exit_code'] == cli.EXIT_INPUT


# -- reduce, retract, components ---------------------------------------------

def test_reduce_tree(capsys):
    code, out, _ = _run(capsys, 'reduce', '@tree')

    assert code == cli.EXIT_OK
    assert out[0].startswith('contractible: yes; removed: ')


def test_reduce_s5(capsys):
    _, out, _ = _run(capsys, 'reduce', '@s5')
    assert out == ['contractible: no; removed: none; residual: 0 1 2 3 4']


def test_reduce_json(capsys):
    _, out, _ = _run(capsys, 'reduce', '@simplex3', '--json')
    data = json.loads('\n'.join(out))

    assert data['verdict'] == 'contractible'
    assert len(data['residual']) == 1


def test_retract(capsys):
    code, out, _ = _run(capsys, 'retract', '@retract5', '--map', '0:1 2:3')

    assert code == cli.EXIT_OK
    assert out == ['deformation retraction: yes (one-step-forward)']


def test_retract_bad_map(capsys):
    code, _, _ = _run(capsys, 'retract', '@retract5', '--map', '0-1')
    assert code == cli.EXIT_INPUT


def test_components(capsys, tmp_path):
    graph = make_digraph('abc', [('b', 'a')])
    path = _write(tmp_path, 'parts.dg', format_digraph(graph))
    _, out, _ = _run(capsys, 'components', path)

    assert out == ['components: 2; {a b} {c}']


# -- product, cylinder -------------------------------------------------------

def test_product(capsys):
    code, out, _ = _run(capsys, 'product', '@triangle', '@double-edge')

    assert code == cli.EXIT_OK
    assert out[0] == 'v (a,0)'
    assert sum(line.startswith('v ') for line in out) == 6
    assert sum(line.startswith('e ') for line in out) == 3 * 2 + 3 * 2


def test_graph_product(capsys):
    _, out, _ = _run(capsys, 'product', '@graph-s3', '@graph-tree', '--json')
    data = json.loads('\n'.join(out))

    assert data['mode'] == 'graph'
    assert len(data['vertices']) == 18


def test_cylinder(capsys):
    _, out, _ = _run(capsys, 'cylinder', '@triangle')

    assert out[:2] == ['v (a,0)', 'v (a,1)']
    assert sum(line.startswith('e ') for line in out) == 3 + 3 + 3


# -- pi1 ---------------------------------------------------------------------

def test_pi1_triangle(capsys):
    code, out, _ = _run(capsys, 'pi1', '@triangle', '--loop', 'a b c a')

    assert code == cli.EXIT_OK
    assert out == ['reduced: a; hurewicz: trivial']


def test_pi1_s5(capsys):
    _, out, _ = _run(capsys, 'pi1', '@s5', '--loop', '0 1 2 3 4 0', '--loop', '0')

    assert out == ['reduced: 0 1 2 3 4 0; hurewicz: nontrivial', 'equivalent: no (hurewicz)']


def test_pi1_equivalence_trace(capsys):
    _, out, _ = _run(capsys, 'pi1', '@pinched-cycle', '--loop', '0 1 2 3 4 0', '--loop', '0 1 4 0')

    assert out[0] == 'reduced: 0 1 4 0; hurewicz: nontrivial'
    assert out[1] == 'equivalent: yes (search)'
    assert out[2] == '  (iii) at 1: 1 2 3 4 -> 1 4'


def test_pi1_too_many_loops(capsys):
    code, _, _ = _run(capsys, 'pi1', '@triangle', '--loop', 'a', '--loop', 'a', '--loop', 'a')
    assert code == cli.EXIT_INPUT


# -- sperner -----------------------------------------------------------------

def test_sperner_generate(capsys):
    code, out, _ = _run(capsys, 'sperner', '--generate', '3', '--seed', '4', '--count', '2')

    assert code == cli.EXIT_OK
    assert [line.split(':')[0] for line in out] == ['seed 4', 'seed 5']
    assert all(line.endswith('sperner: valid; maps: ok') for line in out)


def test_sperner_needs_seed(capsys):
    code, _, _ = _run(capsys, 'sperner', '--generate', '3')
    assert code == cli.EXIT_INPUT


def test_sperner_fixture(capsys):
    _, out, _ = _run(capsys, 'sperner', '@sperner-k4', '--json')
    data = json.loads('\n'.join(out))

    assert data['sperner']
    assert len(data['tricolor']) == 3
    assert all(data['maps'].values())


def test_sperner_file(capsys, tmp_path):
    document = {'vertices': ['A', 'B', 'C'], 'triangles': [['A', 'B', 'C']], 'colors': {'A': 1, 'B': 1, 'C': 3},
                'corners': ['A', 'B', 'C']}
    path = _write(tmp_path, 'tri.json', json.dumps(document))
    _, out, _ = _run(capsys, 'sperner', path)

    assert out == ['tricolor: none; sperner: invalid (Corner B = B must have colour 2.)']


def test_sperner_rejects_digraphs(capsys):
    code, _, _ = _run(capsys, 'sperner', '@triangle')
    assert code == cli.EXIT_INPUT


@pytest.mark.parametrize('command', ['hom', 'reduce', 'cylinder', 'components'])
def test_missing_input_is_a_usage_error(command):
    with pytest.raises(SystemExit):
        cli.main([command])
