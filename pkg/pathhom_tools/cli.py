"""Command line interface: ``pathhom <command> INPUT [options]``.

INPUT is a .dg file, a triangulation .json file or ``@name`` for a built-in fixture. Exit codes: 0 on success
(inconclusive verdicts included), 2 for malformed input, 3 when a search or enumeration budget is exceeded.
"""

import argparse
import dataclasses
import json
import sys
import traceback
import typing as t

from . import enums
from . import errors
from . import preferences
from . import utils
from .dg_parser import format_digraph, graph_to_json
from .digraph import DigraphMap, cartesian_product, cylinder, induced_subdigraph
from .documents import load_document
from .graphs import UGraph, graph_product
from .homology import homology
from .homotopy import find_reduction, is_deformation_retraction
from .loops import connected_components, hurewicz_class, loops_equivalent, make_loop, reduce_loop
from .sperner import Triangulation, find_tricolor_triangle, generate_subdivision, perturb_sides, verify_sperner_maps


EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3


@dataclasses.dataclass
class Report:
    #: Human readable output.
    lines: list[str]

    #: The same report for --json.
    data: dict[str, t.Any]


def _status(status: enums.SearchStatus) -> str:
    return status.name.lower()


def cmd_hom(args: argparse.Namespace) -> Report:
    document = load_document(args.input)
    graph = document.digraph
    ring = enums.Ring.Z if args.ring == 'z' else enums.Ring.Q

    result = homology(graph, args.max_dim, ring, generators=args.generators)
    lines = [result.format()]
    generators = None

    if result.generators is not None:
        generators = [[chain.format(graph) for chain in level] for level in result.generators]
        for p, level in enumerate(generators):
            lines.extend(f"H{p} generator: {chain}" for chain in level)

    return Report(lines, {'ring': args.ring, 'betti': result.betti, 'torsion': result.torsion,
                          'generators': generators})


def cmd_reduce(args: argparse.Namespace) -> Report:
    trace = find_reduction(load_document(args.input).digraph)

    removed = [f"{step.vertex}->{step.witness} ({step.rule.value})" for step in trace.steps]
    lines = [f"contractible: {'yes' if trace.contractible else 'no'}; removed: {', '.join(removed) or 'none'}; "
             f"residual: {' '.join(trace.residual.names)}"]

    return Report(lines, {
        'verdict': trace.verdict.value,
        'removed': [{'vertex': s.vertex, 'witness': s.witness, 'rule': s.rule.value} for s in trace.steps],
        'residual': list(trace.residual.names),
    })


def _dump(graph: t.Any) -> Report:
    return Report(format_digraph(graph).rstrip('\n').split('\n'), graph_to_json(graph))


def cmd_product(args: argparse.Namespace) -> Report:
    first, second = load_document(args.first), load_document(args.second)

    if isinstance(first.payload, UGraph) and isinstance(second.payload, UGraph):
        return _dump(graph_product(first.payload, second.payload))

    return _dump(cartesian_product(first.digraph, second.digraph))


def cmd_cylinder(args: argparse.Namespace) -> Report:
    return _dump(cylinder(load_document(args.input).digraph))


def cmd_pi1(args: argparse.Namespace) -> Report:
    if len(args.loop) > 2:
        raise errors.ParseError("--loop may be given at most twice.")

    graph = load_document(args.input).digraph
    first = make_loop(graph, args.loop[0])
    reduced = reduce_loop(first)
    hurewicz = hurewicz_class(first)

    lines = [f"reduced: {reduced}; hurewicz: {'trivial' if hurewicz.trivial else 'nontrivial'}"]
    data: dict[str, t.Any] = {'reduced': reduced.names, 'hurewicz': 'trivial' if hurewicz.trivial else 'nontrivial',
                              'chi': hurewicz.chi.format(graph)}

    if len(args.loop) == 2:
        second = make_loop(graph, args.loop[1])
        result = loops_equivalent(first, second, args.max_len, args.max_steps)
        steps = [step.format(graph) for step in result.trace or []]

        lines.append(f"equivalent: {_status(result.status)} ({result.reason})")
        lines.extend(f"  {step}" for step in steps)
        data['equivalent'] = {'status': _status(result.status), 'reason': result.reason, 'trace': steps,
                              'explored': result.explored}

    return Report(lines, data)


def _sperner_instance(tri: Triangulation) -> dict[str, t.Any]:
    tricolor = find_tricolor_triangle(tri)
    entry: dict[str, t.Any] = {
        'tricolor': list(tricolor.triangle) if tricolor.found else None,
        'sperner': tricolor.is_sperner,
        'violations': list(tricolor.violations),
        'maps': None,
    }

    if tricolor.is_sperner:
        report = verify_sperner_maps(perturb_sides(tri))
        entry['maps'] = {'color_map': report.color_map_ok, 'corner_map': report.corner_map_ok,
                         'composite_is_identity': report.composite_is_identity,
                         'boundary_loop_nontrivial': report.boundary_loop_nontrivial}

    return entry


def _sperner_line(label: str, entry: dict[str, t.Any]) -> str:
    tricolor = ' '.join(entry['tricolor']) if entry['tricolor'] else 'none'
    line = f"{label}tricolor: {tricolor}; sperner: {'valid' if entry['sperner'] else 'invalid'}"

    if entry['maps'] is not None:
        line += f"; maps: {'ok' if all(entry['maps'].values()) else 'failed'}"
    elif entry['violations']:
        line += f" ({entry['violations'][0]})"

    return line


def cmd_sperner(args: argparse.Namespace) -> Report:
    if args.generate is None:
        if args.input is None:
            raise errors.ParseError("Pass a triangulation or --generate K --seed S.")

        document = load_document(args.input)
        if not isinstance(document.payload, Triangulation):
            raise errors.ParseError(f"{args.input} is not a triangulation.")

        entry = _sperner_instance(document.payload)
        return Report([_sperner_line('', entry)], entry)

    if args.seed is None:
        raise errors.ParseError("--generate needs --seed.")

    instances = []
    for i in utils.progress(range(args.count), total=args.count, desc='sperner instances'):
        entry = _sperner_instance(generate_subdivision(args.generate, args.seed + i))
        instances.append({'seed': args.seed + i, **entry})

    lines = [_sperner_line(f"seed {entry['seed']}: ", entry) for entry in instances]
    return Report(lines, {'k': args.generate, 'instances': instances})


def _parse_assignment(text: str) -> dict[str, str]:
    mapping = {}
    for item in text.split():
        source, sep, image = item.partition(':')
        if not sep or not source or not image:
            raise errors.ParseError(f"Map entries look like x:y, got \"{item}\".")
        mapping[source] = image

    return mapping


def cmd_retract(args: argparse.Namespace) -> Report:
    graph = load_document(args.input).digraph
    moved = _parse_assignment(args.map)
    for name in moved:
        graph.index(name)

    full = {name: moved.get(name, name) for name in graph.names}

    target = induced_subdigraph(graph, set(full.values()))
    result = is_deformation_retraction(DigraphMap.from_names(graph, target, full))

    line = f"deformation retraction: {'yes' if result else 'no'} ({result.criterion.value})"
    if result.search is not None and result.search.status == enums.SearchStatus.Inconclusive:
        line += "; search: inconclusive"

    return Report([line], {'deformation_retraction': result.is_deformation_retraction,
                           'criterion': result.criterion.value, 'target': list(target.names),
                           'search': None if result.search is None else _status(result.search.status)})


def cmd_components(args: argparse.Namespace) -> Report:
    components = connected_components(load_document(args.input).digraph)
    groups = ' '.join('{' + ' '.join(component) + '}' for component in components)
    return Report([f"components: {len(components)}; {groups}"], {'components': components})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help="print the report as JSON")
    common.add_argument('--verbose', action='store_true', help="print diagnostics to stderr")
    common.add_argument('--debug', action='store_true', help="print tracebacks of errors")
    common.add_argument('--progress', action='store_true', help="show progress bars")
    common.add_argument('--path-budget', type=int, help="maximal number of allowed paths per dimension")

    parser = argparse.ArgumentParser(prog='pathhom', description="Path homology, homotopy and loops of digraphs.")
    commands = parser.add_subparsers(dest='command', required=True)

    hom = commands.add_parser('hom', parents=[common], help="path homology")
    hom.add_argument('input')
    hom.add_argument('--max-dim', type=int, default=3)
    hom.add_argument('--ring', choices=('q', 'z'), default='q')
    hom.add_argument('--generators', action='store_true')
    hom.set_defaults(handler=cmd_hom)

    reduce = commands.add_parser('reduce', parents=[common], help="contractibility by vertex reduction")
    reduce.add_argument('input')
    reduce.set_defaults(handler=cmd_reduce)

    product = commands.add_parser('product', parents=[common], help="Cartesian product of two inputs")
    product.add_argument('first')
    product.add_argument('second')
    product.set_defaults(handler=cmd_product)

    cyl = commands.add_parser('cylinder', parents=[common], help="cylinder G⊡I")
    cyl.add_argument('input')
    cyl.set_defaults(handler=cmd_cylinder)

    pi1 = commands.add_parser('pi1', parents=[common], help="loop reduction, equivalence and Hurewicz class")
    pi1.add_argument('input')
    pi1.add_argument('--loop', action='append', required=True, help="loop word, e.g. \"a b c a\"")
    pi1.add_argument('--max-len', type=int)
    pi1.add_argument('--max-steps', type=int)
    pi1.set_defaults(handler=cmd_pi1)

    sperner = commands.add_parser('sperner', parents=[common], help="three-colour triangles")
    sperner.add_argument('input', nargs='?')
    sperner.add_argument('--generate', type=int, metavar='K', help="random Sperner colouring of a K-subdivision")
    sperner.add_argument('--seed', type=int)
    sperner.add_argument('--count', type=int, default=1, help="number of generated instances")
    sperner.set_defaults(handler=cmd_sperner)

    retract = commands.add_parser('retract', parents=[common], help="check a deformation retraction")
    retract.add_argument('input')
    retract.add_argument('--map', required=True, help="moved vertices as \"x:y ...\", other vertices stay")
    retract.set_defaults(handler=cmd_retract)

    components = commands.add_parser('components', parents=[common], help="connected components")
    components.add_argument('input')
    components.set_defaults(handler=cmd_components)

    return parser


def _emit(report: Report, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.data, indent=2, ensure_ascii=False))
    else:
        print('\n'.join(report.lines))


def _fail(error: Exception, code: int, args: argparse.Namespace) -> int:
    if args.debug:
        traceback.print_exc()

    print(f"error: {error}", file=sys.stderr)
    if args.json:
        print(json.dumps({'error': str(error), 'exit_code': code}, ensure_ascii=False))

    return code


def main(argv: t.Optional[t.Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    changes: dict[str, t.Any] = {'verbose': args.verbose, 'debug': args.debug, 'progress': args.progress}
    if args.path_budget is not None:
        changes['path_budget'] = args.path_budget

    with preferences.override_preferences(**changes):
        try:
            report = args.handler(args)
        except (errors.BudgetExceeded, errors.StateSpaceTooLarge) as e:
            return _fail(e, EXIT_BUDGET, args)
        except (errors.PathHomologyError, OSError) as e:
            return _fail(e, EXIT_INPUT, args)

    _emit(report, args.json)
    return EXIT_OK


__all__ = (
    'EXIT_OK',
    'EXIT_INPUT',
    'EXIT_BUDGET',
    'Report',
    'build_parser',
    'main',
)
