"""Named reference digraphs, graphs and triangulations, reachable from the command line as ``@name``.
"""

import typing as t

from . import errors
from .digraph import Digraph, cube_digraph, cycle_digraph, make_digraph, simplex_digraph
from .graphs import UGraph, cycle_graph, make_ugraph
from .sperner import Triangulation, generate_subdivision


def triangle() -> Digraph:
    """a → b → c with a → c."""
    return make_digraph('abc', [('a', 'b'), ('b', 'c'), ('a', 'c')])


def square() -> Digraph:
    """0 → 1 → 3 and 0 → 2 → 3."""
    return make_digraph('0123', [('0', '1'), ('0', '2'), ('1', '3'), ('2', '3')])


def double_edge() -> Digraph:
    return make_digraph('01', [('0', '1'), ('1', '0')])


def bipyramid() -> Digraph:
    """Cyclic triangle 1 → 2 → 3 → 1 with two apexes 4, 5 receiving an edge from every base vertex."""
    edges = [('1', '2'), ('2', '3'), ('3', '1')]
    edges.extend((base, apex) for apex in '45' for base in '123')
    return make_digraph('12345', edges)


def octahedron() -> Digraph:
    """Sources 0, 1, middle square 2, 3 and sinks 4, 5."""
    return make_digraph('012345', [('0', '2'), ('0', '3'), ('1', '2'), ('1', '3'),
                                   ('2', '4'), ('2', '5'), ('3', '4'), ('3', '5')])


def retract5() -> Digraph:
    """Directed triangle 1 → 3 → 4 → 1 with the vertices 0 and 2 attached; r(0) = 1, r(2) = 3 retracts it."""
    return make_digraph('01234', [('0', '1'), ('0', '2'), ('1', '3'), ('2', '3'), ('3', '4'), ('4', '0'),
                                  ('4', '1')])


def retract5_target() -> Digraph:
    return make_digraph('134', [('1', '3'), ('3', '4'), ('4', '1')])


def pinched_cycle() -> Digraph:
    """A square 1 → 2 → 3, 1 → 4 → 3 glued to the cyclic triangle 0 → 1 → 4 → 0.

    The loop 0 1 2 3 4 0 is C-homotopic to 0 1 4 0 and neither is trivial.
    """
    return make_digraph('01234', [('0', '1'), ('1', '2'), ('2', '3'), ('4', '3'), ('1', '4'), ('4', '0')])


def tree() -> Digraph:
    return make_digraph('012345', [('0', '1'), ('2', '1'), ('1', '3'), ('3', '4'), ('5', '3')])


def star_graph() -> UGraph:
    """Centre a joined to every other vertex, plus the edge b - c."""
    return make_ugraph('abcde', [('a', 'b'), ('a', 'c'), ('a', 'd'), ('a', 'e'), ('b', 'c')])


def tree_graph() -> UGraph:
    return make_ugraph('012345', [('0', '1'), ('1', '2'), ('1', '3'), ('3', '4'), ('3', '5')])


#: Fixture name -> factory.
FIXTURES: dict[str, t.Callable[[], Digraph | UGraph | Triangulation]] = {
    'triangle': triangle,
    'square': square,
    'double-edge': double_edge,
    's3': lambda: cycle_digraph([True] * 3),
    's4': lambda: cycle_digraph([True] * 4),
    's5': lambda: cycle_digraph([True] * 5),
    'simplex3': lambda: simplex_digraph(3),
    'cube2': lambda: cube_digraph(2),
    'cube3': lambda: cube_digraph(3),
    'bipyramid': bipyramid,
    'octahedron': octahedron,
    'retract5': retract5,
    'retract5-target': retract5_target,
    'pinched-cycle': pinched_cycle,
    'tree': tree,
    'graph-s3': lambda: cycle_graph(3),
    'graph-s5': lambda: cycle_graph(5),
    'graph-star': star_graph,
    'graph-tree': tree_graph,
    'sperner-k4': lambda: generate_subdivision(4, 0),
}


def get_fixture(name: str) -> Digraph | UGraph | Triangulation:
    """
    :raises ParseError: Raised for unknown fixture names.
    """
    try:
        return FIXTURES[name]()
    except KeyError as e:
        raise errors.ParseError(f"Unknown fixture \"{name}\", expected one of: {', '.join(FIXTURES)}.") from e


__all__ = (
    'FIXTURES',
    'get_fixture',
    'triangle',
    'square',
    'double_edge',
    'bipyramid',
    'octahedron',
    'retract5',
    'retract5_target',
    'pinched_cycle',
    'tree',
    'star_graph',
    'tree_graph',
)
