import dataclasses
import os
import typing as t

import lark

from . import enums
from . import errors
from . import utils
from .digraph import Digraph
from .graphs import UGraph


with open(os.path.join(os.path.dirname(__file__), 'dg_grammar.lark'), mode='r', encoding='utf-8') as grammar_f:
    lark_parser = lark.Lark(grammar_f, parser='earley', propagate_positions=True, ambiguity='resolve')


@dataclasses.dataclass(frozen=True)
class DgDocument:
    """Declarations of a .dg file in file order.
    """

    mode: enums.DocumentMode
    vertices: list[str]
    edges: list[tuple[str, str]]

    def build(self) -> Digraph | UGraph:
        if self.mode == enums.DocumentMode.Graph:
            return UGraph(self.vertices, self.edges)

        return Digraph(self.vertices, self.edges)


def parse_dg_text(text: str, source: str = '<string>') -> tuple[lark.Tree, DgDocument]:
    """Parses the text of a .dg file.

    Vertices are declared with ``v NAME`` and their order is the basis order of every later computation.
    ``e A B`` lines make a digraph, ``u A B`` lines an undirected graph; mixing both is an error.

    :param text: File contents.
    :param source: Name used in messages.
    :raises ParseError: Raised on syntax errors, mixed edge kinds and edges with undeclared endpoints.
    :return: The syntax tree and the declarations.
    """
    try:
        ast = lark_parser.parse(text)
    except lark.UnexpectedInput as e:
        line, column = getattr(e, 'line', None), getattr(e, 'column', None)
        raise errors.ParseError(f"Failed parsing {source}.", line if line and line > 0 else None,
                                column if column and column > 0 else None) from e

    vertices: list[str] = []
    declared: set[str] = set()
    edges: list[tuple[str, str]] = []
    kinds: set[str] = set()

    for statement in ast.children:
        match statement.data:
            case 'vertex_decl':
                _, name = statement.children
                if name.value not in declared:
                    declared.add(name.value)
                    vertices.append(name.value)

            case 'edge_decl' | 'uedge_decl':
                keyword, tail, head = statement.children
                kinds.add(statement.data)

                if len(kinds) > 1:
                    raise errors.ParseError(f"{source} mixes directed (e) and undirected (u) edges.",
                                            keyword.line, keyword.column)

                for token in (tail, head):
                    if token.value not in declared:
                        raise errors.ParseError(f"Vertex \"{token.value}\" is not declared.", token.line,
                                                token.column)

                edges.append((tail.value, head.value))

            case _:
                raise NotImplementedError(statement.data)

    mode = enums.DocumentMode.Graph if 'uedge_decl' in kinds else enums.DocumentMode.Digraph
    utils.verbose_print(f"Parsed {source}: {len(vertices)} vertices, {len(edges)} edges ({mode.value}).")

    return ast, DgDocument(mode, vertices, edges)


def parse_dg(path: str) -> tuple[lark.Tree, DgDocument]:
    """Parses a .dg file.

    :raises OSError: Raised when the file could not be opened.
    :raises ParseError: Raised when the file is not valid UTF-8, see also :func:`parse_dg_text`.
    """
    utils.verbose_print(f"Parsing {path}...")

    with open(path, mode='r', encoding='utf-8') as f:
        try:
            text = f.read()
        except UnicodeDecodeError as e:
            raise errors.ParseError(f"Failed decoding {path} as UTF-8 at byte {e.start}.") from e

    return parse_dg_text(text, path)


def format_digraph(graph: Digraph | UGraph) -> str:
    """Renders a digraph (``e`` lines) or graph (``u`` lines) in the .dg format."""
    keyword = 'u' if isinstance(graph, UGraph) else 'e'
    lines = [f"v {name}" for name in graph.names]
    lines.extend(f"{keyword} {a} {b}" for a, b in graph.named_edges)
    return '\n'.join(lines) + '\n'


def graph_to_json(graph: Digraph | UGraph) -> dict[str, t.Any]:
    return {
        'mode': (enums.DocumentMode.Graph if isinstance(graph, UGraph) else enums.DocumentMode.Digraph).value,
        'vertices': list(graph.names),
        'edges': [list(edge) for edge in graph.named_edges],
    }


__all__ = (
    'DgDocument',
    'parse_dg_text',
    'parse_dg',
    'format_digraph',
    'graph_to_json',
)
