"""Input documents of the command line: .dg files, triangulation JSON files and built-in fixtures.
"""

import dataclasses
import json
import os

from . import dg_parser
from . import enums
from . import errors
from . import fixtures
from . import utils
from .digraph import Digraph
from .graphs import UGraph, to_double_digraph
from .sperner import Triangulation, orient, triangulation_from_json


@dataclasses.dataclass(frozen=True)
class InputDocument:
    mode: enums.DocumentMode
    payload: Digraph | UGraph | Triangulation
    source: str

    @property
    def digraph(self) -> Digraph:
        """The digraph every computation runs on: the digraph itself, the double digraph of a graph or the
        colour-oriented digraph of a triangulation.
        """
        match self.payload:
            case Digraph():
                return self.payload
            case UGraph():
                return to_double_digraph(self.payload)
            case Triangulation():
                return orient(self.payload, check=False)
            case _:
                raise NotImplementedError(type(self.payload))


def _mode_of(payload: Digraph | UGraph | Triangulation) -> enums.DocumentMode:
    match payload:
        case UGraph():
            return enums.DocumentMode.Graph
        case Triangulation():
            return enums.DocumentMode.Triangulation
        case _:
            return enums.DocumentMode.Digraph


def load_triangulation(path: str) -> Triangulation:
    """
    :raises OSError: Raised when the file could not be opened.
    :raises ParseError: Raised for undecodable bytes, invalid JSON or documents of the wrong shape.
    """
    with open(path, mode='r', encoding='utf-8') as f:
        try:
            data = json.load(f)
        except UnicodeDecodeError as e:
            raise errors.ParseError(f"Failed decoding {path} as UTF-8 at byte {e.start}.") from e
        except json.JSONDecodeError as e:
            raise errors.ParseError(f"Failed parsing {path}: {e.msg}.", e.lineno, e.colno) from e

    return triangulation_from_json(data)


def load_document(location: str) -> InputDocument:
    """Loads ``@name`` fixtures, ``*.json`` triangulations and .dg files (any other path).

    :raises OSError: Raised when a file could not be opened.
    :raises ParseError: Raised for malformed input or unknown fixtures.
    """
    if location.startswith('@'):
        payload = fixtures.get_fixture(location[1:])
        utils.verbose_print(f"Using built-in fixture {location[1:]}.")
        return InputDocument(_mode_of(payload), payload, location)

    if os.path.splitext(location)[1].lower() == '.json':
        return InputDocument(enums.DocumentMode.Triangulation, load_triangulation(location), location)

    _, document = dg_parser.parse_dg(location)
    return InputDocument(document.mode, document.build(), location)


__all__ = (
    'InputDocument',
    'load_triangulation',
    'load_document',
)
