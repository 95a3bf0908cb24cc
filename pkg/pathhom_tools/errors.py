"""Exception hierarchy of the package. Every error raised on purpose derives from :class:`PathHomologyError`.
"""

import typing as t


class PathHomologyError(Exception):
    """Base class for all domain errors."""


# digraphs and maps

class SelfLoop(PathHomologyError):
    def __init__(self, vertex: str):
        super().__init__(f"Edge ({vertex}, {vertex}) is a self-loop.")
        self.vertex = vertex


class UnknownVertex(PathHomologyError):
    def __init__(self, name: str):
        super().__init__(f"Vertex \"{name}\" is not declared.")
        self.name = name


class DuplicateVertex(PathHomologyError):
    def __init__(self, name: str):
        super().__init__(f"Vertex name \"{name}\" is produced twice.")
        self.name = name


class CycleTooShort(PathHomologyError):
    def __init__(self, length: int):
        super().__init__(f"A cycle digraph needs at least 3 vertices, got {length}.")
        self.length = length


class MapMismatch(PathHomologyError):
    """Maps or loops that should share a source, target or base do not."""


class NotADigraphMap(PathHomologyError):
    def __init__(self, edge: tuple[str, str], image: tuple[str, str]):
        super().__init__(f"Edge {edge[0]}->{edge[1]} is sent to {image[0]}, {image[1]} which are neither equal "
                         "nor joined by an edge.")
        self.edge = edge
        self.image = image


class BudgetExceeded(PathHomologyError):
    def __init__(self, what: str, budget: int):
        super().__init__(f"Budget exceeded: more than {budget} {what}.")
        self.what = what
        self.budget = budget


# chains and homology

class NotACycle(PathHomologyError):
    """A chain expected to be a ∂-invariant cycle (or a digraph expected to be a cycle digraph) is not one."""


class NotInOmega2(PathHomologyError):
    """The chain is not an integral ∂-invariant 2-path."""


# homotopy

class StateSpaceTooLarge(PathHomologyError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"Map space has {size} candidate assignments, the exhaustive cap is {cap}.")
        self.size = size
        self.cap = cap


class NotARetraction(PathHomologyError):
    """The map is not a retraction onto a sub-digraph."""


class BadRestriction(PathHomologyError):
    """A cylinder map does not restrict to the expected maps on its two levels."""


# loops

class NotTraversable(PathHomologyError):
    def __init__(self, index: int, pair: tuple[str, str]):
        super().__init__(f"Letters {pair[0]} {pair[1]} at position {index} are neither equal nor adjacent.")
        self.index = index
        self.pair = pair


class BadEndpoints(PathHomologyError):
    """A loop word does not start and end at its base."""


# undirected graphs

class NotDouble(PathHomologyError):
    def __init__(self, edge: tuple[str, str]):
        super().__init__(f"Edge {edge[0]}->{edge[1]} has no reverse edge.")
        self.edge = edge


# triangulations

class NotSperner(PathHomologyError):
    """A triangulation violates one of the Sperner colouring conditions."""


class SideVerticesPresent(PathHomologyError):
    def __init__(self, vertices: t.Sequence[str]):
        super().__init__(f"Vertices {', '.join(vertices)} lie on the sides of the triangle, "
                         "run perturb_sides() first.")
        self.vertices = tuple(vertices)


class PerturbationFailed(PathHomologyError):
    """A side vertex could not be moved inside."""


# input

class ParseError(PathHomologyError):
    def __init__(self, message: str, line: t.Optional[int] = None, column: t.Optional[int] = None):
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{location}")
        self.line = line
        self.column = column
