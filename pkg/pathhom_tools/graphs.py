"""Undirected graphs and their double digraphs.

Every undirected edge v∼w becomes the pair of edges v → w, w → v. Homology, homotopy and loops of a graph are those
of its double digraph.
"""

import typing as t

from ordered_set import OrderedSet

from . import enums
from . import errors
from .digraph import Digraph, DigraphMap, pair_name, unique_names
from .homology import HomologyResult, homology
from .homotopy import HomotopyResult, ReductionTrace, find_reduction, homotopic, one_step_homotopic


class UGraph:
    """Immutable finite undirected graph without loops. Edges are stored as index pairs (i, j) with i < j.
    """

    _names: OrderedSet
    _edges: tuple[tuple[int, int], ...]
    _adjacency: tuple[frozenset[int], ...]

    def __init__(self, vertices: t.Iterable[str], edges: t.Iterable[tuple[str, str]] = ()) -> None:
        """Build a validated graph.

        :raises SelfLoop: Raised for an edge {v, v}.
        :raises UnknownVertex: Raised for edges with undeclared endpoints.
        """
        names = OrderedSet(str(v) for v in vertices)
        pairs = []

        for a, b in edges:
            a, b = str(a), str(b)
            for name in (a, b):
                if name not in names:
                    raise errors.UnknownVertex(name)

            if a == b:
                raise errors.SelfLoop(a)

            pairs.append((names.index(a), names.index(b)))

        self._init(names, pairs)

    @classmethod
    def from_indices(cls, names: t.Iterable[str], edges: t.Iterable[tuple[int, int]]) -> 'UGraph':
        graph = cls.__new__(cls)
        graph._init(unique_names(names), edges)
        return graph

    def _init(self, names: OrderedSet, edges: t.Iterable[tuple[int, int]]) -> None:
        self._names = names
        self._edges = tuple(sorted({(min(a, b), max(a, b)) for a, b in edges}))

        adjacency: list[set[int]] = [set() for _ in range(len(names))]
        for a, b in self._edges:
            adjacency[a].add(b)
            adjacency[b].add(a)

        self._adjacency = tuple(frozenset(s) for s in adjacency)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._names)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def named_edges(self) -> list[tuple[str, str]]:
        return [(self.name(a), self.name(b)) for a, b in self._edges]

    def __len__(self) -> int:
        return len(self._names)

    def index(self, name: str) -> int:
        try:
            return self._names.index(str(name))
        except KeyError as e:
            raise errors.UnknownVertex(str(name)) from e

    def name(self, index: int) -> str:
        return self._names[index]

    def adjacent(self, x: int, y: int) -> bool:
        return y in self._adjacency[x]

    def neighbors(self, vertex: int) -> tuple[int, ...]:
        return tuple(sorted(self._adjacency[vertex]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UGraph):
            return NotImplemented

        return self.names == other.names and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.names, self._edges))

    def __repr__(self) -> str:
        edges = ', '.join(f"{a}-{b}" for a, b in self.named_edges)
        return f"UGraph([{', '.join(self.names)}], [{edges}])"


class GraphMap:
    """Vertex map f with v∼w ⇒ f(v) = f(w) or f(v)∼f(w).
    """

    def __init__(self, source: UGraph, target: UGraph, assignment: t.Sequence[int]) -> None:
        """
        :raises MapMismatch: Raised when the assignment does not cover the source or leaves the target.
        :raises NotADigraphMap: Raised when an edge is sent to two distinct non-adjacent vertices.
        """
        assignment = tuple(assignment)
        if len(assignment) != len(source) or any(not 0 <= v < len(target) for v in assignment):
            raise errors.MapMismatch("Assignment must send every source vertex to a target vertex.")

        for a, b in source.edges:
            fa, fb = assignment[a], assignment[b]
            if fa != fb and not target.adjacent(fa, fb):
                raise errors.NotADigraphMap((source.name(a), source.name(b)), (target.name(fa), target.name(fb)))

        self._source = source
        self._target = target
        self._assignment = assignment

    @classmethod
    def from_names(cls, source: UGraph, target: UGraph, assignment: t.Mapping[str, str]) -> 'GraphMap':
        return cls(source, target, [target.index(assignment[name]) for name in source.names])

    @property
    def source(self) -> UGraph:
        return self._source

    @property
    def target(self) -> UGraph:
        return self._target

    @property
    def assignment(self) -> tuple[int, ...]:
        return self._assignment

    def __call__(self, vertex: int) -> int:
        return self._assignment[vertex]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphMap):
            return NotImplemented

        return (self._source, self._target, self._assignment) == (other._source, other._target, other._assignment)

    def __hash__(self) -> int:
        return hash(self._assignment)


def make_ugraph(vertices: t.Iterable[str], edges: t.Iterable[tuple[str, str]]) -> UGraph:
    return UGraph(vertices, edges)


def cycle_graph(n: int) -> UGraph:
    """Undirected cycle on 0..n-1."""
    if n < 3:
        raise errors.CycleTooShort(n)

    return UGraph.from_indices([str(i) for i in range(n)], [(i, (i + 1) % n) for i in range(n)])


def to_double_digraph(graph: UGraph) -> Digraph:
    """The functor O: v∼w becomes v → w and w → v."""
    return Digraph.from_indices(graph.names, [e for a, b in graph.edges for e in ((a, b), (b, a))])


def from_double_digraph(graph: Digraph) -> UGraph:
    """The inverse functor on double digraphs.

    :raises NotDouble: Raised for the first edge without its reverse.
    """
    for a, b in graph.edges:
        if not graph.has_edge(b, a):
            raise errors.NotDouble((graph.name(a), graph.name(b)))

    return UGraph.from_indices(graph.names, graph.edges)


def to_double_map(f: GraphMap) -> DigraphMap:
    return DigraphMap(to_double_digraph(f.source), to_double_digraph(f.target), f.assignment)


def graph_product(first: UGraph, second: UGraph) -> UGraph:
    """Cartesian product: (x,y)∼(x',y') iff x = x' and y∼y', or x∼x' and y = y'. Vertex (x, y) has index
    x·|V_H| + y.
    """
    width = len(second)
    names = [pair_name(x, y) for x in first.names for y in second.names]

    edges = [(x * width + a, x * width + b) for x in range(len(first)) for a, b in second.edges]
    edges.extend((a * width + y, b * width + y) for a, b in first.edges for y in range(width))

    return UGraph.from_indices(names, edges)


def graph_homology(graph: UGraph, p_max: int, ring: enums.Ring = enums.Ring.Q, generators: bool = False,
                   budget: t.Optional[int] = None) -> HomologyResult:
    """H_p of the graph, defined as H_p of its double digraph."""
    return homology(to_double_digraph(graph), p_max, ring, generators, budget)


def graph_one_step_homotopic(f: GraphMap, g: GraphMap) -> bool:
    """f(x) = g(x) or f(x)∼g(x) for every vertex x."""
    return one_step_homotopic(to_double_map(f), to_double_map(g)) != enums.HomotopyDirection.No


def graph_homotopic(f: GraphMap, g: GraphMap, budget: t.Optional[int] = None) -> HomotopyResult:
    return homotopic(to_double_map(f), to_double_map(g), budget)


def graph_reduce(graph: UGraph) -> ReductionTrace:
    """Vertex reduction of the double digraph. In a double digraph (abi) says that every neighbour of a other
    than b0 is a neighbour of b0.
    """
    return find_reduction(to_double_digraph(graph))


__all__ = (
    'UGraph',
    'GraphMap',
    'make_ugraph',
    'cycle_graph',
    'to_double_digraph',
    'from_double_digraph',
    'to_double_map',
    'graph_product',
    'graph_homology',
    'graph_one_step_homotopic',
    'graph_homotopic',
    'graph_reduce',
)
