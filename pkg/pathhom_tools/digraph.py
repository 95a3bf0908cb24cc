"""Finite digraphs, digraph maps and the standard constructions on them.

Vertices are opaque strings externally and dense integer indices internally. The index order is the declaration
order and fixes every basis ordering downstream.
"""

import functools
import itertools
import typing as t

from ordered_set import OrderedSet

from . import errors


#: Names of the two vertices of the line digraph I used by cylinders.
CYLINDER_LEVELS = ('0', '1')


def pair_name(first: str, second: str) -> str:
    """Canonical name of a product vertex.
    """
    return f"({first},{second})"


def unique_names(names: t.Iterable[str]) -> OrderedSet:
    """Vertex names of a construction, which must all differ.

    :raises DuplicateVertex: Raised when two vertices get the same name, e.g. pair_name('a', 'b,c') and
        pair_name('a,b', 'c').
    """
    result = OrderedSet()
    for name in names:
        if name in result:
            raise errors.DuplicateVertex(name)

        result.add(name)

    return result


class Digraph:
    """Immutable finite digraph without self-loops.
    """

    _names: OrderedSet
    _edges: tuple[tuple[int, int], ...]
    _edge_set: frozenset[tuple[int, int]]
    _out: tuple[tuple[int, ...], ...]
    _in: tuple[tuple[int, ...], ...]

    def __init__(self, vertices: t.Iterable[str], edges: t.Iterable[tuple[str, str]] = ()) -> None:
        """Build a validated digraph from vertex names and named edges.

        :param vertices: Vertex names in declaration order. Repeated names are declared once.
        :param edges: Directed edges as (tail, head) name pairs. Duplicates are collapsed.
        :raises SelfLoop: Raised for an edge (v, v).
        :raises UnknownVertex: Raised for an edge endpoint that is not declared.
        """
        names = OrderedSet(str(v) for v in vertices)

        index_edges = []
        for tail, head in edges:
            tail, head = str(tail), str(head)

            for endpoint in (tail, head):
                if endpoint not in names:
                    raise errors.UnknownVertex(endpoint)

            if tail == head:
                raise errors.SelfLoop(tail)

            index_edges.append((names.index(tail), names.index(head)))

        self._init(names, index_edges)

    @classmethod
    def from_indices(cls, names: t.Iterable[str], edges: t.Iterable[tuple[int, int]]) -> 'Digraph':
        """Build a digraph from vertex names and index edges. Used by constructions that already guarantee
        validity.

        :param names: Vertex names.
        :param edges: Edges as index pairs.
        :raises SelfLoop: Raised for an edge (v, v).
        :raises DuplicateVertex: Raised when two vertices share a name.
        :return: Digraph.
        """
        graph = cls.__new__(cls)
        names = unique_names(names)
        edges = list(edges)

        for tail, head in edges:
            if tail == head:
                raise errors.SelfLoop(names[tail])

        graph._init(names, edges)
        return graph

    def _init(self, names: OrderedSet, edges: t.Iterable[tuple[int, int]]) -> None:
        self._names = names
        self._edge_set = frozenset(edges)
        self._edges = tuple(sorted(self._edge_set))

        out_lists: list[list[int]] = [[] for _ in names]
        in_lists: list[list[int]] = [[] for _ in names]

        for tail, head in self._edges:
            out_lists[tail].append(head)
            in_lists[head].append(tail)

        self._out = tuple(tuple(sorted(lst)) for lst in out_lists)
        self._in = tuple(tuple(sorted(lst)) for lst in in_lists)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._names)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as index pairs, ordered lexicographically by vertex index."""
        return self._edges

    @property
    def named_edges(self) -> list[tuple[str, str]]:
        return [(self._names[a], self._names[b]) for a, b in self._edges]

    def __len__(self) -> int:
        return len(self._names)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def index(self, name: str) -> int:
        """Index of a vertex.

        :raises UnknownVertex: Raised when the name is not declared.
        """
        try:
            return self._names.index(str(name))
        except KeyError as e:
            raise errors.UnknownVertex(str(name)) from e

    def name(self, index: int) -> str:
        return self._names[index]

    def has_vertex(self, name: str) -> bool:
        return str(name) in self._names

    def has_edge(self, tail: int, head: int) -> bool:
        return (tail, head) in self._edge_set

    def arrow_eq(self, x: int, y: int) -> bool:
        """The relation x ⃗= y: either x = y or x → y.
        """
        return x == y or (x, y) in self._edge_set

    def adjacent(self, x: int, y: int) -> bool:
        """True if x and y are joined by an edge in either direction."""
        return (x, y) in self._edge_set or (y, x) in self._edge_set

    def out_neighbors(self, vertex: int) -> tuple[int, ...]:
        return self._out[vertex]

    def in_neighbors(self, vertex: int) -> tuple[int, ...]:
        return self._in[vertex]

    def neighbors(self, vertex: int) -> tuple[int, ...]:
        """All vertices joined to ``vertex`` by an edge in either direction, in index order."""
        return tuple(sorted(set(self._out[vertex]) | set(self._in[vertex])))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented

        return self.names == other.names and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self.names, self._edge_set))

    def __repr__(self) -> str:
        return f"Digraph(vertices={len(self)}, edges={self.edge_count})"


class DigraphMap:
    """A digraph map f: G → H. For every edge v → w either f(v) = f(w) or f(v) → f(w).
    """

    _source: Digraph
    _target: Digraph
    _assignment: tuple[int, ...]

    def __init__(self, source: Digraph, target: Digraph, assignment: t.Sequence[int]) -> None:
        """Validate and build a digraph map from an index assignment.

        :param source: Source digraph G.
        :param target: Target digraph H.
        :param assignment: Image index of every source vertex, in source index order.
        :raises MapMismatch: Raised when the assignment is not total or points outside the target.
        :raises NotADigraphMap: Raised when an edge is sent to a non-edge between distinct vertices.
        """
        assignment = tuple(assignment)

        if len(assignment) != len(source) or any(not 0 <= v < len(target) for v in assignment):
            raise errors.MapMismatch("Assignment must send every source vertex to a target vertex.")

        if (bad_edge := _first_broken_edge(source, target, assignment)) is not None:
            tail, head = bad_edge
            raise errors.NotADigraphMap((source.name(tail), source.name(head)),
                                        (target.name(assignment[tail]), target.name(assignment[head])))

        self._source = source
        self._target = target
        self._assignment = assignment

    @classmethod
    def from_names(cls, source: Digraph, target: Digraph, assignment: t.Mapping[str, str]) -> 'DigraphMap':
        """Build a map from a name-to-name assignment.

        :raises UnknownVertex: Raised for undeclared names.
        :raises MapMismatch: Raised when some source vertex has no image.
        """
        missing = [name for name in source.names if name not in assignment]
        if missing:
            raise errors.MapMismatch(f"No image given for {', '.join(missing)}.")

        return cls(source, target, [target.index(assignment[name]) for name in source.names])

    @property
    def source(self) -> Digraph:
        return self._source

    @property
    def target(self) -> Digraph:
        return self._target

    @property
    def assignment(self) -> tuple[int, ...]:
        return self._assignment

    def __call__(self, vertex: int) -> int:
        return self._assignment[vertex]

    def image_name(self, name: str) -> str:
        return self._target.name(self._assignment[self._source.index(name)])

    def as_names(self) -> dict[str, str]:
        return {self._source.name(v): self._target.name(w) for v, w in enumerate(self._assignment)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DigraphMap):
            return NotImplemented

        return (self._source == other._source and self._target == other._target
                and self._assignment == other._assignment)

    def __hash__(self) -> int:
        return hash(self._assignment)

    def __repr__(self) -> str:
        return f"DigraphMap({self.as_names()})"


def _first_broken_edge(source: Digraph, target: Digraph,
                       assignment: t.Sequence[int]) -> t.Optional[tuple[int, int]]:
    for tail, head in source.edges:
        if not target.arrow_eq(assignment[tail], assignment[head]):
            return tail, head

    return None


def make_digraph(vertices: t.Iterable[str], edges: t.Iterable[tuple[str, str]]) -> Digraph:
    """Validated digraph from names. See :class:`Digraph`.
    """
    return Digraph(vertices, edges)


def is_digraph_map(source: Digraph, target: Digraph, assignment: t.Sequence[int]) -> bool:
    """Checks the digraph map condition without constructing the map.

    :param source: Source digraph.
    :param target: Target digraph.
    :param assignment: Image index of every source vertex.
    :return: True if ``assignment`` defines a digraph map.
    """
    if len(assignment) != len(source) or any(not 0 <= v < len(target) for v in assignment):
        return False

    return _first_broken_edge(source, target, assignment) is None


def compose(f: DigraphMap, g: DigraphMap) -> DigraphMap:
    """The composite g∘f (first ``f``, then ``g``).

    :raises MapMismatch: Raised when target(f) differs from source(g).
    """
    if f.target != g.source:
        raise errors.MapMismatch("Cannot compose: target of the first map is not the source of the second.")

    return DigraphMap(f.source, g.target, [g(f(v)) for v in range(len(f.source))])


def identity_map(graph: Digraph) -> DigraphMap:
    return DigraphMap(graph, graph, range(len(graph)))


def constant_map(source: Digraph, target: Digraph, vertex: str) -> DigraphMap:
    return DigraphMap(source, target, [target.index(vertex)] * len(source))


def cartesian_product(first: Digraph, second: Digraph) -> Digraph:
    """Cartesian product G⊡H. Vertex (x, y) has index x·|V_H| + y and name "(x,y)".

    Edge (x,y) → (x',y') iff x = x' and y → y', or x → x' and y = y'.
    """
    width = len(second)
    names = [pair_name(x, y) for x, y in itertools.product(first.names, second.names)]

    edges = [(x * width + a, x * width + b) for x in range(len(first)) for a, b in second.edges]
    edges.extend((a * width + y, b * width + y) for a, b in first.edges for y in range(width))

    return Digraph.from_indices(names, edges)


def line_digraph(directions: t.Sequence[bool]) -> Digraph:
    """Line digraph I_n on vertices 0..n. ``directions[i]`` is True for i → i+1, False for i+1 → i.
    """
    names = [str(i) for i in range(len(directions) + 1)]
    edges = [(i, i + 1) if forward else (i + 1, i) for i, forward in enumerate(directions)]
    return Digraph.from_indices(names, edges)


@functools.cache
def unit_interval() -> Digraph:
    """The digraph I: 0 → 1."""
    return line_digraph([True])


def cycle_digraph(directions: t.Sequence[bool]) -> Digraph:
    """Cycle digraph S_n on vertices 0..n-1 with one edge between i and i+1 (mod n).

    :param directions: ``directions[i]`` is True for i → i+1, False for i+1 → i.
    :raises CycleTooShort: Raised for fewer than 3 vertices.
    """
    if (n := len(directions)) < 3:
        raise errors.CycleTooShort(n)

    names = [str(i) for i in range(n)]
    edges = [(i, (i + 1) % n) if forward else ((i + 1) % n, i) for i, forward in enumerate(directions)]
    return Digraph.from_indices(names, edges)


def simplex_digraph(n: int) -> Digraph:
    """Digraph-simplex on 0..n with i → j iff i < j."""
    return Digraph.from_indices([str(i) for i in range(n + 1)],
                                [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)])


def point_digraph(name: str = '*') -> Digraph:
    return Digraph.from_indices([name], [])


def cylinder(graph: Digraph) -> Digraph:
    """Cylinder G⊡I. Vertex x on level k (k = 0, 1) has index 2x + k and name "(x,k)".
    """
    return cartesian_product(graph, unit_interval())


def cube_digraph(n: int) -> Digraph:
    """The n-cube Iⁿ as the n-times iterated cylinder over a point.

    Vertices are n-bit strings; index order equals the iterated cylinder order and every edge raises one bit.
    """
    if n == 0:
        return point_digraph()

    names = [format(i, f'0{n}b') for i in range(2 ** n)]
    edges = [(i, i | (1 << bit)) for i in range(2 ** n) for bit in range(n) if not i & (1 << bit)]
    return Digraph.from_indices(names, edges)


def map_cylinder(f: DigraphMap, inverse: bool = False) -> Digraph:
    """Cylinder C_f of a map (or the inverse cylinder C_f⁻).

    Source vertices are named "(x,0)", target vertices "(y,1)"; source vertices come first. Besides the edges of
    both digraphs there is an edge x → f(x) for every source vertex (f(x) → x when ``inverse``).
    """
    source, target = f.source, f.target
    offset = len(source)

    names = [pair_name(x, CYLINDER_LEVELS[0]) for x in source.names]
    names.extend(pair_name(y, CYLINDER_LEVELS[1]) for y in target.names)

    edges = list(source.edges)
    edges.extend((a + offset, b + offset) for a, b in target.edges)
    edges.extend((f(x) + offset, x) if inverse else (x, f(x) + offset) for x in range(len(source)))

    return Digraph.from_indices(names, edges)


def induced_subdigraph(graph: Digraph, names: t.Iterable[str]) -> Digraph:
    """Sub-digraph spanned by the given vertices, keeping their order in ``graph``.

    :raises UnknownVertex: Raised for undeclared names.
    """
    keep = sorted({graph.index(name) for name in names})
    position = {v: i for i, v in enumerate(keep)}

    return Digraph.from_indices([graph.name(v) for v in keep],
                                [(position[a], position[b]) for a, b in graph.edges
                                 if a in position and b in position])


def remove_vertex(graph: Digraph, name: str) -> Digraph:
    """Digraph with the vertex and all adjacent edges removed."""
    graph.index(name)
    return induced_subdigraph(graph, [v for v in graph.names if v != name])


def is_subdigraph(sub: Digraph, graph: Digraph) -> bool:
    """True if every vertex and every edge of ``sub`` is present in ``graph`` (compared by names)."""
    if any(not graph.has_vertex(name) for name in sub.names):
        return False

    return all(graph.has_edge(graph.index(a), graph.index(b)) for a, b in sub.named_edges)


def product_projection(first: Digraph, second: Digraph) -> DigraphMap:
    """Projection G⊡H → G, (x, y) ↦ x."""
    width = len(second)
    return DigraphMap(cartesian_product(first, second), first, [v // width for v in range(len(first) * width)])


def level_inclusion(graph: Digraph, line: Digraph, level: int) -> DigraphMap:
    """Inclusion G → G⊡I_n, v ↦ (v, level)."""
    return DigraphMap(graph, cartesian_product(graph, line), [v * len(line) + level for v in range(len(graph))])


def collapse_last_level(graph: Digraph, directions: t.Sequence[bool]) -> DigraphMap:
    """Retraction G⊡I_n → G⊡I_{n-1} sending (x, n) to (x, n-1) and fixing everything else.

    :param graph: The digraph G.
    :param directions: Edge directions of I_n, at least one.
    """
    if not directions:
        raise errors.MapMismatch("I_0 has no last level to collapse.")

    n = len(directions)
    full = cartesian_product(graph, line_digraph(directions))
    shorter = cartesian_product(graph, line_digraph(directions[:-1]))

    assignment = []
    for v in range(len(full)):
        x, k = divmod(v, n + 1)
        assignment.append(x * n + min(k, n - 1))

    return DigraphMap(full, shorter, assignment)


def cylinder_projection(f: DigraphMap, inverse: bool = False) -> DigraphMap:
    """Retraction of C_f (or C_f⁻) onto its target part: (x,0) ↦ (f(x),1), (y,1) ↦ (y,1).

    The target of the returned map is the induced sub-digraph on the "(y,1)" vertices.
    """
    whole = map_cylinder(f, inverse)
    offset = len(f.source)
    target_part = induced_subdigraph(whole, whole.names[offset:])

    assignment = [f(x) for x in range(offset)] + list(range(len(f.target)))
    return DigraphMap(whole, target_part, assignment)


__all__ = (
    'Digraph',
    'DigraphMap',
    'CYLINDER_LEVELS',
    'pair_name',
    'unique_names',
    'make_digraph',
    'is_digraph_map',
    'compose',
    'identity_map',
    'constant_map',
    'cartesian_product',
    'line_digraph',
    'unit_interval',
    'cycle_digraph',
    'simplex_digraph',
    'point_digraph',
    'cylinder',
    'cube_digraph',
    'map_cylinder',
    'induced_subdigraph',
    'remove_vertex',
    'is_subdigraph',
    'product_projection',
    'level_inclusion',
    'collapse_last_level',
    'cylinder_projection',
)
