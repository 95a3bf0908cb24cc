"""Sperner colourings of a triangulated triangle ABC.

The triangulation is combinatorial: a list of triangles over named vertices, a colour 1, 2 or 3 per vertex and the
three corners. Sides are recovered from the boundary edges, i.e. the edges lying in exactly one triangle. Orienting
every edge by colour (1 → 2 → 3 → 1, equal colours both ways) gives a digraph whose loops detect three-colour
triangles.
"""

import collections
import dataclasses
import random
import typing as t

from . import errors
from .digraph import Digraph, DigraphMap, compose, identity_map, is_digraph_map
from .loops import LoopWord, hurewicz_class, make_loop, reduce_loop


COLORS = (1, 2, 3)

#: Side name -> colours allowed on it.
SIDE_COLORS = {'AB': {1, 2}, 'AC': {1, 3}, 'BC': {2, 3}}

_CORNER_LETTERS = 'ABC'

_ORIENTED = {(1, 2), (2, 3), (3, 1)}


@dataclasses.dataclass(frozen=True)
class Triangulation:
    """Vertex names, triangles as index triples, one colour per vertex and the corner indices (A, B, C).
    """

    vertices: tuple[str, ...]
    triangles: tuple[tuple[int, int, int], ...]
    colors: tuple[int, ...]
    corners: tuple[int, int, int]

    @classmethod
    def from_names(cls, vertices: t.Sequence[str], triangles: t.Iterable[t.Sequence[str]],
                   colors: t.Mapping[str, int], corners: t.Sequence[str]) -> 'Triangulation':
        """
        :raises UnknownVertex: Raised for names not listed in ``vertices``.
        :raises NotSperner: Raised for missing colours or a wrong number of corners.
        """
        index = {str(name): i for i, name in enumerate(vertices)}

        def lookup(name: str) -> int:
            try:
                return index[str(name)]
            except KeyError as e:
                raise errors.UnknownVertex(str(name)) from e

        if len(corners) != 3:
            raise errors.NotSperner("Exactly three corners A, B, C are required.")

        missing = [name for name in index if name not in colors]
        if missing:
            raise errors.NotSperner(f"Vertices without colour: {', '.join(missing)}.")

        for name in colors:
            lookup(name)

        triples = []
        for triangle in triangles:
            if len(triangle) != 3:
                raise errors.NotSperner(f"Triangle {list(triangle)} does not have three vertices.")
            a, b, c = (lookup(name) for name in triangle)
            triples.append((a, b, c))

        a, b, c = (lookup(name) for name in corners)
        return cls(tuple(str(v) for v in vertices), tuple(triples),
                   tuple(int(colors[str(name)]) for name in vertices), (a, b, c))

    def name(self, index: int) -> str:
        return self.vertices[index]

    def color(self, index: int) -> int:
        return self.colors[index]

    def edge_counts(self) -> dict[tuple[int, int], int]:
        """Number of triangles containing each edge."""
        counts: dict[tuple[int, int], int] = collections.Counter()
        for triangle in self.triangles:
            for i in range(3):
                a, b = triangle[i], triangle[(i + 1) % 3]
                counts[min(a, b), max(a, b)] += 1

        return dict(sorted(counts.items()))

    def edges(self) -> list[tuple[int, int]]:
        return list(self.edge_counts())

    def boundary_edges(self) -> list[tuple[int, int]]:
        return [edge for edge, count in self.edge_counts().items() if count == 1]

    def to_json(self) -> dict[str, t.Any]:
        return {
            'vertices': list(self.vertices),
            'triangles': [[self.name(v) for v in triangle] for triangle in self.triangles],
            'colors': {name: color for name, color in zip(self.vertices, self.colors)},
            'corners': [self.name(v) for v in self.corners],
        }


def triangulation_from_json(data: t.Any) -> Triangulation:
    """Triangulation from the document {vertices, triangles, colors, corners}.

    :raises ParseError: Raised for documents of the wrong shape.
    """
    if not isinstance(data, dict):
        raise errors.ParseError("Triangulation document must be a JSON object.")

    if missing := [key for key in ('vertices', 'triangles', 'colors', 'corners') if key not in data]:
        raise errors.ParseError(f"Triangulation document lacks {', '.join(missing)}.")

    colors = data['colors']
    if not isinstance(colors, dict):
        raise errors.ParseError("'colors' must map vertex names to 1, 2 or 3.")

    try:
        return Triangulation.from_names(data['vertices'], data['triangles'],
                                        {str(k): int(v) for k, v in colors.items()}, data['corners'])
    except (TypeError, ValueError) as e:
        raise errors.ParseError(f"Malformed triangulation document: {e}") from e


def _boundary_cycle(tri: Triangulation) -> list[int]:
    """Boundary vertices in cyclic order starting at corner A.

    :raises NotSperner: Raised when the boundary is not a single cycle through the corners.
    """
    adjacency: dict[int, list[int]] = collections.defaultdict(list)
    boundary = tri.boundary_edges()
    for a, b in boundary:
        adjacency[a].append(b)
        adjacency[b].append(a)

    if any(len(neighbours) != 2 for neighbours in adjacency.values()):
        raise errors.NotSperner("Boundary edges do not form a cycle.")

    start = tri.corners[0]
    if start not in adjacency:
        raise errors.NotSperner(f"Corner {tri.name(start)} is not on the boundary.")

    cycle = [start, min(adjacency[start])]
    while True:
        previous, current = cycle[-2], cycle[-1]
        following = next(v for v in adjacency[current] if v != previous)
        if following == start:
            break
        cycle.append(following)

    if len(cycle) != len(boundary):
        raise errors.NotSperner("Boundary edges form more than one cycle.")

    return cycle


def side_vertices(tri: Triangulation) -> dict[str, list[str]]:
    """Vertices strictly inside each side, listed from the alphabetically first corner of the side.

    :raises NotSperner: Raised when the boundary is not a single cycle through the three corners.
    """
    cycle = _boundary_cycle(tri)
    letters = {v: letter for v, letter in zip(tri.corners, _CORNER_LETTERS)}

    positions = [i for i, v in enumerate(cycle) if v in letters]
    if len(positions) != 3:
        raise errors.NotSperner("Corners must all lie on the boundary.")

    sides = {}
    for k, start in enumerate(positions):
        end = positions[(k + 1) % 3]
        run = cycle[start + 1:end] if end > start else cycle[start + 1:]
        first, second = letters[cycle[start]], letters[cycle[end]]

        if first > second:
            first, second = second, first
            run = run[::-1]

        sides[first + second] = [tri.name(v) for v in run]

    return {side: sides[side] for side in sorted(sides)}


def violations(tri: Triangulation) -> list[str]:
    """All violated Sperner conditions, empty for a valid colouring."""
    problems = []
    n = len(tri.vertices)

    for triangle in tri.triangles:
        if len(set(triangle)) != 3 or any(not 0 <= v < n for v in triangle):
            problems.append(f"Triangle {triangle} does not have three distinct vertices.")

    if overfull := [edge for edge, count in tri.edge_counts().items() if count > 2]:
        a, b = overfull[0]
        problems.append(f"Edge {tri.name(a)}-{tri.name(b)} lies in more than two triangles.")

    if bad := [tri.name(v) for v in range(n) if tri.color(v) not in COLORS]:
        problems.append(f"Colours must be 1, 2 or 3: {', '.join(bad)}.")

    if len(set(tri.corners)) != 3:
        problems.append("Corners must be distinct.")

    for letter, corner, color in zip(_CORNER_LETTERS, tri.corners, COLORS):
        if tri.color(corner) != color:
            problems.append(f"Corner {letter} = {tri.name(corner)} must have colour {color}.")

    if problems:
        return problems

    try:
        sides = side_vertices(tri)
    except errors.NotSperner as e:
        return [str(e)]

    index = {name: i for i, name in enumerate(tri.vertices)}
    for side, names in sides.items():
        for name in names:
            if tri.color(index[name]) not in SIDE_COLORS[side]:
                problems.append(f"Vertex {name} on side {side} has colour {tri.color(index[name])}.")

    return problems


def validate(tri: Triangulation) -> None:
    """:raises NotSperner: Raised with the first violated condition."""
    if problems := violations(tri):
        raise errors.NotSperner(problems[0])


def orient(tri: Triangulation, check: bool = True) -> Digraph:
    """Digraph on the triangulation's edges: 1 → 2, 2 → 3, 3 → 1, and both directions between equal colours.

    :param tri: Triangulation.
    :param check: Validate the Sperner conditions first.
    :raises NotSperner: Raised when ``check`` is set and the colouring is not Sperner.
    """
    if check:
        validate(tri)

    edges = []
    for a, b in tri.edges():
        ca, cb = tri.color(a), tri.color(b)
        if ca == cb:
            edges.extend(((a, b), (b, a)))
        elif (ca, cb) in _ORIENTED:
            edges.append((a, b))
        else:
            edges.append((b, a))

    return Digraph.from_indices(tri.vertices, edges)


@dataclasses.dataclass(frozen=True)
class TricolorResult:
    #: Names of a three-colour triangle, if any.
    triangle: t.Optional[tuple[str, str, str]]

    #: Violated Sperner conditions, empty for valid colourings.
    violations: tuple[str, ...] = ()

    @property
    def found(self) -> bool:
        return self.triangle is not None

    @property
    def is_sperner(self) -> bool:
        return not self.violations


def find_tricolor_triangle(tri: Triangulation) -> TricolorResult:
    """First triangle, in input order, whose vertices carry all three colours.
    Invalid colourings are scanned too, and the result lists their violations.
    """
    found = next((triangle for triangle in tri.triangles if {tri.color(v) for v in triangle} == set(COLORS)), None)
    names = None if found is None else (tri.name(found[0]), tri.name(found[1]), tri.name(found[2]))
    return TricolorResult(names, tuple(violations(tri)))


def _replace_vertex_free(tri: Triangulation, removed: int, triangles: list[tuple[int, int, int]]) -> Triangulation:
    keep = [v for v in range(len(tri.vertices)) if v != removed]
    position = {v: i for i, v in enumerate(keep)}

    return Triangulation(tuple(tri.vertices[v] for v in keep),
                         tuple((position[a], position[b], position[c]) for a, b, c in triangles),
                         tuple(tri.colors[v] for v in keep),
                         (position[tri.corners[0]], position[tri.corners[1]], position[tri.corners[2]]))


def perturb_sides(tri: Triangulation) -> Triangulation:
    """Moves every side vertex X inside the triangle.

    With boundary neighbours Y and Z, the triangle XYZ is added when Y and Z are not joined. When they are and X lies
    in the single triangle XYZ, X is dropped together with it. Both moves only involve the two colours of the side,
    so no three-colour triangle appears.

    :raises NotSperner: Raised for invalid colourings.
    :raises PerturbationFailed: Raised when Y and Z are joined but X lies in further triangles.
    """
    validate(tri)

    while True:
        sides = side_vertices(tri)
        moving = next((name for side in sides.values() for name in side), None)
        if moving is None:
            return tri

        x = tri.vertices.index(moving)
        cycle = _boundary_cycle(tri)
        at = cycle.index(x)
        y, z = cycle[at - 1], cycle[(at + 1) % len(cycle)]

        joined = (min(y, z), max(y, z)) in tri.edge_counts()
        if not joined:
            tri = dataclasses.replace(tri, triangles=tri.triangles + ((x, y, z),))
            continue

        around = [triangle for triangle in tri.triangles if x in triangle]
        if len(around) == 1 and set(around[0]) == {x, y, z}:
            rest = [triangle for triangle in tri.triangles if x not in triangle]
            tri = _replace_vertex_free(tri, x, rest)
            continue

        raise errors.PerturbationFailed(f"Cannot move {moving} inside: its boundary neighbours are joined.")


def cyclic_triangle() -> Digraph:
    """The colour cycle 1 → 2 → 3 → 1."""
    return Digraph(['1', '2', '3'], [('1', '2'), ('2', '3'), ('3', '1')])


@dataclasses.dataclass(frozen=True)
class SpernerReport:
    #: The colour map orient(T) → S_3 is a digraph map.
    color_map_ok: bool

    #: The corner map S_3 → orient(T) is a digraph map.
    corner_map_ok: bool

    #: Colour map after corner map is the identity of S_3.
    composite_is_identity: bool

    #: The loop 1 2 3 1 has a non-bounding χ in H_1(S_3; Z).
    boundary_loop_nontrivial: bool

    tricolor: TricolorResult

    @property
    def consistent(self) -> bool:
        """Every claim of the construction holds and a three-colour triangle exists."""
        return (self.color_map_ok and self.corner_map_ok and self.composite_is_identity
                and self.boundary_loop_nontrivial and self.tricolor.found)


def verify_sperner_maps(tri: Triangulation) -> SpernerReport:
    """Builds f: orient(T) → S_3 (vertex ↦ colour) and g: S_3 → orient(T) (1, 2, 3 ↦ A, B, C) and checks them.

    :raises NotSperner: Raised for invalid colourings.
    :raises SideVerticesPresent: Raised when some side still has inner vertices, see :func:`perturb_sides`.
    """
    validate(tri)

    if present := [name for names in side_vertices(tri).values() for name in names]:
        raise errors.SideVerticesPresent(present)

    graph = orient(tri, check=False)
    colors = cyclic_triangle()

    f_assignment = [colors.index(str(tri.color(v))) for v in range(len(graph))]
    g_assignment = list(tri.corners)

    color_map_ok = is_digraph_map(graph, colors, f_assignment)
    corner_map_ok = is_digraph_map(colors, graph, g_assignment)

    composite_is_identity = False
    if color_map_ok and corner_map_ok:
        composite = compose(DigraphMap(colors, graph, g_assignment), DigraphMap(graph, colors, f_assignment))
        composite_is_identity = composite == identity_map(colors)

    nontrivial = not hurewicz_class(make_loop(colors, '1 2 3 1')).trivial

    return SpernerReport(color_map_ok, corner_map_ok, composite_is_identity, nontrivial, find_tricolor_triangle(tri))


def face_loops(tri: Triangulation) -> list[tuple[tuple[str, str, str], LoopWord]]:
    """Every triangle's boundary word u v w u on orient(T), reduced. Faces without three colours reduce to the
    trivial loop.
    """
    graph = orient(tri, check=False)
    result = []

    for a, b, c in tri.triangles:
        loop = LoopWord(graph, (a, b, c, a), a)
        result.append(((tri.name(a), tri.name(b), tri.name(c)), reduce_loop(loop)))

    return result


def _rng(seed: random.Random | int | None) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _subdivision(k: int, color: t.Callable[[int, int], int]) -> Triangulation:
    if k < 1:
        raise ValueError("Subdivision order must be at least 1.")

    points = [(i, j) for j in range(k + 1) for i in range(k + 1 - j)]
    index = {point: n for n, point in enumerate(points)}

    triangles = []
    for i, j in points:
        if i + j < k:
            triangles.append((index[i, j], index[i + 1, j], index[i, j + 1]))
        if i + j < k - 1:
            triangles.append((index[i + 1, j], index[i + 1, j + 1], index[i, j + 1]))

    return Triangulation(tuple(f"({i},{j})" for i, j in points), tuple(triangles),
                         tuple(color(i, j) for i, j in points), (index[0, 0], index[k, 0], index[0, k]))


def generate_subdivision(k: int, seed: random.Random | int | None = None) -> Triangulation:
    """Regular k-subdivision of ABC (A = (0,0), B = (k,0), C = (0,k)) with a random Sperner colouring.
    """
    rng = _rng(seed)

    def color(i: int, j: int) -> int:
        match i, j:
            case 0, 0:
                return 1
            case _ if (i, j) == (k, 0):
                return 2
            case _ if (i, j) == (0, k):
                return 3
            case _, 0:
                return rng.choice((1, 2))
            case 0, _:
                return rng.choice((1, 3))
            case _ if i + j == k:
                return rng.choice((2, 3))
            case _:
                return rng.choice(COLORS)

    return _subdivision(k, color)


def generate_two_color(k: int, seed: random.Random | int | None = None) -> Triangulation:
    """Regular k-subdivision coloured with 1 and 2 only. Never Sperner and never has a three-colour triangle.
    """
    rng = _rng(seed)
    return _subdivision(k, lambda i, j: rng.choice((1, 2)))


__all__ = (
    'COLORS',
    'SIDE_COLORS',
    'Triangulation',
    'TricolorResult',
    'SpernerReport',
    'triangulation_from_json',
    'side_vertices',
    'violations',
    'validate',
    'orient',
    'find_tricolor_triangle',
    'perturb_sides',
    'cyclic_triangle',
    'verify_sperner_maps',
    'face_loops',
    'generate_subdivision',
    'generate_two_color',
)
