"""Homotopy of digraph maps: one-step homotopies, map-space search, vertex reductions, deformation retractions
and the chain homotopy induced by a cylinder map.
"""

import collections
import dataclasses
import typing as t

from . import enums
from . import errors
from . import preferences
from . import utils
from .chains import boundary, induced_map, lift
from .digraph import (Digraph, DigraphMap, compose, cylinder, identity_map, is_subdigraph, remove_vertex)
from .homology import build_omega


def _check_parallel(f: DigraphMap, g: DigraphMap) -> None:
    if f.source != g.source or f.target != g.target:
        raise errors.MapMismatch("Maps must share their source and target digraphs.")


def one_step_homotopic(f: DigraphMap, g: DigraphMap) -> enums.HomotopyDirection:
    """Which of the orderings f(x) ⃗= g(x) for all x, or g(x) ⃗= f(x) for all x, hold.

    An ordering holds exactly when the map G⊡I → H restricting to the two maps on the levels is a digraph map.

    :raises MapMismatch: Raised when the maps are not parallel.
    """
    _check_parallel(f, g)
    target = f.target
    vertices = range(len(f.source))

    forward = all(target.arrow_eq(f(x), g(x)) for x in vertices)
    backward = all(target.arrow_eq(g(x), f(x)) for x in vertices)

    match forward, backward:
        case True, True:
            return enums.HomotopyDirection.Both
        case True, False:
            return enums.HomotopyDirection.Forward
        case False, True:
            return enums.HomotopyDirection.Backward
        case _:
            return enums.HomotopyDirection.No


def cylinder_map(f: DigraphMap, g: DigraphMap) -> DigraphMap:
    """The map F: G⊡I → H with F(x,0) = f(x) and F(x,1) = g(x).

    :raises MapMismatch: Raised when the maps are not parallel.
    :raises BadRestriction: Raised unless f(x) ⃗= g(x) for all x.
    """
    _check_parallel(f, g)

    if one_step_homotopic(f, g) not in (enums.HomotopyDirection.Forward, enums.HomotopyDirection.Both):
        raise errors.BadRestriction("f(x) ⃗= g(x) must hold for every vertex x.")

    assignment = [g(v // 2) if v % 2 else f(v // 2) for v in range(2 * len(f.source))]
    return DigraphMap(cylinder(f.source), f.target, assignment)


@dataclasses.dataclass(frozen=True)
class HomotopySequence:
    """Maps f = f_0, f_1, ..., f_n = g where consecutive maps are one-step homotopic.
    """

    maps: tuple[DigraphMap, ...]
    step_directions: tuple[enums.HomotopyDirection, ...]

    def __len__(self) -> int:
        return len(self.step_directions)

    def is_valid(self) -> bool:
        return all(one_step_homotopic(a, b) == direction and direction != enums.HomotopyDirection.No
                   for a, b, direction in zip(self.maps, self.maps[1:], self.step_directions))


@dataclasses.dataclass(frozen=True)
class HomotopyResult:
    status: enums.SearchStatus
    sequence: t.Optional[HomotopySequence] = None

    #: Number of maps reached by the search.
    visited: int = 0

    #: True when the map space was small enough to be searched without a budget.
    exhaustive: bool = False

    def __bool__(self) -> bool:
        return self.status == enums.SearchStatus.Yes


def _one_step_images(m: DigraphMap, forward: bool) -> t.Iterator[tuple[int, ...]]:
    """Assignments m' with m(x) ⃗= m'(x) (or the reverse) for all x that are digraph maps, found by backtracking
    over the vertices in index order.
    """
    source, target = m.source, m.target
    n = len(source)

    options = []
    for x in range(n):
        step = target.out_neighbors(m(x)) if forward else target.in_neighbors(m(x))
        options.append((m(x),) + step)

    earlier: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
    for tail, head in source.edges:
        if tail < head:
            earlier[head].append((tail, True))
        else:
            earlier[tail].append((head, False))

    assignment: list[int] = []

    def extend(x: int) -> t.Iterator[tuple[int, ...]]:
        if x == n:
            yield tuple(assignment)
            return

        for image in options[x]:
            if all(target.arrow_eq(assignment[y], image) if y_is_tail else target.arrow_eq(image, assignment[y])
                   for y, y_is_tail in earlier[x]):
                assignment.append(image)
                yield from extend(x + 1)
                assignment.pop()

    yield from extend(0)


def homotopic(f: DigraphMap, g: DigraphMap, budget: t.Optional[int] = None,
              exhaustive: t.Optional[bool] = None) -> HomotopyResult:
    """Breadth-first search for a chain of one-step homotopies from f to g in the space of digraph maps G → H.

    When the search exhausts the component of f the answer is a definitive No. A budgeted search that runs out of
    budget answers Inconclusive.

    :param f: Start map.
    :param g: Goal map, parallel to f.
    :param budget: Maximal number of visited maps in budgeted mode. Defaults to the ``homotopy_budget`` preference.
    :param exhaustive: Force (True) or forbid (False) exhaustive mode. By default the search is exhaustive when
                       |V_H|^|V_G| does not exceed the ``map_space_cap`` preference.
    :raises MapMismatch: Raised when the maps are not parallel.
    :raises StateSpaceTooLarge: Raised when exhaustive mode is forced on a map space above the cap.
    :return: Verdict with a shortest homotopy sequence on success.
    """
    _check_parallel(f, g)
    prefs = preferences.get_preferences()

    size = len(f.target) ** len(f.source)
    if exhaustive is None:
        exhaustive = size <= prefs.map_space_cap
    elif exhaustive and size > prefs.map_space_cap:
        raise errors.StateSpaceTooLarge(size, prefs.map_space_cap)

    if f == g:
        return HomotopyResult(enums.SearchStatus.Yes, HomotopySequence((f,), ()), 1, exhaustive)

    budget = size if exhaustive else (prefs.homotopy_budget if budget is None else budget)
    start, goal = f.assignment, g.assignment
    parents: dict[tuple[int, ...], t.Optional[tuple[int, ...]]] = {start: None}
    queue = collections.deque([start])

    for _ in utils.progress(iter(lambda: bool(queue), False), desc='homotopy search'):
        current = DigraphMap(f.source, f.target, queue.popleft())

        for forward in (True, False):
            for image in _one_step_images(current, forward):
                if image in parents:
                    continue

                parents[image] = current.assignment
                if image == goal:
                    utils.verbose_print(f"Homotopy found after visiting {len(parents)} maps.")
                    return HomotopyResult(enums.SearchStatus.Yes, _trace(parents, goal, f), len(parents), exhaustive)

                if len(parents) > budget:
                    utils.verbose_print(f"Homotopy search stopped after {budget} maps.")
                    return HomotopyResult(enums.SearchStatus.Inconclusive, None, len(parents), exhaustive)

                queue.append(image)

    utils.verbose_print(f"Component of the start map exhausted: {len(parents)} maps.")
    return HomotopyResult(enums.SearchStatus.No, None, len(parents), exhaustive)


def _trace(parents: dict[tuple[int, ...], t.Optional[tuple[int, ...]]], goal: tuple[int, ...],
           f: DigraphMap) -> HomotopySequence:
    chain: list[tuple[int, ...]] = []
    node: t.Optional[tuple[int, ...]] = goal
    while node is not None:
        chain.append(node)
        node = parents[node]

    maps = tuple(DigraphMap(f.source, f.target, assignment) for assignment in reversed(chain))
    return HomotopySequence(maps, tuple(one_step_homotopic(a, b) for a, b in zip(maps, maps[1:])))


@dataclasses.dataclass(frozen=True)
class HomotopyEquivalenceResult:
    status: enums.SearchStatus

    #: Search for g∘f ≃ id_G.
    source_side: HomotopyResult

    #: Search for f∘g ≃ id_H.
    target_side: HomotopyResult

    def __bool__(self) -> bool:
        return self.status == enums.SearchStatus.Yes


def are_homotopy_inverses(f: DigraphMap, g: DigraphMap, budget: t.Optional[int] = None) -> HomotopyEquivalenceResult:
    """Checks that f: G → H and g: H → G are homotopy inverses, i.e. g∘f ≃ id_G and f∘g ≃ id_H.

    :raises MapMismatch: Raised when the maps do not go back and forth between the same digraphs.
    """
    if f.target != g.source or g.target != f.source:
        raise errors.MapMismatch("Maps must go G → H and H → G.")

    source_side = homotopic(compose(f, g), identity_map(f.source), budget)
    target_side = homotopic(compose(g, f), identity_map(f.target), budget)
    statuses = {source_side.status, target_side.status}

    if statuses == {enums.SearchStatus.Yes}:
        status = enums.SearchStatus.Yes
    elif enums.SearchStatus.No in statuses:
        status = enums.SearchStatus.No
    else:
        status = enums.SearchStatus.Inconclusive

    return HomotopyEquivalenceResult(status, source_side, target_side)


def satisfies_abi(graph: Digraph, a: int, b0: int) -> bool:
    """Condition (abi): b0 is adjacent to a, and for every other neighbour b of a,
    a → b implies b0 → b and b → a implies b → b0.
    """
    if a == b0 or not graph.adjacent(a, b0):
        return False

    for b in graph.neighbors(a):
        if b == b0:
            continue

        if graph.has_edge(a, b) and not graph.has_edge(b0, b):
            return False

        if graph.has_edge(b, a) and not graph.has_edge(b, b0):
            return False

    return True


def is_star_center(graph: Digraph, center: int) -> bool:
    """The digraph is star-like (center → x for all other x) or inverse star-like (x → center)."""
    others = [v for v in range(len(graph)) if v != center]
    return (all(graph.has_edge(center, v) for v in others)
            or all(graph.has_edge(v, center) for v in others))


@dataclasses.dataclass(frozen=True)
class ReductionStep:
    vertex: str
    witness: str
    rule: enums.ReductionRule


@dataclasses.dataclass(frozen=True)
class ReductionTrace:
    """Vertices removed by :func:`find_reduction`, in removal order, and the digraph that is left.
    """

    original: Digraph
    steps: tuple[ReductionStep, ...]
    residual: Digraph

    @property
    def verdict(self) -> enums.ReductionVerdict:
        if len(self.residual) == 1:
            return enums.ReductionVerdict.Contractible

        return enums.ReductionVerdict.Irreducible

    @property
    def contractible(self) -> bool:
        return self.verdict == enums.ReductionVerdict.Contractible

    def replay(self) -> Digraph:
        """Re-applies every step to the original digraph, checking its rule at the time of removal.

        :raises NotARetraction: Raised when a step's condition fails.
        :return: The residual digraph.
        """
        current = self.original

        for step in self.steps:
            a, b0 = current.index(step.vertex), current.index(step.witness)

            match step.rule:
                case enums.ReductionRule.Abi:
                    valid = satisfies_abi(current, a, b0)
                case enums.ReductionRule.OneStepRetraction:
                    valid = a != b0 and is_star_center(current, b0)
                case _:
                    valid = False

            if not valid:
                raise errors.NotARetraction(f"Cannot remove {step.vertex} towards {step.witness} by rule "
                                            f"{step.rule.value}.")

            current = remove_vertex(current, step.vertex)

        return current


def _find_abi(graph: Digraph) -> t.Optional[tuple[int, int]]:
    for a in range(len(graph)):
        for b0 in graph.neighbors(a):
            if satisfies_abi(graph, a, b0):
                return a, b0

    return None


def find_reduction(graph: Digraph) -> ReductionTrace:
    """Greedily removes vertices while keeping the homotopy type.

    Vertices a and witnesses b0 are tried in declaration order and the first vertex satisfying (abi) is removed,
    which is a one-step deformation retraction a ↦ b0. When no vertex qualifies and the remaining digraph is
    (inverse) star-like, all other vertices are collapsed onto the centre.

    :param graph: Digraph.
    :return: Trace; a single-vertex residual certifies contractibility.
    """
    current = graph
    steps: list[ReductionStep] = []

    while len(current) > 1:
        if (hit := _find_abi(current)) is not None:
            a, b0 = hit
            steps.append(ReductionStep(current.name(a), current.name(b0), enums.ReductionRule.Abi))
            utils.verbose_print(f"Removing {current.name(a)} onto {current.name(b0)} (abi)")
            current = remove_vertex(current, current.name(a))
            continue

        center = next((c for c in range(len(current)) if is_star_center(current, c)), None)
        if center is None:
            break

        center_name = current.name(center)
        for name in [n for n in current.names if n != center_name]:
            steps.append(ReductionStep(name, center_name, enums.ReductionRule.OneStepRetraction))
            current = remove_vertex(current, name)

    return ReductionTrace(graph, tuple(steps), current)


@dataclasses.dataclass(frozen=True)
class RetractionResult:
    is_deformation_retraction: bool
    criterion: enums.RetractionCriterion
    search: t.Optional[HomotopyResult] = None

    def __bool__(self) -> bool:
        return self.is_deformation_retraction


def inclusion_map(sub: Digraph, graph: Digraph) -> DigraphMap:
    """Inclusion of a sub-digraph, matching vertices by name.

    :raises NotARetraction: Raised when ``sub`` is not a sub-digraph of ``graph``.
    """
    if not is_subdigraph(sub, graph):
        raise errors.NotARetraction("Target is not a sub-digraph of the source.")

    return DigraphMap(sub, graph, [graph.index(name) for name in sub.names])


def is_deformation_retraction(r: DigraphMap, budget: t.Optional[int] = None) -> RetractionResult:
    """Decides whether r: G → H is a deformation retraction, i.e. i∘r ≃ id_G for the inclusion i: H → G.

    The one-step criteria x ⃗= r(x) for all x, or r(x) ⃗= x for all x, are checked first; otherwise a homotopy
    between i∘r and id_G is searched.

    :param r: Map from a digraph onto one of its sub-digraphs.
    :param budget: Budget of the fallback search.
    :raises NotARetraction: Raised when H is not a sub-digraph of G or r does not fix H.
    :return: Verdict with the criterion that certified it.
    """
    graph, sub = r.source, r.target
    inclusion = inclusion_map(sub, graph)

    if any(r(inclusion(y)) != y for y in range(len(sub))):
        raise errors.NotARetraction("The map does not restrict to the identity on its target.")

    composite = compose(r, inclusion)
    vertices = range(len(graph))

    if all(graph.arrow_eq(x, composite(x)) for x in vertices):
        return RetractionResult(True, enums.RetractionCriterion.OneStepForward)

    if all(graph.arrow_eq(composite(x), x) for x in vertices):
        return RetractionResult(True, enums.RetractionCriterion.OneStepBackward)

    search = homotopic(composite, identity_map(graph), budget)
    if search:
        return RetractionResult(True, enums.RetractionCriterion.HomotopySearch, search)

    return RetractionResult(False, enums.RetractionCriterion.NoCriterion, search)


def verify_chain_homotopy(big_f: DigraphMap, f: DigraphMap, g: DigraphMap, p_max: int = 2) -> bool:
    """Checks ∂L_p + L_{p−1}∂ = g_* − f_* on the Ω_p basis of G for p ≤ p_max, where L_p(v) = F_*(v̂).

    :param big_f: Map F: G⊡I → H.
    :param f: Restriction of F to level 0.
    :param g: Restriction of F to level 1.
    :param p_max: Highest dimension checked.
    :raises MapMismatch: Raised when f and g are not parallel.
    :raises BadRestriction: Raised when F does not restrict to f and g.
    :return: True if the identity holds exactly on every basis element.
    """
    _check_parallel(f, g)
    graph = f.source

    if big_f.source != cylinder(graph) or big_f.target != f.target:
        raise errors.BadRestriction("F must be a map from the cylinder over the source of f into its target.")

    if any(big_f(2 * x) != f(x) or big_f(2 * x + 1) != g(x) for x in range(len(graph))):
        raise errors.BadRestriction("F does not restrict to f on level 0 and to g on level 1.")

    omega = build_omega(graph, p_max)

    for p in range(p_max + 1):
        for v in omega.omega_basis(p):
            left = boundary(induced_map(big_f, lift(v))) + induced_map(big_f, lift(boundary(v)))
            right = induced_map(g, v) - induced_map(f, v)

            if left != right:
                utils.verbose_print(f"Chain homotopy identity fails on {v.format(graph)}")
                return False

    return True


__all__ = (
    'HomotopySequence',
    'HomotopyResult',
    'HomotopyEquivalenceResult',
    'ReductionStep',
    'ReductionTrace',
    'RetractionResult',
    'one_step_homotopic',
    'cylinder_map',
    'homotopic',
    'are_homotopy_inverses',
    'satisfies_abi',
    'is_star_center',
    'find_reduction',
    'inclusion_map',
    'is_deformation_retraction',
    'verify_chain_homotopy',
)
