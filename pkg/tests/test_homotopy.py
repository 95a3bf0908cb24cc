"""
Homotopy of digraph maps.

Core claims:
    - one-step homotopy follows the pointwise relation f(x) ⃗= g(x) in either direction
    - cylinder maps exist exactly for forward one-step pairs
    - the map-space search finds homotopies, proves their absence on small spaces and honours its budgets
    - vertex reduction contracts trees and simplices and leaves S_5 alone; traces replay
    - deformation retractions are recognised by the one-step criteria and by search
    - every cylinder map induces a chain homotopy between its restrictions
"""

import random

import pytest

from pathhom_tools import enums, errors, preferences
from pathhom_tools.digraph import (DigraphMap, collapse_last_level, compose, constant_map, cycle_digraph,
                                   identity_map, is_digraph_map, make_digraph, product_projection, simplex_digraph,
                                   unit_interval)
from pathhom_tools.fixtures import retract5, retract5_target, tree, triangle
from pathhom_tools.homotopy import (HomotopySequence, ReductionStep, ReductionTrace, are_homotopy_inverses,
                                    cylinder_map, find_reduction, homotopic, inclusion_map,
                                    is_deformation_retraction, is_star_center, one_step_homotopic, satisfies_abi,
                                    verify_chain_homotopy)


# -- Helpers -----------------------------------------------------------------

def _make_random_digraph(rng, n=4, density=0.45):
    names = [str(i) for i in range(n)]
    edges = [(a, b) for a in names for b in names if a != b and rng.random() < density]
    return make_digraph(names, edges)


def _make_random_map(rng, source, target, tries=200):
    for _ in range(tries):
        assignment = [rng.randrange(len(target)) for _ in range(len(source))]
        if is_digraph_map(source, target, assignment):
            return DigraphMap(source, target, assignment)

    return constant_map(source, target, target.name(0))


def _make_forward_step(rng, f, tries=200):
    """A random g with f(x) ⃗= g(x) for all x."""
    target = f.target
    for _ in range(tries):
        assignment = [rng.choice((f(x),) + target.out_neighbors(f(x))) for x in range(len(f.source))]
        if is_digraph_map(f.source, target, assignment):
            return DigraphMap(f.source, target, assignment)

    return f


def _make_retraction():
    return DigraphMap.from_names(retract5(), retract5_target(),
                                 {'0': '1', '1': '1', '2': '3', '3': '3', '4': '4'})


# -- One-step homotopies -----------------------------------------------------

def test_one_step_directions():
    graph = simplex_digraph(2)
    identity = identity_map(graph)
    last = constant_map(graph, graph, '2')
    first = constant_map(graph, graph, '0')

    assert one_step_homotopic(identity, identity) == enums.HomotopyDirection.Both
    assert one_step_homotopic(identity, last) == enums.HomotopyDirection.Forward
    assert one_step_homotopic(identity, first) == enums.HomotopyDirection.Backward


def test_one_step_none():
    graph = cycle_digraph([True] * 5)
    a = constant_map(graph, graph, '0')
    b = constant_map(graph, graph, '2')

    assert one_step_homotopic(a, b) == enums.HomotopyDirection.No


def test_parallel_maps_required():
    graph = simplex_digraph(2)

    with pytest.raises(errors.MapMismatch):
        one_step_homotopic(identity_map(graph), identity_map(triangle()))


def test_cylinder_map_restrictions():
    graph = simplex_digraph(2)
    big_f = cylinder_map(identity_map(graph), constant_map(graph, graph, '2'))

    assert big_f.assignment == (0, 2, 1, 2, 2, 2)

    with pytest.raises(errors.BadRestriction):
        cylinder_map(constant_map(graph, graph, '2'), identity_map(graph))


# -- Search ------------------------------------------------------------------

def test_simplex_contracts_in_one_step():
    graph = simplex_digraph(3)
    result = homotopic(identity_map(graph), constant_map(graph, graph, '0'))

    assert result
    assert result.exhaustive
    assert len(result.sequence) == 1
    assert result.sequence.is_valid()


def test_s5_is_not_contractible():
    graph = cycle_digraph([True] * 5)
    result = homotopic(identity_map(graph), constant_map(graph, graph, '0'))

    assert result.status == enums.SearchStatus.No
    assert result.exhaustive


def test_rotation_of_s5_is_homotopic_to_identity():
    graph = cycle_digraph([True] * 5)
    rotation = DigraphMap(graph, graph, [(x + 1) % 5 for x in range(5)])
    result = homotopic(identity_map(graph), rotation)

    assert result
    assert result.sequence.maps[0] == identity_map(graph)
    assert result.sequence.maps[-1] == rotation


def test_search_path_through_several_steps():
    line = make_digraph('0123', [('0', '1'), ('1', '2'), ('2', '3')])
    point = make_digraph('x', [])
    start = DigraphMap(point, line, [0])
    goal = DigraphMap(point, line, [3])
    result = homotopic(start, goal)

    assert result
    assert len(result.sequence) == 3
    assert result.sequence.is_valid()


def test_forced_exhaustive_mode_checks_cap():
    graph = cycle_digraph([True] * 5)

    with preferences.override_preferences(map_space_cap=10):
        with pytest.raises(errors.StateSpaceTooLarge):
            homotopic(identity_map(graph), constant_map(graph, graph, '0'), exhaustive=True)


def test_budgeted_search_is_inconclusive():
    graph = cycle_digraph([True] * 5)

    with preferences.override_preferences(map_space_cap=10):
        result = homotopic(identity_map(graph), constant_map(graph, graph, '0'), budget=3)

    assert result.status == enums.SearchStatus.Inconclusive
    assert not result.exhaustive


def test_homotopy_inverses():
    r = _make_retraction()
    i = inclusion_map(retract5_target(), retract5())

    assert are_homotopy_inverses(r, i)
    assert are_homotopy_inverses(i, r)

    with pytest.raises(errors.MapMismatch):
        are_homotopy_inverses(r, r)


def test_invalid_sequence_detected():
    graph = cycle_digraph([True] * 5)
    a = constant_map(graph, graph, '0')
    b = constant_map(graph, graph, '2')

    assert not HomotopySequence((a, b), (enums.HomotopyDirection.Forward,)).is_valid()


# -- Reduction ---------------------------------------------------------------

def test_abi_condition():
    graph = tree()

    assert satisfies_abi(graph, graph.index('0'), graph.index('1'))
    assert not satisfies_abi(graph, graph.index('1'), graph.index('3'))
    assert not satisfies_abi(graph, graph.index('0'), graph.index('2'))


def test_star_center():
    graph = simplex_digraph(3)

    assert is_star_center(graph, 0)
    assert is_star_center(graph, 3)
    assert not is_star_center(graph, 1)


def test_tree_reduces_to_a_point():
    trace = find_reduction(tree())

    assert trace.contractible
    assert trace.verdict == enums.ReductionVerdict.Contractible
    assert len(trace.steps) == 5
    assert trace.replay() == trace.residual


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_simplex_reduces_to_a_point(n):
    assert find_reduction(simplex_digraph(n)).contractible


def test_s5_is_irreducible():
    graph = cycle_digraph([True] * 5)
    trace = find_reduction(graph)

    assert trace.verdict == enums.ReductionVerdict.Irreducible
    assert trace.steps == ()
    assert trace.residual == graph


def test_star_rule_fallback():
    graph = make_digraph('cxyz', [('c', 'x'), ('c', 'y'), ('c', 'z'), ('x', 'y'), ('y', 'z'), ('z', 'x')])
    trace = find_reduction(graph)

    assert trace.contractible
    assert any(step.rule == enums.ReductionRule.OneStepRetraction for step in trace.steps)
    assert trace.replay() == trace.residual


def test_replay_rejects_bad_steps():
    graph = cycle_digraph([True] * 5)
    trace = ReductionTrace(graph, (ReductionStep('0', '1', enums.ReductionRule.Abi),), graph)

    with pytest.raises(errors.NotARetraction):
        trace.replay()


# -- Retractions -------------------------------------------------------------

def test_retract5():
    result = is_deformation_retraction(_make_retraction())

    assert result
    assert result.criterion == enums.RetractionCriterion.OneStepForward


def test_identity_is_retraction():
    graph = triangle()
    assert is_deformation_retraction(identity_map(graph))


def test_collapsing_a_line_level():
    graph = triangle()
    result = is_deformation_retraction(collapse_last_level(graph, [True, True]))

    assert result
    assert result.criterion == enums.RetractionCriterion.OneStepBackward


def test_retraction_found_by_search():
    line = make_digraph('0123', [('0', '1'), ('2', '1'), ('2', '3')])
    end = make_digraph('0', [])
    result = is_deformation_retraction(DigraphMap(line, end, [0, 0, 0, 0]))

    assert result
    assert result.criterion == enums.RetractionCriterion.HomotopySearch


def test_s5_does_not_retract_to_a_vertex():
    graph = cycle_digraph([True] * 5)
    result = is_deformation_retraction(DigraphMap(graph, make_digraph('0', []), [0] * 5))

    assert not result
    assert result.search.status == enums.SearchStatus.No


def test_retraction_must_fix_its_target():
    graph = simplex_digraph(2)
    edge = simplex_digraph(1)

    with pytest.raises(errors.NotARetraction):
        is_deformation_retraction(DigraphMap(graph, edge, [0, 0, 1]))

    assert is_deformation_retraction(DigraphMap(edge, make_digraph('0', []), [0, 0]))


# -- Chain homotopy ----------------------------------------------------------

def test_projection_is_chain_homotopy_of_identity():
    graph = triangle()
    identity = identity_map(graph)

    assert verify_chain_homotopy(product_projection(graph, unit_interval()), identity, identity)


def test_chain_homotopy_for_simplex_contraction():
    graph = simplex_digraph(2)
    f, g = identity_map(graph), constant_map(graph, graph, '2')

    assert verify_chain_homotopy(cylinder_map(f, g), f, g)

    with pytest.raises(errors.BadRestriction):
        verify_chain_homotopy(cylinder_map(f, g), g, f)


@pytest.mark.parametrize('seed', range(20))
def test_random_chain_homotopies(seed):
    rng = random.Random(seed)
    source = _make_random_digraph(rng)
    target = _make_random_digraph(rng, n=5)
    f = _make_random_map(rng, source, target)
    g = _make_forward_step(rng, f)

    assert one_step_homotopic(f, g) in (enums.HomotopyDirection.Forward, enums.HomotopyDirection.Both)
    assert verify_chain_homotopy(cylinder_map(f, g), f, g)
