"""Based loops as vertex words, the C-homotopy word calculus, bounded equivalence search, the Hurewicz map into
first homology and connected components.

A loop word v_0 v_1 ... v_n starts and ends at the base, and consecutive letters are equal or adjacent. The moves
below rewrite a subword while keeping its first and last letter, so the base never changes:

* (i)   abc -> ac   when a, b, c span a triangle (in any order) or a degenerate one,
* (ii)  abc -> adc  when a, b, c, d go around a square,
* (iii) abcd -> ad  when a, b, c, d go around a square,
* (iv)  aba -> a    over an edge,
* (v)   aa -> a,

together with their inverses.
"""

import collections
import dataclasses
import itertools
import typing as t

from . import enums
from . import errors
from . import preferences
from . import utils
from .chains import Chain, boundary, is_allowed
from .digraph import Digraph, DigraphMap
from .homology import is_boundary


Word: t.TypeAlias = tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class LoopWord:
    """A validated loop word. Build with :func:`make_loop`.
    """

    digraph: Digraph
    word: Word
    base: int

    def __len__(self) -> int:
        """Number of steps n of the word v_0 ... v_n."""
        return len(self.word) - 1

    @property
    def is_trivial(self) -> bool:
        return len(self.word) == 1

    @property
    def names(self) -> list[str]:
        return [self.digraph.name(v) for v in self.word]

    def format(self) -> str:
        return ' '.join(self.names)

    def __str__(self) -> str:
        return self.format()


def _check_word(graph: Digraph, word: Word) -> None:
    for i, (a, b) in enumerate(zip(word, word[1:])):
        if a != b and not graph.adjacent(a, b):
            raise errors.NotTraversable(i, (graph.name(a), graph.name(b)))


def _split(word: str | t.Sequence[str]) -> list[str]:
    return word.split() if isinstance(word, str) else [str(letter) for letter in word]


def make_loop(graph: Digraph, word: str | t.Sequence[str], base: t.Optional[str] = None) -> LoopWord:
    """Validated loop from vertex names.

    :param graph: Digraph.
    :param word: Letters as a whitespace separated string or a sequence of names.
    :param base: Base vertex, defaults to the first letter.
    :raises UnknownVertex: Raised for undeclared names.
    :raises BadEndpoints: Raised when the word is empty or does not start and end at the base.
    :raises NotTraversable: Raised when consecutive letters are neither equal nor adjacent.
    """
    letters = _split(word)
    if not letters:
        raise errors.BadEndpoints("A loop word needs at least one letter.")

    base = letters[0] if base is None else str(base)
    if letters[0] != base or letters[-1] != base:
        raise errors.BadEndpoints(f"Loop word must start and end at the base {base}.")

    indices = tuple(graph.index(letter) for letter in letters)
    _check_word(graph, indices)

    return LoopWord(graph, indices, graph.index(base))


def trivial_loop(graph: Digraph, base: str) -> LoopWord:
    return make_loop(graph, [base])


@dataclasses.dataclass(frozen=True)
class RewriteStep:
    """Replacement of ``replaced`` by ``replacement`` at ``position`` of a word.
    """

    rule: enums.MoveRule
    position: int
    replaced: Word
    replacement: Word

    #: True for inverse moves, which lengthen the word.
    expansion: bool = False

    def apply(self, word: Word) -> Word:
        end = self.position + len(self.replaced)
        if word[self.position:end] != self.replaced:
            raise ValueError(f"Step does not apply to {word}.")

        return word[:self.position] + self.replacement + word[end:]

    def inverse(self) -> 'RewriteStep':
        return RewriteStep(self.rule, self.position, self.replacement, self.replaced,
                           not self.expansion if self.rule != enums.MoveRule.SquareSwap else False)

    def format(self, graph: Digraph) -> str:
        rule = f"({self.rule.value}){'⁻' if self.expansion else ''}"
        before = ' '.join(graph.name(v) for v in self.replaced)
        after = ' '.join(graph.name(v) for v in self.replacement)
        return f"{rule} at {self.position}: {before} -> {after}"


def is_triangle(graph: Digraph, a: int, b: int, c: int) -> bool:
    """Some ordering p, q, r of the three letters has p → q, q → r and p → r. With repeated letters, every two
    distinct letters must be adjacent (a degenerate triangle).
    """
    letters = {a, b, c}
    if len(letters) < 3:
        return all(graph.adjacent(x, y) for x, y in itertools.combinations(letters, 2))

    return any(graph.has_edge(p, q) and graph.has_edge(q, r) and graph.has_edge(p, r)
               for p, q, r in itertools.permutations(letters))


def is_square(graph: Digraph, a: int, b: int, c: int, d: int) -> bool:
    """a, b, c, d are distinct and go around a square v → v′ → v″, v → v‴ → v″ in some rotation or reflection."""
    if len({a, b, c, d}) < 4:
        return False

    cycle = (a, b, c, d)
    for shift in range(4):
        for order in (cycle[shift:] + cycle[:shift], tuple(reversed(cycle[shift:] + cycle[:shift]))):
            v, v1, v2, v3 = order
            if (graph.has_edge(v, v1) and graph.has_edge(v1, v2) and graph.has_edge(v, v3)
                    and graph.has_edge(v3, v2)):
                return True

    return False


def _shortening_at(graph: Digraph, word: Word, i: int) -> t.Iterator[RewriteStep]:
    """Shortening moves at position i, rules in the order (v), (iv), (i), (iii)."""
    rest = len(word) - i

    if rest >= 2 and word[i] == word[i + 1]:
        yield RewriteStep(enums.MoveRule.Dedup, i, word[i:i + 2], word[i:i + 1])

    if rest >= 3:
        a, b, c = word[i:i + 3]

        if a == c and a != b and graph.adjacent(a, b):
            yield RewriteStep(enums.MoveRule.Backtrack, i, (a, b, a), (a,))

        if is_triangle(graph, a, b, c):
            yield RewriteStep(enums.MoveRule.TriangleDrop, i, (a, b, c), (a, c))

    if rest >= 4 and is_square(graph, *word[i:i + 4]):
        yield RewriteStep(enums.MoveRule.SquareDrop, i, word[i:i + 4], (word[i], word[i + 3]))


def _swaps_at(graph: Digraph, word: Word, i: int) -> t.Iterator[RewriteStep]:
    if len(word) - i < 3:
        return

    a, b, c = word[i:i + 3]
    for d in sorted(set(graph.neighbors(a)) & set(graph.neighbors(c))):
        if d != b and is_square(graph, a, b, c, d):
            yield RewriteStep(enums.MoveRule.SquareSwap, i, (a, b, c), (a, d, c))


def _expansions_at(graph: Digraph, word: Word, i: int) -> t.Iterator[RewriteStep]:
    a = word[i]
    yield RewriteStep(enums.MoveRule.Dedup, i, (a,), (a, a), True)

    for b in graph.neighbors(a):
        yield RewriteStep(enums.MoveRule.Backtrack, i, (a,), (a, b, a), True)

    if i + 1 >= len(word):
        return

    c = word[i + 1]
    if a == c:
        return

    for b in range(len(graph)):
        if b not in (a, c) and is_triangle(graph, a, b, c):
            yield RewriteStep(enums.MoveRule.TriangleDrop, i, (a, c), (a, b, c), True)

    for b in graph.neighbors(a):
        for d in graph.neighbors(b):
            if is_square(graph, a, b, d, c):
                yield RewriteStep(enums.MoveRule.SquareDrop, i, (a, c), (a, b, d, c), True)


def applicable_moves(loop: LoopWord, expansions: bool = True) -> list[RewriteStep]:
    """Every move that applies somewhere in the word, ordered by position.

    :param loop: Loop word.
    :param expansions: Also list inverse moves, flagged with ``expansion``.
    """
    graph, word = loop.digraph, loop.word
    moves = []

    for i in range(len(word)):
        moves.extend(_shortening_at(graph, word, i))
        moves.extend(_swaps_at(graph, word, i))
        if expansions:
            moves.extend(_expansions_at(graph, word, i))

    return moves


def reduce_loop_steps(loop: LoopWord) -> tuple[LoopWord, list[RewriteStep]]:
    """Like :func:`reduce_loop`, also returning the steps taken."""
    graph, word = loop.digraph, loop.word
    steps = []

    while True:
        shortenings = (s for i in range(len(word)) for s in _shortening_at(graph, word, i))
        step = next(shortenings, None)

        if step is None:
            break

        word = step.apply(word)
        steps.append(step)

    return LoopWord(graph, word, loop.base), steps


def reduce_loop(loop: LoopWord) -> LoopWord:
    """Applies shortening moves leftmost-first until none applies. The move at the smallest position wins,
    ties at one position go to (v), (iv), (i), (iii) in that order.
    """
    return reduce_loop_steps(loop)[0]


def _check_compatible(first: LoopWord, second: LoopWord) -> None:
    if first.digraph != second.digraph or first.base != second.base:
        raise errors.MapMismatch("Loops must live on the same digraph and share their base.")


def concat(first: LoopWord, second: LoopWord) -> LoopWord:
    """Loop going around ``first`` then ``second``.

    :raises MapMismatch: Raised when the loops have different digraphs or bases.
    """
    _check_compatible(first, second)
    return LoopWord(first.digraph, first.word + second.word[1:], first.base)


def inverse(loop: LoopWord) -> LoopWord:
    return LoopWord(loop.digraph, tuple(reversed(loop.word)), loop.base)


def change_base(loop: LoopWord, path: str | t.Sequence[str]) -> LoopWord:
    """γ ∨ w ∨ γ̂ for a path word γ from a new base to the base of w.

    :raises BadEndpoints: Raised when γ does not end at the base of the loop.
    :raises NotTraversable: Raised when γ is not traversable.
    """
    graph = loop.digraph
    letters = tuple(graph.index(letter) for letter in _split(path))

    if not letters or letters[-1] != loop.base:
        raise errors.BadEndpoints(f"Path must end at the base {graph.name(loop.base)}.")

    _check_word(graph, letters)
    return LoopWord(graph, letters + loop.word[1:] + tuple(reversed(letters))[1:], letters[0])


def chi(loop: LoopWord) -> Chain:
    """Hurewicz chain χ(w) = Σ_{v_i → v_i+1} e_{v_i v_i+1} − Σ_{v_i+1 → v_i} e_{v_i+1 v_i}, an integral closed
    1-chain. A step along a double edge between x < y counts as +e_xy from x and as −e_xy from y, so a backtrack
    cancels and χ vanishes for words with at most two steps.
    """
    graph = loop.digraph
    terms = []

    for a, b in zip(loop.word, loop.word[1:]):
        if a == b:
            continue

        if graph.has_edge(a, b) and graph.has_edge(b, a):
            terms.append(((min(a, b), max(a, b)), 1 if a < b else -1))
        elif graph.has_edge(a, b):
            terms.append(((a, b), 1))
        else:
            terms.append(((b, a), -1))

    return Chain(1, terms, enums.Ring.Z)


@dataclasses.dataclass(frozen=True)
class HurewiczResult:
    """Class of χ(w) in H_1(G; Z)."""

    trivial: bool
    chi: Chain

    #: ω ∈ Ω_2(G; Z) with ∂ω = χ(w) when the class is trivial.
    witness: t.Optional[Chain] = None


def hurewicz_class(loop: LoopWord) -> HurewiczResult:
    value = chi(loop)
    result = is_boundary(value, loop.digraph, enums.Ring.Z)
    return HurewiczResult(result.is_boundary, value, result.witness)


@dataclasses.dataclass(frozen=True)
class EquivalenceResult:
    status: enums.SearchStatus

    #: Steps turning the first word into the second one.
    trace: t.Optional[list[RewriteStep]] = None

    #: 'equal', 'search', 'hurewicz' (homology obstruction), 'exhausted' or 'budget'.
    reason: str = ''

    #: Number of words expanded.
    explored: int = 0

    def __bool__(self) -> bool:
        return self.status == enums.SearchStatus.Yes


def _neighbours(graph: Digraph, word: Word, max_len: int) -> t.Iterator[tuple[RewriteStep, Word]]:
    for i in range(len(word)):
        for step in itertools.chain(_shortening_at(graph, word, i), _swaps_at(graph, word, i),
                                    _expansions_at(graph, word, i)):
            if len(word) - len(step.replaced) + len(step.replacement) <= max_len:
                yield step, step.apply(word)


def loops_equivalent(first: LoopWord, second: LoopWord, max_len: t.Optional[int] = None,
                     max_steps: t.Optional[int] = None) -> EquivalenceResult:
    """Decides C-homotopy of two loops as far as it can.

    The loops are separated at once when χ(first) − χ(second) does not bound over Z. Otherwise a bidirectional
    breadth-first search over words of at most ``max_len`` letters looks for a rewrite sequence.

    :param first: Loop word.
    :param second: Loop word on the same digraph and base.
    :param max_len: Longest word visited, defaults to 2·max(|w1|, |w2|) + 4 letters.
    :param max_steps: Maximal number of expanded words, defaults to the ``loop_max_steps`` preference.
    :raises MapMismatch: Raised when the loops have different digraphs or bases.
    :return: Yes with a trace, No when separated by χ or when both search frontiers ran dry, else Inconclusive.
    """
    _check_compatible(first, second)
    graph = first.digraph

    if first.word == second.word:
        return EquivalenceResult(enums.SearchStatus.Yes, [], 'equal')

    if not is_boundary(chi(first) - chi(second), graph, enums.Ring.Z):
        return EquivalenceResult(enums.SearchStatus.No, None, 'hurewicz')

    max_len = 2 * max(len(first.word), len(second.word)) + 4 if max_len is None else max_len
    max_steps = preferences.get_preferences().loop_max_steps if max_steps is None else max_steps

    parents: tuple[dict[Word, t.Optional[tuple[Word, RewriteStep]]], ...] = ({first.word: None}, {second.word: None})
    queues = (collections.deque([first.word]), collections.deque([second.word]))
    explored = 0

    for _ in utils.progress(iter(lambda: bool(queues[0] or queues[1]), False), desc='loop search'):
        side = 0 if queues[0] and (not queues[1] or len(queues[0]) <= len(queues[1])) else 1
        word = queues[side].popleft()
        explored += 1

        for step, image in _neighbours(graph, word, max_len):
            if image in parents[side]:
                continue

            parents[side][image] = (word, step)

            if image in parents[1 - side]:
                utils.verbose_print(f"Loops met after expanding {explored} words.")
                return EquivalenceResult(enums.SearchStatus.Yes, _join_traces(parents, image), 'search', explored)

            queues[side].append(image)

        if explored >= max_steps:
            return EquivalenceResult(enums.SearchStatus.Inconclusive, None, 'budget', explored)

    return EquivalenceResult(enums.SearchStatus.No, None, 'exhausted', explored)


def _path_to(parents: dict[Word, t.Optional[tuple[Word, RewriteStep]]], word: Word) -> list[RewriteStep]:
    steps = []
    while (entry := parents[word]) is not None:
        word, step = entry
        steps.append(step)

    return steps[::-1]


def _join_traces(parents: tuple[dict[Word, t.Optional[tuple[Word, RewriteStep]]], ...],
                 meeting: Word) -> list[RewriteStep]:
    forward = _path_to(parents[0], meeting)
    backward = [step.inverse() for step in reversed(_path_to(parents[1], meeting))]
    return forward + backward


def replay(loop: LoopWord, steps: t.Iterable[RewriteStep]) -> LoopWord:
    """Applies steps to a loop, checking that every intermediate word is a loop."""
    word = loop.word
    for step in steps:
        word = step.apply(word)
        _check_word(loop.digraph, word)

    return LoopWord(loop.digraph, word, loop.base)


def connected_components(graph: Digraph) -> list[list[str]]:
    """Components of the symmetrized edge relation, ordered by their first vertex."""
    component = component_indices(graph)
    groups: dict[int, list[str]] = {}
    for v, c in enumerate(component):
        groups.setdefault(c, []).append(graph.name(v))

    return [groups[c] for c in sorted(groups)]


def component_indices(graph: Digraph) -> list[int]:
    """Component number of every vertex, components numbered in order of their first vertex."""
    component = [-1] * len(graph)
    count = 0

    for start in range(len(graph)):
        if component[start] != -1:
            continue

        component[start] = count
        queue = collections.deque([start])
        while queue:
            v = queue.popleft()
            for w in graph.neighbors(v):
                if component[w] == -1:
                    component[w] = count
                    queue.append(w)

        count += 1

    return component


def induced_components_map(f: DigraphMap) -> dict[int, int]:
    """The map π_0(G) → π_0(H) on component numbers of :func:`component_indices`."""
    source, target = component_indices(f.source), component_indices(f.target)
    return {source[v]: target[f(v)] for v in range(len(f.source))}


def _shortest_path(graph: Digraph, start: int, goal: int) -> t.Optional[Word]:
    parents: dict[int, t.Optional[int]] = {start: None}
    queue = collections.deque([start])

    while queue:
        v = queue.popleft()
        if v == goal:
            path = [v]
            while (p := parents[path[-1]]) is not None:
                path.append(p)
            return tuple(reversed(path))

        for w in graph.neighbors(v):
            if w not in parents:
                parents[w] = v
                queue.append(w)

    return None


def loop_for_cycle(cycle: Chain, graph: Digraph, base: str) -> LoopWord:
    """A loop whose χ is homologous to an integral closed 1-chain.

    The chain is read as a multiset of traversals (negative coefficients traverse edges backwards) and split into
    closed walks; every walk is joined to the base along a shortest path and the results are concatenated.

    :raises NotACycle: Raised when the chain is not an allowed integral cycle or leaves the component of the base.
    """
    try:
        cycle = cycle.to_ring(enums.Ring.Z)
    except ValueError as e:
        raise errors.NotACycle("Coefficients must be integers.") from e

    if cycle and (cycle.dim != 1 or not is_allowed(cycle, graph) or boundary(cycle)):
        raise errors.NotACycle("Expected an allowed closed 1-chain.")

    base_index = graph.index(base)
    unused: dict[int, list[int]] = {}
    for (a, b), coeff in cycle:
        tail, head = (a, b) if coeff > 0 else (b, a)
        unused.setdefault(tail, []).extend([head] * abs(coeff))

    for heads in unused.values():
        heads.sort(reverse=True)

    result = trivial_loop(graph, base)
    while (start := min((v for v, heads in unused.items() if heads), default=None)) is not None:
        walk = [start]
        while unused.get(walk[-1]):
            walk.append(unused[walk[-1]].pop())

        if (approach := _shortest_path(graph, base_index, start)) is None:
            raise errors.NotACycle(f"Cycle leaves the component of {base}.")

        closed = LoopWord(graph, tuple(walk), start)
        result = concat(result, change_base(closed, [graph.name(v) for v in approach]))

    return result


__all__ = (
    'Word',
    'LoopWord',
    'RewriteStep',
    'HurewiczResult',
    'EquivalenceResult',
    'make_loop',
    'trivial_loop',
    'is_triangle',
    'is_square',
    'applicable_moves',
    'reduce_loop',
    'reduce_loop_steps',
    'concat',
    'inverse',
    'change_base',
    'chi',
    'hurewicz_class',
    'loops_equivalent',
    'replay',
    'connected_components',
    'component_indices',
    'induced_components_map',
    'loop_for_cycle',
)
