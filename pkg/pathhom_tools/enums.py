import enum


class Ring(enum.Enum):
    """Coefficient rings supported by the chain pipeline.
    """

    #: Rational numbers, exact fractions.
    Q = 'rational'

    #: Integers, arbitrary precision.
    Z = 'integer'


class HomotopyDirection(enum.Enum):
    """Which ordering of the pointwise relation holds for a pair of maps.
    """

    #: f(x) ⃗= g(x) for all x.
    Forward = enum.auto()

    #: g(x) ⃗= f(x) for all x.
    Backward = enum.auto()

    #: Both orderings hold (e.g. f = g).
    Both = enum.auto()

    #: Neither ordering holds.
    No = enum.auto()


class SearchStatus(enum.Enum):
    """Outcome of a bounded search.
    """

    #: A witness was found.
    Yes = enum.auto()

    #: The searched space was exhausted, or an invariant separates the inputs.
    No = enum.auto()

    #: The budget ran out before a definitive answer.
    Inconclusive = enum.auto()


class ReductionRule(enum.Enum):
    """Rules licensing the removal of a vertex without changing the homotopy type.
    """

    #: A neighbour b0 dominates the removed vertex a.
    Abi = 'abi'

    #: The digraph is (inverse) star-like around the witness, collapse one more vertex onto it.
    OneStepRetraction = 'one-step-retraction'


class RetractionCriterion(enum.Enum):
    """How a deformation retraction was certified.
    """

    #: x ⃗= r(x) for all x.
    OneStepForward = 'one-step-forward'

    #: r(x) ⃗= x for all x.
    OneStepBackward = 'one-step-backward'

    #: i∘r ≃ id found by map-space search.
    HomotopySearch = 'homotopy-search'

    #: Nothing certified it.
    NoCriterion = 'none'


class MoveRule(enum.Enum):
    """Word transformations of the loop calculus.
    """

    #: ...abc... -> ...ac... over a triangle (or a degenerate triangle).
    TriangleDrop = 'i'

    #: ...abc... -> ...adc... over a square.
    SquareSwap = 'ii'

    #: ...abcd... -> ...ad... over a square.
    SquareDrop = 'iii'

    #: ...aba... -> ...a... over an edge.
    Backtrack = 'iv'

    #: ...aa... -> ...a...
    Dedup = 'v'


class Omega2Kind(enum.Enum):
    """Elementary building blocks of ∂-invariant 2-paths.
    """

    #: e_{iji} with i⇄j.
    DoubleEdge = enum.auto()

    #: e_{ijk} with i→j→k and i→k.
    Triangle = enum.auto()

    #: e_{ijk} − e_{imk} with i→j→k, i→m→k and no edge i→k.
    Square = enum.auto()


class DocumentMode(enum.Enum):
    """Kinds of input documents understood by the command line.
    """

    Digraph = 'digraph'
    Graph = 'graph'
    Triangulation = 'triangulation'


class ReductionVerdict(enum.Enum):
    """Outcome of the greedy vertex reduction.
    """

    #: The residual digraph is a single vertex.
    Contractible = 'contractible'

    #: No rule applies any more, yet more than one vertex is left. Says nothing about contractibility.
    Irreducible = 'irreducible'
