"""Path homology: the ∂-invariant complex Ω_*, Betti numbers over Q, invariant factors over Z, generators and the
structure of ∂-invariant 2-paths.
"""

import dataclasses
import typing as t

import sympy

from . import enums
from . import errors
from . import linalg
from . import rings
from . import utils
from .chains import Chain, Path, boundary, enumerate_allowed, induced_map, is_allowed, is_allowed_path
from .digraph import Digraph, DigraphMap


@dataclasses.dataclass(frozen=True, eq=False)
class OmegaComplex:
    """Bases of A_p and Ω_p for p = 0 .. max_dim + 1 and the boundary matrices between Ω-levels.

    ``omega_matrices[p]`` has one column per Ω_p basis element, written over the A_p basis.
    ``d_omega[p]`` is the matrix of ∂: Ω_p → Ω_{p−1} in the Ω bases (``d_omega[0]`` has no rows).
    """

    digraph: Digraph
    ring: enums.Ring
    max_dim: int
    a_basis: tuple[tuple[Path, ...], ...]
    omega_matrices: tuple[sympy.Matrix, ...]
    d_omega: tuple[sympy.Matrix, ...]

    @property
    def top(self) -> int:
        """Highest level built, always ``max_dim + 1``."""
        return len(self.a_basis) - 1

    def dimensions(self) -> list[int]:
        """dim Ω_p for every level built."""
        return [m.cols for m in self.omega_matrices]

    def chain(self, p: int, coordinates: sympy.Matrix) -> Chain:
        """Chain on the digraph with the given coordinates in the Ω_p basis."""
        vector = self.omega_matrices[p] * coordinates
        return Chain(p, [(path, vector[i, 0]) for i, path in enumerate(self.a_basis[p])], self.ring)

    def omega_basis(self, p: int) -> list[Chain]:
        return [self.chain(p, self.omega_matrices[p][:, j]) for j in range(self.omega_matrices[p].cols)]

    def coordinates(self, chain: Chain) -> t.Optional[sympy.Matrix]:
        """Coordinates of a chain in the Ω_p basis.

        :return: Column vector, or None when the chain is not in Ω_p.
        """
        p = chain.dim
        if not 0 <= p <= self.top:
            raise ValueError(f"Level {p} was not built (levels 0..{self.top}).")

        index = {path: i for i, path in enumerate(self.a_basis[p])}
        vector = linalg.zeros(len(index), 1)

        for path, coeff in chain:
            if path not in index:
                return None
            vector[index[path], 0] = coeff

        return linalg.rational_solve(self.omega_matrices[p], vector)


def _boundary_columns(paths: t.Sequence[Path], allowed_index: dict[Path, int]
                      ) -> tuple[dict[tuple[int, int], int], dict[Path, dict[int, int]]]:
    """Boundary of each path split into allowed faces (by A-index) and non-allowed regular faces."""
    allowed: dict[tuple[int, int], int] = {}
    outside: dict[Path, dict[int, int]] = {}

    for col, path in enumerate(paths):
        for q in range(len(path)):
            face = path[:q] + path[q + 1:]
            sign = 1 if q % 2 == 0 else -1

            if any(a == b for a, b in zip(face, face[1:])):
                continue

            if (row := allowed_index.get(face)) is not None:
                allowed[row, col] = allowed.get((row, col), 0) + sign
            else:
                entries = outside.setdefault(face, {})
                entries[col] = entries.get(col, 0) + sign

    return allowed, outside


def build_omega(graph: Digraph, p_max: int, ring: enums.Ring = enums.Ring.Q,
                budget: t.Optional[int] = None) -> OmegaComplex:
    """Builds Ω_p for p = 0 .. p_max + 1. Level p_max + 1 is needed for the image of ∂ in H_{p_max}.

    Ω_p is the kernel of A_p → ℛ_{p−1}/A_{p−1}, the boundary followed by the projection onto non-allowed paths.
    Over Q the kernel basis is in canonical echelon form, over Z it spans the saturated kernel lattice.

    :param graph: Digraph.
    :param p_max: Highest homology dimension of interest.
    :param ring: Coefficient ring.
    :param budget: Path enumeration budget.
    :raises BudgetExceeded: Raised by path enumeration.
    :return: The complex.
    """
    if p_max < 0:
        raise ValueError("p_max must be non-negative.")

    handler = rings.get_ring_handler(ring)
    a_basis = [tuple(enumerate_allowed(graph, p, budget)) for p in range(p_max + 2)]
    omega_matrices: list[sympy.Matrix] = []
    d_omega: list[sympy.Matrix] = []

    for p, paths in enumerate(a_basis):
        if p == 0:
            omega_matrices.append(sympy.eye(len(paths)))
            d_omega.append(linalg.zeros(0, len(paths)))
            continue

        lower_index = {path: i for i, path in enumerate(a_basis[p - 1])}
        allowed, outside = _boundary_columns(paths, lower_index)

        constraint = linalg.zeros(len(outside), len(paths))
        for row, face in enumerate(sorted(outside)):
            for col, value in outside[face].items():
                constraint[row, col] = value

        omega = sympy.eye(len(paths)) if not outside else handler.kernel_basis(constraint)
        omega_matrices.append(omega)

        d_full = linalg.zeros(len(lower_index), len(paths))
        for (row, col), value in allowed.items():
            d_full[row, col] = value

        d_omega_p = linalg.rational_solve(omega_matrices[p - 1], d_full * omega)
        assert d_omega_p is not None, "boundary of a ∂-invariant path must be ∂-invariant"
        d_omega.append(d_omega_p)

        utils.verbose_print(f"Ω_{p}: |A_{p}| = {len(paths)}, {len(outside)} non-allowed faces, dim = {omega.cols}")

    return OmegaComplex(graph, ring, p_max, tuple(a_basis), tuple(omega_matrices), tuple(d_omega))


@dataclasses.dataclass(frozen=True)
class HomologyResult:
    """Path homology of a digraph up to some dimension.
    """

    ring: enums.Ring

    #: Betti numbers (free ranks over Z).
    betti: list[int]

    #: Invariant factors > 1 per dimension, always empty over Q.
    torsion: list[list[int]]

    #: Representative cycles per dimension, when requested. Over Z they represent the free part.
    generators: t.Optional[list[list[Chain]]] = None

    omega: t.Optional[OmegaComplex] = dataclasses.field(default=None, repr=False, compare=False)

    def format(self) -> str:
        pieces = []
        for p, (rank, torsion) in enumerate(zip(self.betti, self.torsion)):
            piece = f"H{p}: {rank}"
            if torsion:
                piece += f" torsion {torsion}"
            pieces.append(piece)

        return ', '.join(pieces)


def homology(graph: Digraph, p_max: int, ring: enums.Ring = enums.Ring.Q, generators: bool = False,
             budget: t.Optional[int] = None) -> HomologyResult:
    """Path homology H_p(G) = ker ∂|Ω_p / Im ∂|Ω_{p+1} for p = 0 .. p_max.

    :param graph: Digraph.
    :param p_max: Highest dimension.
    :param ring: Q for Betti numbers, Z for free ranks and torsion.
    :param generators: Also extract representative cycles, in echelon pivot order.
    :param budget: Path enumeration budget.
    :raises BudgetExceeded: Raised by path enumeration.
    :return: Homology.
    """
    handler = rings.get_ring_handler(ring)
    omega = build_omega(graph, p_max, ring, budget)

    betti, torsion = [], []
    gens: t.Optional[list[list[Chain]]] = [] if generators else None

    for p in range(p_max + 1):
        rank_p = linalg.rank(omega.d_omega[p])
        rank_next, torsion_next = handler.rank_and_torsion(omega.d_omega[p + 1])

        betti.append(omega.omega_matrices[p].cols - rank_p - rank_next)
        torsion.append(torsion_next)

        if gens is not None:
            gens.append(_generators(omega, handler, p, betti[-1]))

    return HomologyResult(ring, betti, torsion, gens, omega)


def _generators(omega: OmegaComplex, handler: rings.RingHandler, p: int, count: int) -> list[Chain]:
    kernel = handler.kernel_basis(omega.d_omega[p])
    span = omega.d_omega[p + 1]
    span_rank = linalg.rank(span)
    chosen = []

    for j in range(kernel.cols):
        if len(chosen) == count:
            break

        candidate = span.row_join(kernel[:, j])
        if (candidate_rank := linalg.rank(candidate)) > span_rank:
            span, span_rank = candidate, candidate_rank
            chosen.append(omega.chain(p, kernel[:, j]))

    return chosen


def standard_cycle_path(cycle: Digraph, ring: enums.Ring = enums.Ring.Q) -> Chain:
    """The standard 1-path ϖ = Σ_{i→i+1} e_{i,i+1} − Σ_{i+1→i} e_{i+1,i} of a cycle digraph.

    The cycle is walked from vertex 0 towards its neighbour of smaller index.

    :raises NotACycle: Raised when the digraph is not a cycle digraph.
    """
    n = len(cycle)
    if n < 3 or cycle.edge_count != n or any(len(cycle.neighbors(v)) != 2 for v in range(n)):
        raise errors.NotACycle("Digraph is not a cycle digraph.")

    walk = [0, cycle.neighbors(0)[0]]
    while len(walk) < n:
        previous, current = walk[-2], walk[-1]
        walk.append(next(v for v in cycle.neighbors(current) if v != previous))

    if len(set(walk)) != n or not cycle.adjacent(walk[-1], walk[0]):
        raise errors.NotACycle("Digraph is not connected.")

    terms = []
    for a, b in zip(walk, walk[1:] + walk[:1]):
        terms.append(((a, b), 1) if cycle.has_edge(a, b) else ((b, a), -1))

    return Chain(1, terms, ring)


@dataclasses.dataclass(frozen=True)
class BoundaryResult:
    """Answer of :func:`is_boundary`. Truthy when the chain bounds.
    """

    is_boundary: bool

    #: ω with ∂ω equal to the chain, when it exists.
    witness: t.Optional[Chain] = None

    def __bool__(self) -> bool:
        return self.is_boundary


def _check_cycle(chain: Chain, graph: Digraph) -> None:
    if not is_allowed(chain, graph) or not is_allowed(boundary(chain), graph):
        raise errors.NotACycle("Chain is not ∂-invariant.")

    if boundary(chain):
        raise errors.NotACycle("Chain has a non-zero boundary.")


def is_boundary(chain: Chain, graph: Digraph, ring: t.Optional[enums.Ring] = None,
                omega: t.Optional[OmegaComplex] = None) -> BoundaryResult:
    """Decides whether a cycle of Ω_p lies in ∂(Ω_{p+1}) over the given ring.

    :param chain: A cycle in Ω_p.
    :param graph: Digraph.
    :param ring: Coefficient ring, defaults to the ring of the chain.
    :param omega: A prebuilt complex over the same ring with levels up to p + 1.
    :raises NotACycle: Raised when the chain is not a ∂-invariant cycle.
    :return: Verdict with a witness.
    """
    ring = chain.ring if ring is None else ring
    chain = chain.to_ring(ring)
    p = chain.dim

    if not chain:
        return BoundaryResult(True, Chain.zero(p + 1, ring))

    _check_cycle(chain, graph)

    if omega is None or omega.ring != ring or omega.top < p + 1:
        omega = build_omega(graph, p, ring)

    coordinates = omega.coordinates(chain)
    assert coordinates is not None

    solution = rings.get_ring_handler(ring).solve(omega.d_omega[p + 1], coordinates)
    if solution is None:
        return BoundaryResult(False)

    return BoundaryResult(True, omega.chain(p + 1, solution))


@dataclasses.dataclass(frozen=True)
class Omega2Term:
    """One building block of a ∂-invariant 2-path with its integer multiplicity.

    ``paths`` holds one path for double edges and triangles and the two routes (j, m) of a square
    e_{ijk} − e_{imk}.
    """

    kind: enums.Omega2Kind
    paths: tuple[Path, ...]
    multiplicity: int

    @property
    def chain(self) -> Chain:
        if self.kind == enums.Omega2Kind.Square:
            first, second = self.paths
            return Chain(2, [(first, self.multiplicity), (second, -self.multiplicity)], enums.Ring.Z)

        return Chain(2, [(self.paths[0], self.multiplicity)], enums.Ring.Z)


def decompose_omega2(omega2: Chain, graph: Digraph) -> list[Omega2Term]:
    """Splits an integral ∂-invariant 2-path into double edges, triangles and squares.

    Double edges and triangles are peeled off term by term. The remaining terms e_{ijk} have no edge i → k, their
    coefficients sum to zero for every pair (i, k) and are paired with the first route over that pair.

    :param omega2: A chain in Ω_2(G, Z).
    :param graph: Digraph.
    :raises NotInOmega2: Raised when the chain is not an integral ∂-invariant 2-path.
    :return: Terms whose chains sum up to the input.
    """
    try:
        omega2 = omega2.to_ring(enums.Ring.Z)
    except ValueError as e:
        raise errors.NotInOmega2("Coefficients must be integers.") from e

    if omega2 and omega2.dim != 2:
        raise errors.NotInOmega2(f"Expected a 2-chain, got dimension {omega2.dim}.")

    if not is_allowed(omega2, graph) or not is_allowed(boundary(omega2), graph):
        raise errors.NotInOmega2("Chain is not a ∂-invariant 2-path.")

    terms: list[Omega2Term] = []
    routes: dict[tuple[int, int], list[tuple[int, int]]] = {}

    for (i, j, k), coeff in omega2:
        if i == k:
            terms.append(Omega2Term(enums.Omega2Kind.DoubleEdge, ((i, j, k),), coeff))
        elif graph.has_edge(i, k):
            terms.append(Omega2Term(enums.Omega2Kind.Triangle, ((i, j, k),), coeff))
        else:
            routes.setdefault((i, k), []).append((j, coeff))

    for (i, k), middles in sorted(routes.items()):
        first, _ = middles[0]
        for j, coeff in middles[1:]:
            terms.append(Omega2Term(enums.Omega2Kind.Square, ((i, j, k), (i, first, k)), coeff))

    return terms


def induced_homology_map(f: DigraphMap, p: int, budget: t.Optional[int] = None) -> sympy.Matrix:
    """Matrix of f_*: H_p(G; Q) → H_p(H; Q) in the generator bases returned by :func:`homology`.

    :param f: Digraph map G → H.
    :param p: Dimension.
    :return: dim H_p(H) × dim H_p(G) rational matrix.
    """
    source = homology(f.source, p, enums.Ring.Q, generators=True, budget=budget)
    target = homology(f.target, p, enums.Ring.Q, generators=True, budget=budget)
    assert source.generators is not None and target.generators is not None and target.omega is not None

    omega = target.omega
    target_gens = target.generators[p]

    basis = linalg.zeros(omega.omega_matrices[p].cols, 0)
    for gen in target_gens:
        basis = basis.row_join(omega.coordinates(gen))
    basis = basis.row_join(omega.d_omega[p + 1])

    matrix = linalg.zeros(len(target_gens), 0)
    for gen in source.generators[p]:
        image = omega.coordinates(induced_map(f, gen).to_ring(enums.Ring.Q))
        solution = linalg.rational_solve(basis, image)
        assert solution is not None, "image of a cycle must be a cycle"
        matrix = matrix.row_join(solution[:len(target_gens), :])

    return matrix


__all__ = (
    'OmegaComplex',
    'HomologyResult',
    'BoundaryResult',
    'Omega2Term',
    'build_omega',
    'homology',
    'standard_cycle_path',
    'is_boundary',
    'decompose_omega2',
    'induced_homology_map',
)
