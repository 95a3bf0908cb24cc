"""Elementary paths, sparse chains over an exact coefficient ring, the boundary operator, induced maps and the
cylinder lifting operator.

A path is a tuple of vertex indices. Chains only ever store regular paths: irregular paths are identified with 0.
"""

import typing as t

from . import enums
from . import errors
from . import preferences
from . import rings
from .digraph import Digraph, DigraphMap


Path: t.TypeAlias = tuple[int, ...]


def is_regular(path: Path) -> bool:
    """No two consecutive vertices coincide."""
    return all(a != b for a, b in zip(path, path[1:]))


def is_allowed_path(path: Path, graph: Digraph) -> bool:
    """Every consecutive pair is an edge of ``graph``."""
    return all(graph.has_edge(a, b) for a, b in zip(path, path[1:]))


def _result_ring(*ring_list: enums.Ring) -> enums.Ring:
    return enums.Ring.Q if enums.Ring.Q in ring_list else enums.Ring.Z


class Chain:
    """Sparse formal linear combination of regular elementary p-paths.

    Equality compares the dimension and the terms; the ring tag only selects the coefficient type.
    """

    _dim: int
    _ring: enums.Ring
    _terms: dict[Path, t.Any]

    def __init__(self, dim: int, terms: t.Mapping[Path, t.Any] | t.Iterable[tuple[Path, t.Any]] = (),
                 ring: enums.Ring = enums.Ring.Q) -> None:
        """Build a chain, collecting equal paths and dropping irregular paths and zero coefficients.

        :param dim: Dimension p of the chain.
        :param terms: Mapping or iterable of (path, coefficient). Paths must have p + 1 vertices.
        :param ring: Coefficient ring.
        :raises ValueError: Raised when a path has the wrong length or a coefficient is not in the ring.
        """
        handler = rings.get_ring_handler(ring)
        collected: dict[Path, t.Any] = {}

        for path, coeff in (terms.items() if isinstance(terms, t.Mapping) else terms):
            path = tuple(path)

            if len(path) != dim + 1:
                raise ValueError(f"Path {path} does not have dimension {dim}.")

            if not is_regular(path):
                continue

            collected[path] = collected.get(path, 0) + handler.coerce(coeff)

        self._dim = dim
        self._ring = ring
        self._terms = {path: collected[path] for path in sorted(collected) if collected[path] != 0}

    @classmethod
    def zero(cls, dim: int, ring: enums.Ring = enums.Ring.Q) -> 'Chain':
        return cls(dim, {}, ring)

    @classmethod
    def elementary(cls, path: t.Sequence[int], coeff: t.Any = 1, ring: enums.Ring = enums.Ring.Q) -> 'Chain':
        """The chain ``coeff * e_path``."""
        return cls(len(path) - 1, {tuple(path): coeff}, ring)

    @classmethod
    def from_names(cls, graph: Digraph, terms: t.Mapping[t.Sequence[str], t.Any],
                   ring: enums.Ring = enums.Ring.Q) -> 'Chain':
        """Build a chain from paths given as vertex names.

        :param graph: Digraph the names belong to.
        :param terms: Mapping of name sequences to coefficients. Must not be empty.
        :raises UnknownVertex: Raised for undeclared names.
        """
        if not terms:
            raise ValueError("Cannot infer the dimension of an empty chain, use Chain.zero().")

        index_terms = [(tuple(graph.index(name) for name in path), coeff) for path, coeff in terms.items()]
        return cls(len(index_terms[0][0]) - 1, index_terms, ring)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def ring(self) -> enums.Ring:
        return self._ring

    @property
    def terms(self) -> dict[Path, t.Any]:
        return dict(self._terms)

    @property
    def support(self) -> list[Path]:
        return list(self._terms)

    def __getitem__(self, path: Path) -> t.Any:
        return self._terms.get(tuple(path), 0)

    def __iter__(self) -> t.Iterator[tuple[Path, t.Any]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check_dim(self, other: 'Chain') -> None:
        if self._dim != other._dim and self._terms and other._terms:
            raise ValueError(f"Cannot combine chains of dimensions {self._dim} and {other._dim}.")

    def __add__(self, other: 'Chain') -> 'Chain':
        if not isinstance(other, Chain):
            return NotImplemented

        self._check_dim(other)
        dim = self._dim if self._terms else other._dim
        return Chain(dim, list(self) + list(other), _result_ring(self._ring, other._ring))

    def __neg__(self) -> 'Chain':
        return Chain(self._dim, {path: -coeff for path, coeff in self}, self._ring)

    def __sub__(self, other: 'Chain') -> 'Chain':
        if not isinstance(other, Chain):
            return NotImplemented

        return self + (-other)

    def __mul__(self, scalar: t.Any) -> 'Chain':
        if isinstance(scalar, Chain):
            return NotImplemented

        return Chain(self._dim, {path: coeff * scalar for path, coeff in self}, self._ring)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented

        if not self._terms and not other._terms:
            return True

        return self._dim == other._dim and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms))

    def to_ring(self, ring: enums.Ring) -> 'Chain':
        """The same chain with coefficients in another ring.

        :raises ValueError: Raised when a coefficient does not belong to ``ring``.
        """
        return Chain(self._dim, self._terms, ring)

    def format(self, graph: t.Optional[Digraph] = None) -> str:
        """Render the chain as ``e[a,b,c] - 2*e[a,d,c]`` in canonical term order.
        """
        if not self._terms:
            return '0'

        pieces = []
        for path, coeff in self:
            label = ','.join(graph.name(v) if graph is not None else str(v) for v in path)
            sign = '-' if coeff < 0 else '+'
            magnitude = abs(coeff)
            body = f"e[{label}]" if magnitude == 1 else f"{magnitude}*e[{label}]"
            pieces.append((sign, body))

        text = ('-' if pieces[0][0] == '-' else '') + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"

        return text

    def __repr__(self) -> str:
        return f"Chain(dim={self._dim}, {self.format()})"


def boundary(chain: Chain) -> Chain:
    """∂e_{j0...jp} = Σ (−1)^q e_{j0..ĵq..jp}, irregular faces dropped. The boundary of a 0-chain is the zero
    chain of dimension −1.
    """
    if chain.dim <= 0:
        return Chain.zero(chain.dim - 1, chain.ring)

    terms = []
    for path, coeff in chain:
        for q in range(len(path)):
            terms.append((path[:q] + path[q + 1:], coeff if q % 2 == 0 else -coeff))

    return Chain(chain.dim - 1, terms, chain.ring)


def enumerate_allowed(graph: Digraph, p: int, budget: t.Optional[int] = None) -> list[Path]:
    """All allowed elementary p-paths, ordered lexicographically by vertex index.

    :param graph: Ambient digraph.
    :param p: Dimension, p >= 0.
    :param budget: Maximal number of paths, defaults to the ``path_budget`` preference.
    :raises BudgetExceeded: Raised when some intermediate level holds more paths than allowed.
    :return: Basis of the allowed p-paths. E_0 is the vertex set, E_1 the edge set.
    """
    if p < 0:
        return []

    budget = preferences.get_preferences().path_budget if budget is None else budget
    paths: list[Path] = [(v,) for v in range(len(graph))]

    for length in range(1, p + 1):
        paths = [path + (w,) for path in paths for w in graph.out_neighbors(path[-1])]

        if len(paths) > budget:
            raise errors.BudgetExceeded(f"allowed {length}-paths", budget)

    return paths


def is_allowed(chain: Chain, graph: Digraph) -> bool:
    """True if every path in the support of ``chain`` is allowed in ``graph``."""
    return all(is_allowed_path(path, graph) for path in chain.support)


def induced_map(f: DigraphMap, chain: Chain) -> Chain:
    """f_*(e_{i0..ip}) = e_{f(i0)..f(ip)}, or 0 when the image path is irregular."""
    return Chain(chain.dim, [(tuple(f(v) for v in path), coeff) for path, coeff in chain], chain.ring)


def base_copy(chain: Chain) -> Chain:
    """The copy of a chain on level 0 of the cylinder: x ↦ (x,0)."""
    return Chain(chain.dim, [(tuple(2 * v for v in path), coeff) for path, coeff in chain], chain.ring)


def prime_copy(chain: Chain) -> Chain:
    """The copy of a chain on level 1 of the cylinder: x ↦ (x,1), written x′."""
    return Chain(chain.dim, [(tuple(2 * v + 1 for v in path), coeff) for path, coeff in chain], chain.ring)


def lift(chain: Chain, graph: t.Optional[Digraph] = None) -> Chain:
    """Lifting of a p-chain on G to a (p+1)-chain on cylinder(G):

    e_{i0...ip} ↦ Σ_k (−1)^k e_{i0...ik ik′...ip′}

    :param chain: Chain on G.
    :param graph: G, used to validate vertex indices.
    :raises ValueError: Raised when the chain mentions vertices outside ``graph``.
    """
    if graph is not None and any(v >= len(graph) for path in chain.support for v in path):
        raise ValueError("Chain is not a chain on the given digraph.")

    terms = []
    for path, coeff in chain:
        for k in range(len(path)):
            lifted = tuple(2 * v for v in path[:k + 1]) + tuple(2 * v + 1 for v in path[k:])
            terms.append((lifted, coeff if k % 2 == 0 else -coeff))

    return Chain(chain.dim + 1, terms, chain.ring)


def concat_product(first: Chain, second: Chain) -> Chain:
    """Bilinear juxtaposition e_{i..} · e_{j..} = e_{i..j..}. Irregular products vanish."""
    terms = [(a + b, ca * cb) for a, ca in first for b, cb in second]
    return Chain(first.dim + second.dim + 1, terms, _result_ring(first.ring, second.ring))


__all__ = (
    'Path',
    'Chain',
    'is_regular',
    'is_allowed_path',
    'boundary',
    'enumerate_allowed',
    'is_allowed',
    'induced_map',
    'base_copy',
    'prime_copy',
    'lift',
    'concat_product',
)
