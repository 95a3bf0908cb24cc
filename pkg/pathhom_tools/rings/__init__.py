"""This module holds the protocol for coefficient rings of the chain pipeline.
"""

# pylint: disable=no-self-argument

import os
import sys
import importlib
import traceback
import typing as t

import sympy

from .. import enums


@t.runtime_checkable
class RingHandler(t.Protocol):
    """Modules adding a coefficient ring must implement this protocol.
    """

    # Short name of the ring
    RING_NAME: str

    # Description of the ring
    RING_DESCRIPTION: str

    def coerce(value: t.Any) -> t.Any:
        """Converts a scalar into the exact coefficient type of the ring.

        :param value: An int, fraction or sympy number.
        :raises ValueError: Raised when the value does not belong to the ring.
        """

    def kernel_basis(matrix: sympy.Matrix) -> sympy.Matrix:
        """Basis of the kernel of ``matrix`` over the ring.

        :param matrix: m×n matrix with entries in the ring.
        :return: n×k matrix whose columns form a basis. Over Z the lattice they span must be saturated.
        """

    def solve(matrix: sympy.Matrix, rhs: sympy.Matrix) -> t.Optional[sympy.Matrix]:
        """Solves ``matrix * X = rhs`` over the ring.

        :return: A solution with entries in the ring, or None when there is none.
        """

    def rank_and_torsion(matrix: sympy.Matrix) -> tuple[int, list[int]]:
        """Rank of ``matrix`` and the invariant factors > 1 of its cokernel (empty over a field).
        """


#: Rings available for chains and homology (populated automatically), keyed by module name.
RING_HANDLERS: dict[str, RingHandler] = {}
for element in sorted(os.listdir(ring_path := os.path.dirname(__file__))):
    if (not os.path.isfile(os.path.join(ring_path, element)) or not element.endswith('.py')
       or element == "__init__.py"):
        continue

    impl_name = os.path.splitext(element)[0]

    try:
        ring_module = importlib.import_module(f'.{impl_name}', package=__name__)

        if not isinstance(ring_module, RingHandler):
            print(f"Error: ring \"{impl_name}.py\" does not satisfy the RingHandler protocol.", file=sys.stderr)
            continue

        RING_HANDLERS[impl_name] = ring_module

    except ImportError:
        print(f"Error: ring \"{impl_name}.py\" failed importing.", file=sys.stderr)
        traceback.print_exc()


def get_ring_handler(ring: enums.Ring) -> RingHandler:
    """Handler implementing the given ring.

    :raises NotImplementedError: Raised when no handler for the ring was loaded.
    """
    try:
        return RING_HANDLERS[ring.value]
    except KeyError as e:
        raise NotImplementedError(f"No handler for ring {ring.name}.") from e


__all__ = (
    'RING_HANDLERS',
    'RingHandler',
    'get_ring_handler'
)
