# ##### BEGIN GPL LICENSE BLOCK #####
#
#  This program is free software; you can redistribute it and/or
#  modify it under the terms of the GNU General Public License
#  as published by the Free Software Foundation; either version 2
#  of the License, or (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program; if not, write to the Free Software Foundation,
#  Inc., 51 Franklin Street, Fifth Floor, Boston, MA 02110-1301, USA.
#
# ##### END GPL LICENSE BLOCK #####

"""Path homology, homotopy and the loop calculus of finite digraphs.
"""

from .enums import Ring, SearchStatus
from .errors import PathHomologyError
from .digraph import (Digraph, DigraphMap, make_digraph, cartesian_product, cylinder, map_cylinder,
                      line_digraph, cycle_digraph, simplex_digraph, cube_digraph)
from .chains import Chain, boundary, enumerate_allowed, induced_map, lift
from .homology import build_omega, homology, is_boundary, standard_cycle_path, decompose_omega2
from .homotopy import one_step_homotopic, homotopic, find_reduction, is_deformation_retraction
from .loops import make_loop, reduce_loop, loops_equivalent, chi, hurewicz_class, connected_components
from .graphs import UGraph, to_double_digraph, from_double_digraph, graph_homology
from .sperner import Triangulation, orient, find_tricolor_triangle, verify_sperner_maps


#: Package version, kept in sync with setup.cfg.
VERSION = (1, 0)


__all__ = (
    'VERSION',
    'Ring',
    'SearchStatus',
    'PathHomologyError',
    'Digraph',
    'DigraphMap',
    'make_digraph',
    'cartesian_product',
    'cylinder',
    'map_cylinder',
    'line_digraph',
    'cycle_digraph',
    'simplex_digraph',
    'cube_digraph',
    'Chain',
    'boundary',
    'enumerate_allowed',
    'induced_map',
    'lift',
    'build_omega',
    'homology',
    'is_boundary',
    'standard_cycle_path',
    'decompose_omega2',
    'one_step_homotopic',
    'homotopic',
    'find_reduction',
    'is_deformation_retraction',
    'make_loop',
    'reduce_loop',
    'loops_equivalent',
    'chi',
    'hurewicz_class',
    'connected_components',
    'UGraph',
    'to_double_digraph',
    'from_double_digraph',
    'graph_homology',
    'Triangulation',
    'orient',
    'find_tricolor_triangle',
    'verify_sperner_maps',
)
