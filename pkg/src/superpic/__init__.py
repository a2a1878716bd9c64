"""Picard groups and Pi-Picard sets of toric supervarieties given by lattice
polytopes, with an independent cocycle solver over a Grassmann-Laurent ring."""

from .errors import *  # noqa: F401,F403
from .superalg import (Unknown, Poly, SuperElement, multiply, invert_unit,
                       canonical_unit_power, odd_direction, substitute, render, parse)
from .polytope import (LatticePolytope, Skeleton, TwoFace, hypersimplex, product, skeleton,
                       parallel_component_number, pc_by_coloring, two_faces,
                       validate_edge_directions, skeleton_dot)
from .factor import Factorization, factorize, is_simplex_factor, reassemble
from .fan import Ray, DecoratedFan, normal_fan, check_decorations, classical_pic_rank
from .cocycle import (EdgeAnsatz, ConstraintSystem, build_system, build_system_from_faces,
                      solve_even, solve_pi, tautological_power, verify_cocycle)
from .picard import (PicReport, PiPicReport, PiSheafClass, SqrtMarker, qgr_pic, qgr_pi_pic,
                     pic_of_polytope, pi_pic_of_polytope, is_pi_element, tensor_description)

__version__ = "0.1.0"
