"""Exact combinatorial dynamics of cyclic permutations and their interval maps."""

from .errors import DynamicsError
from .forcing import forced_types, forces, loops_of_length, orbit_from_loop
from .markov import build_digraph, connect_the_dots, double_graph, recover_cycle, to_dot
from .perm import (
    Cycle,
    Modality,
    Permutation,
    compose,
    is_cycle,
    modality,
    parse_cycle,
    rho,
    sign,
    star,
    successor_candidate,
)
from .polynomial import IntPolynomial, charpoly, cyclotomic_like, divides_exactly, poly_mul
from .successors import cascade, enumerate_successors, unimodal_double, verify_factorization

__version__ = "0.1.0"
