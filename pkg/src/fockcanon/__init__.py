"""Global bases of level-l Fock spaces of affine type A, computed from semi-infinite q-wedges."""

from .laurent import LaurentPoly, q
from .combinatorics import ChargedMultipartition, iota_l, iota_l_inv, iota_n, iota_n_inv
from .wedge import normal_form, straighten_pair
from .fock import FockVector, chevalley_action, heisenberg_B, wedge_action_oracle
from .involution import bar_fock, bar_matrix_block
from .canonical import TransitionMatrix, canonical_block, g_vector

__all__ = [
    "LaurentPoly", "q", "ChargedMultipartition", "iota_l", "iota_l_inv", "iota_n", "iota_n_inv",
    "normal_form", "straighten_pair", "FockVector", "chevalley_action", "heisenberg_B",
    "wedge_action_oracle", "bar_fock", "bar_matrix_block", "TransitionMatrix", "canonical_block",
    "g_vector",
]

__version__ = "0.1.0"
