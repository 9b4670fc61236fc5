"""Symmetric, skew-symmetric and asymmetric parts of finite normal-form games.

Games in G_[n; kappa] are handled through their structure vectors, with all
arithmetic done exactly over the rationals.
"""

from .basis import (
    BasisMatrix,
    Dimensions,
    build_B,
    build_D,
    build_E,
    build_H,
    build_Q,
    dims,
    enum_strict,
    enum_weak,
    eta,
    zeta,
)
from .decompose import Classification, Decomposition, classify, decompose, two_player_decompose
from .game import (
    ConstraintError,
    FiniteGame,
    GameError,
    GameSpec,
    dump_game,
    from_payoff_tables,
    load_game,
    profile_index,
    profile_of_index,
    render_table,
    to_payoff_tables,
    two_player_matrices,
)
from .perm import Permutation, enumerate_perms, perm_matrix, phi, psi, t_sigma
from .stp import Logical, khatri_rao, kron, rational, rmatrix, stp, swap_matrix
from .symmetry import (
    SymmetryVerdict,
    is_asymmetric,
    is_invariant_psi,
    is_skew_def,
    is_skew_thm,
    is_symmetric_def,
    is_symmetric_thm,
    is_zero_sum,
    verdict,
)

__version__ = "0.1.0"
