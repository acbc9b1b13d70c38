"""Independent brute-force checks: exact ranks over Q and Q(xi)."""

from .cyclotomic import CycField, CycNumber, cyclotomic_poly
from .interpolation import fat_oracle, initial_ideal_hf, initial_ideal_hf_enumerated
from .linalg import DEFAULT_MAX_BLOCK_ENTRIES, ResourceGuardError, dense_rank, echelon, rank, reduce_vector
from .power import hf_oracle, phi_gen, phi_poly, phi_rank, psi_family, psi_from_phi, psi_gen
from .socle import quotient_dims, socle_dims

__all__ = [
    "CycField",
    "CycNumber",
    "DEFAULT_MAX_BLOCK_ENTRIES",
    "ResourceGuardError",
    "cyclotomic_poly",
    "dense_rank",
    "echelon",
    "fat_oracle",
    "hf_oracle",
    "initial_ideal_hf",
    "initial_ideal_hf_enumerated",
    "phi_gen",
    "phi_poly",
    "phi_rank",
    "psi_family",
    "psi_from_phi",
    "psi_gen",
    "quotient_dims",
    "rank",
    "reduce_vector",
    "socle_dims",
]
