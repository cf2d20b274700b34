"""Modular data of SU(n)_k and twisted NIM-reps of its conjugation orbifold."""
from .weights import (AlgebraParams, conjugate, enumerate_alphabet, partition_of,
                      self_conjugate_count, t_invariant)
from .modular import (FusionTensor, ModularData, conformal_weights, fusion_tensor, gauss_sum,
                      modular_data, quantum_dims, s_matrix, s_matrix_from_characters,
                      verify_modular, verlinde_tensor, y_matrix)
from .fusion import fuse, fusion_matrix, ring_axioms_check, su2_fusion_oracle
from .twisted import (OrbifoldInventory, mu_index, orbifold_inventory, orbifold_mu_check,
                      twisted_soliton_count)
from .nimrep import (coxeter_certificate, delta_normalization, expected_nv, pf_vector,
                     printed_index_formulas, psi_matrix, soliton_indices, soliton_spectrum,
                     solve_nv, target_m_spectrum, twisted_nimrep)

__all__ = [
    "AlgebraParams",
    "conformal_weights",
    "conjugate",
    "coxeter_certificate",
    "delta_normalization",
    "enumerate_alphabet",
    "expected_nv",
    "fuse",
    "fusion_matrix",
    "fusion_tensor",
    "FusionTensor",
    "gauss_sum",
    "modular_data",
    "ModularData",
    "mu_index",
    "orbifold_inventory",
    "orbifold_mu_check",
    "OrbifoldInventory",
    "partition_of",
    "pf_vector",
    "printed_index_formulas",
    "psi_matrix",
    "quantum_dims",
    "ring_axioms_check",
    "s_matrix",
    "s_matrix_from_characters",
    "self_conjugate_count",
    "soliton_indices",
    "soliton_spectrum",
    "solve_nv",
    "su2_fusion_oracle",
    "t_invariant",
    "target_m_spectrum",
    "twisted_nimrep",
    "twisted_soliton_count",
    "verify_modular",
    "verlinde_tensor",
    "y_matrix",
]

__version__ = "0.1.0"
