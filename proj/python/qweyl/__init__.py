"""Quantum Weyl group representations and monodromy checks."""

try:
    from ._qweyl import (
        QuantumModule,
        adjoint_zero_weight_matrix,
        casimir_compare,
        half_monodromy,
        product_composite_matrix,
        verify_alge,
        verify_braid,
        weyl_dimension,
    )
except ImportError:  # extension alongside the package (build tree)
    from _qweyl import (
        QuantumModule,
        adjoint_zero_weight_matrix,
        casimir_compare,
        half_monodromy,
        product_composite_matrix,
        verify_alge,
        verify_braid,
        weyl_dimension,
    )

__all__ = [
    "QuantumModule",
    "adjoint_zero_weight_matrix",
    "casimir_compare",
    "half_monodromy",
    "product_composite_matrix",
    "verify_alge",
    "verify_braid",
    "weyl_dimension",
]
