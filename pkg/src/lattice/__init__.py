"""
Lattice Package
Exact integer linear algebra: normal forms, saturation, completion
"""

from .normal_forms import (
    LatticeError,
    integer_matrix,
    identity,
    to_rows,
    hnf,
    snf,
    smith_invariants,
    matrix_rank,
    integer_det,
    is_unimodular,
    integer_inverse,
    matmul,
)
from .basis import (
    LatticeBasis,
    Position,
    is_primitive,
    lattice_rank,
    saturated_kernel,
    saturate,
    saturate_rows,
    unimodular_completion,
)

__all__ = [
    'LatticeError',
    'LatticeBasis',
    'Position',
    'integer_matrix',
    'identity',
    'to_rows',
    'hnf',
    'snf',
    'smith_invariants',
    'matrix_rank',
    'integer_det',
    'is_unimodular',
    'integer_inverse',
    'matmul',
    'is_primitive',
    'lattice_rank',
    'saturated_kernel',
    'saturate',
    'saturate_rows',
    'unimodular_completion',
]
