"""Maximal systems of orthonormal tangent vector fields on spheres.

Exact-arithmetic construction of the sigma(m) = 2^p + 8q - 1 independent
tangent fields on S^(m-1), where m = (2k+1) 2^p 16^q, built from the nine
Clifford generators on R^16 and Cayley-Dickson multiplication operators.
Every field is a signed-permutation matrix, applied to vectors in O(m), and
every algebraic invariant is verified exactly over the rationals.
"""

from .algebra import (
    CdElement,
    MulTable,
    basis_product,
    cd_associator,
    cd_conj,
    cd_inner,
    cd_mul,
    cd_re,
    left_mult_matrix,
    mul_table,
    right_mult_matrix,
)
from .fields import (
    Decomposition,
    Field,
    FieldSystem,
    build_system,
    decompose,
    g_set,
    level_field,
    lmult_field,
    pair_system,
    sigma,
)
from .sigperm import (
    DenseMatrix,
    SignedPerm,
    block_ext,
    conj_base,
    conj_level,
    conj_total,
    diag_ext,
    identity,
    to_dense,
)
from .spin9 import (
    complex_structure,
    complex_structure_pair,
    complex_structure_triple,
    generator,
    spin9_basis,
)
from .verify import (
    VerifyReport,
    gram_check,
    oracle_compare,
    sample_normals,
    tangency_check,
    verify_system,
)

__version__ = "0.1.0"

__all__ = [
    "CdElement",
    "MulTable",
    "basis_product",
    "cd_associator",
    "cd_conj",
    "cd_inner",
    "cd_mul",
    "cd_re",
    "left_mult_matrix",
    "mul_table",
    "right_mult_matrix",
    "Decomposition",
    "Field",
    "FieldSystem",
    "build_system",
    "decompose",
    "g_set",
    "level_field",
    "lmult_field",
    "pair_system",
    "sigma",
    "DenseMatrix",
    "SignedPerm",
    "block_ext",
    "conj_base",
    "conj_level",
    "conj_total",
    "diag_ext",
    "identity",
    "to_dense",
    "complex_structure",
    "complex_structure_pair",
    "complex_structure_triple",
    "generator",
    "spin9_basis",
    "VerifyReport",
    "gram_check",
    "oracle_compare",
    "sample_normals",
    "tangency_check",
    "verify_system",
    "__version__",
]
