"""Exact integer linear algebra and integral quadratic forms."""

from .binary import Representation, brute_force_represents, represents
from .forms import (
    DegenerateFormError,
    GramForm,
    TwoElementaryInvariants,
    diagonalize,
    direct_sum,
    gram_from_any,
    parse_form,
    signature,
    two_elementary,
)
from .matrix import (
    IntMatrix,
    SmithDecomposition,
    columns,
    determinant,
    from_columns,
    gale_dual,
    hermite_normal_form,
    identity,
    is_surjective,
    kernel_lattice,
    kernel_rows,
    matmul,
    matvec,
    parse_matrix,
    primitive,
    rank,
    smith_normal_form,
    transpose,
    unimodular_completion,
    unimodular_row_equivalent,
)
