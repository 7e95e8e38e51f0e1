"""Two-mode ladder operators on a rectangular truncated basis.

Index order is row-major in (n1, n2): mode 1 varies slowest.  Dense and
sparse variants share the same convention a1 = a x I, a2 = I x a.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from .fock import build_ladder

__all__ = ["ladders_dense", "ladders_sparse", "number_diagonals"]


def ladders_dense(dim_a: int, dim_b: int) -> tuple[np.ndarray, np.ndarray]:
    a, _ = build_ladder(dim_a)
    b, _ = build_ladder(dim_b)
    a1 = np.kron(a, np.eye(dim_b))
    a2 = np.kron(np.eye(dim_a), b)
    return a1, a2


def ladders_sparse(dim_a: int, dim_b: int) -> tuple[sp.csr_matrix, sp.csr_matrix]:
    a, _ = build_ladder(dim_a)
    b, _ = build_ladder(dim_b)
    a1 = sp.kron(sp.csr_matrix(a), sp.identity(dim_b, format="csr"), format="csr")
    a2 = sp.kron(sp.identity(dim_a, format="csr"), sp.csr_matrix(b), format="csr")
    return a1, a2


def number_diagonals(dim_a: int, dim_b: int) -> tuple[np.ndarray, np.ndarray]:
    """Occupation numbers (n1, n2) along the flattened basis."""
    n1 = np.repeat(np.arange(dim_a), dim_b).astype(float)
    n2 = np.tile(np.arange(dim_b), dim_a).astype(float)
    return n1, n2
