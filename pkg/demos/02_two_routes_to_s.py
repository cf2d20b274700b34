"""
Three ways to the same S matrix
===============================

The Weyl-determinant formula, the Schur-polynomial character formula and the
twist-weighted fusion sum ``Y`` all produce S; compare them.
"""
import numpy as np

from fusionkit import fusion_tensor, modular_data, s_matrix, s_matrix_from_characters, y_matrix
from fusionkit.weights import AlgebraParams

for n, k in [(2, 4), (3, 3), (4, 2)]:
    p = AlgebraParams(n, k)
    md = modular_data(p)
    weyl = s_matrix(p)
    chars = s_matrix_from_characters(p)
    y = y_matrix(fusion_tensor(p), md) / abs(md.gauss_sum)
    print(f"SU({n})_{k}: |weyl - chars| = {np.abs(weyl - chars).max():.2e}, "
          f"|weyl - Y/|a|| = {np.abs(weyl - y).max():.2e}")
