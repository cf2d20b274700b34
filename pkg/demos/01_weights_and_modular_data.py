"""
Weights and modular data of SU(n)_k
===================================

Enumerate the integrable weights, build S and T, and check the modular
relations.
"""
import numpy as np

from fusionkit import AlgebraParams, modular_data, verify_modular
from fusionkit.weights import conjugate, enumerate_alphabet, partition_of

p = AlgebraParams(3, 2)

# weights come out vacuum first, in lexicographic order of Dynkin labels
for lam in enumerate_alphabet(p):
    print(lam, "conj", conjugate(lam), "partition", partition_of(lam))

md = modular_data(p)
np.set_printoptions(precision=4, suppress=True, linewidth=120)
print("S =\n", md.s)
print("conformal weights", [str(h) for h in md.conformal_weights])
print("quantum dimensions", md.dims)
print("c0 =", md.c0, "(central charge mod 8)")

# unitarity, S^2 = C, (ST)^3 relations, positivity of the vacuum row
for line in verify_modular(md).lines():
    print(line)
