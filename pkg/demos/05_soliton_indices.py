"""
Twisted soliton indices and the orbifold
========================================

Perron-Frobenius data, the sum-rule normalization, the twisted NIM-rep and
the sector inventory of the conjugation orbifold.
"""
import numpy as np

from fusionkit import modular_data, orbifold_inventory, orbifold_mu_check, soliton_spectrum
from fusionkit.nimrep import twisted_nimrep
from fusionkit.twisted import level_one_twisted_dims_oracle

for k in range(1, 7):
    spec = soliton_spectrum(k)
    md = modular_data((3, k))
    print(f"k={k}: delta={spec.delta:.6f} indices={np.round(spec.indices, 6)} "
          f"sum={spec.indices.sum():.6f} vs {np.sum(md.dims ** 2):.6f}")

# at level one the answer can be read off from SU(2)_4
print("k=1 twisted dimension from SU(2)_4:", level_one_twisted_dims_oracle())

# every sector of SU(3)_4 acts on the twisted sectors by a non-negative integer matrix
spec = soliton_spectrum(4)
md = modular_data((3, 4))
for lam in md.weights[:4]:
    print(lam, twisted_nimrep(lam, spec.psi, md).tolist())

inv = orbifold_inventory(md.params, spec.dims)
print(f"{len(inv)} orbifold sectors")
for line in orbifold_mu_check(inv).lines():
    print(line)
