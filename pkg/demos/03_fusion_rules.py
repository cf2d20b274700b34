"""
Fusion rules from the Verlinde formula
======================================
"""
from fusionkit import fuse, fusion_tensor, ring_axioms_check, su2_fusion_oracle
from fusionkit.fusion import weight_spin

# SU(2)_4: the truncated Clebsch-Gordan rule
N = fusion_tensor((2, 4))
for lam in N.weights:
    for mu in N.weights:
        got = [(str(weight_spin(nu)), c) for nu, c in fuse(lam, mu, N)]
        want = [(str(j), c) for j, c in su2_fusion_oracle(4, weight_spin(lam), weight_spin(mu))]
        assert got == want
print("SU(2)_4 fusion agrees with the Clebsch-Gordan oracle")

# SU(3)_3 has a fusion multiplicity of two
N = fusion_tensor((3, 3))
print("(1,1) x (1,1) =", fuse((1, 1), (1, 1), N))
for line in ring_axioms_check(N).lines():
    print(line)
