"""
Closed-form index expressions against the sum rule
==================================================

Evaluate the closed-form index expressions literally and compare them with
the values fixed by the sum rule.
"""
from fusionkit import printed_index_formulas

for k in range(1, 13):
    _, audit = printed_index_formulas(k)
    print("\n".join(audit.lines()))
