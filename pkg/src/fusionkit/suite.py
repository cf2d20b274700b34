"""End-to-end invariant suite for one ``(n, k)``, shared by the CLI and the tests."""
from __future__ import annotations

import numpy as np

from . import nimrep as nr
from .fusion import ring_axioms_check, su2_fusion_oracle, weight_spin
from .modular import (CheckReport, fusion_tensor, modular_data, s_matrix_from_characters,
                      verify_modular)
from .twisted import orbifold_inventory, orbifold_mu_check, sector_counts
from .weights import AlgebraParams, alphabet_size, enumerate_alphabet


def su2_oracle_deviation(k: int) -> int:
    """Number of SU(2)_k fusion products where Verlinde and the closed form differ."""
    N = fusion_tensor(AlgebraParams(2, k))
    bad = 0
    for a, lam in enumerate(N.weights):
        for b, mu in enumerate(N.weights):
            got = {weight_spin(N.weights[v]): int(c)
                   for v, c in enumerate(N.entries[a, b]) if c}
            want = dict(su2_fusion_oracle(k, weight_spin(lam), weight_spin(mu)))
            bad += got != want
    return bad


def nimrep_checks(k: int, rep: CheckReport, tol: float):
    """Solver and twisted NIM-rep checks for SU(3)_k; returns the index audit."""
    md = modular_data(AlgebraParams(3, k))
    N = fusion_tensor(md.params)
    sols = nr.solve_nv(k)
    rep.add("solver: one permutation class", abs(len(sols) - 1))
    sol = sols[0]
    rep.add("solver: class equals expected N_v", 0.0, passed=sol.labeling is not None)
    nv = sol.labeled_nv
    ev = np.linalg.eigvalsh(nv.astype(float))
    rep.add("spectrum N_v = S_vm/S_0m (m self-conjugate)",
            float(np.max(np.abs(ev - np.sort(nr.nimrep_eigenvalues(md))))))
    M = sol.m_matrix
    c = nr.SolverConstraints.for_level(k)
    rep.add("tr M, tr M^2", abs(int(np.trace(M)) - c.trace_m) + abs(int(np.trace(M @ M)) - c.trace_m2))
    rep.add("row census", 0.0, passed=nr.census_holds(M, k))
    if k % 2 == 0:
        rep.add("M'^2 = N_v + I", nr.square_root_witness(k, nv))
    spec = nr.soliton_spectrum(k)
    psi = spec.psi
    rep.add("psi unitary", float(np.max(np.abs(psi @ psi.conj().T - np.eye(len(psi))))))
    try:
        Ns = np.array([nr.twisted_nimrep(lam, psi, md) for lam in md.weights])
        rep.add("twisted N_lam non-negative integers", 0.0)
        lhs = np.einsum("lmv,vab->lmab", N.entries, Ns)
        rhs = np.einsum("lab,mbc->lmac", Ns, Ns)
        rep.add("twisted N_lam is a fusion representation", int(np.abs(lhs - rhs).max()))
        rep.add("twisted N_v reproduces solver", int(np.abs(Ns[md.index(nr.VECTOR)] - nv).max()))
        conj = [md.index(lam[::-1]) for lam in md.weights]
        rep.add("twisted N_conj(lam) = N_lam^T", int(np.abs(Ns[conj] - Ns.transpose(0, 2, 1)).max()))
    except Exception as exc:  # report, never crash the suite
        rep.add(f"twisted N_lam non-negative integers ({exc})", float("inf"))
    d_v = md.dims[md.index(nr.VECTOR)]
    rep.add("Perron-Frobenius equation", float(np.max(np.abs(nv @ spec.dims - d_v * spec.dims))))
    rep.add("sum rule sum d_rho^2 = sum d_lam^2",
            abs(float(spec.indices.sum()) - float(np.sum(md.dims ** 2))))
    inv = orbifold_inventory(md.params, spec.dims)
    mu = orbifold_mu_check(inv, tol=tol)
    rep.add("orbifold sum dim^2 = 4 mu", mu.checks["sum dim^2 = 4 mu"][1])
    _, audit = nr.printed_index_formulas(k)
    return audit


def verify_all(p: AlgebraParams, tol: float = 1e-8) -> tuple[CheckReport, object]:
    """Run every invariant for ``p``; returns the report and the index audit (n=3)."""
    md = modular_data(p)
    rep = CheckReport(tol)
    ws = enumerate_alphabet(p)
    rep.add("alphabet size = C(n-1+k, n-1)", abs(len(ws) - alphabet_size(p)))
    for name, (passed, dev) in verify_modular(md, tol).checks.items():
        rep.add(name, dev, passed)
    rep.add("character route S", float(np.max(np.abs(s_matrix_from_characters(p) - md.s))))
    N = fusion_tensor(p)
    rep.add("Verlinde integrality", N.max_deviation, passed=N.max_deviation < 1e-6)
    for name, (passed, dev) in ring_axioms_check(N).checks.items():
        rep.add(name, dev, passed)
    for lam in ws:
        Nl = N.entries[N.index(lam)].astype(float)
        d = md.dims
        if np.max(np.abs(Nl @ d - d[N.index(lam)] * d)) > tol:
            rep.add(f"dims are a fusion character at {lam}", np.max(np.abs(Nl @ d - d[N.index(lam)] * d)))
            break
    else:
        rep.add("dims are a fusion character", 0.0)
    if p.n == 2:
        rep.add("SU(2) Verlinde = closed form", su2_oracle_deviation(p.k))
    a, b, c = sector_counts(p)
    rep.add("a = b", abs(a - b))
    rep.add("c even", c % 2)
    audit = None
    if p.n == 3:
        audit = nimrep_checks(p.k, rep, tol)
    return rep, audit
