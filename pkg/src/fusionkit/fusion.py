"""Fusion-ring structure on top of the Verlinde tensor."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .modular import CheckReport, FusionTensor, fusion_tensor
from .weights import AlgebraParams, conjugate, enumerate_alphabet


def fuse(lam, mu, N: FusionTensor) -> list[tuple[tuple, int]]:
    """Decompose ``lam x mu`` as ``[(nu, N_{lam mu}^nu), ...]``, canonical order."""
    row = N.entries[N.index(lam), N.index(mu)]
    return [(N.weights[v], int(c)) for v, c in enumerate(row) if c > 0]


def fusion_matrix(lam, N: FusionTensor) -> np.ndarray:
    """``(N_lam)_{mu nu} = N_{lam mu}^nu``."""
    return np.array(N.entries[N.index(lam)])


# -- SU(2) ------------------------------------------------------------------------

def spin_weight(j) -> tuple[int]:
    """SU(2) Dynkin label of spin ``j``."""
    two_j = Fraction(j) * 2
    if two_j.denominator != 1:
        raise ValueError(f"{j} is not a half-integer")
    return (int(two_j),)


def weight_spin(lam) -> Fraction:
    return Fraction(lam[0], 2)


def su2_fusion_oracle(k: int, i, j) -> list[tuple[Fraction, int]]:
    """Truncated Clebsch-Gordan rule for SU(2)_k.

    ``i x j = sum of l`` for ``|i-j| <= l <= min(i+j, k-i-j)`` in unit steps,
    each with multiplicity one.
    """
    i, j = Fraction(i), Fraction(j)
    for s in (i, j):
        if (2 * s).denominator != 1 or s < 0 or 2 * s > k:
            raise ValueError(f"spin {s} outside 0 <= spin <= {k}/2")
    lo, hi = abs(i - j), min(i + j, k - i - j)
    out = []
    l = lo
    while l <= hi:
        out.append((l, 1))
        l += 1
    return out


def su2_fusion_matrix(k: int, spin, integer_spins: bool = False) -> np.ndarray:
    """Fusion matrix of ``spin`` in SU(2)_k from the Verlinde tensor.

    With ``integer_spins`` the matrix is restricted to the integer-spin
    sectors ``0, 1, ..., floor(k/2)``, which is closed under fusion with an
    integer spin.
    """
    N = fusion_tensor(AlgebraParams(2, k))
    mat = fusion_matrix(spin_weight(spin), N)
    if integer_spins:
        if Fraction(spin).denominator != 1:
            raise ValueError("integer-spin restriction needs an integer spin")
        keep = [idx for idx, w in enumerate(N.weights) if w[0] % 2 == 0]
        mat = mat[np.ix_(keep, keep)]
    return mat


# -- ring axioms ---------------------------------------------------------------

def ring_axioms_check(N: FusionTensor | np.ndarray, params: AlgebraParams | None = None) -> CheckReport:
    """Verify the fusion-ring axioms on an integer tensor.

    Checks associativity ``(l m) a = l (m a)``,
    commutativity, the unit, conjugation symmetry
    ``N_{lm}^v = N_{conj(m) conj(l)}^{conj(v)}``, and for SU(2) at odd level
    ``2m-1`` the identity ``N_{m-1}^2 = N_1 + I`` on integer spins.
    Deviations are integer counts, so a check passes only at zero.
    """
    if isinstance(N, FusionTensor):
        params, weights, t = N.params, N.weights, np.asarray(N.entries)
    else:
        if params is None:
            raise ValueError("params required for a bare tensor")
        weights, t = tuple(enumerate_alphabet(params)), np.asarray(N)
    size = len(weights)
    rep = CheckReport(tolerance=0.5)

    # float matmuls are exact for these small integers and far faster
    tf = t.astype(float)
    flat = tf.reshape(size, size * size)
    stacked = tf.reshape(size * size, size)
    assoc = 0
    for l in range(size):
        # (l m) a = l (m a), indexed [m, a, b]
        lhs = tf[l] @ flat
        rhs = (stacked @ tf[l]).reshape(size, size * size)
        assoc = max(assoc, int(np.abs(lhs - rhs).max()))
    rep.add("associativity", assoc)
    rep.add("commutativity", int(np.abs(t - t.transpose(1, 0, 2)).max()))
    unit = t[0]
    rep.add("unit", int(np.abs(unit - np.eye(size, dtype=unit.dtype)).max()))
    idx = {w: i for i, w in enumerate(weights)}
    c = np.array([idx[conjugate(w)] for w in weights])
    conj_t = t[np.ix_(c, c, c)].transpose(1, 0, 2)
    rep.add("conjugation symmetry", int(np.abs(t - conj_t).max()))

    if params.n == 2 and params.k % 2 == 1 and params.k >= 3:
        m = (params.k + 1) // 2
        keep = [i for i, w in enumerate(weights) if w[0] % 2 == 0]
        sub = lambda j: t[idx[(2 * j,)]][np.ix_(keep, keep)]
        top = sub(m - 1)
        dev = int(np.abs(top @ top - sub(1) - np.eye(len(keep), dtype=top.dtype)).max())
        rep.add(f"N_{m - 1}^2 = N_1 + I (integer spins)", dev)
    return rep
