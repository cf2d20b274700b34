"""Twisted NIM-reps of SU(3)_k: search, certification and soliton indices.

The twisted sectors of the conjugation orbifold of SU(3)_k are counted by
the self-conjugate weights, ``m = floor(k/2) + 1`` of them.  The matrix
``N_v`` by which the vector representation ``v = (1, 0)`` acts on them is
a symmetric non-negative integer matrix whose spectrum is fixed by the S
matrix.  Writing ``M = N_v - I``:

* entries of ``M`` lie in ``{-1, 0, 1}`` with ``-1`` only on the diagonal,
  since ``||M|| < 2``;
* every row of ``M`` has at most three non-zero entries;
* ``tr M`` and ``tr M^2`` are fixed by the spectrum;
* the graph of ``M`` is connected (``N_v`` is irreducible).

:func:`solve_nv` enumerates every such ``M`` by depth-first search and
groups the results into permutation classes, so the uniqueness of the
answer is tested, not assumed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

import numpy as np

from .errors import (DegenerateSpectrum, EigenvalueMismatch, NoSolution, NotADE,
                     NotPositiveDefinite, SpectrumMismatch)
from .fusion import su2_fusion_matrix
from .modular import ModularData, modular_data, round_nonnegative
from .weights import AlgebraParams, self_conjugate_weights

SPECTRUM_TOL = 1e-8
VECTOR = (1, 0)
PD_MARGIN = 1e-9


def twisted_size(k: int) -> int:
    """Number of twisted sectors ``m`` for SU(3)_k: ``k = 2m-1`` or ``k = 2m-2``."""
    if k < 1:
        raise ValueError(f"level must be >= 1, got {k}")
    return k // 2 + 1


def _sl3(k: int) -> ModularData:
    return modular_data(AlgebraParams(3, k))


def target_m_spectrum(k: int) -> np.ndarray:
    """Spectrum of ``M = N_v - I``, ascending.

    Odd ``k = 2m-1``: ``2 cos(pi (i+1) / (m+1))``; even ``k = 2m-2``:
    ``2 cos(2 pi (i+1) / (2m+1))``, ``0 <= i < m``.
    """
    m = twisted_size(k)
    i = np.arange(m)
    if k % 2:
        vals = 2 * np.cos(np.pi * (i + 1) / (m + 1))
    else:
        vals = 2 * np.cos(2 * np.pi * (i + 1) / (2 * m + 1))
    return np.sort(vals)


def nimrep_eigenvalues(md: ModularData, lam=VECTOR) -> np.ndarray:
    """``S_{lam mu} / S_{0 mu}`` over self-conjugate ``mu``, canonical order of ``mu``."""
    cols = [md.index(mu) for mu in self_conjugate_weights(md.params)]
    i = md.index(lam)
    return (md.s[i, cols] / md.s[0, cols]).real


# -- constraints ----------------------------------------------------------------

@dataclass(frozen=True)
class SolverConstraints:
    """Admissible ``M`` for level ``k``.

    Off-diagonal entries range over ``offdiag_domain``, diagonal entries
    over ``diag_domain``; ``trace_m`` and ``trace_m2`` are exact targets;
    rows have at most ``max_row_support`` non-zeros.
    """

    k: int
    m: int
    trace_m: int
    trace_m2: int
    target_spectrum: tuple
    max_row_support: int = 3
    diag_domain: tuple = (-1, 0, 1)
    offdiag_domain: tuple = (0, 1)

    @classmethod
    def for_level(cls, k: int) -> "SolverConstraints":
        m = twisted_size(k)
        spec = target_m_spectrum(k)
        trace_m = int(round(spec.sum()))
        trace_m2 = int(round((spec ** 2).sum()))
        if k % 2:
            assert (trace_m, trace_m2) == (0, 2 * m - 2)
        else:
            assert (trace_m, trace_m2) == (-1, 2 * m - 1)
        return cls(k=k, m=m, trace_m=trace_m, trace_m2=trace_m2,
                   target_spectrum=tuple(float(x) for x in spec))


def row_census(M) -> tuple[int, int, int, int]:
    """``(k0, k1, k2, k3)``: number of rows with 0, 1, 2, 3 non-zero entries."""
    counts = np.count_nonzero(np.asarray(M), axis=1)
    return tuple(int(np.sum(counts == c)) for c in range(4))


def census_holds(M, k: int) -> bool:
    """Row-count identity ``2 k0 + k1 - k3 = 2m - tr(M^2)``.

    For ``m >= 2`` connectivity gives ``k0 = 0`` and this is ``k1 = k3 + 2``
    (odd ``k``) or ``k1 = k3 + 1`` (even ``k``).
    """
    k0, k1, _, k3 = row_census(M)
    m = np.asarray(M).shape[0]
    if max(np.count_nonzero(np.asarray(M), axis=1), default=0) > 3:
        return False
    trace_m2 = int(np.count_nonzero(np.asarray(M)))
    return 2 * k0 + k1 - k3 == 2 * m - trace_m2


def is_connected(M) -> bool:
    M = np.asarray(M)
    m = M.shape[0]
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in np.flatnonzero(M[i]):
            if j != i and j not in seen:
                seen.add(int(j))
                stack.append(int(j))
    return len(seen) == m


# -- search ---------------------------------------------------------------------

@dataclass
class SearchStats:
    nodes: int = 0
    interlacing_prunes: int = 0
    leaves: int = 0
    solutions: int = 0


def _interlaces(block: np.ndarray, target: np.ndarray, tol: float) -> bool:
    r = block.shape[0]
    m = len(target)
    beta = np.linalg.eigvalsh(block)
    return bool(np.all(beta >= target[:r] - tol) and np.all(beta <= target[m - r:] + tol))


def enumerate_m_matrices(c: SolverConstraints, stats: SearchStats | None = None,
                         tol: float = SPECTRUM_TOL, bfs_order: bool = True):
    """Yield labelled ``M`` satisfying ``c``, connected, with the target spectrum.

    Entries are filled row by row (diagonal first, then the upper triangle).
    After each diagonal entry the leading principal block is complete and
    must interlace the target spectrum (Cauchy), which prunes most branches.

    With ``bfs_order`` only labellings in breadth-first order from vertex 0
    are produced: each vertex ``j > 0`` has a neighbour ``< j`` and the
    smallest such neighbour is non-decreasing in ``j``.  Every connected
    graph admits such a labelling, so every permutation class is still
    reached; without it all labellings are enumerated.
    """
    stats = stats if stats is not None else SearchStats()
    m = c.m
    target = np.array(c.target_spectrum)
    M = np.zeros((m, m), dtype=np.int64)
    support = [0] * m
    # highest vertex index already attached to an earlier row (BFS frontier)
    reached = [0]

    def place(i, j, nnz, tr):
        stats.nodes += 1
        if i == m:
            stats.leaves += 1
            if nnz == c.trace_m2 and tr == c.trace_m and is_connected(M):
                stats.solutions += 1
                yield M.copy()
            return
        if j == i:
            left = m - i - 1
            for d in c.diag_domain:
                t = tr + d
                if abs(c.trace_m - t) > left:
                    continue
                z = 1 if d else 0
                if nnz + z > c.trace_m2 or support[i] + z > c.max_row_support:
                    continue
                M[i, i] = d
                support[i] += z
                if _interlaces(M[:i + 1, :i + 1], target, tol):
                    yield from place(i, j + 1, nnz + z, t)
                else:
                    stats.interlacing_prunes += 1
                support[i] -= z
                M[i, i] = 0
            return
        if j == m:
            # row i is final; an isolated vertex cannot belong to a connected graph
            if m > 1 and support[i] == 0:
                return
            if bfs_order and i + 1 < m and reached[0] < i + 1:
                return
            yield from place(i + 1, i + 1, nnz, tr)
            return
        for e in c.offdiag_domain:
            if e:
                if (nnz + 2 > c.trace_m2 or support[i] >= c.max_row_support
                        or support[j] >= c.max_row_support):
                    continue
                fresh = j > reached[0]
                if bfs_order and fresh and j != reached[0] + 1:
                    continue
                M[i, j] = M[j, i] = e
                support[i] += 1
                support[j] += 1
                if fresh:
                    reached[0] = j
                yield from place(i, j + 1, nnz + 2, tr)
                if fresh:
                    reached[0] = j - 1
                support[i] -= 1
                support[j] -= 1
                M[i, j] = M[j, i] = 0
            else:
                yield from place(i, j + 1, nnz, tr)

    yield from place(0, 0, 0, 0)


# -- canonical form ---------------------------------------------------------------

def _refine(A: np.ndarray) -> list[int]:
    """Colour refinement seeded by the diagonal; colours are labelling-independent."""
    m = A.shape[0]
    colours = [int(A[i, i]) for i in range(m)]
    while True:
        sigs = []
        for i in range(m):
            nb = sorted((int(A[i, j]), colours[j]) for j in range(m) if j != i and A[i, j])
            sigs.append((colours[i], tuple(nb)))
        order = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(set(new)) == len(set(colours)):
            return new
        colours = new


def canonical_form(A) -> tuple[np.ndarray, tuple[int, ...]]:
    """Lexicographically minimal relabelling of a symmetric matrix.

    Returns ``(canon, perm)`` with ``canon = A[perm][:, perm]``.  Only
    permutations compatible with the refined colour partition are tried;
    because the colours are isomorphism invariants, the minimum is a
    canonical form.
    """
    A = np.asarray(A)
    colours = _refine(A)
    cells = [[v for v in range(len(colours)) if colours[v] == c]
             for c in sorted(set(colours))]
    best_key, best_perm = None, None
    for choice in product(*(permutations(cell) for cell in cells)):
        perm = [v for cell in choice for v in cell]
        key = tuple(A[np.ix_(perm, perm)].ravel())
        if best_key is None or key < best_key:
            best_key, best_perm = key, perm
    return A[np.ix_(best_perm, best_perm)], tuple(best_perm)


def same_up_to_permutation(A, B) -> bool:
    A, B = np.asarray(A), np.asarray(B)
    if A.shape != B.shape:
        return False
    return np.array_equal(canonical_form(A)[0], canonical_form(B)[0])


def relabeling(A, B) -> tuple[int, ...] | None:
    """A permutation ``p`` with ``A[p][:, p] == B``, or ``None``."""
    ca, pa = canonical_form(A)
    cb, pb = canonical_form(B)
    if not np.array_equal(ca, cb):
        return None
    # A[pa] = C = B[pb]  =>  B = A[pa o pb^-1]
    inv_pb = np.argsort(pb)
    return tuple(int(pa[i]) for i in inv_pb)


# -- Coxeter / ADE ----------------------------------------------------------------

@dataclass(frozen=True)
class CoxeterCertificate:
    """Positive definiteness of ``2I - M`` plus, where applicable, an ADE type.

    ``family``/``rank`` classify the graph of ``M`` when its diagonal
    vanishes; ``double_family``/``double_rank`` classify the bipartite
    double (``[[0, M], [M, 0]]``, edges weighted by ``|M_ij|``), which is
    defined for any ``M`` with ``||M|| < 2``.
    """

    norm: float
    family: str | None = None
    rank: int | None = None
    coxeter_number: int | None = None
    double_family: str | None = None
    double_rank: int | None = None
    double_coxeter_number: int | None = None

    @property
    def type_name(self) -> str | None:
        return None if self.family is None else f"{self.family}{self.rank}"


_E_ARMS = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}
_E_COXETER = {6: 12, 7: 18, 8: 30}


def classify_ade(adjacency) -> tuple[str, int, int]:
    """ADE type of a connected simple graph: ``(family, rank, coxeter_number)``."""
    A = (np.asarray(adjacency) != 0).astype(int)
    np.fill_diagonal(A, 0)
    r = A.shape[0]
    if not is_connected(A if r else np.zeros((1, 1))):
        raise NotADE("graph is not connected")
    if A.sum() // 2 != r - 1:
        raise NotADE("graph is not a tree")
    deg = A.sum(axis=1)
    if deg.max(initial=0) <= 2:
        return "A", r, r + 1
    branch = np.flatnonzero(deg >= 3)
    if len(branch) != 1 or deg[branch[0]] != 3:
        raise NotADE(f"degree census {sorted(deg.tolist())} is not ADE")
    centre = int(branch[0])
    arms = []
    for start in np.flatnonzero(A[centre]):
        length, prev, cur = 1, centre, int(start)
        while True:
            nxt = [int(v) for v in np.flatnonzero(A[cur]) if v != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms = tuple(sorted(arms))
    if arms[:2] == (1, 1):
        return "D", r, 2 * r - 2
    if arms in _E_ARMS:
        rank = _E_ARMS[arms]
        return "E", rank, _E_COXETER[rank]
    raise NotADE(f"arm lengths {arms} are not ADE")


def coxeter_certificate(M) -> CoxeterCertificate:
    M = np.asarray(M)
    if not np.array_equal(M, M.T):
        raise ValueError("M must be symmetric")
    ev = np.linalg.eigvalsh(M.astype(float))
    # affine diagrams sit exactly at norm 2; a Cholesky test can pass them on rounding
    if ev[-1] > 2 - PD_MARGIN:
        raise NotPositiveDefinite(f"2I - M is not positive definite (top eigenvalue {ev[-1]:.12g})")
    norm = float(np.max(np.abs(ev)))
    fields = {}
    if not np.any(np.diag(M)):
        fam, rank, h = classify_ade(M)
        fields.update(family=fam, rank=rank, coxeter_number=h)
    double = np.block([[np.zeros_like(M), np.abs(M)], [np.abs(M), np.zeros_like(M)]])
    if is_connected(double):
        fam, rank, h = classify_ade(double)
        fields.update(double_family=fam, double_rank=rank, double_coxeter_number=h)
    return CoxeterCertificate(norm=norm, **fields)


# -- solver -----------------------------------------------------------------------

def expected_nv(k: int) -> np.ndarray:
    """The answer predicted from SU(2) fusion, in the natural labelling.

    Odd ``k = 2m-1``: ``I + N_{1/2}`` of SU(2)_{m-1}.  Even ``k = 2m-2``:
    ``N_1`` of SU(2)_{2m-1} restricted to integer spins.
    """
    m = twisted_size(k)
    if k % 2:
        if m == 1:
            # SU(2)_0 has no spin 1/2; N_{1/2} is the 1x1 zero matrix
            return np.eye(1, dtype=np.int64)
        return su2_fusion_matrix(m - 1, Fraction(1, 2)) + np.eye(m, dtype=np.int64)
    return su2_fusion_matrix(2 * m - 1, 1, integer_spins=True)


@dataclass(frozen=True, eq=False)
class NimRepSolution:
    """One permutation class of solutions for ``N_v``.

    ``nv`` is the class's canonical representative; ``labeling`` (when the
    class matches :func:`expected_nv`) is a permutation ``p`` with
    ``nv[p][:, p] == expected_nv(k)``; ``class_size`` counts the labelled
    matrices the search visited in this class (all labellings, or only the
    breadth-first ones, depending on the search mode).
    """

    k: int
    nv: np.ndarray
    labeling: tuple | None
    coxeter: CoxeterCertificate | None
    class_size: int

    @property
    def m_matrix(self) -> np.ndarray:
        return self.nv - np.eye(len(self.nv), dtype=self.nv.dtype)

    @property
    def labeled_nv(self) -> np.ndarray:
        if self.labeling is None:
            return self.nv
        p = list(self.labeling)
        return self.nv[np.ix_(p, p)]


def solve_nv(k: int, stats: SearchStats | None = None,
             bfs_order: bool = True) -> list[NimRepSolution]:
    """All permutation classes of admissible ``N_v`` for SU(3)_k.

    A single class is expected; several are returned as-is so callers can
    see the failure.  Raises :class:`NoSolution` when nothing survives.
    """
    c = SolverConstraints.for_level(k)
    classes: dict[bytes, list] = {}
    for M in enumerate_m_matrices(c, stats, bfs_order=bfs_order):
        nv = M + np.eye(c.m, dtype=np.int64)
        canon, _ = canonical_form(nv)
        key = canon.tobytes()
        if key in classes:
            classes[key][1] += 1
        else:
            classes[key] = [canon, 1]
    if not classes:
        raise NoSolution(f"no admissible N_v for SU(3)_{k}")
    exp = expected_nv(k)
    out = []
    for key in sorted(classes):
        canon, count = classes[key]
        M = canon - np.eye(c.m, dtype=np.int64)
        try:
            cert = coxeter_certificate(M)
        except (NotPositiveDefinite, NotADE):
            cert = None
        out.append(NimRepSolution(k=k, nv=canon, labeling=relabeling(canon, exp),
                                  coxeter=cert, class_size=count))
    return out


def square_root_witness(k: int, nv_labeled) -> int:
    """For even ``k = 2m-2``, max deviation of ``M'^2 = N_v + I``.

    ``M'`` is ``N_{m-1}`` of SU(2)_{2m-1} on integer spins, in the same
    labelling as :func:`expected_nv`.
    """
    if k % 2:
        raise ValueError("square-root witness is defined for even levels")
    m = twisted_size(k)
    root = su2_fusion_matrix(2 * m - 1, m - 1, integer_spins=True)
    nv = np.asarray(nv_labeled)
    return int(np.abs(root @ root - nv - np.eye(m, dtype=np.int64)).max())


# -- spectral data ------------------------------------------------------------------

def pf_vector(nv, md: ModularData, tol: float = SPECTRUM_TOL) -> tuple[np.ndarray, float]:
    """Unit Perron-Frobenius eigenvector of ``nv`` and its eigenvalue ``d_v``."""
    nv = np.asarray(nv, dtype=float)
    vals, vecs = np.linalg.eigh(nv)
    lead = float(vals[-1])
    d_v = float(md.dims[md.index(VECTOR)])
    if abs(lead - d_v) > tol:
        raise EigenvalueMismatch(f"leading eigenvalue {lead} != d_v = {d_v}")
    vec = vecs[:, -1]
    vec = vec * np.sign(vec[np.argmax(np.abs(vec))])
    if np.any(vec <= 0):
        raise EigenvalueMismatch(f"Perron-Frobenius vector not strictly positive: {vec}")
    return vec / np.linalg.norm(vec), lead


def psi_matrix(nv, md: ModularData, tol: float = SPECTRUM_TOL) -> np.ndarray:
    """Unitary ``psi`` with ``nv = psi diag(S_{v mu}/S_{0 mu}) psi^dag``.

    Rows are twisted sectors, columns the self-conjugate ``mu`` in canonical
    order.  Columns are matched to eigenvalues by sorted value; the
    Perron-Frobenius column is made positive and every other column has its
    first non-zero entry positive.
    """
    nv = np.asarray(nv, dtype=float)
    target = nimrep_eigenvalues(md)
    vals, vecs = np.linalg.eigh(nv)
    order = np.argsort(target)
    if np.max(np.abs(np.sort(target) - vals)) > tol:
        raise SpectrumMismatch(f"spectrum {vals} does not match {np.sort(target)}")
    if len(vals) > 1 and np.min(np.diff(vals)) < tol:
        raise DegenerateSpectrum(f"repeated eigenvalues in {vals}")
    psi = np.empty_like(vecs)
    psi[:, order] = vecs
    for col in range(psi.shape[1]):
        v = psi[:, col]
        # a one-signed column is the Perron-Frobenius vector; otherwise fix the first entry
        first = v[np.flatnonzero(np.abs(v) > tol)[0]]
        psi[:, col] = v * np.sign(first)
    return psi.astype(complex)


def twisted_nimrep(lam, psi, md: ModularData, tol: float = 1e-6) -> np.ndarray:
    """``N_lam = psi diag(S_{lam mu}/S_{0 mu}) psi^dag`` rounded to integers."""
    ev = nimrep_eigenvalues(md, tuple(lam))
    raw = psi @ np.diag(ev) @ np.conj(psi.T)
    ints, _ = round_nonnegative(raw, tol)
    return ints


def sum_rule_total(md: ModularData) -> float:
    return float(np.sum(md.dims ** 2))


def delta_normalization(k: int, md: ModularData, pf) -> float:
    """Scale ``delta`` with ``sum_rho (delta pf_rho)^2 = sum_lam d_lam^2``.

    ``pf`` is first rescaled so its smallest entry is 1 (the dimension of
    the SU(2) vacuum in the pattern of the solution).
    """
    pf = np.asarray(pf, dtype=float)
    if np.any(pf <= 0):
        raise ValueError("pf vector must be strictly positive")
    pf = pf / pf.min()
    return math.sqrt(sum_rule_total(md) / float(np.sum(pf ** 2)))


@dataclass(frozen=True, eq=False)
class SolitonSpectrum:
    """Twisted soliton data for one level, entries in label order."""

    k: int
    solution: NimRepSolution
    pf_vector: np.ndarray
    pattern: np.ndarray
    delta: float
    indices: np.ndarray
    psi: np.ndarray

    @property
    def dims(self) -> np.ndarray:
        return self.delta * self.pattern


def soliton_spectrum(k: int) -> SolitonSpectrum:
    """Solve ``N_v`` and derive the Perron-Frobenius data and indices."""
    sols = solve_nv(k)
    if len(sols) != 1:
        raise NoSolution(f"expected one solution class for k={k}, found {len(sols)}")
    sol = sols[0]
    md = _sl3(k)
    nv = sol.labeled_nv
    pf, _ = pf_vector(nv, md)
    delta = delta_normalization(k, md, pf)
    pattern = pf / pf.min()
    return SolitonSpectrum(k=k, solution=sol, pf_vector=pf, pattern=pattern, delta=delta,
                           indices=(delta * pattern) ** 2, psi=psi_matrix(nv, md))


def soliton_indices(k: int) -> list[float]:
    return [float(x) for x in soliton_spectrum(k).indices]


# -- printed closed forms -------------------------------------------------------------

@dataclass
class IndexAudit:
    """Closed-form index values set against the sum-rule values."""

    k: int
    m: int
    printed: list
    sum_rule: list
    printed_delta: float
    sum_rule_delta: float
    pattern: list

    @property
    def ratios(self) -> list[float]:
        return [p / s for p, s in zip(self.printed, self.sum_rule)]

    @property
    def scale_ratio(self) -> float:
        """Printed over sum-rule index of the label whose pattern entry is 1."""
        return self.printed[0] / self.sum_rule[0]

    @property
    def pattern_power(self) -> dict:
        """Exponent ``e`` with ``index_i / index_1 = pattern_i^e``, per source.

        ``None`` when every pattern entry is 1 (exponent undetermined).
        """
        out = {}
        for name, vals in (("printed", self.printed), ("sum_rule", self.sum_rule)):
            es = [math.log(v / vals[0]) / math.log(p)
                  for v, p in zip(vals, self.pattern) if abs(p - 1) > 1e-9]
            out[name] = float(np.mean(es)) if es else None
        return out

    @property
    def agrees(self) -> bool:
        return all(abs(r - 1) < 1e-8 for r in self.ratios)

    def lines(self) -> list[str]:
        fmt = lambda xs: "[" + ", ".join(f"{x:.12g}" for x in xs) + "]"
        pw = self.pattern_power
        return [
            f"k={self.k} m={self.m}",
            f"  printed indices   {fmt(self.printed)}",
            f"  sum-rule indices  {fmt(self.sum_rule)}",
            f"  ratio printed/sum-rule {fmt(self.ratios)}",
            f"  delta printed {self.printed_delta:.12g}  sum-rule {self.sum_rule_delta:.12g}"
            f"  ratio {self.printed_delta / self.sum_rule_delta:.12g}",
            f"  pattern exponent printed {pw['printed']}  sum-rule {pw['sum_rule']}",
            f"  {'AGREE' if self.agrees else 'DISAGREE'}",
        ]


def printed_index_values(k: int) -> tuple[list[float], float]:
    """Closed forms for the twisted indices and for ``delta``, evaluated as printed."""
    m = twisted_size(k)
    if k % 2:
        a = math.pi / (2 * m + 2)
        pre = 3 * (m + 1) / (4 * math.sin(a) ** 4)
        vals = [pre * math.sin(i * math.pi / (m + 1)) / math.sin(math.pi / (m + 1))
                for i in range(1, m + 1)]
        delta = math.sqrt(3 * (m + 1)) / (2 * math.sin(a) ** 2)
    else:
        b = math.pi / (2 * m + 1)
        pre = 3 * (2 * m + 1) / (16 * math.sin(b) ** 2 * math.sin(2 * b) ** 2)
        vals = [pre * math.sin((2 * i - 1) * b) / math.sin(b) for i in range(1, m + 1)]
        delta = math.sqrt(3 * (2 * m + 1)) / (4 * math.sin(b) * math.sin(2 * b))
    return vals, delta


def printed_index_formulas(k: int) -> tuple[list[float], IndexAudit]:
    printed, printed_delta = printed_index_values(k)
    spec = soliton_spectrum(k)
    audit = IndexAudit(k=k, m=twisted_size(k), printed=printed,
                       sum_rule=[float(x) for x in spec.indices],
                       printed_delta=printed_delta, sum_rule_delta=spec.delta,
                       pattern=[float(x) for x in spec.pattern])
    return printed, audit
