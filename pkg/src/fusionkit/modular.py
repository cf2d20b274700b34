"""Genus-0 modular data of SU(n)_k and the Verlinde fusion tensor.

Two independent routes to the S matrix are provided:

* :func:`s_matrix` evaluates the Weyl-determinant (Kac-Peterson) form
  ``S_{lm} = c * sum_w det(w) exp(-2 pi i (w(l+rho), m+rho) / (k+n))``
  with ``c`` fixed by unitarity and positivity of the vacuum row;
* :func:`s_matrix_from_characters` evaluates ``S_{lm} / S_{0m}`` as a Schur
  polynomial at roots of unity (Jacobi-Trudi determinant) and supplies the
  vacuum row from the Weyl denominator product.

A third, algebraic route rebuilds S from the fusion rules, twists and
dimensions, ``S = |a|^{-1} Y``; see :func:`y_matrix`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import DegenerateGaussSum, IntegralityViolation
from .weights import (AlgebraParams, conjugation_permutation, enumerate_alphabet,
                      epsilon_coordinates, inner_product, partition_of, shifted_parts,
                      t_invariant)

INTEGER_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class ModularData:
    """S, T and derived data for one ``(n, k)``; arrays are read-only."""

    params: AlgebraParams
    weights: tuple
    s: np.ndarray
    conformal_weights: tuple
    twists: np.ndarray
    t: np.ndarray
    dims: np.ndarray
    gauss_sum: complex
    c0: float
    conj_perm: tuple

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def conjugation_matrix(self) -> np.ndarray:
        c = np.zeros((self.size, self.size))
        c[np.arange(self.size), list(self.conj_perm)] = 1.0
        return c

    def index(self, lam) -> int:
        return self.weights.index(tuple(lam))


@dataclass(frozen=True, eq=False)
class FusionTensor:
    """Non-negative integer tensor ``entries[l, m, v] = N_{lm}^v``."""

    params: AlgebraParams
    weights: tuple
    entries: np.ndarray
    max_deviation: float = 0.0

    def __getitem__(self, key):
        return self.entries[key]

    def index(self, lam) -> int:
        return self.weights.index(tuple(lam))


def _frozen(a):
    a = np.array(a)
    a.setflags(write=False)
    return a


def _check_params(p):
    if not isinstance(p, AlgebraParams):
        p = AlgebraParams(*p)
    return p


# -- S matrix, Weyl-determinant route -----------------------------------------

def _shifted_eps(p: AlgebraParams) -> np.ndarray:
    rows = [epsilon_coordinates(tuple(l + 1 for l in lam)) for lam in enumerate_alphabet(p)]
    return np.array([[float(x) for x in r] for r in rows])


def s_matrix(p: AlgebraParams) -> np.ndarray:
    """Kac-Peterson S matrix in the canonical weight order."""
    p = _check_params(p)
    a = _shifted_eps(p)
    h = p.height
    # sum over S_n of sign(w) prod_i exp(..a_{w(i)} b_i..) is a determinant
    phase = np.exp(-2j * np.pi * a[:, None, :, None] * a[None, :, None, :] / h)
    raw = np.linalg.det(phase)
    c = np.conj(raw[0, 0]) / abs(raw[0, 0])
    raw = raw * c
    s = raw / np.linalg.norm(raw[0])
    if np.any(s[0].real <= 0):
        raise ArithmeticError("vacuum row of S is not positive")
    return s


# -- S matrix, character route -------------------------------------------------

def complete_homogeneous(xs, degree: int) -> list:
    """``[h_0(xs), ..., h_degree(xs)]`` by the one-variable-at-a-time recurrence."""
    h = [1.0 + 0j] + [0j] * degree
    for x in xs:
        for r in range(1, degree + 1):
            h[r] = h[r] + x * h[r - 1]
    return h


def schur_polynomial(parts, xs) -> complex:
    """Schur polynomial ``s_parts(xs)`` via Jacobi-Trudi, ``det[h_{p_i - i + j}]``.

    Safe at coincident arguments, unlike the bialternant quotient.
    """
    parts = [p for p in parts if p > 0]
    if not parts:
        return 1.0 + 0j
    ell = len(parts)
    h = complete_homogeneous(xs, parts[0] + ell)
    m = np.zeros((ell, ell), dtype=complex)
    for i in range(ell):
        for j in range(ell):
            r = parts[i] - i + j
            m[i, j] = h[r] if r >= 0 else 0.0
    return complex(np.linalg.det(m))


def _vacuum_row_product(p: AlgebraParams) -> np.ndarray:
    a = _shifted_eps(p)
    row = np.ones(len(a))
    for i, j in combinations(range(p.n), 2):
        row *= np.sin(np.pi * (a[:, i] - a[:, j]) / p.height)
    return np.abs(row) / np.linalg.norm(row)


def character_ratio(p: AlgebraParams, lam, mu) -> complex:
    """``S_{lam,mu} / S_{0,mu}`` as an SU(n) character at a root of unity.

    Variables ``x_i = exp(-2 pi i mu'_i / (k+n))`` with ``x_n = 1``.  These
    are not projected to determinant one, so a phase
    ``exp(2 pi i t(lam) t(mu+rho) / (n (k+n)))`` restores the correct value;
    it equals 1 for the vacuum.
    """
    h = p.height
    mus = shifted_parts(mu)
    xs = [np.exp(-2j * np.pi * m / h) for m in mus] + [1.0]
    shift = np.exp(2j * np.pi * t_invariant(lam) * sum(mus) / (p.n * h))
    return shift * schur_polynomial(partition_of(lam), xs)


def s_matrix_from_characters(p: AlgebraParams) -> np.ndarray:
    p = _check_params(p)
    ws = enumerate_alphabet(p)
    vac = _vacuum_row_product(p)
    s = np.empty((len(ws), len(ws)), dtype=complex)
    for i, lam in enumerate(ws):
        for j, mu in enumerate(ws):
            s[i, j] = character_ratio(p, lam, mu) * vac[j]
    return s


# -- T data ---------------------------------------------------------------------

def conformal_weights(p: AlgebraParams) -> list[Fraction]:
    """``h_lam = (lam, lam + 2 rho) / (2 (k + n))``, exact."""
    p = _check_params(p)
    two_rho = (2,) * p.rank
    return [inner_product(lam, tuple(a + b for a, b in zip(lam, two_rho))) / (2 * p.height)
            for lam in enumerate_alphabet(p)]


def central_charge(p: AlgebraParams) -> Fraction:
    return Fraction(p.k * (p.n * p.n - 1), p.k + p.n)


def quantum_dims(md_or_s) -> np.ndarray:
    """``d_lam = S_{0 lam} / S_{00}``."""
    s = md_or_s.s if isinstance(md_or_s, ModularData) else np.asarray(md_or_s)
    return (s[0] / s[0, 0]).real


def gauss_sum(dims, twists, tol: float = 1e-8) -> tuple[complex, float]:
    """Return ``(a, c0)`` with ``a = sum d^2 / omega`` and ``a = |a| exp(-2 pi i c0/8)``.

    ``c0`` is reported in ``[0, 8)``.  Raises :class:`DegenerateGaussSum`
    when ``|a|^2`` differs from ``sum d^2``.
    """
    dims = np.asarray(dims, dtype=float)
    twists = np.asarray(twists, dtype=complex)
    a = complex(np.sum(dims ** 2 / twists))
    expected = float(np.sqrt(np.sum(dims ** 2)))
    if abs(abs(a) - expected) > tol * max(1.0, expected):
        raise DegenerateGaussSum(abs(a), expected)
    c0 = (-8.0 * np.angle(a) / (2 * np.pi)) % 8.0
    if np.isclose(c0, 8.0, atol=1e-12):
        c0 = 0.0
    return a, float(c0)


@lru_cache(maxsize=None)
def _modular_data(n: int, k: int) -> ModularData:
    p = AlgebraParams(n, k)
    s = s_matrix(p)
    hs = conformal_weights(p)
    twists = np.exp(2j * np.pi * np.array([float(h) for h in hs]))
    dims = quantum_dims(s)
    a, c0 = gauss_sum(dims, twists)
    t = np.exp(-2j * np.pi * c0 / 24) * np.diag(twists)
    return ModularData(params=p, weights=tuple(enumerate_alphabet(p)), s=_frozen(s),
                       conformal_weights=tuple(hs), twists=_frozen(twists), t=_frozen(t),
                       dims=_frozen(dims), gauss_sum=a, c0=c0,
                       conj_perm=tuple(conjugation_permutation(p)))


def modular_data(p) -> ModularData:
    """Cached :class:`ModularData` for ``p`` (an :class:`AlgebraParams` or ``(n, k)``)."""
    p = _check_params(p)
    return _modular_data(p.n, p.k)


# -- fusion ---------------------------------------------------------------------

def round_nonnegative(values, tol: float = INTEGER_TOL):
    """Round a real/complex array to non-negative integers or raise.

    Returns ``(ints, max_deviation)``.
    """
    values = np.asarray(values)
    dev_imag = np.abs(values.imag) if np.iscomplexobj(values) else np.zeros(values.shape)
    re = values.real
    ints = np.rint(re)
    dev = np.maximum(np.abs(re - ints), dev_imag)
    worst = np.unravel_index(np.argmax(dev), dev.shape) if dev.size else ()
    max_dev = float(dev.max()) if dev.size else 0.0
    if max_dev > tol:
        raise IntegralityViolation(tuple(int(i) for i in worst), max_dev, values[worst])
    if np.any(ints < 0):
        bad = tuple(int(i) for i in np.argwhere(ints < 0)[0])
        raise IntegralityViolation(bad, float(-ints[bad]), values[bad])
    return ints.astype(np.int64), max_dev


def verlinde_tensor(md: ModularData, tol: float = INTEGER_TOL) -> FusionTensor:
    """``N_{lm}^v = sum_d S_{ld} S_{md} conj(S_{vd}) / S_{0d}``."""
    s = md.s
    raw = np.einsum("ld,md,vd->lmv", s, s, np.conj(s) / s[0])
    ints, dev = round_nonnegative(raw, tol)
    return FusionTensor(params=md.params, weights=md.weights, entries=_frozen(ints),
                        max_deviation=dev)


@lru_cache(maxsize=None)
def _fusion_tensor(n: int, k: int) -> FusionTensor:
    return verlinde_tensor(_modular_data(n, k))


def fusion_tensor(p) -> FusionTensor:
    """Cached Verlinde tensor for ``p``."""
    p = _check_params(p)
    return _fusion_tensor(p.n, p.k)


def y_matrix(N: FusionTensor, md: ModularData) -> np.ndarray:
    """``Y_{lm} = sum_v N_{lm}^v (omega_l omega_m / omega_v) d_v``."""
    w = md.twists
    return np.einsum("lmv,l,m,v->lm", N.entries, w, w, md.dims / w)


# -- verification ---------------------------------------------------------------

@dataclass
class CheckReport:
    """Named checks with their max deviation; ``ok`` is true when all pass."""

    tolerance: float
    checks: dict = field(default_factory=dict)

    def add(self, name: str, deviation: float, passed: bool | None = None):
        deviation = float(deviation)
        if passed is None:
            passed = deviation < self.tolerance
        self.checks[name] = (bool(passed), deviation)

    @property
    def ok(self) -> bool:
        return all(passed for passed, _ in self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, (passed, _) in self.checks.items() if not passed]

    def lines(self) -> list[str]:
        return [f"{'PASS' if passed else 'FAIL'}  {name}  (max dev {dev:.3g})"
                for name, (passed, dev) in self.checks.items()]


def _maxabs(x) -> float:
    x = np.asarray(x)
    return float(np.max(np.abs(x))) if x.size else 0.0


def verify_modular(md: ModularData, tol: float = 1e-9, N: FusionTensor | None = None,
                   s: np.ndarray | None = None) -> CheckReport:
    """Check the unitarity, modular and conjugation relations of ``md``.

    ``s`` overrides ``md.s`` (used to probe perturbed matrices).  The
    relation ``T C = C T = T`` is read as ``T`` commuting with the
    conjugation ``C`` and being invariant under it; the literal matrix
    identity fails whenever conjugation is non-trivial.
    """
    s = md.s if s is None else np.asarray(s)
    t = md.t
    c = md.conjugation_matrix
    eye = np.eye(md.size)
    tinv = np.conj(t)
    rep = CheckReport(tol)
    rep.add("S S^dag = I", _maxabs(s @ np.conj(s.T) - eye))
    rep.add("T T^dag = I", _maxabs(t @ np.conj(t.T) - eye))
    rep.add("S = S^T", _maxabs(s - s.T))
    rep.add("S T S = T^-1 S T^-1", _maxabs(s @ t @ s - tinv @ s @ tinv))
    rep.add("S^2 = C", _maxabs(s @ s - c))
    rep.add("T C = C T", _maxabs(t @ c - c @ t))
    rep.add("C T C = T", _maxabs(c @ t @ c - t))
    rep.add("S_0m > 0", 0.0, passed=bool(np.all(s[0].real > 0)))
    total = float(np.sum(md.dims ** 2))
    rep.add("|a|^2 = sum d^2 (relative)", abs(abs(md.gauss_sum) ** 2 - total) / total)
    if N is None:
        N = fusion_tensor(md.params)
    y = y_matrix(N, md)
    rep.add("S = |a|^-1 Y", _maxabs(y / abs(md.gauss_sum) - s))
    return rep
