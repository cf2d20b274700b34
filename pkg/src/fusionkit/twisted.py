"""Sector bookkeeping for the charge-conjugation Z2 orbifold.

With ``b`` self-conjugate weights, ``c`` weights in conjugate pairs and
``a`` twisted solitons, the orbifold has ``2b + c/2 + 2a`` sectors and the
count ``a + b + c = 2b + c`` forces ``a = b``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch
from .modular import CheckReport, modular_data
from .weights import (AlgebraParams, conjugate, enumerate_alphabet, is_self_conjugate,
                      self_conjugate_count)


def twisted_soliton_count(p: AlgebraParams) -> int:
    return self_conjugate_count(p)


def sector_counts(p: AlgebraParams) -> tuple[int, int, int]:
    """``(a, b, c)``: twisted solitons, self-conjugate weights, non-self-conjugate weights."""
    b = self_conjugate_count(p)
    c = len(enumerate_alphabet(p)) - b
    return twisted_soliton_count(p), b, c


def mu_index(p: AlgebraParams) -> float:
    """Global index ``sum_lam d_lam^2``."""
    return float(np.sum(modular_data(p).dims ** 2))


@dataclass(frozen=True)
class OrbifoldInventory:
    """Irreducible sectors of the orbifold with their dimensions.

    ``split_sectors``: ``(lam, sign, dim)`` for each self-conjugate ``lam``
    and ``sign`` in ``'+', '-'``; ``merged_sectors``: ``(lam, conj, dim)``
    for each conjugate pair; ``twisted_sectors``: ``(label, sign, dim)``
    with soliton labels ``1..a``.
    """

    params: AlgebraParams
    split_sectors: tuple
    merged_sectors: tuple
    twisted_sectors: tuple

    @property
    def dims(self) -> list[float]:
        return [s[-1] for s in self.split_sectors + self.merged_sectors + self.twisted_sectors]

    def __len__(self):
        return len(self.split_sectors) + len(self.merged_sectors) + len(self.twisted_sectors)


def orbifold_inventory(p: AlgebraParams, soliton_dims) -> OrbifoldInventory:
    """Build the orbifold sector list from the parent data and soliton dimensions.

    Restriction of a self-conjugate ``lam`` splits into two sectors of
    dimension ``d_lam`` each; a conjugate pair restricts to a single sector
    of dimension ``2 d_lam``; each twisted soliton ``rho`` gives two sectors
    of dimension ``d_rho``.
    """
    soliton_dims = [float(x) for x in soliton_dims]
    a = twisted_soliton_count(p)
    if len(soliton_dims) != a:
        raise LengthMismatch(f"expected {a} soliton dimensions, got {len(soliton_dims)}")
    md = modular_data(p)
    split, merged, seen = [], [], set()
    for lam, d in zip(md.weights, md.dims):
        if is_self_conjugate(lam):
            split += [(lam, "+", float(d)), (lam, "-", float(d))]
        elif lam not in seen:
            bar = conjugate(lam)
            seen.update((lam, bar))
            merged.append((lam, bar, 2.0 * float(d)))
    twisted = [(i, sign, d) for i, d in enumerate(soliton_dims, start=1) for sign in "+-"]
    return OrbifoldInventory(p, tuple(split), tuple(merged), tuple(twisted))


def orbifold_mu_check(inv: OrbifoldInventory, p: AlgebraParams | None = None,
                      tol: float = 1e-8) -> CheckReport:
    """Check ``sum over sectors of dim^2 = 4 * mu_index`` and the sector counts."""
    p = inv.params if p is None else p
    a, b, c = sector_counts(p)
    rep = CheckReport(tol)
    total = float(np.sum(np.square(inv.dims)))
    target = 4.0 * mu_index(p)
    rep.add("sum dim^2 = 4 mu", abs(total - target))
    rep.add("split sectors = 2b", abs(len(inv.split_sectors) - 2 * b))
    rep.add("merged sectors = c/2", abs(2 * len(inv.merged_sectors) - c))
    rep.add("twisted sectors = 2a", abs(len(inv.twisted_sectors) - 2 * a))
    rep.add("a = b", abs(a - b))
    return rep


def level_one_twisted_dims_oracle() -> list[float]:
    """Twisted soliton dimensions of SU(3)_1 read off from SU(2)_4.

    At level one the orbifold of SU(3)_1 is Spin(3)_2 = SU(2)_4.  Removing
    the untwisted sector dimensions (two vacua of dimension 1 and the merged
    pair of dimension 2) from the SU(2)_4 dimension multiset leaves the two
    components of the single twisted soliton; returns that soliton's
    dimension list (length one).
    """
    remaining = list(modular_data(AlgebraParams(2, 4)).dims)
    untwisted = orbifold_inventory(AlgebraParams(3, 1), [0.0])
    for d in untwisted.dims[:-2]:
        hits = [i for i, x in enumerate(remaining) if abs(x - d) < 1e-9]
        if not hits:
            raise ArithmeticError(f"untwisted dimension {d} missing from SU(2)_4")
        remaining.pop(hits[0])
    if len(remaining) != 2 or abs(remaining[0] - remaining[1]) > 1e-9:
        raise ArithmeticError(f"unexpected twisted remainder {remaining}")
    return [float(remaining[0])]
