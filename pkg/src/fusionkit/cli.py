"""Command-line front end.

::

    python -m fusionkit COMMAND --n N --level K [--format table|json|csv]
                        [--tolerance TOL] [--out FILE] [--input FILE]

Commands: ``reps``, ``modular``, ``fusion``, ``twisted``, ``nimrep``,
``indices``, ``verify``.  Exit status is 0 on success, 1 when a
verification fails and 2 on usage errors.  ``FUSIONKIT_THREADS`` caps the
number of BLAS threads.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from contextlib import nullcontext
from fractions import Fraction

import numpy as np

from . import nimrep as nr
from .modular import FusionTensor, fusion_tensor, modular_data
from .fusion import ring_axioms_check
from .suite import verify_all
from .twisted import mu_index, orbifold_inventory, sector_counts
from .weights import (AlgebraParams, conjugate, is_self_conjugate, partition_of,
                      t_invariant)

COMMANDS = ("reps", "modular", "fusion", "twisted", "nimrep", "indices", "verify")
SIG = 12


def _num(x):
    """JSON-ready number rounded to 12 significant digits; complex -> [re, im]."""
    if isinstance(x, (complex, np.complexfloating)):
        return [_num(x.real), _num(x.imag)]
    if isinstance(x, (int, np.integer)):
        return int(x)
    v = float(f"{float(x):.{SIG}g}")
    return 0.0 if v == 0 else v


def _tree(x):
    if isinstance(x, np.ndarray):
        return _tree(x.tolist())
    if isinstance(x, dict):
        return {str(k): _tree(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_tree(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (bool, str)) or x is None:
        return x
    return _num(x)


def _fmt(x) -> str:
    if isinstance(x, (complex, np.complexfloating)):
        re, im = _num(x)
        return f"{re:.{SIG}g}{im:+.{SIG}g}j"
    if isinstance(x, (int, np.integer, Fraction, str)):
        return str(x)
    return f"{_num(x):.{SIG}g}"


def envelope(p: AlgebraParams, data) -> dict:
    md = modular_data(p)
    return {"algebra": {"n": p.n, "k": p.k},
            "weights": [list(w) for w in md.weights],
            "data": _tree(data)}


def dump_fusion_json(N: FusionTensor) -> str:
    return json.dumps(envelope(N.params, {"fusion": N.entries}), sort_keys=True)


def load_fusion_json(text: str) -> tuple[AlgebraParams, np.ndarray]:
    """Inverse of :func:`dump_fusion_json`; accepts the CSV-free JSON schema only."""
    doc = json.loads(text)
    p = AlgebraParams(int(doc["algebra"]["n"]), int(doc["algebra"]["k"]))
    weights = [tuple(w) for w in doc["weights"]]
    if weights != list(modular_data(p).weights):
        raise ValueError("weight list does not match the canonical order")
    return p, np.asarray(doc["data"]["fusion"], dtype=np.int64)


def _matrix_table(mat, labels=None) -> list[str]:
    mat = np.asarray(mat)
    labels = labels or [str(i + 1) for i in range(mat.shape[0])]
    cells = [[_fmt(v) for v in row] for row in mat]
    width = max([len(c) for row in cells for c in row] + [1])
    lw = max(len(l) for l in labels)
    return [f"{l:>{lw}}  " + " ".join(f"{c:>{width}}" for c in row)
            for l, row in zip(labels, cells)]


def _wlabel(w) -> str:
    return "(" + ",".join(map(str, w)) + ")"


# -- commands: each returns (data, table_lines, csv_rows, ok) ---------------------

def cmd_reps(p, args):
    md = modular_data(p)
    rows = []
    for w, h, d in zip(md.weights, md.conformal_weights, md.dims):
        rows.append({"weight": list(w), "conjugate": list(conjugate(w)),
                     "self_conjugate": is_self_conjugate(w), "t": t_invariant(w),
                     "partition": partition_of(w), "h": h, "dim": float(d)})
    table = [f"{'weight':>12} {'conj':>12} self  t  {'h':>8}  dim"]
    table += [f"{_wlabel(r['weight']):>12} {_wlabel(r['conjugate']):>12} "
              f"{'y' if r['self_conjugate'] else 'n':>4} {r['t']:>2}  {str(r['h']):>8}  {_fmt(r['dim'])}"
              for r in rows]
    csv_rows = [["weight", "conjugate", "self_conjugate", "t", "h", "dim"]]
    csv_rows += [[_wlabel(r["weight"]), _wlabel(r["conjugate"]), int(r["self_conjugate"]),
                  r["t"], str(r["h"]), _fmt(r["dim"])] for r in rows]
    return {"reps": rows}, table, csv_rows, True


def cmd_modular(p, args):
    md = modular_data(p)
    labels = [_wlabel(w) for w in md.weights]
    data = {"s": md.s, "twists": md.twists, "t": np.diag(md.t), "dims": md.dims,
            "conformal_weights": list(md.conformal_weights), "gauss_sum": md.gauss_sum,
            "c0": md.c0, "conj_perm": list(md.conj_perm)}
    table = ["S ="] + _matrix_table(md.s, labels)
    table += [f"gauss sum a = {_fmt(md.gauss_sum)}", f"c0 = {_fmt(md.c0)} (mod 8)",
              "twists: " + " ".join(_fmt(w) for w in md.twists),
              "dims:   " + " ".join(_fmt(d) for d in md.dims)]
    csv_rows = [["lambda", "mu", "re_S", "im_S"]]
    csv_rows += [[labels[i], labels[j], _fmt(md.s[i, j].real), _fmt(md.s[i, j].imag)]
                 for i in range(md.size) for j in range(md.size)]
    return data, table, csv_rows, True


def cmd_fusion(p, args):
    N = fusion_tensor(p)
    labels = [_wlabel(w) for w in N.weights]
    table, csv_rows = [], [["lambda", "mu", "nu", "N"]]
    for a in range(len(labels)):
        for b in range(a, len(labels)):
            prods = [f"{c}*{labels[v]}" if c > 1 else labels[v]
                     for v, c in enumerate(N.entries[a, b]) if c]
            table.append(f"{labels[a]} x {labels[b]} = " + " + ".join(prods))
    for a, b, v in zip(*np.nonzero(N.entries)):
        csv_rows.append([labels[a], labels[b], labels[v], int(N.entries[a, b, v])])
    return {"fusion": N.entries}, table, csv_rows, True


def cmd_twisted(p, args):
    a, b, c = sector_counts(p)
    data = {"a": a, "b": b, "c": c, "mu_index": mu_index(p)}
    table = [f"twisted solitons a = {a}", f"self-conjugate b = {b}",
             f"non-self-conjugate c = {c}", f"mu index = {_fmt(data['mu_index'])}"]
    csv_rows = [["sector", "kind", "dim"]]
    if p.n == 3:
        spec = nr.soliton_spectrum(p.k)
        inv = orbifold_inventory(p, spec.dims)
        sectors = ([[_wlabel(l) + s, "split", d] for l, s, d in inv.split_sectors]
                   + [["{" + _wlabel(l) + "," + _wlabel(bar) + "}", "merged", d]
                      for l, bar, d in inv.merged_sectors]
                   + [[f"rho{i}{s}", "twisted", d] for i, s, d in inv.twisted_sectors])
        data["sectors"] = [{"sector": s, "kind": kd, "dim": d} for s, kd, d in sectors]
        data["sum_dim_squared"] = float(np.sum(np.square(inv.dims)))
        table += [f"  {s:<16} {kd:<8} {_fmt(d)}" for s, kd, d in sectors]
        table.append(f"sum dim^2 = {_fmt(data['sum_dim_squared'])} "
                     f"(4 mu = {_fmt(4 * data['mu_index'])})")
        csv_rows += [[s, kd, _fmt(d)] for s, kd, d in sectors]
    return data, table, csv_rows, True


def cmd_nimrep(p, args):
    sols = nr.solve_nv(p.k)
    sol = sols[0]
    nv = sol.labeled_nv
    cert = sol.coxeter
    data = {"classes": len(sols), "nv": nv, "m_matrix": nv - np.eye(len(nv), dtype=int),
            "labels": list(range(1, len(nv) + 1)), "matches_expected": sol.labeling is not None,
            "coxeter": None if cert is None else {
                "type": cert.type_name, "norm": cert.norm,
                "double_type": None if cert.double_family is None
                else f"{cert.double_family}{cert.double_rank}"}}
    table = [f"SU(3)_{p.k}: m = {len(nv)}, permutation classes = {len(sols)}",
             f"N_v = {nv.tolist()}",
             "labels " + " ".join(map(str, data["labels"]))]
    table += _matrix_table(nv)
    if cert is not None:
        kinds = [f"graph {cert.type_name}" if cert.type_name else None,
                 f"bipartite double {data['coxeter']['double_type']}"
                 if data["coxeter"]["double_type"] else None]
        table.append(", ".join([k for k in kinds if k] + [f"norm {_fmt(cert.norm)}"]))
    csv_rows = [["row"] + [str(i) for i in data["labels"]]]
    csv_rows += [[str(i + 1)] + [int(v) for v in row] for i, row in enumerate(nv)]
    return data, table, csv_rows, len(sols) == 1


def cmd_indices(p, args):
    spec = nr.soliton_spectrum(p.k)
    printed, audit = nr.printed_index_formulas(p.k)
    data = {"delta": spec.delta, "pf_vector": spec.pf_vector, "indices": spec.indices,
            "printed": printed, "ratios": audit.ratios,
            "printed_delta": audit.printed_delta, "pattern_power": audit.pattern_power}
    table = [f"{'label':>5} {'sum-rule':>20} {'printed':>20} {'ratio':>16}"]
    table += [f"{i:>5} {_fmt(s):>20} {_fmt(q):>20} {_fmt(r):>16}"
              for i, (s, q, r) in enumerate(zip(spec.indices, printed, audit.ratios), start=1)]
    table += audit.lines()[4:]
    csv_rows = [["label", "sum_rule", "printed", "ratio"]]
    csv_rows += [[i, _fmt(s), _fmt(q), _fmt(r)]
                 for i, (s, q, r) in enumerate(zip(spec.indices, printed, audit.ratios), start=1)]
    return data, table, csv_rows, True


def cmd_verify(p, args):
    if args.input:
        with open(args.input) as fh:
            q, tensor = load_fusion_json(fh.read())
        if q != p:
            raise SystemExit(f"input is for SU({q.n})_{q.k}, not SU({p.n})_{p.k}")
        rep = ring_axioms_check(tensor, p)
        rep.add("matches computed Verlinde tensor",
                int(np.abs(tensor - fusion_tensor(p).entries).max()))
        audit = None
    else:
        rep, audit = verify_all(p, args.tolerance)
    data = {"ok": rep.ok, "checks": [{"name": k, "passed": v[0], "deviation": v[1]}
                                     for k, v in rep.checks.items()]}
    table = [f"SU({p.n})_{p.k} verification, tolerance {args.tolerance:g}"] + rep.lines()
    if audit is not None:
        data["index_audit"] = {"printed": audit.printed, "sum_rule": audit.sum_rule,
                               "ratios": audit.ratios, "agrees": audit.agrees}
        table += ["", "printed index formulas vs sum rule (informational):"] + audit.lines()
    table.append("ALL CHECKS PASSED" if rep.ok else f"FAILED: {', '.join(rep.failures)}")
    csv_rows = [["check", "passed", "deviation"]]
    csv_rows += [[k, int(v[0]), f"{v[1]:.{SIG}g}"] for k, v in rep.checks.items()]
    return data, table, csv_rows, rep.ok


HANDLERS = {"reps": cmd_reps, "modular": cmd_modular, "fusion": cmd_fusion,
            "twisted": cmd_twisted, "nimrep": cmd_nimrep, "indices": cmd_indices,
            "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fusionkit",
                                 description="SU(n)_k modular data and twisted NIM-reps")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--n", type=int, required=True, help="rank + 1 of su(n)")
    ap.add_argument("--level", "-k", type=int, required=True, help="level k")
    ap.add_argument("--format", choices=("table", "json", "csv"), default="table")
    ap.add_argument("--tolerance", type=float, default=1e-8)
    ap.add_argument("--out", help="write to FILE instead of stdout")
    ap.add_argument("--input", help="verify: fusion tensor JSON to check instead of recomputing")
    return ap


def render(p, fmt, data, table, csv_rows) -> str:
    if fmt == "json":
        return json.dumps(envelope(p, data), sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(csv_rows)
        return buf.getvalue()
    return "\n".join(table) + "\n"


def _thread_limit():
    raw = os.environ.get("FUSIONKIT_THREADS")
    if not raw:
        return nullcontext()
    from threadpoolctl import threadpool_limits
    return threadpool_limits(limits=max(1, int(raw)))


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.n < 2 or args.level < 1:
        ap.error("need --n >= 2 and --level >= 1")
    if args.command in ("nimrep", "indices") and args.n != 3:
        ap.error(f"{args.command} is only available for --n 3")
    if args.input and args.command != "verify":
        ap.error("--input is only used by verify")
    if args.tolerance <= 0:
        ap.error("--tolerance must be positive")
    p = AlgebraParams(args.n, args.level)
    with _thread_limit():
        data, table, csv_rows, ok = HANDLERS[args.command](p, args)
    text = render(p, args.format, data, table, csv_rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
