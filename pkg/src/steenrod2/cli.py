"""Command-line driver: ``steenrod2 <command> ...``.

Exit status: 0 on success, 1 when ``verify`` finds a failing check, 2 on bad
input, 3 when a resource cap is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import action, bar, checks, invariants, lannes, operations, qforms, steenrod
from .errors import ResourceError, Steenrod2Error
from .poly import Poly, free_algebra_dims, vector_space_ring

SCHEMA = "steenrod2/1"


class UsageError(Exception):
    pass


def _ring_for(text: str, dim: int | None):
    n = dim if dim is not None else qforms.infer_dim(text)
    return vector_space_ring(n)


def _poly(text: str, dim: int | None) -> Poly:
    return _ring_for(text, dim).parse(text)


def _form(text: str, dim: int | None) -> qforms.QuadraticForm:
    return qforms.QuadraticForm.parse(text, dim)


# -- commands: each returns (json payload, text lines) -------------------------


def cmd_sq(a):
    f = _poly(a.poly, a.dim)
    out = action.sq(a.k, f)
    return {"input": str(f), "k": a.k, "result": str(out)}, [str(out)]


def cmd_milnor(a):
    f = _poly(a.poly, a.dim)
    out = action.milnor_q(a.i, f)
    return {"input": str(f), "i": a.i, "result": str(out)}, [out.factored_str()]


def cmd_adem(a):
    word = steenrod.parse_word(a.word)
    out = steenrod.adem_normalize(word)
    text = steenrod.format_sum(out)
    return {"word": list(word), "admissible": [list(w) for w in sorted(out, reverse=True)]}, [text]


def cmd_serre_basis(a):
    D = a.max_degree if a.max_degree is not None else 20
    if a.free:
        words = steenrod.f_basis(a.n, D)
        rows = [(steenrod.format_word(w), a.n + sum(w)) for w in words]
        dims = steenrod.f_dims(a.n, D)
    else:
        pres = steenrod.serre_generators(a.n, D)
        rows = [((steenrod.format_word(w) + " " if w else "") + f"i{a.n}", d) for w, d in pres.generators]
        dims = free_algebra_dims(pres.degrees, D)
    lines = [f"{d:>3}  {name}" for name, d in rows] + [f"dims: {dims}"]
    return {"n": a.n, "cap": D, "basis": [{"word": n, "degree": d} for n, d in rows], "dims": dims}, lines


def cmd_eval_op(a):
    psi = operations.parse_class(a.psi)
    s = _form(a.form, a.dim)
    out = operations.evaluate(psi, s)
    return {"psi": str(psi), "form": str(s), "result": str(out)}, [str(out)]


def cmd_kernel(a):
    psi = operations.parse_class(a.psi)
    n = 2 if a.dim is None else a.dim
    ker = sorted(operations.kernel_set(psi, n), key=lambda f: (qforms.polar_rank(f), f.bits))
    lines = [str(f) for f in ker] + [f"{len(ker)} of {len(qforms.all_forms(n))} forms"]
    labels = [qforms.classify(f).label for f in ker]
    return {"psi": str(psi), "dim": n, "kernel": [str(f) for f in ker], "labels": labels,
            "size": len(ker)}, lines


def cmd_classify(a):
    q = _form(a.form, a.dim)
    c = qforms.classify(q)
    payload = {"form": str(q), "rank": c.rank, "defective": c.defective, "arf": c.arf,
               "normal_form": str(c.representative)}
    if q.n <= qforms.MAX_ORBIT_DIM:
        payload["canonical"] = qforms.canonical_form(q).bitstring()
    return payload, [f"{c.label}; normal form {c.representative}"]


def cmd_census(a):
    n = 2 if a.dim is None else a.dim
    rows = qforms.orbit_census(n)
    lines = [f"{size:>5}  {c.label:<20} {c.representative}" for c, size in rows]
    payload = [{"label": c.label, "size": size, "representative": str(c.representative)}
               for c, size in rows]
    return {"dim": n, "orbits": payload}, lines


def cmd_dickson(a):
    D = a.max_degree if a.max_degree is not None else invariants.DEFAULT_CAP
    dims = invariants.dickson_dims(D)
    return {"cap": D, **dims}, [f"{k:<13} {v}" for k, v in dims.items()]


def cmd_subalgebra(a):
    D = a.max_degree if a.max_degree is not None else invariants.DEFAULT_CAP
    texts = [g.strip() for g in a.gens.split(";") if g.strip()]
    dim = a.dim if a.dim is not None else max(qforms.infer_dim(t) for t in texts)
    ring = vector_space_ring(dim)
    gens = tuple(ring.parse(t) for t in texts)
    dims = invariants.subalgebra_dims(invariants.SubalgebraSpec(ring, gens, D))
    return {"generators": [str(g) for g in gens], "cap": D, "dims": dims}, [str(dims)]


def cmd_m2(a):
    D = a.max_degree if a.max_degree is not None else 12
    rows = invariants.m2_table(D)
    lines = ["deg  D(2)  H2  M2  common"] + [
        f"{r['degree']:>3} {r['dickson']:>5} {r['h2']:>3} {r['m2']:>3} {r['image_intersection']:>7}" for r in rows]
    meta = {"restriction": "diagonal (u, v) -> (u, u)"}
    return {"cap": D, "rows": rows, "meta": meta}, lines


def cmd_norm_check(a):
    D = a.max_degree if a.max_degree is not None else 12
    rep = invariants.norm_sequence_check(D)
    lines = [f"deg {r['degree']:>2}: ker {r['kernel_dim']} im {r['image_dim']} "
             f"ker/im {r['homology_dim']} symmetric {r['kernel_is_symmetric']}" for r in rep["degrees"]]
    lines.append("ok" if rep["ok"] else "FAILED")
    return rep, lines


def cmd_tv(a):
    D = a.max_degree if a.max_degree is not None else 12
    n = 1 if a.dim is None else a.dim
    rep = lannes.tv_report(a.p, n, D)
    payload = rep.to_dict()
    lines = [f"T_V F({a.p}), dim V = {n}: {rep.dims}"]
    payload["HK_degree0_dim"] = lannes.tv_HK_degree0(a.p, n)
    lines.append(f"dim T_V(H^*K_{a.p})^0 = {payload['HK_degree0_dim']}")
    if a.psi:
        psi = operations.parse_class(a.psi)
        payload["l2_zero"] = {"fiber_size": lannes.l2_zero_rank(psi, n),
                              "boolean_size": lannes.l2_zero_dim(psi, n)}
        lines.append(f"L_2 degree 0 over psi = {psi}: fiber {payload['l2_zero']['fiber_size']} points, "
                     f"{payload['l2_zero']['boolean_size']} functions")
    return payload, lines


def cmd_tor(a):
    psi = None if a.psi in (None, "1", "trivial") else operations.parse_class(a.psi)
    p = a.p if a.p is not None else (psi.target_degree if psi else None)
    if p is None:
        raise UsageError("tor needs --p for the trivial module")
    D = a.bar_degree if a.bar_degree is not None else (
        bar.DEFAULT_TRIVIAL_CAP if psi is None else bar.DEFAULT_PSI_CAP)
    S = a.bar_columns if a.bar_columns is not None else bar.DEFAULT_COLUMNS
    table = bar.bar_tor(p, psi, D, S)
    return table.to_dict(), [table.render()]


def cmd_loop_check(a):
    n = a.max_degree if a.max_degree is not None else 6
    rep = bar.loop_collapse_check(a.p, n)
    lines = [f"bar totals {rep['bar_totals']}", f"H^*(K_{a.p - 1}) {rep['fiber_dims']}",
             "ok" if rep["ok"] else "MISMATCH"]
    return rep, lines


def cmd_search(a):
    p_max = a.max_degree if a.max_degree is not None else 7
    n = 2 if a.dim is None else a.dim
    target = [_form(t.strip(), None) for t in a.target.split(";") if t.strip()]
    found = operations.search_classes(p_max, target, n, monomials_only=a.monomials)
    lines = [f"H^{c.target_degree}: {c}" for c in found] or ["none"]
    return {"target": [str(t) for t in target], "classes": [str(c) for c in found]}, lines


def cmd_verify(a):
    results = checks.run_all(seed=a.seed)
    lines = []
    for r in results:
        lines.append(r.line())
        if r.number == 7:
            d = r.details
            lines.append(f"      subalgebra dims {d['milnor_dims']} vs {d['stiefel_whitney_dims']}; "
                         f"equal after square roots: {d['sqrt_equal']}")
        if r.number == 12:
            for row in r.details["parity"]:
                lines.append(f"      p-1 = {row['p_minus_one']}: witness dim {row['witness_dim']}, "
                             f"p-1 odd {row['p_minus_one_odd']}, agree {row['agrees']}")
    passed = sum(r.ok for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    payload = {"checks": [{"number": r.number, "name": r.name, "ok": r.ok,
                           "details": r.details} for r in results],
               "passed": passed, "total": len(results)}
    return payload, lines, passed == len(results)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--dim", type=int, default=None, help="dimension n of V")
    common.add_argument("--bar-degree", type=int, default=None)
    common.add_argument("--bar-columns", type=int, default=None)

    parser = argparse.ArgumentParser(prog="steenrod2",
                                     description="Mod-2 Steenrod algebra and quadratic-form computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("sq", cmd_sq, "Sq^k on a polynomial in degree-1 variables")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--poly", required=True)
    sp = add("milnor", cmd_milnor, "Milnor primitive Q_i on a polynomial")
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--poly", required=True)
    sp = add("adem", cmd_adem, "admissible form of a word")
    sp.add_argument("--word", required=True)
    sp = add("serre-basis", cmd_serre_basis, "Serre generators of H^*(K_n), or a basis of F(n)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--free", action="store_true", help="list the basis of F(n) instead")
    sp = add("eval-op", cmd_eval_op, "evaluate a class of H^*(K_2) on a quadratic form")
    sp.add_argument("--psi", required=True)
    sp.add_argument("--form", required=True)
    sp = add("kernel", cmd_kernel, "quadratic forms on which a class vanishes")
    sp.add_argument("--psi", required=True)
    sp = add("classify", cmd_classify, "rank, defect and Arf invariant of a form")
    sp.add_argument("--form", required=True)
    add("census", cmd_census, "GL_n(F2)-orbits of quadratic forms")
    add("dickson", cmd_dickson, "graded dimension of the Dickson algebra three ways")
    sp = add("subalgebra", cmd_subalgebra, "graded dimension of a subalgebra of F2[u, v, ...]")
    sp.add_argument("--gens", required=True, help="generators separated by ';'")
    add("m2", cmd_m2, "fiber product of D(2) and H_2")
    add("norm-check", cmd_norm_check, "kernel and homology of 1 + swap on F2[u, v]")
    sp = add("tv", cmd_tv, "dimension bookkeeping for T_V")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--psi", default=None)
    sp = add("tor", cmd_tor, "Tor over H^*(K_p) from the reduced bar complex")
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--psi", default=None, help="class of H^*(K_2); omit for the trivial module")
    sp = add("loop-check", cmd_loop_check, "bar totals for F2 over H^*(K_p) vs H^*(K_{p-1})")
    sp.add_argument("--p", type=int, required=True)
    sp = add("search", cmd_search, "classes whose kernel is the closure of given forms")
    sp.add_argument("--target", required=True, help="generating forms separated by ';'")
    sp.add_argument("--monomials", action="store_true")
    add("verify", cmd_verify, "run the full acceptance suite")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    status = 0
    try:
        result = args.fn(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (Steenrod2Error, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if len(result) == 3:
        payload, lines, ok = result
        status = 0 if ok else 1
    else:
        payload, lines = result
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": args.command, "result": payload},
                         sort_keys=True, default=str))
    else:
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
