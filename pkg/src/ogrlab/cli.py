"""Batch command-line front end with machine-readable output.

Every subcommand prints one JSON document (or CSV/text where it makes
sense) and returns 0 on success, 1 on verification failure, 2 on bad input.
Output is deterministic for fixed flags and seed.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import ideal_gens, ogr1, orthopositroids, parity_duality, weyl
from .errors import InputError, OgrlabError
from .exact_core import fraction_str
from .forms_points import (
    QuadraticForm,
    Subspace,
    hodge_check,
    orthogonality_residual,
    sample_isotropic,
    sample_isotropic_component,
)
from fractions import Fraction


def _parse_form(spec: str, n: int) -> QuadraticForm:
    if spec == "standard":
        return QuadraticForm.standard(n)
    if spec == "alternating":
        return QuadraticForm.alternating(n)
    if spec == "hyperbolic":
        return QuadraticForm.hyperbolic(n)
    if spec.startswith("signed:"):
        flipped = _parse_ints(spec.split(":", 1)[1])
        return QuadraticForm.signed_subset(flipped, n)
    raise InputError(f"unknown form {spec!r}")


def _parse_ints(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_fractions(text: str) -> list[Fraction]:
    if not text:
        return []
    try:
        return [Fraction(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise InputError(f"expected comma-separated rationals, got {text!r}") from exc


def _emit(payload, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(payload, out, sort_keys=True, separators=(",", ":"))
        out.write("\n")
    elif fmt == "text":
        out.write(_as_text(payload))
    else:
        raise InputError(f"format {fmt!r} not supported for this command")


def _as_text(payload, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(payload, dict):
        return "".join(
            f"{pad}{key}:\n{_as_text(val, indent + 1)}"
            if isinstance(val, (dict, list))
            else f"{pad}{key}: {val}\n"
            for key, val in payload.items()
        )
    if isinstance(payload, list):
        return "".join(
            _as_text(item, indent) if isinstance(item, (dict, list))
            else f"{pad}- {item}\n"
            for item in payload
        )
    return f"{pad}{payload}\n"


def _poly_payload(poly) -> dict:
    return {"terms": poly.to_json(), "pretty": poly.pretty()}


# ---------------------------------------------------------------------------
# Subcommand handlers; each returns the process exit code
# ---------------------------------------------------------------------------

def _cmd_equations(args, out) -> int:
    form = _parse_form(args.form, args.n)
    plucker = ideal_gens.plucker_relations(args.k, args.n)
    orth = ideal_gens.orthogonality_relations(args.k, args.n, form)
    payload = {
        "k": args.k,
        "n": args.n,
        "form": form.label,
        "plucker_count": len(plucker),
        "orthogonality_count": len(orth),
        "plucker": [_poly_payload(q) for q in plucker],
        "orthogonality": [_poly_payload(q) for q in orth],
    }
    _emit(payload, args.format, out)
    return 0


def _cmd_straighten(args, out) -> int:
    records = []
    if args.family in ("mu", "both"):
        for I, J, poly in ideal_gens.all_straightening_mu(args.k, args.n):
            records.append({
                "family": "mu", "young": list(I), "young2": list(J),
                **_poly_payload(poly),
            })
    if args.family in ("lambda", "both"):
        for I, Jp, poly in ideal_gens.all_straightening_lambda(args.k, args.n):
            records.append({
                "family": "lambda", "young": list(I), "coyoung": list(Jp),
                **_poly_payload(poly),
            })
    _emit({"k": args.k, "n": args.n, "count": len(records), "laws": records},
          args.format, out)
    return 0


def _cmd_groebner_check(args, out) -> int:
    report = ideal_gens.groebner_degree2_check(args.k, args.n)
    _emit(report, args.format, out)
    return 0 if report["ok"] else 1


def _cmd_degree(args, out) -> int:
    _emit(weyl.degree_report(args.k, args.n), args.format, out)
    return 0


def _cmd_ogr1_cells(args, out) -> int:
    cs = ogr1.cells(args.n)
    index = {c: i for i, c in enumerate(cs)}
    payload = {
        "n": args.n,
        "count": len(cs),
        "f_vector": ogr1.face_vector(args.n),
        "cells": [c.to_json() for c in cs],
        "hasse": sorted(
            [index[a], index[b]] for a, b in ogr1.hasse_edges(args.n)
        ),
    }
    _emit(payload, args.format, out)
    return 0


def _cmd_ogr1_sample(args, out) -> int:
    cell = ogr1.make_cell(_parse_ints(args.A), _parse_ints(args.B), args.n)
    us = _parse_fractions(args.params)
    vs = _parse_fractions(args.params_b)
    point = ogr1.parametrize_cell(cell, args.n, us, vs)
    payload = {
        "cell": cell.to_json(),
        "point": point.to_json(),
        "quadric_residual": fraction_str(ogr1.quadric_residual(point)),
    }
    _emit(payload, args.format, out)
    return 0


def _cmd_ogr1_canonical(args, out) -> int:
    checks = [ogr1.residue_check(args.n, i, seed=args.seed + i)
              for i in range(2, args.n + 1)]
    pts = ogr1.interior_points(args.n, args.seed, 100)
    p = (args.n + 1) // 2
    positive = all(ogr1._coeff_from_chart(us, p) > 0 for us in pts)
    payload = {
        "n": args.n,
        "interior_positive": positive,
        "residues": [
            {"divisor": c["divisor"], "ok": c["ok"], "max_rel_err": c["max_rel_err"]}
            for c in checks
        ],
        "ok": positive and all(c["ok"] for c in checks),
    }
    _emit(payload, args.format, out)
    return 0 if payload["ok"] else 1


def _cmd_hodge_check(args, out) -> int:
    import random

    from .exact_core import rand_matrix

    rng = random.Random(args.seed)
    bad = 0
    for _ in range(args.count):
        V = Subspace(rand_matrix(rng, args.k, args.n))
        good, _ = hodge_check(V)
        bad += 0 if good else 1
    payload = {"k": args.k, "n": args.n, "count": args.count, "failures": bad,
               "ok": bad == 0}
    _emit(payload, args.format, out)
    return 0 if bad == 0 else 1


def _cmd_phi_map(args, out) -> int:
    q = sample_isotropic_component(args.k + 1, seed=args.seed,
                                   component="standard").plucker()
    p = parity_duality.phi_map(q)
    resid = orthogonality_residual(p, QuadraticForm.alternating(2 * args.k + 1))
    payload = {
        "k": args.k,
        "input": q.to_json(),
        "image": p.to_json(),
        "image_residual_zero": resid.is_zero(),
    }
    _emit(payload, args.format, out)
    return 0 if payload["image_residual_zero"] else 1


def _cmd_matchings_map(args, out) -> int:
    records = []
    for mt in parity_duality.all_matchings(2 * args.k + 2):
        word, plus = parity_duality.matching_to_permutation(mt, args.k)
        records.append({
            "matching": sorted([list(c) for c in mt]),
            "perm": list(word),
            "plus_fixed": sorted(plus),
        })
    records.sort(key=lambda r: r["matching"])
    _emit({"k": args.k, "count": len(records), "maps": records}, args.format, out)
    return 0


def _positroid_record(pos, dim=None) -> dict:
    rec = pos.to_json()
    rec["is_ortho"] = True
    if dim is not None:
        rec["dim"] = dim
    return rec


def _cmd_ortho_enumerate(args, out) -> int:
    cells = sorted(orthopositroids.enumerate_orthopositroids(args.k, args.n),
                   key=lambda p: p.sort_key())
    dims = {}
    histogram = None
    if args.dims:
        rep = orthopositroids.dims_report(args.k, args.n, tol=args.tol,
                                          cutoff=args.cutoff, seed=args.seed,
                                          starts=args.starts)
        dims = {r.positroid.sort_key(): r.dim for r in rep["results"]}
        histogram = rep["histogram"]
    records = [_positroid_record(p, dims.get(p.sort_key())) for p in cells]
    if args.format == "csv":
        out.write("perm;coloops;bases;is_ortho;dim\n")
        for rec in records:
            out.write(
                ",".join(map(str, rec["perm"])) + ";"
                + ",".join(map(str, rec["coloops"])) + ";"
                + "|".join("".join(map(str, b)) for b in rec["bases"]) + ";"
                + "true;" + str(rec.get("dim", "")) + "\n"
            )
        return 0
    payload = {"k": args.k, "n": args.n, "count": len(records), "records": records}
    if histogram is not None:
        payload["histogram"] = histogram
    _emit(payload, args.format, out)
    return 0


def _cmd_ortho_test(args, out) -> int:
    if args.bases:
        bases = frozenset(
            tuple(sorted(int(ch) for ch in token))
            for token in args.bases.replace(" ", "").split(",") if token
        )
        pos = orthopositroids.Positroid.from_bases(bases, args.k, args.n)
    elif args.perm:
        word = tuple(_parse_ints(args.perm))
        coloops = frozenset(_parse_ints(args.coloops or ""))
        dp = orthopositroids.DecoratedPermutation(word, coloops)
        pos = orthopositroids.Positroid.from_dperm(dp)
    else:
        raise InputError("provide --bases or --perm")
    report = orthopositroids.is_orthopositroid(pos)
    payload = {
        "positroid": pos.to_json(),
        "is_ortho": report.verdict,
        "failures": [
            {"I": list(I), "J": list(J), "A_plus": list(ap), "A_minus": list(am)}
            for I, J, ap, am in report.failures
        ],
    }
    _emit(payload, args.format, out)
    return 0


def _cmd_ortho_dims(args, out) -> int:
    rep = orthopositroids.dims_report(args.k, args.n, tol=args.tol,
                                      cutoff=args.cutoff, seed=args.seed,
                                      starts=args.starts)
    payload = {key: rep[key] for key in
               ("k", "n", "total", "resolved", "histogram", "failures")}
    payload["ok"] = rep["resolved"] == rep["total"]
    _emit(payload, args.format, out)
    return 0 if payload["ok"] else 1


def _cmd_sample(args, out) -> int:
    form = _parse_form(args.form, args.n)
    sub = sample_isotropic(args.k, args.n, form, args.seed, field=args.field)
    resid = orthogonality_residual(sub.plucker(), form)
    payload = {
        "k": args.k,
        "n": args.n,
        "form": form.label,
        "seed": args.seed,
        "basis": [[fraction_str(x) for x in sub.basis.row(i)]
                  for i in range(sub.k)],
        "plucker": sub.plucker().to_json(),
        "residual_zero": resid.is_zero(),
    }
    _emit(payload, args.format, out)
    return 0 if payload["residual_zero"] else 1


def _cmd_selftest(args, out) -> int:
    from . import acceptance

    results = acceptance.run_all(fast=args.fast, stream=out)
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ogrlab",
        description="Exact computation with positive orthogonal Grassmannians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, k=True, n=True, form=False, seed=False):
        if k:
            p.add_argument("--k", type=int, required=True)
        if n:
            p.add_argument("--n", type=int, required=True)
        if form:
            p.add_argument("--form", default="alternating")
        if seed:
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", default="json", choices=["json", "csv", "text"])

    p = sub.add_parser("equations", help="defining quadrics")
    common(p, form=True)
    p.set_defaults(func=_cmd_equations)

    p = sub.add_parser("straighten", help="straightening-law quadrics")
    common(p)
    p.add_argument("--family", default="both", choices=["mu", "lambda", "both"])
    p.set_defaults(func=_cmd_straighten)

    p = sub.add_parser("groebner-check", help="exact degree-2 verification")
    common(p)
    p.set_defaults(func=_cmd_groebner_check)

    for name in ("degree", "hilbert"):
        p = sub.add_parser(name, help="dimension, degree and Hilbert polynomial")
        common(p)
        p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("ogr1", help="line-case cell structure")
    og = p.add_subparsers(dest="subcommand", required=True)
    q = og.add_parser("cells")
    common(q, k=False)
    q.set_defaults(func=_cmd_ogr1_cells)
    q = og.add_parser("sample")
    common(q, k=False)
    q.add_argument("--A", required=True, help="odd support, comma separated")
    q.add_argument("--B", required=True, help="even support, comma separated")
    q.add_argument("--params", default="", help="rationals > 1 for the odd sphere")
    q.add_argument("--params-b", default="", help="rationals > 1 for the even sphere")
    q.set_defaults(func=_cmd_ogr1_sample)
    q = og.add_parser("canonical")
    common(q, k=False, seed=True)
    q.set_defaults(func=_cmd_ogr1_canonical)

    p = sub.add_parser("hodge-check", help="complement coordinates match complements")
    common(p, seed=True)
    p.add_argument("--count", type=int, default=100)
    p.set_defaults(func=_cmd_hodge_check)

    p = sub.add_parser("phi-map", help="restrict an even-case sample to the odd case")
    common(p, n=False, seed=True)
    p.set_defaults(func=_cmd_phi_map)

    p = sub.add_parser("matchings", help="matching combinatorics")
    mm = p.add_subparsers(dest="subcommand", required=True)
    q = mm.add_parser("map")
    common(q, n=False)
    q.set_defaults(func=_cmd_matchings_map)

    p = sub.add_parser("orthopositroids", help="enumeration and dimensions")
    oo = p.add_subparsers(dest="subcommand", required=True)
    q = oo.add_parser("enumerate")
    common(q, seed=True)
    q.add_argument("--dims", action="store_true")
    q.add_argument("--tol", type=float, default=1e-8)
    q.add_argument("--cutoff", type=float, default=1e-4)
    q.add_argument("--starts", type=int, default=32)
    q.set_defaults(func=_cmd_ortho_enumerate)
    q = oo.add_parser("test")
    common(q)
    q.add_argument("--bases", help="comma-separated index strings, e.g. 12,13,24,34")
    q.add_argument("--perm", help="one-line permutation, comma separated")
    q.add_argument("--coloops", help="minus-decorated fixed points")
    q.set_defaults(func=_cmd_ortho_test)
    q = oo.add_parser("dims")
    common(q, seed=True)
    q.add_argument("--tol", type=float, default=1e-8)
    q.add_argument("--cutoff", type=float, default=1e-4)
    q.add_argument("--starts", type=int, default=32)
    q.set_defaults(func=_cmd_ortho_dims)

    p = sub.add_parser("sample", help="exact random isotropic subspace")
    common(p, form=True, seed=True)
    p.add_argument("--field", default="rational", choices=["rational", "gaussian"])
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--fast", action="store_true",
                   help="skip the slow numeric-dimension criteria")
    p.add_argument("--format", default="text")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, sys.stdout)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except OgrlabError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
