"""Command-line front end: tables, stability reports, superspace checks,
and the exploratory comparisons for the open problems.

Exit codes: 0 ok, 1 comparison failure, 2 usage error, 3 inconclusive,
4 scale guard.  Experiments (`explore`) report findings and always exit 0
unless a scale guard trips; they never gate anything.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .cache import ENV_CACHE_DIR, cache_get, cache_key, cache_put
from .combinat import GradedPoly, Partition
from .errors import ScaleGuardError
from .formula import FixedCodim, FixedK, grfrob_tableaux
from .oracle import (
    decompose_coinvariants,
    decompose_super_coinvariants,
    grassmann_quotient,
)
from .serialize import (
    degree_table_to_json,
    envelope_bytes,
    expansion_to_json,
    make_envelope,
    payloads_equal,
    poly_to_json,
    schur_table_to_csv,
    superpoly_to_json,
)
from .stability import (
    VERDICT_FAIL,
    VERDICT_PASS,
    detect_onset,
    multiplicity_sequence,
)
from .superspace import (
    frobenius_of_closure,
    harmonic_closure,
    vandermonde_derivative_identity,
)
from .symfun import SchurExpansion, omega, q_reverse

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3
EXIT_GUARD = 4


def _parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "-", "0"):
        return Partition()
    return Partition(tuple(int(x) for x in text.split(",")))


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _emit_json(envelope: dict) -> None:
    print(json.dumps(envelope, sort_keys=True, indent=2))


def _cache_dir(args) -> str | None:
    return args.cache_dir or os.environ.get(ENV_CACHE_DIR)


# -- frobenius ----------------------------------------------------------


def _frobenius_payload(n: int, k: int, source: str, max_degree: int | None) -> dict:
    sources: dict[str, list] = {}
    if source in ("formula", "both"):
        sources["formula"] = degree_table_to_json(grfrob_tableaux(n, k).by_degree)
    if source in ("oracle", "both"):
        dec = decompose_coinvariants(n, k, max_degree=max_degree)
        sources["oracle"] = degree_table_to_json(dec.by_degree)
    diff: list[dict] = []
    if source == "both":
        f_entries = {(r["degree"], tuple(r["shape"])): r["coeff"] for r in sources["formula"]}
        o_entries = {(r["degree"], tuple(r["shape"])): r["coeff"] for r in sources["oracle"]}
        if max_degree is not None:
            f_entries = {key: c for key, c in f_entries.items() if key[0] <= max_degree}
        for key in sorted(set(f_entries) | set(o_entries)):
            fc = f_entries.get(key)
            oc = o_entries.get(key)
            if fc != oc:
                diff.append(
                    {
                        "degree": key[0],
                        "shape": list(key[1]),
                        "formula": fc,
                        "oracle": oc,
                    }
                )
    return {
        "kind": "frobenius_table",
        "n": n,
        "k": k,
        "max_degree": max_degree,
        "sources": sources,
        "diff": diff,
    }


def cmd_frobenius(args) -> int:
    n, k = args.n, args.k
    if not 1 <= k <= n:
        return _usage_error(f"need 1 <= k <= n, got n={n}, k={k}")
    params = {"n": n, "k": k, "source": args.source, "max_degree": args.max_degree}
    cache_dir = _cache_dir(args)
    key = cache_key("frobenius", params)
    envelope = None
    if cache_dir is not None:
        status, cached = cache_get(cache_dir, key)
        if status == "corrupt":
            print("warning: corrupt cache entry, recomputing", file=sys.stderr)
        elif status == "hit":
            if args.verify_cache:
                payload = _frobenius_payload(n, k, args.source, args.max_degree)
                fresh = make_envelope("frobenius", params, payload, args.source, __version__)
                if payloads_equal(cached, fresh):
                    envelope = cached
                else:
                    print("warning: cache entry does not match recomputation", file=sys.stderr)
                    envelope = fresh
                    cache_put(cache_dir, key, fresh)
            else:
                envelope = cached
    if envelope is None:
        payload = _frobenius_payload(n, k, args.source, args.max_degree)
        envelope = make_envelope("frobenius", params, payload, args.source, __version__)
        if cache_dir is not None:
            cache_put(cache_dir, key, envelope)
    if args.format == "json":
        _emit_json(envelope)
    else:
        for source_name, rows in sorted(envelope["payload"]["sources"].items()):
            if len(envelope["payload"]["sources"]) > 1:
                print(f"# source: {source_name}")
            print(schur_table_to_csv(rows), end="")
    if envelope["payload"]["diff"]:
        print("error: formula/oracle tables disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# -- stability ----------------------------------------------------------


def cmd_stability(args) -> int:
    mu = _parse_partition(args.mu)
    mode = FixedK(args.fixed_k) if args.fixed_k is not None else FixedCodim(args.fixed_codim)
    seq = multiplicity_sequence(mu, args.s, mode, args.n_max, source=args.source)
    report = detect_onset(seq)
    mode_json = {"fixed-k": mode.k} if isinstance(mode, FixedK) else {"fixed-codim": mode.m}
    payload = {
        "kind": "stability_report",
        "mu": list(mu.parts),
        "s": args.s,
        "mode": mode_json,
        "values": [list(v) for v in seq.values],
        "truncated_at": seq.truncated_at,
        "n_obs": report.n_obs,
        "n_bound": report.n_bound,
        "stable_value": report.stable_value,
        "verdict": report.verdict,
        "detail": report.detail,
    }
    params = {
        "mu": list(mu.parts),
        "s": args.s,
        "mode": mode_json,
        "n_max": args.n_max,
        "source": args.source,
    }
    _emit_json(make_envelope("stability", params, payload, args.source, __version__))
    if report.verdict == VERDICT_PASS:
        return EXIT_OK
    if report.verdict == VERDICT_FAIL:
        return EXIT_MISMATCH
    print(f"inconclusive: {report.detail}", file=sys.stderr)
    return EXIT_INCONCLUSIVE


# -- superspace ---------------------------------------------------------


def _hilbert_table(closure) -> list:
    rows = []
    for (alpha, beta), dim in closure.dims().items():
        rows.append({"x_degree": alpha[0], "theta_degree": beta[0], "dim": dim})
    return rows


def cmd_superspace(args) -> int:
    n, k = args.n, args.k
    params = {"n": n, "k": k}
    if args.check_identity:
        if not 0 <= k < n:
            return _usage_error(f"identity check needs 0 <= k < n, got n={n}, k={k}")
        result = vandermonde_derivative_identity(n, k)
        payload = {
            "kind": "identity_check",
            "n": n,
            "k": k,
            "equal": result.equal,
            "lhs": superpoly_to_json(result.lhs),
            "rhs": superpoly_to_json(result.rhs),
        }
        _emit_json(make_envelope("superspace", params | {"mode": "check-identity"},
                                 payload, "superspace", __version__))
        return EXIT_OK if result.equal else EXIT_MISMATCH
    if not 1 <= k <= n:
        return _usage_error(f"need 1 <= k <= n, got n={n}, k={k}")
    closure = harmonic_closure(n, 1, 1, k)
    if args.closure:
        payload = {
            "kind": "closure_hilbert",
            "n": n,
            "k": k,
            "entries": _hilbert_table(closure),
            "series": poly_to_json(closure.hilbert()),
        }
        _emit_json(make_envelope("superspace", params | {"mode": "closure"},
                                 payload, "superspace", __version__))
        return EXIT_OK
    tables = frobenius_of_closure(n, 1, 1, k, closure=closure)
    entries = []
    for (alpha, beta), exp in sorted(tables.items()):
        entries.append(
            {
                "x_degree": alpha[0],
                "theta_degree": beta[0],
                "expansion": expansion_to_json(exp),
            }
        )
    payload = {"kind": "closure_frobenius", "n": n, "k": k, "entries": entries}
    _emit_json(make_envelope("superspace", params | {"mode": "frobenius"},
                             payload, "superspace", __version__))
    return EXIT_OK


# -- explore ------------------------------------------------------------

TWIST_NAMES = ("identity", "omega", "q-reverse", "omega+q-reverse")


def _expansion_q_top(exp: SchurExpansion) -> int:
    return max((poly.q_degree() for _, poly in exp.items()), default=0)


def _twist_candidates(exp: SchurExpansion, top: int) -> dict[str, SchurExpansion]:
    return {
        "identity": exp,
        "omega": omega(exp),
        "q-reverse": q_reverse(exp, top),
        "omega+q-reverse": omega(q_reverse(exp, top)),
    }


def _closure_z_slice(n: int, k: int, tables) -> SchurExpansion:
    """q-graded expansion of the theta-degree n - k slice of the closure."""
    coeffs: dict[Partition, GradedPoly] = {}
    for (alpha, beta), exp in tables.items():
        if beta[0] != n - k:
            continue
        for lam, poly in exp.items():
            bump = poly * GradedPoly.term(1, q=alpha[0])
            coeffs[lam] = coeffs.get(lam, GradedPoly.zero()) + bump
    return SchurExpansion(n, coeffs)


def _explore_rw_twist(n: int) -> dict:
    per_k = []
    for k in range(1, n + 1):
        tables = frobenius_of_closure(n, 1, 1, k)
        v_slice = _closure_z_slice(n, k, tables)
        ring = grfrob_tableaux(n, k).as_q_expansion()
        top = max(_expansion_q_top(ring), _expansion_q_top(v_slice))
        matches = [name for name, cand in _twist_candidates(ring, top).items() if cand == v_slice]
        per_k.append(
            {
                "k": k,
                "v_slice": expansion_to_json(v_slice),
                "ring_side": expansion_to_json(ring),
                "q_top": top,
                "matching_transforms": matches,
            }
        )
    return {"kind": "experiment", "problem": "rw-twist", "n": n, "per_k": per_k}


def _explore_zabrocki_t0(n: int) -> dict:
    # bigraded table of the superspace coinvariant quotient
    top_x = n * (n - 1) // 2  # x-degrees are bounded by the coinvariant top degree
    r_entries = []
    quotient_by_theta: dict[int, SchurExpansion] = {}
    for b in range(n + 1):
        for a in range(top_x + 1):
            exp = decompose_super_coinvariants(n, 1, 1, (a,), (b,))
            if exp:
                r_entries.append(
                    {"x_degree": a, "theta_degree": b, "expansion": expansion_to_json(exp)}
                )
                graded = exp.scaled(GradedPoly.term(1, q=a))
                prev = quotient_by_theta.get(b, SchurExpansion(n))
                quotient_by_theta[b] = prev + graded
    # assembled theta-degree slices of the closure spaces
    v_entries = []
    agrees = True
    for k in range(1, n + 1):
        tables = frobenius_of_closure(n, 1, 1, k)
        v_slice = _closure_z_slice(n, k, tables)
        v_entries.append(
            {"k": k, "theta_degree": n - k, "expansion": expansion_to_json(v_slice)}
        )
        if quotient_by_theta.get(n - k, SchurExpansion(n)) != v_slice:
            agrees = False
    return {
        "kind": "experiment",
        "problem": "zabrocki-t0",
        "n": n,
        "quotient_table": r_entries,
        "closure_slices": v_entries,
        "agrees_at_this_size": agrees,
    }


def _explore_grassmann(d: int, n: int, k: int) -> dict:
    dec = grassmann_quotient(d, n, k)
    return {
        "kind": "experiment",
        "problem": "grassmann",
        "d": d,
        "n": n,
        "k": k,
        "dims": {str(deg): dim for deg, dim in sorted(dec.dims.items())},
        "table": degree_table_to_json(dec.by_degree),
    }


def cmd_explore(args) -> int:
    if args.problem == "rw-twist":
        payload = _explore_rw_twist(args.n)
        params = {"problem": "rw-twist", "n": args.n}
    elif args.problem == "zabrocki-t0":
        payload = _explore_zabrocki_t0(args.n)
        params = {"problem": "zabrocki-t0", "n": args.n}
    else:
        payload = _explore_grassmann(args.d, args.n, args.k)
        params = {"problem": "grassmann", "d": args.d, "n": args.n, "k": args.k}
    envelope = make_envelope("explore", params, payload, "experiment", __version__)
    fixtures = Path(args.fixtures_dir)
    fixtures.mkdir(parents=True, exist_ok=True)
    name = "-".join(f"{key}{value}" for key, value in sorted(params.items()))
    path = fixtures / f"{name}.json"
    path.write_bytes(envelope_bytes(envelope))
    _emit_json(envelope)
    print(f"fixture written to {path}", file=sys.stderr)
    return EXIT_OK


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spanrep",
        description="Graded symmetric-group decompositions of spanning-configuration"
        " cohomology, computed by closed formula and by brute-force oracle.",
    )
    parser.add_argument("--version", action="version", version=f"spanrep {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fro = sub.add_parser("frobenius", help="per-degree Schur tables for one (n, k)")
    fro.add_argument("n", type=int)
    fro.add_argument("k", type=int)
    fro.add_argument("--source", choices=("formula", "oracle", "both"), default="formula")
    fro.add_argument("--format", choices=("json", "csv"), default="json")
    fro.add_argument("--max-degree", type=int, default=None,
                     help="truncate the oracle at this degree")
    fro.add_argument("--cache-dir", default=None,
                     help=f"result cache directory (or ${ENV_CACHE_DIR})")
    fro.add_argument("--verify-cache", action="store_true",
                     help="recompute on hits and verify the cached payload")
    fro.set_defaults(func=cmd_frobenius)

    sta = sub.add_parser("stability", help="multiplicity sequence and onset report")
    sta.add_argument("mu", help="stable label, comma-separated parts ('-' for empty)")
    sta.add_argument("s", type=int, help="half cohomological degree")
    mode = sta.add_mutually_exclusive_group(required=True)
    mode.add_argument("--fixed-k", type=int, default=None)
    mode.add_argument("--fixed-codim", type=int, default=None)
    sta.add_argument("--n-max", type=int, required=True)
    sta.add_argument("--source", choices=("formula", "oracle"), default="formula")
    sta.set_defaults(func=cmd_stability)

    sup = sub.add_parser("superspace", help="superspace checks and closures")
    sup.add_argument("n", type=int)
    sup.add_argument("k", type=int)
    mode = sup.add_mutually_exclusive_group(required=True)
    mode.add_argument("--check-identity", action="store_true")
    mode.add_argument("--closure", action="store_true")
    mode.add_argument("--frobenius", action="store_true")
    sup.set_defaults(func=cmd_superspace)

    exp = sub.add_parser("explore", help="non-gating experiments for open comparisons")
    exp.add_argument("--problem", choices=("rw-twist", "zabrocki-t0", "grassmann"),
                     required=True)
    exp.add_argument("--n", type=int, default=2)
    exp.add_argument("--k", type=int, default=3)
    exp.add_argument("--d", type=int, default=2)
    exp.add_argument("--fixtures-dir", default="fixtures")
    exp.set_defaults(func=cmd_explore)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ScaleGuardError as exc:
        print(f"scale guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
