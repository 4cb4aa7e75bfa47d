"""JSON and CSV encodings of the library's result types.

The JSON schema is versioned and deterministic: partitions are arrays of
integers, graded polynomials are sorted lists of [[q, t, z], coefficient]
pairs with coefficients carried as decimal strings (they can exceed any
fixed-width integer), and envelopes serialize with sorted keys so equal
payloads are byte-identical.  Timestamps live only in provenance, which
comparisons ignore.
"""

from __future__ import annotations

import csv
import io
import json
from datetime import datetime, timezone
from fractions import Fraction

from .combinat import GradedPoly, Partition
from .superspace import SuperMonomial, SuperPoly
from .symfun import SchurExpansion

SCHEMA_VERSION = 1

__all__ = [
    "SCHEMA_VERSION",
    "degree_table_from_json",
    "degree_table_to_json",
    "envelope_bytes",
    "envelope_from_bytes",
    "expansion_from_json",
    "expansion_to_json",
    "make_envelope",
    "partition_from_json",
    "partition_to_json",
    "payloads_equal",
    "poly_from_json",
    "poly_to_json",
    "schur_table_to_csv",
    "superpoly_from_json",
    "superpoly_to_json",
]


def poly_to_json(poly: GradedPoly) -> list:
    return [[[qe, te, ze], str(c)] for (qe, te, ze), c in poly.items()]


def poly_from_json(data: list) -> GradedPoly:
    return GradedPoly({tuple(exps): int(c) for exps, c in data})


def partition_to_json(lam: Partition) -> list[int]:
    return list(lam.parts)


def partition_from_json(data: list) -> Partition:
    return Partition(tuple(int(x) for x in data))


def expansion_to_json(exp: SchurExpansion) -> dict:
    return {
        "n": exp.n,
        "terms": [
            {"shape": partition_to_json(lam), "coeff": poly_to_json(poly)}
            for lam, poly in exp.items()
        ],
    }


def expansion_from_json(data: dict) -> SchurExpansion:
    return SchurExpansion(
        int(data["n"]),
        {
            partition_from_json(term["shape"]): poly_from_json(term["coeff"])
            for term in data["terms"]
        },
    )


def degree_table_to_json(by_degree: dict[int, SchurExpansion]) -> list:
    """Flatten {degree: expansion} to sorted (degree, shape, coeff) rows."""
    rows = []
    for s in sorted(by_degree):
        for lam, poly in by_degree[s].items():
            rows.append(
                {"degree": s, "shape": partition_to_json(lam), "coeff": poly_to_json(poly)}
            )
    return rows


def degree_table_from_json(rows: list, n: int) -> dict[int, SchurExpansion]:
    acc: dict[int, dict[Partition, GradedPoly]] = {}
    for row in rows:
        s = int(row["degree"])
        acc.setdefault(s, {})[partition_from_json(row["shape"])] = poly_from_json(row["coeff"])
    return {s: SchurExpansion(n, coeffs) for s, coeffs in acc.items()}


def schur_table_to_csv(rows: list) -> str:
    """CSV flattening of a degree table: one row per (degree, shape)."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["degree", "shape", "coeff"])
    for row in rows:
        poly = poly_from_json(row["coeff"])
        shape = ",".join(str(x) for x in row["shape"])
        writer.writerow([row["degree"], shape, poly.as_str()])
    return buf.getvalue()


def superpoly_to_json(poly: SuperPoly) -> dict:
    terms = []
    for mono, c in poly.items():
        if c.denominator == 1:
            coeff = str(c.numerator)
        else:
            coeff = f"{c.numerator}/{c.denominator}"
        terms.append(
            [[list(b) for b in mono.xs], [list(b) for b in mono.thetas], coeff]
        )
    return {"n": poly.n, "m": poly.m, "p": poly.p, "terms": terms}


def superpoly_from_json(data: dict) -> SuperPoly:
    terms = {}
    for xs, thetas, coeff in data["terms"]:
        mono = SuperMonomial(
            tuple(tuple(int(e) for e in b) for b in xs),
            tuple(tuple(int(i) for i in b) for b in thetas),
        )
        terms[mono] = Fraction(coeff)
    return SuperPoly(int(data["n"]), int(data["m"]), int(data["p"]), terms)


def make_envelope(command: str, parameters: dict, payload: dict, source: str, version: str) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "payload": payload,
        "provenance": {
            "source": source,
            "library_version": version,
            "timestamp": datetime.now(timezone.utc).isoformat(),
        },
    }


def envelope_bytes(envelope: dict) -> bytes:
    return (json.dumps(envelope, sort_keys=True, separators=(",", ":")) + "\n").encode()


def envelope_from_bytes(raw: bytes) -> dict:
    env = json.loads(raw.decode())
    for field in ("schema_version", "command", "parameters", "payload", "provenance"):
        if field not in env:
            raise ValueError(f"envelope missing {field!r}")
    if env["schema_version"] != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {env['schema_version']!r}")
    return env


def payloads_equal(a: dict, b: dict) -> bool:
    """Envelope equivalence: same command, parameters, and payload.

    Provenance (in particular the timestamp) is deliberately excluded.
    """
    keys = ("schema_version", "command", "parameters", "payload")
    return all(a.get(k) == b.get(k) for k in keys)
