"""Reading and writing states, witnesses, reports, and certificates.

Documents are JSON with a canonical layout: object keys sorted, floats
written with 17 significant digits so every double round-trips exactly.
That makes outputs byte-stable, which the determinism contract (same
seed, any worker count) relies on.

State documents:     {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}
Witness documents add kind, e_w, hs_sq, sup_norm, neg_count, normalized.
Certificates embed a full state document under "state".
"""

from __future__ import annotations

import json
import math

import numpy as np

from .bounds import BoundReport, CounterexampleCertificate
from .errors import FileFormatError
from .linalg import BipartiteDims
from .states import BipartiteDensityMatrix, validate
from .witnesses import EntanglementWitness


def format_float(x: float) -> str:
    """Decimal text for a double with full round-trip precision."""
    if not math.isfinite(x):
        raise FileFormatError(f"cannot serialize non-finite float {x!r}")
    return f"{float(x):.17g}"


def dumps(obj) -> str:
    """Serialize to canonical JSON (sorted keys, 17-digit floats)."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj))
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in sorted(obj.items()))
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise FileFormatError(f"cannot serialize object of type {type(obj).__name__}")


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise FileFormatError(f"expected a JSON object, got {type(doc).__name__}")
    return doc


def load_document(path) -> dict:
    with open(path, "r") as fh:
        return loads(fh.read())


def matrix_to_lists(M: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(M, dtype=complex)]


def matrix_from_lists(rows, side: int | None = None) -> np.ndarray:
    if not isinstance(rows, list) or not rows:
        raise FileFormatError("matrix must be a non-empty list of rows")
    n = len(rows)
    if side is not None and n != side:
        raise FileFormatError(f"matrix has {n} rows, expected {side}")
    out = np.empty((n, n), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise FileFormatError(f"matrix row {i} has {got} entries, expected {n}")
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(v, (int, float)) for v in entry)
            ):
                raise FileFormatError(f"matrix entry [{i}][{j}] must be [re, im], got {entry!r}")
            out[i, j] = complex(entry[0], entry[1])
    return out


def _parse_dims(doc: dict) -> BipartiteDims:
    dims = doc.get("dims")
    if (
        not isinstance(dims, list)
        or len(dims) != 2
        or not all(isinstance(d, int) for d in dims)
    ):
        raise FileFormatError(f"field 'dims' must be [dA, dB] with integers, got {dims!r}")
    return BipartiteDims(dims[0], dims[1])


def state_to_dict(state: BipartiteDensityMatrix) -> dict:
    doc = {
        "dims": [state.dims.dA, state.dims.dB],
        "matrix": matrix_to_lists(state.matrix),
    }
    if state.label is not None:
        doc["label"] = state.label
    if state.seed_provenance is not None:
        doc["seed_provenance"] = [int(v) for v in state.seed_provenance]
    return doc


def state_from_dict(doc: dict, tol: float = 1e-9) -> BipartiteDensityMatrix:
    dims = _parse_dims(doc)
    if "matrix" not in doc:
        raise FileFormatError("state document is missing the 'matrix' field")
    M = matrix_from_lists(doc["matrix"], side=dims.total)
    prov = doc.get("seed_provenance")
    return validate(
        M,
        dims,
        tol=tol,
        label=doc.get("label"),
        seed_provenance=tuple(prov) if prov is not None else None,
    )


def witness_to_dict(W: EntanglementWitness) -> dict:
    return {
        "dims": [W.dims.dA, W.dims.dB],
        "matrix": matrix_to_lists(W.matrix),
        "kind": W.kind,
        "e_w": W.e_w,
        "hs_sq": W.hs_sq,
        "sup_norm": W.sup_norm,
        "neg_count": W.neg_count,
        "normalized": W.normalized,
    }


def witness_from_dict(doc: dict) -> EntanglementWitness:
    dims = _parse_dims(doc)
    if "matrix" not in doc:
        raise FileFormatError("witness document is missing the 'matrix' field")
    M = matrix_from_lists(doc["matrix"], side=dims.total)
    for key in ("kind", "e_w", "hs_sq", "sup_norm"):
        if key not in doc:
            raise FileFormatError(f"witness document is missing the '{key}' field")
    neg = doc.get("neg_count")
    return EntanglementWitness(
        matrix=M,
        dims=dims,
        kind=str(doc["kind"]),
        e_w=float(doc["e_w"]),
        hs_sq=float(doc["hs_sq"]),
        sup_norm=float(doc["sup_norm"]),
        neg_count=int(neg) if neg is not None else None,
        normalized=bool(doc.get("normalized", False)),
    )


def report_to_dict(report: BoundReport) -> dict:
    return {
        "bound_id": report.bound_id,
        "dims": str(report.dims),
        "seed": report.seed,
        "index": report.index,
        "label": report.label,
        "quantities": {k: float(v) for k, v in report.quantities.items()},
        "lhs": report.lhs,
        "rhs": report.rhs,
        "margin": report.margin,
        "satisfied": report.satisfied,
        "vacuous": report.vacuous,
        "notes": report.notes,
    }


def certificate_to_dict(cert: CounterexampleCertificate) -> dict:
    return {
        "bound_id": cert.bound_id,
        "state": state_to_dict(cert.state),
        "witness_matrix": (
            matrix_to_lists(cert.witness_matrix) if cert.witness_matrix is not None else None
        ),
        "quantities": {k: float(v) for k, v in cert.quantities.items()},
        "lhs": cert.lhs,
        "rhs": cert.rhs,
        "margin": cert.margin,
        "recipe": dict(cert.recipe),
    }


def certificate_from_dict(doc: dict) -> CounterexampleCertificate:
    for key in ("bound_id", "state", "quantities", "lhs", "rhs", "margin", "recipe"):
        if key not in doc:
            raise FileFormatError(f"certificate document is missing the '{key}' field")
    state = state_from_dict(doc["state"])
    wm = doc.get("witness_matrix")
    return CounterexampleCertificate(
        bound_id=str(doc["bound_id"]),
        state=state,
        witness_matrix=matrix_from_lists(wm) if wm is not None else None,
        quantities={str(k): float(v) for k, v in doc["quantities"].items()},
        lhs=float(doc["lhs"]),
        rhs=float(doc["rhs"]),
        margin=float(doc["margin"]),
        recipe=dict(doc["recipe"]),
    )


def write_state(path, state: BipartiteDensityMatrix) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(dumps(state_to_dict(state)) + "\n")


def read_state(path) -> BipartiteDensityMatrix:
    return state_from_dict(load_document(path))


def write_witness(path, W: EntanglementWitness) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(dumps(witness_to_dict(W)) + "\n")


def read_witness(path) -> EntanglementWitness:
    return witness_from_dict(load_document(path))


def write_certificate(path, cert: CounterexampleCertificate) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(dumps(certificate_to_dict(cert)) + "\n")


def read_certificate(path) -> CounterexampleCertificate:
    return certificate_from_dict(load_document(path))


def write_records(stream, docs) -> None:
    """One canonical JSON document per line."""
    for doc in docs:
        stream.write(dumps(doc) + "\n")


_TABLE_CORE = (
    "bound_id",
    "dims",
    "seed",
    "index",
    "label",
    "lhs",
    "rhs",
    "margin",
    "satisfied",
    "vacuous",
    "notes",
)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    return str(value)


def write_table(stream, docs) -> None:
    """Flat CSV with a header row; quantities become q_<name> columns."""
    import csv

    docs = list(docs)
    qkeys = sorted({k for d in docs for k in d.get("quantities", {})})
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(list(_TABLE_CORE) + [f"q_{k}" for k in qkeys])
    for d in docs:
        row = [_cell(d.get(k)) for k in _TABLE_CORE]
        q = d.get("quantities", {})
        row += [_cell(q.get(k)) for k in qkeys]
        writer.writerow(row)
