"""Dataset and weight files.

Two dataset formats are accepted:

``json``
    An object with ``universe`` (list of identifiers), ``parameters`` (list of
    labels or ``{"label": ..., "negation": ...}`` objects), optional
    ``domain`` and the ``positive``/``negative`` membership lists keyed by
    parameter label (negative keys may use negation labels).

``csv``
    A tri-valued table: header ``object,<label>,...`` and one row per object
    with entries in {-1, 0, 1}. A header cell ``label|negation`` names the
    negation explicitly, otherwise it defaults to ``not_<label>``. A leading
    ``# parameters: a|not_a;b|not_b`` comment declares a parameter space
    wider than the table columns. Other ``#`` lines are ignored.

Weights are JSON (``{"e1": 0.9, ...}``) or two-column CSV ``label,weight``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

from .core import BipolarSoftSet, Parameter, ParameterSpace, new_bipolar_soft_set
from .errors import BadEntry, BipolarSoftError, ParseError, WeightOutOfRange
from .tabular import TriTable, from_tri_table, to_tri_table

__all__ = ["load_dataset", "save_dataset", "dumps_dataset", "loads_dataset", "load_weights", "detect_format"]

SPACE_DIRECTIVE = "# parameters:"


def detect_format(path, text: str | None = None) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "json"
    if suffix in (".csv", ".tsv", ".txt"):
        return "csv"
    if text is not None and text.lstrip().startswith("{"):
        return "json"
    return "csv"


def load_dataset(path) -> BipolarSoftSet:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise BipolarSoftError(f"cannot read {path}: {exc.strerror}") from exc
    return loads_dataset(text, detect_format(path, text), delimiter="\t" if path.suffix == ".tsv" else ",")


def loads_dataset(text: str, fmt: str = "json", delimiter: str = ",") -> BipolarSoftSet:
    if fmt == "json":
        return _parse_json(text)
    if fmt == "csv":
        return _parse_csv(text, delimiter)
    raise ValueError(f"unknown dataset format {fmt!r}")


def save_dataset(bss: BipolarSoftSet, path, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or detect_format(path)
    try:
        path.write_text(dumps_dataset(bss, fmt), encoding="utf-8")
    except OSError as exc:
        raise BipolarSoftError(f"cannot write {path}: {exc.strerror}") from exc


def dumps_dataset(bss: BipolarSoftSet, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(_to_json(bss), indent=2) + "\n"
    if fmt == "csv":
        return _to_csv(bss)
    raise ValueError(f"unknown dataset format {fmt!r}")


# json -----------------------------------------------------------------------


def _param_json(p: Parameter):
    if p.negation_label == f"not_{p.positive_label}":
        return p.positive_label
    return {"label": p.positive_label, "negation": p.negation_label}


def _to_json(bss: BipolarSoftSet) -> dict:
    u = bss.universe
    return {
        "universe": list(u.elements),
        "parameters": [_param_json(p) for p in bss.space],
        "domain": [e.positive_label for e in bss.domain],
        "positive": {e.positive_label: list(u.members(f)) for e, f, _ in bss.masks()},
        "negative": {e.positive_label: list(u.members(g)) for e, _, g in bss.masks()},
    }


def _parse_param(item, i: int) -> Parameter:
    if isinstance(item, str):
        return Parameter(item)
    if isinstance(item, dict) and isinstance(item.get("label"), str):
        neg = item.get("negation")
        if neg is not None and not isinstance(neg, str):
            raise ParseError("negation label must be a string", field=f"parameters[{i}]")
        return Parameter(item["label"], neg)
    raise ParseError("parameter must be a label or {label, negation}", field=f"parameters[{i}]")


def _parse_json(text: str) -> BipolarSoftSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from exc
    if not isinstance(doc, dict):
        raise ParseError("dataset must be a JSON object")
    for key in ("universe", "parameters"):
        if not isinstance(doc.get(key), list):
            raise ParseError("missing or non-list entry", field=key)
    for key in ("positive", "negative"):
        if not isinstance(doc.get(key, {}), dict):
            raise ParseError("membership lists must be an object", field=key)
        for label, members in doc.get(key, {}).items():
            if not isinstance(members, list) or not all(isinstance(m, str) for m in members):
                raise ParseError("membership must be a list of identifiers", field=f"{key}.{label}")
    try:
        params = [_parse_param(p, i) for i, p in enumerate(doc["parameters"])]
    except ValueError as exc:
        raise ParseError(str(exc), field="parameters") from exc
    domain = doc.get("domain")
    if domain is not None and not isinstance(domain, list):
        raise ParseError("domain must be a list of labels", field="domain")
    return new_bipolar_soft_set(
        [str(x) for x in doc["universe"]],
        ParameterSpace(params),
        domain,
        doc.get("positive", {}),
        doc.get("negative", {}),
    )


# csv ------------------------------------------------------------------------


def _header_cell(p: Parameter) -> str:
    if p.negation_label == f"not_{p.positive_label}":
        return p.positive_label
    return f"{p.positive_label}|{p.negation_label}"


def _parse_header_cell(cell: str) -> Parameter:
    label, sep, neg = cell.strip().partition("|")
    return Parameter(label.strip(), neg.strip() if sep else None)


def _to_csv(bss: BipolarSoftSet) -> str:
    buf = io.StringIO()
    if bss.domain != bss.space.parameters:
        buf.write(SPACE_DIRECTIVE + " " + ";".join(_header_cell(p) for p in bss.space) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    tri = to_tri_table(bss)
    w.writerow(["object", *(_header_cell(e) for e in bss.domain)])
    for label, row in zip(tri.row_labels, tri.entries.tolist()):
        w.writerow([label, *row])
    return buf.getvalue()


def _parse_csv(text: str, delimiter: str = ",") -> BipolarSoftSet:
    space = None
    body = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped.startswith(SPACE_DIRECTIVE):
            cells = [c for c in stripped[len(SPACE_DIRECTIVE):].split(";") if c.strip()]
            try:
                space = ParameterSpace(_parse_header_cell(c) for c in cells)
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno) from exc
        elif stripped.startswith("#") or not stripped:
            continue
        else:
            body.append((lineno, line))
    if not body:
        raise ParseError("table has no header row")
    rows = list(csv.reader([line for _, line in body], delimiter=delimiter))
    header = rows[0]
    try:
        columns = [_parse_header_cell(c) for c in header[1:]]
    except ValueError as exc:
        raise ParseError(str(exc), line=body[0][0]) from exc
    if space is None:
        space = ParameterSpace(columns)
    else:
        for c in columns:
            if space.resolve(c.positive_label) != c:
                raise ParseError(f"column {c.positive_label!r} disagrees with declared parameters", line=body[0][0])
    labels, entries = [], []
    for (lineno, _), row in zip(body[1:], rows[1:]):
        if len(row) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(row)}", line=lineno)
        labels.append(row[0].strip())
        values = []
        for label, cell in zip(header[1:], row[1:]):
            try:
                v = int(cell.strip())
            except ValueError:
                raise BadEntry(cell, line=lineno, field=label.strip()) from None
            if v not in (-1, 0, 1):
                raise BadEntry(v, line=lineno, field=label.strip())
            values.append(v)
        entries.append(values)
    tri = TriTable(labels, [c.positive_label for c in columns], entries)
    return from_tri_table(tri, space)


# weights --------------------------------------------------------------------


def load_weights(path) -> dict[str, float]:
    """Read a label -> weight mapping; every weight must lie in [0, 1]."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise BipolarSoftError(f"cannot read {path}: {exc.strerror}") from exc
    if detect_format(path, text) == "json":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, line=exc.lineno) from exc
        if not isinstance(raw, dict):
            raise ParseError("weights file must be a JSON object")
        items = list(raw.items())
    else:
        items = []
        for lineno, row in enumerate(csv.reader(text.splitlines()), 1):
            if not row or row[0].lstrip().startswith("#"):
                continue
            if len(row) != 2:
                raise ParseError("expected label,weight", line=lineno)
            if lineno == 1 and row[1].strip().lower() == "weight":
                continue
            items.append((row[0].strip(), row[1].strip()))
    weights = {}
    for label, value in items:
        try:
            w = float(value)
        except (TypeError, ValueError):
            raise ParseError(f"weight {value!r} is not a number", field=label) from None
        if math.isnan(w) or not 0.0 <= w <= 1.0:
            raise WeightOutOfRange(f"weight {w} for {label!r} is outside [0, 1]")
        weights[label] = w
    return weights
