"""JSON file formats: algebra files, report files and witness files.

Rationals are always strings (``"p/q"`` or ``"p"``). Keys are written in a
fixed order so identical inputs give byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from . import __version__
from .algebra import Algebra, AlgebraError
from .cohomology import AmenabilityReport
from .exactla import format_rational, parse_rational
from .logic import verdict_str


class FileFormatError(ValueError):
    pass


def _fmt_vec(v) -> list[str]:
    return [format_rational(x) for x in v]


def _parse_vec(v, n: int, what: str) -> tuple:
    if not isinstance(v, list) or len(v) != n:
        raise FileFormatError(f"{what} must be a list of {n} rationals")
    try:
        return tuple(parse_rational(x) for x in v)
    except (ValueError, ZeroDivisionError) as exc:
        raise FileFormatError(f"{what}: {exc}") from None


def algebra_to_dict(a: Algebra) -> dict:
    d: dict[str, Any] = {
        "label": a.label,
        "field": "Q",
        "dim": a.dim,
        "table": [[_fmt_vec(a.table[i][j]) for j in range(a.dim)] for i in range(a.dim)],
    }
    if a.unit is not None:
        d["unit"] = _fmt_vec(a.unit)
    if a.declared_characters is not None:
        d["characters"] = {
            "values": [_fmt_vec(c) for c in a.declared_characters],
            "complete": a.characters_complete,
        }
    return d


def algebra_from_dict(d: dict) -> Algebra:
    if not isinstance(d, dict):
        raise FileFormatError("algebra must be a JSON object")
    if d.get("field", "Q") != "Q":
        raise FileFormatError(f"unsupported field {d.get('field')!r}; only 'Q' is supported")
    try:
        n = d["dim"]
        raw = d["table"]
    except KeyError as exc:
        raise FileFormatError(f"missing key {exc}") from None
    if not isinstance(n, int) or n < 0:
        raise FileFormatError("dim must be a non-negative integer")
    if not isinstance(raw, list) or len(raw) != n:
        raise FileFormatError(f"table must have {n} rows")
    table = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != n:
            raise FileFormatError(f"table row {i} must have {n} entries")
        table.append([_parse_vec(row[j], n, f"table[{i}][{j}]") for j in range(n)])
    unit = _parse_vec(d["unit"], n, "unit") if d.get("unit") is not None else None
    chars, complete = None, False
    if d.get("characters") is not None:
        c = d["characters"]
        if not isinstance(c, dict) or not isinstance(c.get("values", []), list):
            raise FileFormatError("characters must be an object with a 'values' list")
        chars = tuple(_parse_vec(v, n, f"characters.values[{k}]") for k, v in enumerate(c.get("values", [])))
        complete = bool(c.get("complete", False))
    try:
        return Algebra(table, unit=unit, label=str(d.get("label", "")),
                       declared_characters=chars, characters_complete=complete)
    except AlgebraError as exc:
        raise FileFormatError(str(exc)) from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def load_json(path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: invalid JSON ({exc})") from None


def load_algebra(path) -> Algebra:
    return algebra_from_dict(load_json(path))


def save_algebra(a: Algebra, path) -> None:
    Path(path).write_text(dumps(algebra_to_dict(a)), encoding="utf-8")


def digest(a: Algebra) -> str:
    body = dumps(algebra_to_dict(a)).encode("utf-8")
    return "sha256:" + hashlib.sha256(body).hexdigest()


_DIM_FIELDS = (
    "dim", "derivation_dim", "inner_dim", "cyclic_dim", "quasi_additive_dim",
    "inner_qa_dim", "cyclic_qa_dim", "zero_point_derivation_dim", "square_dim", "radical_dim",
)
_VERDICT_FIELDS = (
    "weakly_amenable", "cyclically_amenable", "cyclically_weakly_amenable",
    "point_amenable", "zero_point_amenable", "essential", "semisimple", "commutative", "unital",
)


def report_to_dict(r: AmenabilityReport, a: Algebra | None = None) -> dict:
    d: dict[str, Any] = {"tool": "amenability", "version": __version__}
    d["input_digest"] = digest(a) if a is not None else None
    d["label"] = r.label
    d["field"] = r.ground_field
    for k in _DIM_FIELDS:
        d[k] = getattr(r, k)
    d["characters"] = [_fmt_vec(c) for c in r.characters]
    d["point_derivation_dims"] = list(r.point_derivation_dims)
    d["character_set_complete"] = r.character_set_complete
    for k in _VERDICT_FIELDS:
        d[k] = verdict_str(getattr(r, k))
    d["qa_consistent"] = r.qa_consistent
    d["findings"] = list(r.findings)
    return d


def _parse_verdict(s: str):
    return {"true": True, "false": False, "conditional": None}[s]


def report_from_dict(d: dict) -> AmenabilityReport:
    n = d["dim"]
    kwargs: dict[str, Any] = {"label": d["label"], "ground_field": d["field"]}
    for k in _DIM_FIELDS:
        kwargs[k] = d[k]
    kwargs["characters"] = tuple(_parse_vec(c, n, "character") for c in d["characters"])
    kwargs["point_derivation_dims"] = tuple(d["point_derivation_dims"])
    kwargs["character_set_complete"] = d["character_set_complete"]
    for k in _VERDICT_FIELDS:
        kwargs[k] = _parse_verdict(d[k])
    kwargs["qa_consistent"] = d["qa_consistent"]
    kwargs["findings"] = tuple(d["findings"])
    return AmenabilityReport(**kwargs)
