"""Input document format and report serialization.

The normative on-disk format is JSON with a fixed key set:

.. code-block:: json

    {
      "label": "sl2_mod_normalizer",
      "p": 1,
      "root_datum": {
        "standard": {
          "type": "A", "rank": 1,
          "isogeny": "simply-connected",
          "central_torus_rank": 0
        }
      },
      "lattice": [[4]],
      "colors": [[2]]
    }

``root_datum`` is either ``standard`` as above or
``explicit: {rank, simple_roots, simple_coroots}``.  ``lattice`` lists
the r weight-basis generators as integer vectors of length d (character
lattice coordinates); ``colors`` lists the m color functionals as integer
vectors of length r (values on the weight basis).  Serialization always
emits keys sorted and two-space indentation, so documents round-trip
bit-exactly and diff cleanly.
"""

from __future__ import annotations

import json
from typing import Any

from .intmat import DimensionError, IntMatrix
from .lattices import FinGenAbQuotient
from .root_data import ADJOINT, SIMPLY_CONNECTED, RootDatum, build_standard
from .spherical import PiResult, Report, SphericalDatum

_TOP_KEYS = {"label", "p", "root_datum", "lattice", "colors"}
_STANDARD_KEYS = {"type", "rank", "isogeny", "central_torus_rank"}
_EXPLICIT_KEYS = {"rank", "simple_roots", "simple_coroots"}


class ParseError(ValueError):
    """Malformed input document; the message names the offending key."""


def _expect_object(value: Any, where: str) -> dict:
    if not isinstance(value, dict):
        raise ParseError(f"'{where}' must be an object")
    return value


def _expect_keys(obj: dict, allowed: set[str], required: set[str], where: str) -> None:
    for k in obj:
        if k not in allowed:
            raise ParseError(f"unknown key '{k}' in {where}")
    for k in required:
        if k not in obj:
            raise ParseError(f"missing required key '{k}' in {where}")


def _expect_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"'{where}' must be an integer")
    return value


def _expect_str(value: Any, where: str) -> str:
    if not isinstance(value, str):
        raise ParseError(f"'{where}' must be a string")
    return value


def _expect_vector(value: Any, where: str, length: int) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise ParseError(f"'{where}' must be a list of integers")
    if len(value) != length:
        raise ParseError(f"'{where}' has length {len(value)}, expected {length}")
    return tuple(_expect_int(x, f"{where}[{j}]") for j, x in enumerate(value))


def _expect_vector_list(value: Any, where: str, length: int) -> list[tuple[int, ...]]:
    if not isinstance(value, list):
        raise ParseError(f"'{where}' must be a list of integer vectors")
    return [_expect_vector(v, f"{where}[{i}]", length) for i, v in enumerate(value)]


def _parse_root_datum(raw: Any) -> RootDatum:
    obj = _expect_object(raw, "root_datum")
    if set(obj) == {"standard"}:
        std = _expect_object(obj["standard"], "root_datum.standard")
        _expect_keys(std, _STANDARD_KEYS, _STANDARD_KEYS, "'root_datum.standard'")
        series = _expect_str(std["type"], "root_datum.standard.type")
        rank = _expect_int(std["rank"], "root_datum.standard.rank")
        isogeny = _expect_str(std["isogeny"], "root_datum.standard.isogeny")
        if isogeny not in (SIMPLY_CONNECTED, ADJOINT):
            raise ParseError(
                f"'root_datum.standard.isogeny' must be '{SIMPLY_CONNECTED}' "
                f"or '{ADJOINT}', got '{isogeny}'"
            )
        ctr = _expect_int(
            std["central_torus_rank"], "root_datum.standard.central_torus_rank"
        )
        try:
            return build_standard(series, rank, isogeny, ctr)
        except (ValueError, DimensionError) as exc:
            raise ParseError(f"'root_datum.standard': {exc}") from exc
    if set(obj) == {"explicit"}:
        exp = _expect_object(obj["explicit"], "root_datum.explicit")
        _expect_keys(exp, _EXPLICIT_KEYS, _EXPLICIT_KEYS, "'root_datum.explicit'")
        rank = _expect_int(exp["rank"], "root_datum.explicit.rank")
        roots = _expect_vector_list(
            exp["simple_roots"], "root_datum.explicit.simple_roots", rank
        )
        coroots = _expect_vector_list(
            exp["simple_coroots"], "root_datum.explicit.simple_coroots", rank
        )
        try:
            return RootDatum(rank, tuple(roots), tuple(coroots), label="explicit")
        except (ValueError, DimensionError) as exc:
            raise ParseError(f"'root_datum.explicit': {exc}") from exc
    raise ParseError(
        "'root_datum' must contain exactly one of the keys 'standard' or 'explicit'"
    )


def parse(text: str) -> SphericalDatum:
    """Parse a document into a structurally validated datum."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"syntax error: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from exc
    obj = _expect_object(raw, "document")
    _expect_keys(obj, _TOP_KEYS, _TOP_KEYS, "the document")
    label = _expect_str(obj["label"], "label")
    p = _expect_int(obj["p"], "p")
    rd = _parse_root_datum(obj["root_datum"])
    generators = _expect_vector_list(obj["lattice"], "lattice", rd.rank)
    r = len(generators)
    color_rows = _expect_vector_list(obj["colors"], "colors", r)
    embedding = IntMatrix.from_cols([list(g) for g in generators], rows=rd.rank)
    colors = IntMatrix.from_rows([list(c) for c in color_rows], cols=r)
    try:
        return SphericalDatum(rd, embedding, colors, p, label=label)
    except (ValueError, DimensionError, TypeError) as exc:
        raise ParseError(str(exc)) from exc


def document_dict(sd: SphericalDatum) -> dict:
    """Document form of a datum; the root datum is always written explicitly."""
    rd = sd.root_datum
    return {
        "label": sd.label,
        "p": sd.char_exponent,
        "root_datum": {
            "explicit": {
                "rank": rd.rank,
                "simple_roots": [list(v) for v in rd.simple_roots],
                "simple_coroots": [list(v) for v in rd.simple_coroots],
            }
        },
        "lattice": [list(sd.lattice_embedding.column(j)) for j in range(sd.rank)],
        "colors": [list(row) for row in sd.colors.entries],
    }


def dumps_document(doc: dict) -> str:
    """Canonical text of a document dict: sorted keys, two-space indent."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def serialize_datum(sd: SphericalDatum) -> str:
    return dumps_document(document_dict(sd))


def format_quotient(q: FinGenAbQuotient | None) -> str:
    if q is None:
        return "<not computed>"
    parts = []
    if q.divisible_rank == 1:
        parts.append("(Q/Z)")
    elif q.divisible_rank > 1:
        parts.append(f"(Q/Z)^{q.divisible_rank}")
    parts.extend(f"Z/{d}" for d in q.invariant_factors)
    return " x ".join(parts) if parts else "1"


def format_pi(pi: PiResult | None) -> str:
    if pi is None:
        return "<not computed>"
    parts = []
    if pi.zhat_rank == 1:
        parts.append("Zhat_{p'}")
    elif pi.zhat_rank > 1:
        parts.append(f"Zhat_{{p'}}^{pi.zhat_rank}")
    parts.extend(f"Z/{d}" for d in pi.invariant_factors)
    return " x ".join(parts) if parts else "1"


def _quotient_dict(q: FinGenAbQuotient | None) -> dict | None:
    if q is None:
        return None
    return {
        "divisible_rank": q.divisible_rank,
        "invariant_factors": list(q.invariant_factors),
    }


def _pi_dict(pi: PiResult | None) -> dict | None:
    if pi is None:
        return None
    return {
        "zhat_rank": pi.zhat_rank,
        "invariant_factors": list(pi.invariant_factors),
        "p": pi.p,
    }


def report_dict(report: Report) -> dict:
    return {
        "label": report.datum.label,
        "p": report.datum.char_exponent,
        "input": document_dict(report.datum),
        "saturation_quotient": _quotient_dict(report.saturation_quotient),
        "ambient_saturation_quotient": _quotient_dict(
            report.ambient_saturation_quotient
        ),
        "pi0": _pi_dict(report.pi0),
        "pi1": _pi_dict(report.pi1),
        "validation": [
            {"check": o.check, "level": o.level, "message": o.message}
            for o in report.validation
        ],
    }


def serialize_report(report: Report, format: str = "text") -> str:
    """Render a report; ``text`` for humans, ``structured`` for machines.

    Structured output is canonical JSON with all invariant factors as
    integer lists and no timestamps, so it is safe to diff and to pin in
    golden files.
    """
    if format == "structured":
        return json.dumps(report_dict(report), indent=2, sort_keys=True) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    p = report.datum.char_exponent
    lines = [
        f"label: {report.datum.label}",
        f"characteristic exponent: {p}",
        "validation:",
    ]
    for o in report.validation:
        lines.append(f"  [{o.level}] {o.check}: {o.message}")
    lines.append(f"saturation quotient: {format_quotient(report.saturation_quotient)}")
    lines.append(
        "ambient saturation quotient: "
        f"{format_quotient(report.ambient_saturation_quotient)}"
    )
    lines.append(f"pi0 p'-part: {format_pi(report.pi0)}")
    lines.append(f"pi1 p'-part: {format_pi(report.pi1)}")
    if p > 1:
        lines.append(
            "note: only prime-to-p parts are computed; "
            "the p-parts of pi0 and pi1 are not determined"
        )
    return "\n".join(lines) + "\n"
