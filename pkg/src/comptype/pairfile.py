"""The ``.scx`` pair format and the JSON report."""

from __future__ import annotations

import json
from typing import Iterable

from .complex import (EMPTY_COMPLEX, Complex, ComplexError, Marker, Pair, closure, make_simplex,
                      simplex_key)
from .decider import LinkReport, Truth, Verdict


class PairFileError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def parse_pair_file(text: str) -> Pair:
    """Parse ``X``/``A`` facet lines; ``#`` starts a comment line."""
    xs, as_ = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        col = len(raw) - len(raw.lstrip()) + 1
        tag, *tokens = stripped.split()
        if tag not in ("X", "A"):
            raise PairFileError(f"expected 'X' or 'A', found {tag!r}", lineno, col)
        if not tokens:
            raise PairFileError(f"{tag} line without vertices", lineno, col)
        try:
            s = make_simplex(tokens)
        except ComplexError as exc:
            raise PairFileError(str(exc), lineno, col) from None
        (xs if tag == "X" else as_).append((s, lineno))
    if not xs:
        raise PairFileError("no X line")
    X = closure(s for s, _ in xs)
    for s, lineno in as_:
        if s not in X:
            raise PairFileError(f"A facet {' '.join(s)} is not a simplex of X", lineno, 1)
    A = closure(s for s, _ in as_) if as_ else EMPTY_COMPLEX
    return Pair(X, A)


def format_pair_file(pair: Pair, header: Iterable[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines += ["X " + " ".join(f) for f in pair.X.facets]
    lines += ["A " + " ".join(f) for f in pair.A.facets]
    return "\n".join(lines) + "\n"


VERDICT_WORD = {Truth.TRUE: "YES", Truth.FALSE: "NO", Truth.UNKNOWN: "UNKNOWN"}


def _facets_json(facets) -> list[list[str]]:
    return [list(f) for f in sorted(facets, key=simplex_key)]


def _n_json(N) -> object:
    if N is Marker.EMPTY:
        return "empty"
    if N is Marker.TIP:
        return "tip"
    return _facets_json(N.facets)


def link_entry(r: LinkReport) -> dict:
    v = r.verdict
    entry = {
        "vertex": r.vertex,
        "fragment": str(v.fragment) if v.fragment else None,
        "verdict": v.value.value,
        "route": v.route,
        "failing_facets": _facets_json(v.failing_facets),
        "link_facets": _facets_json(r.link.L.facets),
        "N": _n_json(r.link.N),
    }
    if v.witness_modulus is not None:
        entry["witness_modulus"] = v.witness_modulus
    return entry


def build_report(pair: Pair, verdict: Verdict, reports: Iterable[LinkReport]) -> dict:
    return {
        "verdict": VERDICT_WORD[verdict.value],
        "links": [link_entry(r) for r in reports],
        "stats": {"vertices": len(pair.X.vertices), "facets": len(pair.X.facets),
                  "dim": pair.X.dim, "A_facets": len(pair.A.facets)},
    }


def cone_report(L: Complex, N, verdict: Verdict) -> dict:
    out = {
        "surjection": verdict.value.value,
        "fragment": str(verdict.fragment) if verdict.fragment else None,
        "route": verdict.route,
        "failing_facets": _facets_json(verdict.failing_facets),
        "stats": {"vertices": len(L.vertices), "facets": len(L.facets), "dim": L.dim},
    }
    if verdict.witness_modulus is not None:
        out["witness_modulus"] = verdict.witness_modulus
    return out


def emit_report(report: dict) -> str:
    """Stable JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
