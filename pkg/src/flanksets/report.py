"""Deterministic renderers for the three result tables (csv, json, latex).

Rendering is pure string building: given equal inputs the output is byte
identical across runs and platforms. The csv dialect is fixed -- comma field
separator, semicolons for in-field lists, LF line endings, no quoting -- and
each csv emitter has a matching parser so tables round-trip exactly. The
latex emitters produce table bodies only, never the surrounding float or
caption boilerplate.
"""

from __future__ import annotations

import json
from typing import Iterable

from .exceptional import ExceptionalSet
from .flanking import FlankedRow, HlPair

_FORMATS = ("csv", "json", "latex")

# display-width budget per latex line in the flanked table body
_WRAP_COLUMNS = 80


def _check_format(fmt: str) -> None:
    if fmt not in _FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {_FORMATS}")


def render_sets(sets: Iterable[ExceptionalSet], fmt: str) -> str:
    """Members table, one row per power index."""
    _check_format(fmt)
    sets = list(sets)
    if fmt == "csv":
        lines = ["k,members"]
        lines += [f"{s.k},{';'.join(str(m) for m in s.members)}" for s in sets]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = [{"k": s.k, "members": list(s.members)} for s in sets]
        return json.dumps(payload, indent=2) + "\n"
    lines = [f"{s.k} & \\{{{','.join(str(m) for m in s.members)}\\}} \\\\" for s in sets]
    return "\n".join(lines) + ("\n" if lines else "")


def render_flanked(rows: Iterable[FlankedRow], fmt: str) -> str:
    """Flanked-class table; latex emits the inline-set body n{\\scriptsize[k_min]}.

    Latex lines wrap once their display form (entry text without the size
    commands, separators included) would pass 80 characters; the wrap point
    depends only on the row list.
    """
    _check_format(fmt)
    rows = list(rows)
    if fmt == "csv":
        lines = ["n,p,r,t0,k_min,period"]
        lines += [f"{r.n},{r.p},{r.r},{r.t0},{r.k_min},{r.period}" for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = [
            {"n": r.n, "p": r.p, "r": r.r, "t0": r.t0, "k_min": r.k_min, "period": r.period}
            for r in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    entries = [f"{r.n}{{\\scriptsize[{r.k_min}]}}" for r in rows]
    widths = [len(f"{r.n}[{r.k_min}]") for r in rows]
    groups: list[list[str]] = []
    used = 0
    for entry, w in zip(entries, widths):
        cost = w if not groups or used == 0 else w + 2
        if groups and used and used + cost > _WRAP_COLUMNS:
            groups.append([entry])
            used = w
        else:
            if not groups:
                groups.append([])
            groups[-1].append(entry)
            used += cost
    body = []
    for i, group in enumerate(groups):
        line = "\\{&" if i == 0 else "&"
        line += ", ".join(group)
        line += "\\}" if i == len(groups) - 1 else ",\\\\"
        body.append(line)
    if not body:
        body = ["\\{\\}"]
    return "\\begin{align*}\n" + "\n".join(body) + "\n\\end{align*}\n"


def render_hl(rows: Iterable[HlPair], fmt: str) -> str:
    """Prime-pair table (n, r = 8n+5, p = 16n+11)."""
    _check_format(fmt)
    rows = list(rows)
    if fmt == "csv":
        lines = ["n,r,p"]
        lines += [f"{r.n},{r.r},{r.p}" for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = [{"n": r.n, "r": r.r, "p": r.p} for r in rows]
        return json.dumps(payload, indent=2) + "\n"
    lines = [f"{r.n} & {r.r} & {r.p} \\\\" for r in rows]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_sets_csv(text: str) -> list[ExceptionalSet]:
    """Inverse of render_sets(..., "csv")."""
    lines = text.split("\n")
    if not lines or lines[0] != "k,members":
        raise ValueError("not a members table: bad header")
    out = []
    for line in lines[1:]:
        if not line:
            continue
        k_field, members_field = line.split(",", 1)
        members = tuple(int(x) for x in members_field.split(";")) if members_field else ()
        out.append(ExceptionalSet(k=int(k_field), members=members))
    return out


def parse_flanked_csv(text: str) -> list[FlankedRow]:
    """Inverse of render_flanked(..., "csv")."""
    lines = text.split("\n")
    if not lines or lines[0] != "n,p,r,t0,k_min,period":
        raise ValueError("not a flanked table: bad header")
    return [FlankedRow(*map(int, line.split(","))) for line in lines[1:] if line]


def parse_hl_csv(text: str) -> list[HlPair]:
    """Inverse of render_hl(..., "csv")."""
    lines = text.split("\n")
    if not lines or lines[0] != "n,r,p":
        raise ValueError("not a pair table: bad header")
    return [HlPair(*map(int, line.split(","))) for line in lines[1:] if line]
