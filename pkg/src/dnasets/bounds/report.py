"""Bound reports: collect every bound that applies to a parameter point."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..channel import ErrorType
from ..core import ParameterError
from . import asymptotic as asy
from .exact import (BoundValue, REDUNDANCY_LOWER, gv_arbitrary, gv_del, gv_sub,
                    indexing_redundancy, sp_arbitrary, sp_arbitrary_redundancy,
                    sp_insertion, space_log2)

SCHEMA = "dnasets.bounds/1"
ASYMPTOTIC = "asymptotic-leading-term"


def round_sig(x: float | None, digits: int = 12) -> float | None:
    if x is None or not math.isfinite(x):
        return None
    return float(f"{x:.{digits}g}")


@dataclass
class BoundReport:
    params: dict
    entries: list[dict] = field(default_factory=list)

    def add_bound(self, b: BoundValue):
        e = {"theorem": b.label, "kind": b.kind, "status": b.status}
        if b.applicable:
            e["value_bits"] = round_sig(b.log2)
            e["redundancy_bits"] = round_sig(b.redundancy)
        else:
            e["value_bits"] = None
        self.entries.append(e)

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "params": self.params, "entries": self.entries}

    def find(self, theorem: str, kind: str | None = None) -> dict:
        for e in self.entries:
            if e["theorem"] == theorem and (kind is None or e["kind"] == kind):
                return e
        raise KeyError(theorem)


def _asymptotic_channels(s: int, t: int, eps: int | None, kind: ErrorType, M: int) -> list[str]:
    if eps is None:
        return ["(s,t,*)_L"]
    if kind is ErrorType.S:
        out = ["(s,t,eps)_S"]
        if (s, t, eps) == (0, 1, 1):
            out.append("(0,1,1)_S")
        if s == 0 and t == M:
            out.append("(0,M,eps)_S")
        return out
    if kind is ErrorType.D:
        out = ["(s,t,eps)_D"]
        if (s, t, eps) == (0, 1, 1):
            out.append("(0,1,1)_D")
        if s == 0 and t == M and eps == 1:
            out.append("(0,M,1)_D")
        return out
    return []


def bound_report(M: int, L: int, s: int, t: int, eps: int | None, kind="L",
                 exact: bool = True, asymptotic: bool = False) -> BoundReport:
    """All bounds applicable to an (s, t, eps) channel of the given error type.

    ``eps=None`` means unboundedly many errors per corrupted sequence.
    """
    kind = ErrorType.parse(kind)
    params = {"M": M, "L": L, "s": s, "t": t, "eps": eps, "type": kind.value,
              "space_bits": round_sig(space_log2(M, L))}
    rep = BoundReport(params)
    if exact:
        if eps is None or kind is ErrorType.L:
            rep.add_bound(gv_arbitrary(M, L, s, t))
        if kind is ErrorType.S and eps is not None:
            rep.add_bound(gv_sub(M, L, s, t, eps))
        if kind is ErrorType.D and eps is not None:
            rep.add_bound(gv_del(M, L, s, t, eps))
        if eps is None or kind is ErrorType.L:
            sp = sp_arbitrary(M, L, s, t)
            rep.add_bound(sp)
            if sp.applicable:
                rep.entries.append({
                    "theorem": "sp-arbitrary-closed-form", "kind": REDUNDANCY_LOWER,
                    "status": "exact",
                    "value_bits": round_sig(sp_arbitrary_redundancy(M, L, s, t))})
        if kind is ErrorType.I and eps is not None:
            rep.add_bound(sp_insertion(M, L, s, t, eps))
        if M <= 2 ** L:
            rep.entries.append({"theorem": "indexing", "kind": "construction-redundancy",
                                "status": "exact",
                                "value_bits": round_sig(indexing_redundancy(M, L))})
    if asymptotic:
        vals = {"M": M, "L": L, "s": s, "t": t, "eps": eps or 0}
        for ch in _asymptotic_channels(s, t, eps, kind, M):
            row = next(r for r in asy.ROWS if r.channel == ch)
            for col in asy.COLUMNS:
                cell = getattr(row, col)
                if cell is None:
                    continue
                rep.entries.append({
                    "theorem": cell.source, "kind": ASYMPTOTIC, "column": col,
                    "channel": ch, "term": asy.render(cell.expr),
                    "value_bits": round_sig(asy.evaluate(cell.expr, **vals)),
                })
    return rep


def table2_report(fmt: str = "text"):
    """The comparison table of leading redundancy terms."""
    if fmt == "text":
        return asy.render_table2()
    if fmt == "json":
        rows = []
        for r in asy.ROWS:
            rows.append({"channel": r.channel, **{
                c: (None if getattr(r, c) is None else
                    {"term": asy.render(getattr(r, c).expr), "source": getattr(r, c).source})
                for c in asy.COLUMNS}})
        return {"schema": "dnasets.table/1", "rows": rows}
    raise ParameterError(f"unknown format {fmt!r}")
