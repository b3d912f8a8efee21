"""Leading-order redundancy expressions for the main channel regimes.

An expression is a tuple of ``(coefficient, factor)`` string pairs. The
strings come from a small vocabulary so that one renderer produces the
table text and one evaluator turns an expression into a number of bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..core import ParameterError, ceil_log2

Term = tuple[str, str]
Expr = tuple[Term, ...]

# coefficient vocabulary: name -> f(params)
COEFFICIENTS = {
    "1": lambda p: 1,
    "2": lambda p: 2,
    "s": lambda p: p["s"],
    "t": lambda p: p["t"],
    "M": lambda p: p["M"],
    "2M": lambda p: 2 * p["M"],
    "s+t": lambda p: p["s"] + p["t"],
    "s+2t": lambda p: p["s"] + 2 * p["t"],
    "t eps": lambda p: p["t"] * p["eps"],
    "2t eps": lambda p: 2 * p["t"] * p["eps"],
    "M eps": lambda p: p["M"] * p["eps"],
    "2M eps": lambda p: 2 * p["M"] * p["eps"],
    "sigma+2tau": lambda p: p["sigma"] + 2 * p["tau"],
    "(sigma+2tau)M": lambda p: (p["sigma"] + 2 * p["tau"]) * p["M"],
    "(sigma+tau)M": lambda p: (p["sigma"] + p["tau"]) * p["M"],
    "(1-c)/2": lambda p: (1 - p["c"]) / 2,
}

# factor vocabulary: name -> f(params)
FACTORS = {
    "L": lambda p: p["L"],
    "log M": lambda p: math.log2(p["M"]),
    "log L": lambda p: math.log2(p["L"]),
    "log e": lambda p: math.log2(math.e),
    "log(L/2)": lambda p: math.log2(p["L"] / 2),
    "log(ML)": lambda p: math.log2(p["M"] * p["L"]),
    "(L - log M)": lambda p: p["L"] - math.log2(p["M"]),
    "(L - ceil(log M))": lambda p: p["L"] - ceil_log2(p["M"]),
    "M^c log M": lambda p: p["M"] ** p["c"] * math.log2(p["M"]),
    "M^(1-c)(L - log M)": lambda p: p["M"] ** (1 - p["c"]) * (p["L"] - math.log2(p["M"])),
}


def _needs_parens(coef: str) -> bool:
    depth = 0
    for ch in coef:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            return True
    return False


def render_term(term: Term) -> str:
    coef, factor = term
    if coef not in COEFFICIENTS or factor not in FACTORS:
        raise ParameterError(f"term {term} is outside the vocabulary")
    if coef == "1":
        return factor
    c = f"({coef})" if _needs_parens(coef) else coef
    if factor[0].islower():
        return f"{c} {factor}"
    if c[-1].isdigit() and not c.isdigit():
        return f"{c} {factor}"
    return c + factor


def render(expr: Expr) -> str:
    return " + ".join(render_term(t) for t in expr)


def evaluate(expr: Expr, **params) -> float:
    """Numeric value (bits) of an expression for concrete parameters."""
    return sum(COEFFICIENTS[c](params) * FACTORS[f](params) for c, f in expr)


@dataclass(frozen=True)
class Cell:
    expr: Expr
    source: str

    def render(self) -> str:
        return f"{render(self.expr)} [{self.source}]" if self.expr else ""


@dataclass(frozen=True)
class Row:
    channel: str
    gv: Cell | None
    construction: Cell | None
    sp: Cell | None


EMPTY = Cell((), "")

ROWS: tuple[Row, ...] = (
    Row("(s,t,*)_L",
        Cell((("s+2t", "L"), ("s+2t", "log M")), "gv-arbitrary"),
        Cell((("M", "log e"), ("s+2t", "(L - ceil(log M))")), "c1"),
        Cell((("s+t", "L"), ("t", "log M")), "sp-arbitrary")),
    Row("(s,t,*)_L", None, Cell((("s+2t", "L"),), "c2"), None),
    Row("(s,t,*)_L", None,
        Cell((("(1-c)/2", "M^c log M"), ("s+2t", "M^(1-c)(L - log M)")), "c3"), None),
    Row("(sigma M,tau M,*)_L",
        Cell((("sigma+2tau", "(L - log M)"),), "gv-arbitrary"),
        Cell((("(sigma+2tau)M", "(L - log M)"),), "c2"),
        Cell((("(sigma+tau)M", "(L - log M)"),), "sp-arbitrary")),
    Row("(s,t,eps)_S",
        Cell((("s", "L"), ("s+2t", "log M"), ("2t eps", "log L")), "gv-substitution"),
        None,
        Cell((("s", "L"), ("t", "log M"), ("t eps", "log L")), "sp-substitution")),
    Row("(s,t,eps)_D",
        Cell((("s", "L"), ("s+t", "log M"), ("2t eps", "log(L/2)")), "gv-deletion"),
        Cell((("s+t", "L"),), "c2"),
        Cell((("s", "L"), ("t eps", "log L")), "sp-deletion")),
    Row("(0,1,1)_S",
        Cell((("2", "log L"),), "gv-substitution"),
        Cell((("2", "L"),), "c2"),
        Cell((("1", "log(ML)"),), "sp-substitution")),
    Row("(0,1,1)_D",
        Cell((("2", "log L"),), "gv-deletion"),
        Cell((("1", "log L"),), "c5"),
        Cell((("1", "log L"),), "sp-deletion")),
    Row("(0,M,eps)_S",
        Cell((("2M eps", "log L"),), "gv-substitution"),
        Cell((("M eps", "log L"),), "c7"),
        Cell((("M eps", "log L"),), "sp-substitution-scaling")),
    Row("(0,M,1)_D",
        Cell((("2M", "log L"),), "gv-deletion"),
        Cell((("M", "log L"),), "c6"),
        Cell((("M", "log L"),), "sp-deletion-scaling")),
)

COLUMNS = ("gv", "construction", "sp")


def asymptotic_redundancy(channel: str, column: str, index: int = 0) -> Expr:
    """Leading-term expression for a regime and column.

    ``index`` picks among the rows sharing a channel label (the arbitrary
    error regime lists three constructions).
    """
    if column not in COLUMNS:
        raise ParameterError(f"column must be one of {COLUMNS}")
    rows = [r for r in ROWS if r.channel == channel]
    if not rows:
        raise ParameterError(f"unsupported regime {channel!r}")
    if not 0 <= index < len(rows):
        raise ParameterError(f"regime {channel!r} has {len(rows)} rows")
    cell = getattr(rows[index], column)
    if cell is None:
        raise ParameterError(f"no {column} entry for {channel!r} row {index}")
    return cell.expr


HEADER = ("channel", "Gilbert-Varshamov", "construction", "sphere packing")


def render_table2() -> str:
    """Plain-text table, one line per row, cells separated by ' | '."""
    lines = [" | ".join(HEADER)]
    for row in ROWS:
        cells = [row.channel] + [(getattr(row, c) or EMPTY).render() for c in COLUMNS]
        lines.append(" | ".join(cells).rstrip())
    return "\n".join(lines) + "\n"
