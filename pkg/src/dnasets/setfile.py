"""Text format for data sets and codes.

A set file starts with a header line ``#q=<2|4> L=<int> M=<int>`` followed
by one sequence per line in sorted order and a trailing newline. A code
file shares one header across several blocks separated by blank lines.
Received sets may hold sequences of other lengths; only strict parsing
insists on length L.
"""

from __future__ import annotations

import re
from typing import Iterable

from .core import ParameterError, alphabet

HEADER = re.compile(r"^#q=(\d+) L=(\d+) M=(\d+)$")


def _header(q: int, L: int, M: int) -> str:
    alphabet(q)
    return f"#q={q} L={L} M={M}"


def format_set(S: Iterable[str], q: int, L: int) -> str:
    seqs = sorted(S)
    return "\n".join([_header(q, L, len(seqs))] + seqs) + "\n"


def _parse_header(line: str) -> tuple[int, int, int]:
    m = HEADER.match(line.strip())
    if not m:
        raise ParameterError(f"bad set-file header {line!r}")
    q, L, M = (int(g) for g in m.groups())
    alphabet(q)
    return q, L, M


def _check_block(seqs: list[str], q: int, L: int, M: int, strict: bool) -> frozenset[str]:
    sigma = alphabet(q)
    S = frozenset(seqs)
    if len(S) != len(seqs):
        raise ParameterError("duplicate sequences in a set file")
    if len(seqs) != M:
        raise ParameterError(f"header announces {M} sequences, found {len(seqs)}")
    for x in seqs:
        if any(c not in sigma for c in x):
            raise ParameterError(f"sequence {x!r} is not over {sigma!r}")
        if strict and len(x) != L:
            raise ParameterError(f"sequence {x!r} does not have length {L}")
    return S


def parse_set(text: str, strict: bool = True) -> tuple[frozenset[str], int, int]:
    """Returns (set, q, L)."""
    if not text.endswith("\n"):
        raise ParameterError("set file must end with a newline")
    lines = text[:-1].split("\n")
    q, L, M = _parse_header(lines[0])
    seqs = [x for x in lines[1:]]
    if any(x == "" for x in seqs):
        raise ParameterError("blank line inside a set file")
    return _check_block(seqs, q, L, M, strict), q, L


def format_code(code: Iterable[Iterable[str]], q: int, L: int, M: int) -> str:
    blocks = ["\n".join(sorted(S)) for S in code]
    return _header(q, L, M) + "\n" + "\n\n".join(blocks) + "\n"


def parse_code(text: str, strict: bool = True) -> tuple[list[frozenset[str]], int, int, int]:
    """Returns (codewords, q, L, M)."""
    if not text.endswith("\n"):
        raise ParameterError("code file must end with a newline")
    head, _, body = text.partition("\n")
    q, L, M = _parse_header(head)
    code = []
    for block in body[:-1].split("\n\n") if body.strip() else []:
        code.append(_check_block(block.split("\n"), q, L, M, strict))
    return code, q, L, M


def bytes_to_int(data: bytes) -> int:
    return int.from_bytes(data, "big")


def int_to_bytes(value: int, nbytes: int) -> bytes:
    return value.to_bytes(nbytes, "big")
