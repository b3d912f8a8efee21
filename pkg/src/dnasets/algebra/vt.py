"""Varshamov-Tenengolts codes: checksum, single indel decoding, systematic encoding."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import DecodeError, ParameterError, ceil_log2


def vt_checksum(x: str) -> int:
    """sum of i * x_i (1-based positions) modulo len(x) + 1."""
    return sum(i for i, b in enumerate(x, 1) if b == "1") % (len(x) + 1)


def _decode_deletion(y: str, L: int, a: int) -> str:
    w = y.count("1")
    delta = (a - sum(i for i, b in enumerate(y, 1) if b == "1")) % (L + 1)
    if delta <= w:
        # a 0 was deleted, with delta ones to its right
        ones = 0
        k = len(y)
        while ones < delta:
            k -= 1
            ones += y[k] == "1"
        x = y[:k] + "0" + y[k:]
    else:
        # a 1 was deleted, with delta - w - 1 zeros to its left
        zeros, k = 0, 0
        while zeros < delta - w - 1:
            zeros += y[k] == "0"
            k += 1
        x = y[:k] + "1" + y[k:]
    if vt_checksum(x) != a:
        raise DecodeError("no single-deletion preimage with the given checksum")
    return x


def _decode_insertion(y: str, L: int, a: int) -> str:
    found = {y[:i] + y[i + 1:] for i in range(len(y))}
    found = {x for x in found if vt_checksum(x) == a}
    if len(found) != 1:
        raise DecodeError("no single-insertion preimage with the given checksum")
    return found.pop()


def vt_decode(y: str, L: int, a: int) -> str:
    """Length-L word with checksum ``a`` one deletion or insertion away from ``y``."""
    if not 0 <= a <= L:
        raise ParameterError(f"checksum residue {a} outside 0..{L}")
    if any(c not in "01" for c in y):
        raise ParameterError("VT decoding needs a binary word")
    if len(y) == L:
        return y
    if len(y) == L - 1:
        return _decode_deletion(y, L, a)
    if len(y) == L + 1:
        return _decode_insertion(y, L, a)
    raise DecodeError(f"length {len(y)} is not within one edit of {L}")


def parity_positions(L: int) -> list[int]:
    """1-based dyadic positions used for checksum parity bits."""
    return [1 << j for j in range(ceil_log2(L + 1))]


def info_length(L: int) -> int:
    return L - len(parity_positions(L))


def vt_systematic_encode(info: str, L: int, a: int) -> str:
    """Place ``info`` on non-dyadic positions, then set dyadic bits to hit ``a``."""
    par = parity_positions(L)
    if len(info) != L - len(par):
        raise ParameterError(f"expected {L - len(par)} info bits, got {len(info)}")
    if not 0 <= a <= L:
        raise ParameterError(f"checksum residue {a} outside 0..{L}")
    bits = ["0"] * (L + 1)
    it = iter(info)
    pset = set(par)
    for i in range(1, L + 1):
        if i not in pset:
            bits[i] = next(it)
    x = "".join(bits[1:])
    need = (a - vt_checksum(x)) % (L + 1)
    for p in reversed(par):
        if need >= p:
            bits[p] = "1"
            need -= p
    x = "".join(bits[1:])
    assert vt_checksum(x) == a
    return x


def vt_extract_info(x: str) -> str:
    pset = set(parity_positions(len(x)))
    return "".join(b for i, b in enumerate(x, 1) if i not in pset)


@dataclass(frozen=True)
class VtCode:
    L: int
    a: int = 0

    def __post_init__(self):
        if not 0 <= self.a <= self.L:
            raise ParameterError(f"checksum residue {self.a} outside 0..{self.L}")

    def __contains__(self, x: str) -> bool:
        return len(x) == self.L and vt_checksum(x) == self.a

    def decode(self, y: str) -> str:
        return vt_decode(y, self.L, self.a)

    def codewords(self) -> list[str]:
        """All members in increasing integer order."""
        L = self.L
        return [x for x in (format(v, f"0{L}b") for v in range(1 << L))
                if vt_checksum(x) == self.a]
