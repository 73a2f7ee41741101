"""The ``HBF v1`` truth-table text format.

    HBF v1 n=4 k=2 modulus=0x13
    0231...

Word i is F(element i) as big-endian hex, ceil(k/4) digits wide; words are
concatenated in index order and wrapped at 64 hex characters per line.
"""
from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .gf2n import MODULI, make_field
from .vectorial import VectorialFunction

LINE_WIDTH = 64
_HEADER = re.compile(r"^HBF v1 n=(\d+) k=(\d+) modulus=0x([0-9a-fA-F]+)$")


class FormatError(ValueError):
    pass


def word_width(k: int) -> int:
    return max(1, -(-k // 4))


def dumps(F: VectorialFunction) -> str:
    w = word_width(F.k)
    payload = "".join(format(int(v), f"0{w}x") for v in F.table)
    lines = [f"HBF v1 n={F.ctx.n} k={F.k} modulus={F.ctx.modulus:#x}"]
    lines += [payload[i:i + LINE_WIDTH] for i in range(0, len(payload), LINE_WIDTH)]
    return "\n".join(lines) + "\n"


def loads(text: str) -> VectorialFunction:
    lines = text.strip().splitlines()
    if not lines:
        raise FormatError("empty truth-table file")
    m = _HEADER.match(lines[0].strip())
    if not m:
        raise FormatError(f"bad header {lines[0]!r}")
    n, k, modulus = int(m.group(1)), int(m.group(2)), int(m.group(3), 16)
    if MODULI.get(n) != modulus:
        raise FormatError(f"modulus {modulus:#x} does not match the shipped modulus for n={n}")
    ctx = make_field(n)
    payload = "".join(l.strip() for l in lines[1:])
    w = word_width(k)
    if len(payload) != w * ctx.size:
        raise FormatError(f"expected {ctx.size} words of {w} hex digits, got {len(payload)} digits")
    try:
        words = np.array([int(payload[i:i + w], 16) for i in range(0, len(payload), w)], dtype=np.int64)
    except ValueError as e:
        raise FormatError(str(e)) from None
    if np.any(words >= 1 << k):
        raise FormatError(f"word exceeds {k} bits")
    return VectorialFunction(ctx, k, words)


def write(path, F: VectorialFunction) -> None:
    Path(path).write_text(dumps(F))


def read(path) -> VectorialFunction:
    return loads(Path(path).read_text())
