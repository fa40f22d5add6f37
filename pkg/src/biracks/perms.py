"""Permutations of the labels 1..n.

A permutation is a plain tuple ``p`` of length n whose entry ``p[i-1]`` is
the image of the label ``i``.  All labels are 1-based throughout the
library; nothing 0-based leaks through any public interface.

Cycle notation follows the usual convention: ``(132)`` maps 1 -> 3,
3 -> 2, 2 -> 1.  Elements are the single characters 1..9, which is enough
for every structure handled here.  The identity is written ``i``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import lcm

Perm = tuple[int, ...]


class PermError(ValueError):
    pass


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_perm(p, n: int | None = None) -> bool:
    if n is not None and len(p) != n:
        return False
    return sorted(p) == list(range(1, len(p) + 1))


def check_perm(p, n: int) -> Perm:
    p = tuple(p)
    if not is_perm(p, n):
        raise PermError(f"not a permutation of 1..{n}: {p!r}")
    return p


def apply(p: Perm, x: int) -> int:
    return p[x - 1]


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: compose(p, q)(x) = p(q(x))."""
    return tuple(p[q[x] - 1] for x in range(len(p)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for x, y in enumerate(p, start=1):
        out[y - 1] = x
    return tuple(out)


def power(p: Perm, k: int) -> Perm:
    n = len(p)
    if k < 0:
        return power(inverse(p), -k)
    out = identity(n)
    for _ in range(k):
        out = compose(p, out)
    return out


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycles of length >= 2, each starting at its least element."""
    n = len(p)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start] or p[start - 1] == start:
            continue
        cyc = [start]
        seen[start] = True
        x = p[start - 1]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x - 1]
        out.append(tuple(cyc))
    return out


def order(p: Perm) -> int:
    return lcm(*(len(c) for c in cycles(p)))


def all_perms(n: int) -> list[Perm]:
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


@lru_cache(maxsize=None)
def _all_perms_cached(n: int) -> tuple[Perm, ...]:
    return tuple(all_perms(n))


def parse_cycles(text: str, n: int) -> Perm:
    """Parse cycle notation like ``(12)(34)`` or ``i`` into a permutation."""
    text = text.strip()
    if text == "i":
        return identity(n)
    if not text.startswith("("):
        raise PermError(f"bad permutation syntax: {text!r}")
    images = list(range(1, n + 1))
    pos = 0
    while pos < len(text):
        if text[pos] != "(":
            raise PermError(f"bad permutation syntax at {pos}: {text!r}")
        end = text.find(")", pos)
        if end < 0:
            raise PermError(f"unclosed cycle in {text!r}")
        body = text[pos + 1 : end]
        cyc = []
        for ch in body:
            if not ch.isdigit() or ch == "0":
                raise PermError(f"bad cycle element {ch!r} in {text!r}")
            x = int(ch)
            if x > n:
                raise PermError(f"element {x} out of range 1..{n} in {text!r}")
            if x in cyc:
                raise PermError(f"repeated element {x} in cycle {text!r}")
            cyc.append(x)
        if len(cyc) < 2:
            raise PermError(f"cycle of length < 2 in {text!r}")
        for i, x in enumerate(cyc):
            images[x - 1] = cyc[(i + 1) % len(cyc)]
        pos = end + 1
    return check_perm(images, n)


def format_cycles(p: Perm) -> str:
    """Inverse of parse_cycles; the identity renders as ``i``."""
    if len(p) > 9:
        raise PermError("cycle notation supports n <= 9 only")
    cs = cycles(p)
    if not cs:
        return "i"
    return "".join("(" + "".join(str(x) for x in c) + ")" for c in cs)
