"""Named switch constructions: twist, Alexander, Burau, Wada.

These generate concrete tables over labels 1..n for cross-validation
against the enumerated catalogs.  Ring elements of Z_n map to labels by
x -> x + 1, which reproduces the printed cycle notation of the size-3
Alexander tables exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import switches
from .switches import Switch, SwitchError, make_switch


@dataclass(frozen=True)
class GroupTable:
    """A finite group as a multiplication table on labels 1..m."""
    size: int
    mult: tuple[tuple[int, ...], ...]   # mult[x-1][y-1] = x * y
    inv: tuple[int, ...]
    id: int


class GroupError(ValueError):
    pass


def make_group(mult) -> GroupTable:
    mult = tuple(tuple(row) for row in mult)
    m = len(mult)
    labels = range(1, m + 1)
    if any(len(row) != m for row in mult):
        raise GroupError("multiplication table is not square")
    if any(not 1 <= v <= m for row in mult for v in row):
        raise GroupError("table entry out of range")
    ids = [e for e in labels
           if all(mult[e - 1][x - 1] == x and mult[x - 1][e - 1] == x for x in labels)]
    if len(ids) != 1:
        raise GroupError("table has no two-sided identity")
    e = ids[0]
    inv = [0] * m
    for x in labels:
        partners = [y for y in labels if mult[x - 1][y - 1] == e and mult[y - 1][x - 1] == e]
        if len(partners) != 1:
            raise GroupError(f"element {x} has no unique inverse")
        inv[x - 1] = partners[0]
    for x in labels:
        for y in labels:
            for z in labels:
                if mult[mult[x - 1][y - 1] - 1][z - 1] != mult[x - 1][mult[y - 1][z - 1] - 1]:
                    raise GroupError(f"associativity fails at ({x},{y},{z})")
    return GroupTable(m, mult, tuple(inv), e)


def cyclic_group(n: int) -> GroupTable:
    mult = [[((x + y) % n) + 1 for y in range(n)] for x in range(n)]
    return make_group(mult)


def symmetric_group_3() -> GroupTable:
    """S_3 with elements numbered 1..6 in lexicographic one-line order."""
    import itertools
    els = list(itertools.permutations((1, 2, 3)))
    idx = {p: i + 1 for i, p in enumerate(els)}
    mult = [[idx[tuple(p[q[k] - 1] for k in range(3))] for q in els] for p in els]
    return make_group(mult)


BUILTIN_GROUPS = {f"Z{n}": (lambda n=n: cyclic_group(n)) for n in range(1, 13)}
BUILTIN_GROUPS["S3"] = symmetric_group_3


def twist(n: int) -> Switch:
    """The trivial switch S(a, b) = (b, a)."""
    if n < 1:
        raise SwitchError("twist needs n >= 1")
    ident = tuple(range(1, n + 1))
    return make_switch((ident,) * n, (ident,) * n)


def alexander(n: int, lam: int, mu: int) -> Switch:
    """a^b = lam*a + (1 - lam*mu)*b, a_b = mu*a over Z_n."""
    if n < 1:
        raise SwitchError("modulus must be positive")
    lam %= n
    mu %= n
    if gcd(lam, n) != 1:
        raise SwitchError(f"lambda={lam} is not a unit mod {n}")
    if gcd(mu, n) != 1:
        raise SwitchError(f"mu={mu} is not a unit mod {n}")
    c = (1 - lam * mu) % n
    up = tuple(tuple((lam * a + c * b) % n + 1 for a in range(n)) for b in range(n))
    down = tuple(tuple((mu * a) % n + 1 for a in range(n)) for _ in range(n))
    return make_switch(up, down)


def burau(n: int, lam: int) -> Switch:
    """The mu = 1 Alexander case; always a quandle."""
    return alexander(n, lam, 1)


def wada(g: GroupTable) -> Switch:
    """S(a, b) = (a^2 b, b^-1 a^-1 b) over a finite group."""
    m = g.size
    up = tuple(tuple(g.mult[g.mult[a - 1][a - 1] - 1][b - 1] for b in range(1, m + 1))
               for a in range(1, m + 1))
    down = tuple(tuple(g.mult[g.mult[g.inv[b - 1] - 1][g.inv[a - 1] - 1] - 1][b - 1]
                       for a in range(1, m + 1))
                 for b in range(1, m + 1))
    S = make_switch(up, down)
    report = switches.verify_axioms(S)
    if not report.is_birack():
        raise SwitchError("group table did not yield a birack")
    return S
