"""Finite switches: pairs of permutation action tables on {1..n}.

A switch is a map S(a, b) = (b^a, a_b) on pairs of labels, stored as two
tables of permutation columns.  Column b of the up table is the
permutation applied when b acts from above (a^b), column b of the down
table the one applied when b acts from below (a_b).  Because every column
is a bijection, the inverse actions a^{b~} and a_{b~} always exist.

The axioms checked here:

  B1  for each a there is exactly one x with a^x = x and x_a = a, and
      exactly one y with a_y = y and y^a = a;
  B2  S is a bijection of the n^2 pairs;
  B3  (S x id)(id x S)(S x id) = (id x S)(S x id)(id x S) on all triples.

B2 + B3 make a birack, B1..B3 a biquandle; a trivial down (or up) table
upgrades those to rack / quandle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import lcm

from . import perms
from .perms import Perm


class SwitchError(ValueError):
    """Malformed table data (sizes, non-bijective columns, bad labels)."""


class NotInvertibleError(SwitchError):
    """The switch fails B2, so it has no inverse."""


class SwitchFormError(SwitchError):
    """A pair bijection that cannot be written as up/down action tables."""


Table = tuple[Perm, ...]


@dataclass(frozen=True)
class Switch:
    size: int
    up: Table
    down: Table

    def __repr__(self):
        u = ",".join(perms.format_cycles(p) for p in self.up)
        d = ",".join(perms.format_cycles(p) for p in self.down)
        return f"Switch(U=({u}) D=({d}))"


@dataclass(frozen=True)
class AxiomReport:
    b1: bool
    b2: bool
    b3: bool
    witness: tuple | None

    def is_birack(self) -> bool:
        return self.b2 and self.b3


class ClassKind(enum.Enum):
    QUANDLE = "quandle"
    RACK = "rack"
    BIQUANDLE = "biquandle"
    BIRACK = "birack"
    NOT_A_BIRACK = "not-a-birack"


@dataclass(frozen=True)
class Fingerprint:
    order: int
    u: int
    d: int
    c1: int
    c2: int
    symmetric: bool
    pseudo_up: bool
    pseudo_down: bool


def _check_table(table, n: int, which: str) -> Table:
    cols = tuple(tuple(col) for col in table)
    if len(cols) != n:
        raise SwitchError(f"{which} table has {len(cols)} columns, expected {n}")
    for j, col in enumerate(cols, start=1):
        if not perms.is_perm(col, n):
            raise SwitchError(f"{which} column {j} is not a bijection of 1..{n}: {col!r}")
    return cols


def make_switch(up, down) -> Switch:
    """Package two action tables.  No axiom is checked here: the
    enumerator holds partial/failing candidates through this type too."""
    up = tuple(tuple(col) for col in up)
    down = tuple(tuple(col) for col in down)
    n = len(up)
    if n == 0 or len(down) != n:
        raise SwitchError(f"table sizes differ or are empty: up={len(up)} down={len(down)}")
    return Switch(n, _check_table(up, n, "up"), _check_table(down, n, "down"))


def _check_label(S: Switch, x: int, name: str):
    if not 1 <= x <= S.size:
        raise SwitchError(f"label {name}={x} out of range 1..{S.size}")


def up_of(S: Switch, a: int, b: int) -> int:
    """a^b: b acting up on a."""
    return S.up[b - 1][a - 1]


def down_of(S: Switch, a: int, b: int) -> int:
    """a_b: b acting down on a."""
    return S.down[b - 1][a - 1]


def apply(S: Switch, a: int, b: int) -> tuple[int, int]:
    """S(a, b) = (b^a, a_b)."""
    _check_label(S, a, "a")
    _check_label(S, b, "b")
    return S.up[a - 1][b - 1], S.down[b - 1][a - 1]


def pair_map(S: Switch) -> list[int]:
    """S flattened to a map on pair codes (a-1)*n + (b-1)."""
    n = S.size
    out = [0] * (n * n)
    for a in range(1, n + 1):
        ucol = S.up[a - 1]
        for b in range(1, n + 1):
            c, d = ucol[b - 1], S.down[b - 1][a - 1]
            out[(a - 1) * n + (b - 1)] = (c - 1) * n + (d - 1)
    return out


def _b1_holds_at(S: Switch, a: int) -> tuple[bool, bool]:
    n = S.size
    xs = sum(1 for x in range(1, n + 1)
             if up_of(S, a, x) == x and down_of(S, x, a) == a)
    ys = sum(1 for y in range(1, n + 1)
             if down_of(S, a, y) == y and up_of(S, y, a) == a)
    return xs == 1, ys == 1


def b1_x_half(S: Switch) -> bool:
    """The x-half of B1 alone (unique x with a^x = x, x_a = a for all a)."""
    return all(_b1_holds_at(S, a)[0] for a in range(1, S.size + 1))


def verify_axioms(S: Switch) -> AxiomReport:
    n = S.size
    b1, b1_witness = True, None
    for a in range(1, n + 1):
        okx, oky = _b1_holds_at(S, a)
        if not (okx and oky):
            b1, b1_witness = False, ("B1", a)
            break

    pm = pair_map(S)
    b2, b2_witness = True, None
    seen: dict[int, int] = {}
    for src, dst in enumerate(pm):
        if dst in seen:
            other = seen[dst]
            b2 = False
            b2_witness = ("B2",
                          (other // n + 1, other % n + 1),
                          (src // n + 1, src % n + 1))
            break
        seen[dst] = src

    b3, b3_witness = True, None
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                if _b3_lhs(S, a, b, c) != _b3_rhs(S, a, b, c):
                    b3, b3_witness = False, ("B3", (a, b, c))
                    break
            if not b3:
                break
        if not b3:
            break

    witness = None
    if not b1:
        witness = b1_witness
    elif not b2:
        witness = b2_witness
    elif not b3:
        witness = b3_witness
    return AxiomReport(b1, b2, b3, witness)


def _b3_lhs(S, a, b, c):
    # (S x id) then (id x S) then (S x id), by direct composition
    x, y, z = a, b, c
    x, y = apply(S, x, y)
    y, z = apply(S, y, z)
    x, y = apply(S, x, y)
    return x, y, z


def _b3_rhs(S, a, b, c):
    x, y, z = a, b, c
    y, z = apply(S, y, z)
    x, y = apply(S, x, y)
    y, z = apply(S, y, z)
    return x, y, z


def tables_from_pair_map(pm: list[int], n: int) -> tuple[Table, Table]:
    """Rebuild up/down tables from a pair bijection, or raise if the map
    is not of switch form (first output an action of the first argument
    on the second, second output symmetric)."""
    up = [[0] * n for _ in range(n)]
    down = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out = pm[a * n + b]
            c, d = out // n, out % n
            up[a][b] = c + 1    # column a of up sends b+1 -> c+1
            down[b][a] = d + 1  # column b of down sends a+1 -> d+1
    for j in range(n):
        if not perms.is_perm(tuple(up[j]), n):
            raise SwitchFormError(f"pair map is not a switch: up column {j + 1} not bijective")
        if not perms.is_perm(tuple(down[j]), n):
            raise SwitchFormError(f"pair map is not a switch: down column {j + 1} not bijective")
    return tuple(tuple(col) for col in up), tuple(tuple(col) for col in down)


def inverse(S: Switch) -> Switch:
    """The inverse switch (mirror of the diagram), by brute inversion of
    the pair map followed by switch-form extraction."""
    n = S.size
    pm = pair_map(S)
    inv = [-1] * (n * n)
    for src, dst in enumerate(pm):
        if inv[dst] != -1:
            raise NotInvertibleError("switch fails B2, no inverse exists")
        inv[dst] = src
    up, down = tables_from_pair_map(inv, n)
    return Switch(n, up, down)


def is_trivial_table(table: Table) -> bool:
    n = len(table)
    return all(col == tuple(range(1, n + 1)) for col in table)


def classify(S: Switch) -> ClassKind:
    report = verify_axioms(S)
    if not (report.b2 and report.b3):
        return ClassKind.NOT_A_BIRACK
    rack_shaped = is_trivial_table(S.down) or is_trivial_table(S.up)
    if report.b1:
        return ClassKind.QUANDLE if rack_shaped else ClassKind.BIQUANDLE
    return ClassKind.RACK if rack_shaped else ClassKind.BIRACK


def fingerprint(S: Switch) -> Fingerprint:
    """Isometry invariants: order of S on pairs, constant-point counts,
    and the pseudo/symmetric table flags."""
    n = S.size
    pm = pair_map(S)
    seen = [False] * (n * n)
    k = 1
    for start in range(n * n):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = pm[x]
            length += 1
        if x != start:
            raise NotInvertibleError("switch fails B2, order undefined")
        k = lcm(k, length)
    u = sum(1 for x in range(1, n + 1)
            if len({up_of(S, x, y) for y in range(1, n + 1)}) == 1)
    d = sum(1 for x in range(1, n + 1)
            if len({down_of(S, x, y) for y in range(1, n + 1)}) == 1)
    return Fingerprint(
        order=k, u=u, d=d, c1=u + d, c2=abs(u - d),
        symmetric=S.up == S.down,
        pseudo_up=len(set(S.up)) == 1,
        pseudo_down=len(set(S.down)) == 1,
    )
