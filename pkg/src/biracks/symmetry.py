"""Relabeling isomorphisms and the geometric symmetries of switches.

A permutation sigma of the labels induces an isomorphic switch whose
column j is sigma o (column sigma^-1(j)) o sigma^-1, applied to both
tables.  On top of relabeling there are three geometric involutions:

  mirror   -- invert the switch (change the sign of every crossing);
  reverse  -- swap the up and down tables (reverse the knot orientation);
  both     -- their composite.

Equivalence testing and catalog deduplication work through canonical
keys: the lexicographically least flat encoding of the tables over the
full orbit (all n! relabelings, and in iso+sym mode also the four
symmetry images).  At n <= 6 the orbit has at most 2880 members, so the
plain minimum is exact and fast; no refinement machinery is needed.
"""

from __future__ import annotations

import enum
from functools import lru_cache

import numpy as np

from . import perms, switches
from .perms import Perm
from .switches import NotInvertibleError, Switch, SwitchError, SwitchFormError


class EquivalenceMode(enum.Enum):
    ISO_ONLY = "iso"
    ISO_PLUS_SYMMETRY = "iso+sym"

    @classmethod
    def parse(cls, text: str) -> "EquivalenceMode":
        for mode in cls:
            if mode.value == text:
                return mode
        raise ValueError(f"unknown equivalence mode {text!r} (use 'iso' or 'iso+sym')")


class SymmetryElement(enum.Enum):
    IDENTITY = "identity"
    MIRROR = "mirror"
    REVERSE = "reverse"
    MIRROR_REVERSE = "mirror*reverse"


CanonicalKey = bytes


def relabel(sigma: Perm, S: Switch) -> Switch:
    n = S.size
    if len(sigma) != n:
        raise SwitchError(f"relabeling size {len(sigma)} != switch size {n}")
    inv = perms.inverse(sigma)
    up = tuple(perms.compose(sigma, perms.compose(S.up[inv[j] - 1], inv))
               for j in range(n))
    down = tuple(perms.compose(sigma, perms.compose(S.down[inv[j] - 1], inv))
                 for j in range(n))
    return Switch(n, up, down)


def symmetry_image(sym: SymmetryElement, S: Switch) -> Switch:
    if sym is SymmetryElement.IDENTITY:
        return S
    if sym is SymmetryElement.MIRROR:
        return switches.inverse(S)
    if sym is SymmetryElement.REVERSE:
        return Switch(S.size, S.down, S.up)
    bar = switches.inverse(S)
    return Switch(S.size, bar.down, bar.up)


# -- the numpy orbit engine ------------------------------------------------
#
# Tables as 0-based matrices M[x, y] = image of x under the action of y.
# Relabeling by sigma is then M'[x, y] = sigma[M[sigma^-1 x, sigma^-1 y]],
# identical for both tables, which vectorizes over all n! sigmas at once.

@lru_cache(maxsize=None)
def _perm_arrays(n: int):
    P = np.array(perms.all_perms(n), dtype=np.int64) - 1
    IP = np.empty_like(P)
    rows = np.arange(len(P))[:, None]
    IP[rows, P] = np.arange(n)[None, :]
    return P, IP


def _mats(S: Switch):
    up = np.array(S.up, dtype=np.int64).T - 1
    down = np.array(S.down, dtype=np.int64).T - 1
    return up, down


def _mats_to_switch(up: np.ndarray, down: np.ndarray) -> Switch:
    n = up.shape[0]
    ucols = tuple(tuple(int(x) + 1 for x in up[:, j]) for j in range(n))
    dcols = tuple(tuple(int(x) + 1 for x in down[:, j]) for j in range(n))
    return Switch(n, ucols, dcols)


def _invert_mats(up: np.ndarray, down: np.ndarray):
    """Tables of the inverse switch, or raise (B2 failure / no switch form)."""
    n = up.shape[0]
    k = np.arange(n * n)
    a, b = k // n, k % n
    fwd = up[b, a] * n + down[a, b]
    if len(np.unique(fwd)) != n * n:
        raise NotInvertibleError("switch fails B2, no inverse exists")
    g = np.empty(n * n, dtype=np.int64)
    g[fwd] = k
    up_t = (g // n).reshape(n, n).T
    down_t = (g % n).reshape(n, n)
    want = np.arange(n)[:, None]
    if not (np.sort(up_t, axis=0) == want).all() or not (np.sort(down_t, axis=0) == want).all():
        raise SwitchFormError("inverse bijection does not have switch form")
    return np.ascontiguousarray(up_t), np.ascontiguousarray(down_t)


def _symmetry_mats(S: Switch, mode: EquivalenceMode):
    up, down = _mats(S)
    images = [(up, down)]
    if mode is EquivalenceMode.ISO_PLUS_SYMMETRY:
        up_t, down_t = _invert_mats(up, down)
        images += [(down, up), (up_t, down_t), (down_t, up_t)]
    return images


def _relabel_all(M: np.ndarray, P: np.ndarray, IP: np.ndarray) -> np.ndarray:
    m = len(P)
    X = M[IP[:, :, None], IP[:, None, :]]
    return P[np.arange(m)[:, None, None], X]


def _orbit_rows(S: Switch, mode: EquivalenceMode) -> np.ndarray:
    """All flat table encodings in the orbit, one per row."""
    n = S.size
    P, IP = _perm_arrays(n)
    blocks = []
    for up, down in _symmetry_mats(S, mode):
        ru = _relabel_all(up, P, IP).reshape(len(P), -1)
        rd = _relabel_all(down, P, IP).reshape(len(P), -1)
        blocks.append(np.concatenate([ru, rd], axis=1))
    return np.concatenate(blocks, axis=0)


def _row_bytes(rows: np.ndarray) -> list[bytes]:
    flat = rows.astype(np.uint8).tobytes()
    width = rows.shape[1]
    return [flat[i * width:(i + 1) * width] for i in range(rows.shape[0])]


def canonical_key(S: Switch, mode: EquivalenceMode) -> CanonicalKey:
    """Equal keys iff equivalent under the chosen mode."""
    if S.size > 9:
        raise SwitchError("canonical keys computed by full orbit minimum, n <= 9 only")
    best = min(_row_bytes(_orbit_rows(S, mode)))
    return bytes([S.size]) + best


def canonical_rep(S: Switch, mode: EquivalenceMode) -> Switch:
    """Deterministic class representative: among the orbit, prefer tables
    with trivial down action (so racks print in their conventional
    orientation), then take the lexicographic minimum."""
    n = S.size
    rows = _orbit_rows(S, mode)
    down_trivial = np.repeat(np.arange(n), n)
    trivial_mask = (rows[:, n * n:] == down_trivial[None, :]).all(axis=1)
    encoded = _row_bytes(rows)
    pool = [b for b, t in zip(encoded, trivial_mask) if t] or encoded
    best = np.frombuffer(min(pool), dtype=np.uint8).astype(np.int64)
    up = best[: n * n].reshape(n, n)
    down = best[n * n:].reshape(n, n)
    return _mats_to_switch(up, down)


def key_and_rep(S: Switch, mode: EquivalenceMode) -> tuple[CanonicalKey, Switch]:
    """canonical_key and canonical_rep from a single orbit computation."""
    n = S.size
    rows = _orbit_rows(S, mode)
    encoded = _row_bytes(rows)
    key = bytes([n]) + min(encoded)
    down_trivial = np.repeat(np.arange(n), n)
    trivial_mask = (rows[:, n * n:] == down_trivial[None, :]).all(axis=1)
    pool = [b for b, t in zip(encoded, trivial_mask) if t] or encoded
    best = np.frombuffer(min(pool), dtype=np.uint8).astype(np.int64)
    rep = _mats_to_switch(best[: n * n].reshape(n, n), best[n * n:].reshape(n, n))
    return key, rep


def equivalent(S1: Switch, S2: Switch, mode: EquivalenceMode) -> bool:
    if S1.size != S2.size:
        raise SwitchError(f"sizes differ: {S1.size} vs {S2.size}")
    return canonical_key(S1, mode) == canonical_key(S2, mode)


def automorphisms(S: Switch) -> list[Perm]:
    """All relabelings fixing the tables pointwise."""
    n = S.size
    P, IP = _perm_arrays(n)
    up, down = _mats(S)
    ru = _relabel_all(up, P, IP)
    rd = _relabel_all(down, P, IP)
    hit = (ru == up[None, :, :]).all(axis=(1, 2)) & (rd == down[None, :, :]).all(axis=(1, 2))
    return [tuple(int(x) + 1 for x in P[s]) for s in np.nonzero(hit)[0]]
