"""Exhaustive enumeration of biracks by column backtracking.

A switch on n labels is 2n permutation columns (up then down actions).
Writing v_a for up column a and e_b for down column b, the Yang-Baxter
axiom B3 splits into three componentwise identities over all triples:

  (A)  v_{v_a(b)} o v_{e_b(a)} = v_a o v_b            (up-up)
  (B)  e_c o e_b = e_{e_c(b)} o e_{v_b(c)}            (down-down)
  (C)  e_{v_{e_b(a)}(c)}(v_a(b)) = v_{e_{v_b(c)}(a)}(e_c(b))   (mixed)

(A) and (B) are permutation equations: as soon as three of their four
columns are assigned the fourth is forced, which prunes the search far
below the naive sweep over all pair permutations.  (C) and the
injectivity of S (B2) are checked incrementally.  With the down table
fixed (the quandle-related searches), (B) turns into a per-cell domain
restriction on the up columns: e_{v_b(c)} is a known permutation, so
v_b(c) must lie in its fiber of the column map x -> e_x.

Deduplication is by canonical key; symmetry breaking never skips
candidates, so the search is exhaustive and the key set exact.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from . import perms, switches, symmetry
from .catalog import Catalog, CatalogEntry, CODE_OF_KIND, EntryName
from .perms import Perm
from .switches import ClassKind, Switch
from .symmetry import EquivalenceMode


class BudgetExceeded(RuntimeError):
    """The configured node budget ran out; no partial results are kept."""


@dataclass(frozen=True)
class SearchOptions:
    size: int
    mode: EquivalenceMode = EquivalenceMode.ISO_PLUS_SYMMETRY
    kind_filter: ClassKind | None = None
    quandle_related: bool = False
    fixed_down: tuple[Perm, ...] | None = None
    node_budget: int = 10**9
    jobs: int = 1


@lru_cache(maxsize=None)
def _perm_space(n: int):
    """All permutations of range(n) with composition/inverse tables."""
    P = [tuple(p) for p in itertools.permutations(range(n))]
    idx = {p: i for i, p in enumerate(P)}
    m = len(P)
    COMP = [[0] * m for _ in range(m)]
    for i, p in enumerate(P):
        row = COMP[i]
        for j, q in enumerate(P):
            row[j] = idx[tuple(p[x] for x in q)]
    INV = [0] * m
    for i, p in enumerate(P):
        inv = [0] * n
        for x, y in enumerate(p):
            inv[y] = x
        INV[i] = idx[tuple(inv)]
    return P, idx, COMP, INV


class _ColumnSearch:
    """Trail-based backtracking over up (and optionally down) columns.

    Labels are 0-based in here; columns hold indices into the shared
    permutation space.  fixed_down pins the whole down table; candidates
    restricts the admissible permutations per up column.
    """

    def __init__(self, n, fixed_down=None, candidates=None, node_budget=10**9,
                 first_column_slice=None):
        self.n = n
        self.P, self.idx, self.COMP, self.INV = _perm_space(n)
        self.v = [None] * n
        self.d = [None] * n
        self.fixed = fixed_down is not None
        self.trail = []
        self.used = set()
        self.pending = set()
        self.nodes = 0
        self.node_budget = node_budget
        self.candidates = candidates
        self.cand_sets = None if candidates is None else [set(c) for c in candidates]
        self.first_column_slice = first_column_slice
        if self.fixed:
            for b, col in enumerate(fixed_down):
                self.d[b] = self.idx[tuple(x - 1 for x in col)]
        rng = range(n)
        self.all_triples = [(a, b, c) for a in rng for b in rng for c in rng]
        self.down_trivial = self.fixed and all(
            self.P[i] == tuple(range(n)) for i in self.d)

    # -- assignment / undo ------------------------------------------------

    def _assign(self, kind, col, val):
        arr = self.v if kind == "v" else self.d
        if arr[col] is not None:
            return arr[col] == val
        if kind == "v" and self.cand_sets is not None and val not in self.cand_sets[col]:
            return False
        arr[col] = val
        self.trail.append((kind, col))
        if self.down_trivial:
            return True
        # incremental B2: record newly defined outputs of S
        P, n = self.P, self.n
        if kind == "v":
            a, pv = col, P[val]
            pairs = ((pv[b] * n + P[self.d[b]][a]) for b in range(n)
                     if self.d[b] is not None)
        else:
            b, pd = col, P[val]
            pairs = ((P[self.v[a]][b] * n + pd[a]) for a in range(n)
                     if self.v[a] is not None)
        for code in pairs:
            if code in self.used:
                return False
            self.used.add(code)
            self.trail.append(("p", code))
        return True

    def _undo(self, mark):
        while len(self.trail) > mark:
            kind, x = self.trail.pop()
            if kind == "v":
                self.v[x] = None
            elif kind == "d":
                self.d[x] = None
            elif kind == "p":
                self.used.discard(x)
            else:
                self.pending.add(x)

    # -- constraint propagation --------------------------------------------

    def _propagate(self):
        P, COMP, INV = self.P, self.COMP, self.INV
        v, d, n = self.v, self.d, self.n
        changed = True
        while changed:
            changed = False
            for a in range(n):
                va = v[a]
                if va is None:
                    continue
                pa = P[va]
                for b in range(n):
                    vb, db = v[b], d[b]
                    if vb is None or db is None:
                        continue
                    i1, i2 = pa[b], P[db][a]
                    rhs = COMP[va][vb]
                    x, y = v[i1], v[i2]
                    if x is not None:
                        if y is not None:
                            if COMP[x][y] != rhs:
                                return False
                        else:
                            if not self._assign("v", i2, COMP[INV[x]][rhs]):
                                return False
                            changed = True
                    elif y is not None:
                        if not self._assign("v", i1, COMP[rhs][INV[y]]):
                            return False
                        changed = True
            if not self.fixed:
                for b in range(n):
                    db, vb = d[b], v[b]
                    if db is None or vb is None:
                        continue
                    for c in range(n):
                        dc = d[c]
                        if dc is None:
                            continue
                        j, k = P[vb][c], P[dc][b]
                        rhs = COMP[dc][db]
                        x, y = d[k], d[j]
                        if x is not None:
                            if y is not None:
                                if COMP[x][y] != rhs:
                                    return False
                            else:
                                if not self._assign("d", j, COMP[INV[x]][rhs]):
                                    return False
                                changed = True
                        elif y is not None:
                            if not self._assign("d", k, COMP[rhs][INV[y]]):
                                return False
                            changed = True
            if self.pending and not self._check_mixed():
                return False
        return True

    def _check_mixed(self):
        """Try pending mixed-identity triples; drop the verified ones."""
        P, v, d = self.P, self.v, self.d
        done = []
        for t in self.pending:
            a, b, c = t
            va, vb, db, dc = v[a], v[b], d[b], d[c]
            if va is None or vb is None or db is None or dc is None:
                continue
            vab = v[P[db][a]]          # v at a_b
            if vab is None:
                continue
            dt = d[P[vab][c]]          # e at c^(a_b)
            if dt is None:
                continue
            dcb = d[P[vb][c]]          # e at c^b
            if dcb is None:
                continue
            va2 = v[P[dcb][a]]         # v at a_(c^b)
            if va2 is None:
                continue
            if P[dt][P[va][b]] != P[va2][P[dc][b]]:
                return False
            done.append(t)
        for t in done:
            self.pending.discard(t)
            self.trail.append(("t", t))
        return True

    # -- the search ---------------------------------------------------------

    def _decision_order(self):
        n = self.n
        if self.fixed:
            cols = list(range(n))
            if self.candidates is not None:
                cols.sort(key=lambda b: len(self.candidates[b]))
            return [("v", b) for b in cols]
        order = []
        for i in range(n):
            order.append(("v", i))
            order.append(("d", i))
        return order

    def run(self):
        """Yield (up, down) tables (1-based column tuples) of every birack."""
        self.pending = set() if self.down_trivial else set(self.all_triples)
        order = self._decision_order()
        m = len(self.P)
        default = list(range(m))
        yield from self._rec(order, 0, default)

    def _rec(self, order, depth, default):
        if depth == len(order):
            yield self._materialize()
            return
        kind, col = order[depth]
        if (self.v if kind == "v" else self.d)[col] is not None:
            yield from self._rec(order, depth + 1, default)
            return
        if kind == "v" and self.candidates is not None:
            values = self.candidates[col]
        else:
            values = default
        if depth == 0 and self.first_column_slice is not None:
            lo, hi = self.first_column_slice
            values = values[lo:hi]
        for val in values:
            self.nodes += 1
            if self.nodes > self.node_budget:
                raise BudgetExceeded(f"search exceeded {self.node_budget} nodes")
            mark = len(self.trail)
            if self._assign(kind, col, val) and self._propagate():
                yield from self._rec(order, depth + 1, default)
            self._undo(mark)

    def _materialize(self):
        up = tuple(tuple(x + 1 for x in self.P[i]) for i in self.v)
        down = tuple(tuple(x + 1 for x in self.P[i]) for i in self.d)
        return up, down


# -- drivers -----------------------------------------------------------------

def _fixed_down_candidates(n, dcols):
    """Per-column admissible up permutations implied by the down-down
    identity (B) when the whole down table is pinned.  Returns None when
    some cell has an empty domain (no birack extends this down table)."""
    P, idx, COMP, INV = _perm_space(n)
    d = [idx[tuple(x - 1 for x in col)] for col in dcols]
    fibers = {}
    for x, di in enumerate(d):
        fibers.setdefault(di, []).append(x)
    allowed = np.zeros((n, n, n), dtype=bool)   # [b, c, x]
    for b in range(n):
        for c in range(n):
            req = COMP[INV[d[P[d[c]][b]]]][COMP[d[c]][d[b]]]
            for x in fibers.get(req, ()):
                allowed[b, c, x] = True
    if not allowed.any(axis=2).all():
        return None
    Pa = np.array(P, dtype=np.int64)
    cand = []
    cols = np.arange(n)[None, :]
    for b in range(n):
        ok = allowed[b][cols, Pa].all(axis=1)
        cand.append([int(i) for i in np.nonzero(ok)[0]])
        if not cand[-1]:
            return None
    return cand


def _raw_search(n, fixed_down=None, candidates=None, node_budget=10**9,
                first_column_slice=None):
    eng = _ColumnSearch(n, fixed_down=fixed_down, candidates=candidates,
                        node_budget=node_budget, first_column_slice=first_column_slice)
    return list(eng.run())


def _search_chunk(args):
    n, fixed_down, candidates, node_budget, chunk = args
    return _raw_search(n, fixed_down, candidates, node_budget, chunk)


def _parallel_raw_search(n, fixed_down, candidates, node_budget, jobs):
    if jobs <= 1:
        return _raw_search(n, fixed_down, candidates, node_budget)
    m = len(_perm_space(n)[0]) if candidates is None else len(candidates[0])
    # the first decision column is the one with the fewest candidates
    if candidates is not None:
        first = min(range(n), key=lambda b: len(candidates[b]))
        m = len(candidates[first])
    bounds = [round(i * m / jobs) for i in range(jobs + 1)]
    tasks = [(n, fixed_down, candidates, node_budget, (bounds[i], bounds[i + 1]))
             for i in range(jobs) if bounds[i] < bounds[i + 1]]
    out = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_search_chunk, tasks):
            out.extend(part)
    return out


_raw_cache: dict = {}


def _cached_raw(n, fixed_down, node_budget, jobs):
    key = (n, fixed_down)
    if key not in _raw_cache:
        candidates = None
        if fixed_down is not None:
            candidates = _fixed_down_candidates(n, fixed_down)
            if candidates is None:
                _raw_cache[key] = []
                return _raw_cache[key]
        _raw_cache[key] = _parallel_raw_search(n, fixed_down, candidates,
                                               node_budget, jobs)
    return _raw_cache[key]


def _build_catalog(table_pairs, n, mode, kind_filter=None) -> Catalog:
    reps: dict[bytes, Switch] = {}
    for up, down in table_pairs:
        S = Switch(n, up, down)
        key, rep = symmetry.key_and_rep(S, mode)
        if key not in reps:
            reps[key] = rep
    entries = []
    counters = {"Q": 0, "R": 0, "BQ": 0, "BR": 0}
    for key in sorted(reps):
        rep = reps[key]
        report = switches.verify_axioms(rep)
        assert report.is_birack(), f"enumerator emitted a non-birack: {rep!r}"
        kind = switches.classify(rep)
        if kind_filter is not None and kind is not kind_filter:
            continue
        code = CODE_OF_KIND[kind]
        counters[code] += 1
        entries.append(CatalogEntry(
            name=EntryName(code, counters[code], n),
            switch=rep, kind=kind,
            fingerprint=switches.fingerprint(rep), key=key))
    return Catalog(n, mode, tuple(entries))


def enumerate_biracks(opts: SearchOptions) -> Catalog:
    """All biracks of the given size up to the chosen equivalence.

    The full two-table search is intended for size <= 4; for 5 and 6 use
    the quandle-related search.  Raises BudgetExceeded (never emitting a
    partial catalog) if the node budget runs out.
    """
    if opts.quandle_related:
        return enumerate_quandle_related(opts.size, opts.mode,
                                         node_budget=opts.node_budget, jobs=opts.jobs)
    raws = _cached_raw(opts.size, opts.fixed_down, opts.node_budget, opts.jobs)
    return _build_catalog(raws, opts.size, opts.mode, opts.kind_filter)


def _quandle_candidates(n):
    """Up columns of a quandle: column a must fix a."""
    P, _, _, _ = _perm_space(n)
    return [[i for i, p in enumerate(P) if p[a] == a] for a in range(n)]


@lru_cache(maxsize=None)
def _quandle_raws(n: int, node_budget: int = 10**9):
    ident = (perms.identity(n),) * n
    eng = _ColumnSearch(n, fixed_down=ident, candidates=_quandle_candidates(n),
                        node_budget=node_budget)
    return tuple(eng.run())


def quandle_catalog(n: int, mode: EquivalenceMode = EquivalenceMode.ISO_ONLY,
                    node_budget: int = 10**9) -> Catalog:
    """All quandles of size n up to the chosen equivalence."""
    return _build_catalog(_quandle_raws(n, node_budget), n, mode)


def enumerate_quandle_related(n: int, mode: EquivalenceMode = EquivalenceMode.ISO_PLUS_SYMMETRY,
                              node_budget: int = 10**9, jobs: int = 1) -> Catalog:
    """Biracks whose down table alone is a quandle, up to the chosen mode.

    The down table ranges over iso-only quandle representatives (every
    quandle-related class has a member with its down table equal to one
    of those, so the sweep is complete in both modes); results are then
    deduplicated under the requested mode.  The trivial quandle slice
    reproduces the full list of racks.
    """
    qcat = quandle_catalog(n, EquivalenceMode.ISO_ONLY, node_budget)
    raws = []
    for q in qcat.entries:
        raws.extend(_cached_raw(n, q.switch.up, node_budget, jobs))
    return _build_catalog(raws, n, mode)


def normalize_entry(S: Switch) -> Switch:
    """Swap the tables when exactly one of them is trivial, so racks are
    presented with the trivial action downstairs."""
    up_triv = switches.is_trivial_table(S.up)
    down_triv = switches.is_trivial_table(S.down)
    if up_triv and not down_triv:
        return Switch(S.size, S.down, S.up)
    return S


def brute_force_catalog(n: int, mode: EquivalenceMode = EquivalenceMode.ISO_PLUS_SYMMETRY) -> Catalog:
    """Oracle enumerator: sweep all (n!)^(2n) table pairs, filter by the
    axioms checked directly, dedup by orbit.  Feasible for n <= 3 only."""
    if n > 3:
        raise ValueError("brute force sweep is for n <= 3")
    cols = perms.all_perms(n)
    found = []
    for combo in itertools.product(cols, repeat=2 * n):
        up, down = combo[:n], combo[n:]
        S = Switch(n, up, down)
        report = switches.verify_axioms(S)
        if report.is_birack():
            found.append((up, down))
    return _build_catalog(found, n, mode)
