"""Catalog text format, entry naming, and fixture alignment.

One entry per line:

    BQ_3^3 U=(i,(132),(123)) D=((23),(23),(23)) order=3 flags=PQ c1=3 c2=3

Names are KIND_index^size with KIND one of Q (quandle), R (rack that is
not a quandle), BQ (biquandle that is not a quandle), BR (birack that is
neither).  ``I`` abbreviates a whole row of identity columns, ``i`` the
identity permutation inside a row.  The order/flags/c1/c2 trailers are
optional; ``#`` starts a comment.

The S flag marks equal tables; PQ and DPQ mark one or both tables having
all columns equal, and are only attached to biquandle-kind entries (a
quandle's trivial table would make the flag vacuous).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import perms, switches, symmetry
from .perms import Perm
from .switches import ClassKind, Fingerprint, Switch
from .symmetry import EquivalenceMode


class CatalogError(ValueError):
    pass


class CatalogSyntaxError(CatalogError):
    def __init__(self, line: int, col: int, msg: str):
        super().__init__(f"line {line}, col {col}: {msg}")
        self.line = line
        self.col = col


class AlignmentError(CatalogError):
    pass


KIND_CODES = {
    "Q": ClassKind.QUANDLE,
    "R": ClassKind.RACK,
    "BQ": ClassKind.BIQUANDLE,
    "BR": ClassKind.BIRACK,
}
CODE_OF_KIND = {v: k for k, v in KIND_CODES.items()}

_NAME_RE = re.compile(r"^(BQ|BR|Q|R)_(\d+)\^(\d+)$")


@dataclass(frozen=True, order=True)
class EntryName:
    kind: str
    index: int
    size: int

    def __str__(self):
        return f"{self.kind}_{self.index}^{self.size}"

    @classmethod
    def parse(cls, text: str) -> "EntryName":
        m = _NAME_RE.match(text)
        if not m:
            raise CatalogError(f"bad entry name {text!r}")
        return cls(m.group(1), int(m.group(2)), int(m.group(3)))


@dataclass(frozen=True)
class CatalogEntry:
    name: EntryName
    switch: Switch
    kind: ClassKind
    fingerprint: Fingerprint
    key: bytes
    declared: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class Catalog:
    size: int
    mode: EquivalenceMode
    entries: tuple[CatalogEntry, ...]

    def counts(self) -> dict[str, int]:
        out = {"quandles": 0, "racks": 0, "biquandles": 0, "biracks": 0}
        names = {
            ClassKind.QUANDLE: "quandles",
            ClassKind.RACK: "racks",
            ClassKind.BIQUANDLE: "biquandles",
            ClassKind.BIRACK: "biracks",
        }
        for e in self.entries:
            out[names[e.kind]] += 1
        return out

    def by_name(self, name) -> CatalogEntry:
        if isinstance(name, str):
            name = EntryName.parse(name)
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(str(name))

    def by_key(self, key: bytes) -> CatalogEntry:
        for e in self.entries:
            if e.key == key:
                return e
        raise KeyError(key.hex())

    def select(self, *kinds: ClassKind) -> list[CatalogEntry]:
        return [e for e in self.entries if e.kind in kinds]

    def biquandle_entries(self) -> list[CatalogEntry]:
        return self.select(ClassKind.QUANDLE, ClassKind.BIQUANDLE)


def flags_str(kind: ClassKind, fp: Fingerprint) -> str:
    flags = []
    if fp.symmetric:
        flags.append("S")
    if kind is ClassKind.BIQUANDLE:
        if fp.pseudo_up and fp.pseudo_down:
            flags.append("DPQ")
        elif fp.pseudo_up or fp.pseudo_down:
            flags.append("PQ")
    return ",".join(flags)


def _parse_table(text: str, line: int, col: int) -> tuple[Perm, ...]:
    if text == "I":
        raise CatalogSyntaxError(line, col, "size of I row unknown here")  # handled by caller
    if not (text.startswith("(") and text.endswith(")")):
        raise CatalogSyntaxError(line, col, f"table must be I or (..): {text!r}")
    parts = text[1:-1].split(",")
    n = len(parts)
    try:
        return tuple(perms.parse_cycles(p, n) for p in parts)
    except perms.PermError as exc:
        raise CatalogSyntaxError(line, col, str(exc)) from exc


def parse_entry_tables(utext: str, dtext: str, line: int = 0) -> Switch:
    """Parse the U=/D= payloads (either may be I when the other fixes n)."""
    if utext == "I" and dtext == "I":
        raise CatalogSyntaxError(line, 0, "cannot infer size from U=I D=I")
    if utext == "I":
        down = _parse_table(dtext, line, 0)
        up = (perms.identity(len(down)),) * len(down)
    elif dtext == "I":
        up = _parse_table(utext, line, 0)
        down = (perms.identity(len(up)),) * len(up)
    else:
        up = _parse_table(utext, line, 0)
        down = _parse_table(dtext, line, 0)
    if len(up) != len(down):
        raise CatalogSyntaxError(line, 0, f"table sizes differ: {len(up)} vs {len(down)}")
    return switches.make_switch(up, down)


_LINE_RE = re.compile(
    r"^(?P<name>\S+)\s+U=(?P<u>\S+)\s+D=(?P<d>\S+)(?P<rest>(\s+\w+=\S+)*)\s*$"
)


def parse_catalog(text: str, mode: EquivalenceMode = EquivalenceMode.ISO_PLUS_SYMMETRY,
                  check_annotations: bool = False) -> list[CatalogEntry]:
    """Parse catalog text.  Declared kinds are always verified against the
    axioms; with check_annotations the order/flags/c1/c2 trailers are
    verified against the recomputed fingerprint as well."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        m = _LINE_RE.match(stripped)
        if not m:
            col = len(raw) - len(raw.lstrip()) + 1
            raise CatalogSyntaxError(lineno, col, f"cannot parse entry line: {stripped!r}")
        name = EntryName.parse(m.group("name"))
        S = parse_entry_tables(m.group("u"), m.group("d"), lineno)
        if S.size != name.size:
            raise CatalogSyntaxError(lineno, 1, f"{name}: table size {S.size} != declared size")
        kind = switches.classify(S)
        if KIND_CODES[name.kind] is not kind:
            raise CatalogError(
                f"line {lineno}: {name} declared {name.kind} but axioms give {kind.value}")
        fp = switches.fingerprint(S)
        declared = {}
        for item in m.group("rest").split():
            k, v = item.split("=", 1)
            declared[k] = v
        if check_annotations:
            _check_annotations(name, kind, fp, declared, lineno)
        entries.append(CatalogEntry(
            name=name, switch=S, kind=kind, fingerprint=fp,
            key=symmetry.canonical_key(S, mode), declared=declared))
    return entries


def _check_annotations(name, kind, fp, declared, lineno):
    checks = {
        "order": str(fp.order),
        "c1": str(fp.c1),
        "c2": str(fp.c2),
        "flags": flags_str(kind, fp),
    }
    for k, want in checks.items():
        if k in declared and declared[k] != want:
            raise CatalogError(
                f"line {lineno}: {name} declares {k}={declared[k]} but recomputed {k}={want}")


def _emit_table(table) -> str:
    if switches.is_trivial_table(table):
        return "I"
    return "(" + ",".join(perms.format_cycles(p) for p in table) + ")"


def emit_entry(entry: CatalogEntry, annotations: bool = True) -> str:
    parts = [str(entry.name), f"U={_emit_table(entry.switch.up)}", f"D={_emit_table(entry.switch.down)}"]
    if annotations:
        parts.append(f"order={entry.fingerprint.order}")
        flags = flags_str(entry.kind, entry.fingerprint)
        if flags:
            parts.append(f"flags={flags}")
        parts.append(f"c1={entry.fingerprint.c1}")
        parts.append(f"c2={entry.fingerprint.c2}")
    return " ".join(parts)


def emit_catalog(entries, annotations: bool = True) -> str:
    return "".join(emit_entry(e, annotations) + "\n" for e in entries)


@dataclass(frozen=True)
class AlignmentResult:
    mapping: dict  # fixture name (str) -> canonical key
    matched: dict  # fixture name (str) -> catalog EntryName
    unmatched_catalog: tuple


def align_with_fixtures(catalog: Catalog, fixture_entries) -> AlignmentResult:
    """Match each fixture entry to exactly one catalog entry under the
    catalog's equivalence mode.  A fixture with no match signals an
    enumeration bug, an ambiguous match a dedup bug; both raise."""
    by_key: dict[bytes, list[CatalogEntry]] = {}
    for e in catalog.entries:
        by_key.setdefault(e.key, []).append(e)
    mapping, matched = {}, {}
    used = set()
    for fx in fixture_entries:
        key = symmetry.canonical_key(fx.switch, catalog.mode)
        hits = by_key.get(key, [])
        if not hits:
            raise AlignmentError(f"fixture {fx.name} has no catalog match")
        if len(hits) > 1:
            raise AlignmentError(f"fixture {fx.name} matches {len(hits)} catalog entries")
        mapping[str(fx.name)] = key
        matched[str(fx.name)] = hits[0].name
        used.add(key)
    unmatched = tuple(e.name for e in catalog.entries if e.key not in used)
    return AlignmentResult(mapping, matched, unmatched)
