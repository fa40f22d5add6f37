"""Shipped fixture data: the published size-2/3 lists, the named size-4
and size-6 switches, the essential pairs P1..P13, and the welded-knot
table with its expected fixed-point counts.

Everything textual lives in the fixtures/ directory in the catalog file
format and is re-verified on load (declared kinds and annotations are
checked against recomputed axioms and fingerprints), so a transcription
slip cannot pass silently.  An optional fixtures/optional_words.txt may
supply extra braid words (for instance the third Kishino knot, whose
word is not printed in our sources); it is consumed if present, never
required.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from . import catalog as catalog_mod
from .switches import Switch

PAIR_DEFS = {
    "P1": ("BQ_3^3", "Q_1^3"),
    "P2": ("Q_3^3", "BQ_5^3"),
    "P3": ("BQ_3^4", "Q_1^4"),
    "P4": ("BQ_19^4", "Q_1^4"),
    "P5": ("BQ_34^4", "BQ_23^4"),
    "P6": ("BQ_38^4", "BQ_39^4"),
    "P7": ("BQ_41^4", "BQ_39^4"),
    "P8": ("BQ_56^4", "BQ_50^4"),
    "P9": ("Q_6^4", "BQ_50^4"),
    "P10": ("BQ_51^4", "Q_1^4"),
    "P11": ("BQ_10^6", "BQ_1494^6"),
    "P12": ("BQ_22^6", "BQ_1494^6"),
    "P13": ("BQ_49^6", "BQ_230^6"),
}

# welded knots: strand count, braid word, published fixed-point counts
# per pair (absent cells were not printed; they are frozen as computed
# regression values in the test suite, not asserted against the table)
WELDED_TABLE = {
    "w3.1": (4, "s1 t2 s3 -s2 -s2 -s1 t2 -s3 s2",
             {"P3": 10, "P4": 4, "P11": 6, "P12": 6, "P13": 6}),
    "w3.2": (3, "t1 -s2 t1 -s1 -s1 t2",
             {"P3": 10, "P4": 16, "P11": 6, "P12": 6, "P13": 6}),
    "w4.1": (3, "s1 t1 -s1 s2 s1 t1 -s1 -s2",
             {"P3": 10, "P4": 4, "P11": 26, "P12": 6, "P13": 6}),
    "w4.2": (5, "-s1 -s2 s3 t2 s1 -s4 s3 t2 s3 s4 -s3 -s2",
             {"P3": 10, "P4": 4, "P11": 6, "P12": 6, "P13": 26}),
    "w4.3": (5, "-s1 s2 s3 t2 s1 -s4 s3 t2 s3 s4 -s3 s2",
             {"P3": 4, "P4": 4, "P11": 26, "P12": 26, "P13": 6}),
    "w4.4": (5, "-s1 s2 s3 t2 s1 -s4 s3 -s2 s3 s4 -s3 t2",
             {"P3": 4, "P4": 4, "P11": 6, "P12": 26, "P13": 6}),
    "w4.5": (3, "t1 s2 -s1 t1 s1 s2",
             {"P3": 4, "P4": 16, "P11": 6, "P12": 6, "P13": 6}),
    "w4.6": (5, "-s1 -s2 t3 -s2 s1 -s4 t3 -s2 -s3 s4 -s3 s2",
             {"P3": 4, "P4": 4, "P11": 6, "P12": 26, "P13": 26}),
    "w6.1": (4, "-s1 -s2 -s2 -s2 s1 -s3 -s2 -s2 -s2 s3 t2",
             {"P3": 28, "P4": 28}),
}

# classical/virtual knots used for the coefficient series table
KNOT_WORDS = {
    "trefoil": (2, "s1 s1 s1"),
    "figure8": (3, "s1 -s2 s1 -s2"),
    "K1": (3, "s1 -s2 -s1 t2 s1 s2 -s1 t2"),
    "K2": (3, "-s1 -s2 s1 t2 -s1 s2 s1 t2"),
}

KISHINO_PAIR = ("BQ_53^4", "BQ_26^4")


def _read(fname: str) -> str:
    return (resources.files("biracks") / "fixtures" / fname).read_text()


@lru_cache(maxsize=None)
def appendix_entries(n: int):
    if n not in (2, 3):
        raise KeyError(f"no appendix fixture for size {n}")
    return tuple(catalog_mod.parse_catalog(_read(f"appendix_n{n}.txt"),
                                           check_annotations=True))


@lru_cache(maxsize=None)
def named_entries():
    return tuple(catalog_mod.parse_catalog(_read("named_switches.txt")))


@lru_cache(maxsize=None)
def _switch_index() -> dict[str, Switch]:
    out = {}
    for n in (2, 3):
        for e in appendix_entries(n):
            out[str(e.name)] = e.switch
    for e in named_entries():
        out[str(e.name)] = e.switch
    return out


def switch_by_name(name: str) -> Switch:
    try:
        return _switch_index()[name]
    except KeyError:
        raise KeyError(f"unknown fixture switch {name!r}") from None


def pair(name: str) -> tuple[Switch, Switch]:
    try:
        sname, tname = PAIR_DEFS[name]
    except KeyError:
        raise KeyError(f"unknown fixture pair {name!r}") from None
    return switch_by_name(sname), switch_by_name(tname)


@lru_cache(maxsize=None)
def optional_words() -> dict[str, tuple[int, str]]:
    """Extra braid words dropped into fixtures/optional_words.txt as
    ``name strands word...`` lines, if the file exists."""
    try:
        text = _read("optional_words.txt")
    except FileNotFoundError:
        return {}
    out = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name, strands, word = line.split(None, 2)
        out[name] = (int(strands), word)
    return out
