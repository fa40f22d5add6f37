"""Finite biracks and biquandles as permutation action tables, their
enumeration up to isomorphism and symmetry, and the virtual/welded knot
invariants they carry (fixed-point counts of braid representations,
essential pair search, writhe-indexed coefficient series)."""

from .perms import Perm
from .switches import (
    AxiomReport,
    ClassKind,
    Fingerprint,
    NotInvertibleError,
    Switch,
    SwitchError,
    SwitchFormError,
    apply,
    classify,
    fingerprint,
    inverse,
    make_switch,
    verify_axioms,
)
from .symmetry import (
    CanonicalKey,
    EquivalenceMode,
    SymmetryElement,
    automorphisms,
    canonical_key,
    equivalent,
    relabel,
    symmetry_image,
)
from .constructions import GroupTable, alexander, burau, cyclic_group, make_group, twist, wada

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
