"""Exact discriminant forms, overlattices and BHK mirror checks for even lattices."""

import os

from _mirrorlat import (  # noqa: F401
    bhk_transpose,
    check_mirror_pair,
    default_data_dir,
    discriminant_form,
    dual_group_order,
    forms_isomorphic,
    genus,
    identify_lattice,
    lattice,
    milgram_signature,
    mirror_invariants,
    negate_form,
    orbit_lattice,
    overlattice_count,
    verify,
)


def data_dir() -> str:
    """Directory holding the bundled tables and curve configurations."""
    env = os.environ.get("MIRRORLAT_DATA_DIR")
    if env:
        return env
    packaged = os.path.join(os.path.dirname(__file__), "data")
    if os.path.isdir(packaged):
        return packaged
    return default_data_dir()
