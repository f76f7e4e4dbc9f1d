"""sl2 crystal combinatorics: combinatorial R, local energy distributions,
the KKR bijection and box-ball evolutions."""

from .crystal import (AffineElement, RowElement, RPair, apply_R, apply_R_affine, apply_R_diagram,
                      apply_R_piecewise, energy, is_highest)
from .kkr import InvalidConfiguration, RiggedConfig, phi_classical, phi_inverse, rc_equal
from .led import (LocalEnergyTable, SolitonGroup, extract_groups_bottomup, extract_groups_topdown,
                  local_energy_table, phi_crystal, rigging)

__all__ = [
    "AffineElement", "RowElement", "RPair", "apply_R", "apply_R_affine", "apply_R_diagram",
    "apply_R_piecewise", "energy", "is_highest", "InvalidConfiguration", "RiggedConfig",
    "phi_classical", "phi_inverse", "rc_equal", "LocalEnergyTable", "SolitonGroup",
    "extract_groups_bottomup", "extract_groups_topdown", "local_energy_table", "phi_crystal",
    "rigging",
]
