"""Strutture G2 esplicite: BGGG, Bryant-Salamon completa, cono"""

from src.core.geometry.profiles import (
    Geometry, ProfileSet, make_profiles, validate_profiles,
)
from src.core.geometry.structures import (
    SU3Structure, G2Forms, TorsionResult,
    su3_structure, g2_forms, torsion_residual, spatial_part,
)
