"""Geodesics, tilings, ball packings and coverings in the SL(2,R)~ geometry."""

__version__ = "0.1.0"

from slrgeom.cylinders import Cylinder, max_touching_radius, touching_radius, translated_base_circle
from slrgeom.densities import covering_density, generate_table, packing_density, verify_theorem_5_1
from slrgeom.errors import (DomainError, GeometryError, InvalidArgument, NumericalError,
                            ParameterDomainError, UnsupportedOperation)
from slrgeom.geodesics import GeodesicInitial, geodesic_closed_form, geodesic_ode
from slrgeom.model import E0, Isometry, ProjPoint
from slrgeom.tilings import TilingParams, base_area, group_generators, validate

__all__ = [
    "Cylinder", "max_touching_radius", "touching_radius", "translated_base_circle",
    "covering_density", "generate_table", "packing_density", "verify_theorem_5_1",
    "DomainError", "GeometryError", "InvalidArgument", "NumericalError",
    "ParameterDomainError", "UnsupportedOperation",
    "GeodesicInitial", "geodesic_closed_form", "geodesic_ode",
    "E0", "Isometry", "ProjPoint",
    "TilingParams", "base_area", "group_generators", "validate",
]
