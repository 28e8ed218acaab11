"""Stable h-gons of Dynkin type and the total stability conditions they model."""

__version__ = "0.1.0"

from .dynkin import DynkinType, standard_orientation, folding_data
from .arquiver import ArQuiver, build as build_ar_quiver
from .hgon import (HGon, InvalidHGon, DegenerateHGon, StabilityReport, validate, is_stable,
                   build_cores, relation_rank, from_free_coordinates, sample_near_regular,
                   regular, ice_fire_boundary_check)
from .charge import CentralCharge, charge_from_hgon, farend_polygon, verify_mesh, all_orbit_polygons
from .tost import (PhaseAssignment, TotalityReport, build_slicing, check_total, gldim, gepner,
                   gepner_vs_coxeter, roundtrip_zh, tost_pipeline)

__all__ = [
    "DynkinType", "standard_orientation", "folding_data", "ArQuiver", "build_ar_quiver",
    "HGon", "InvalidHGon", "DegenerateHGon", "StabilityReport", "validate", "is_stable",
    "build_cores", "relation_rank", "from_free_coordinates", "sample_near_regular", "regular",
    "ice_fire_boundary_check", "CentralCharge", "charge_from_hgon", "farend_polygon",
    "verify_mesh", "all_orbit_polygons", "PhaseAssignment", "TotalityReport", "build_slicing",
    "check_total", "gldim", "gepner", "gepner_vs_coxeter", "roundtrip_zh", "tost_pipeline",
]
