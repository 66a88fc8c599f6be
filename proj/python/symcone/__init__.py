"""Symmetric Shannon cones: orbit structures, extreme rays, certificates, classification."""

from ._core import (
    ClassificationContradiction,
    ParseError,
    acceptance,
    certify,
    classify,
    cone,
    data_dir,
    group_order,
    orbits,
    rays,
    subgroup_classes,
)

__all__ = [
    "ClassificationContradiction",
    "ParseError",
    "acceptance",
    "certify",
    "classify",
    "cone",
    "data_dir",
    "group_order",
    "orbits",
    "rays",
    "subgroup_classes",
]
