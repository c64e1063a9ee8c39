from .sturm import count_real_roots, isolate_real_roots, sturm_sequence
from .certify import RootDisk, certify_roots
from .analysis import (
    half_plane_check,
    real_root_count,
    unit_disk_check,
    w_correspondence_defect,
    w_transform,
)

__all__ = [
    "count_real_roots",
    "isolate_real_roots",
    "sturm_sequence",
    "RootDisk",
    "certify_roots",
    "half_plane_check",
    "real_root_count",
    "unit_disk_check",
    "w_correspondence_defect",
    "w_transform",
]
