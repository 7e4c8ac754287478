"""Stored geometric fixtures."""

from __future__ import annotations

import json
from pathlib import Path

from ababfree.geometry import Disk, PointSet, StabbedDiskFamily
from ababfree.geometry.rational import point

DATA = Path(__file__).parent / "data"


def disk_triangle() -> tuple[PointSet, StabbedDiskFamily]:
    """Three points and three disks through the origin, each holding exactly two points."""
    doc = json.loads((DATA / "disk_triangle.json").read_text())
    disks = tuple(Disk(d["cx"], d["cy"], d["r2"]) for d in doc["disks"])
    return PointSet(tuple(point(p) for p in doc["points"])), StabbedDiskFamily(disks, point(doc["stab"]))
