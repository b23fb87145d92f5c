"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled kernel works in int64 and is only used when every coordinate
magnitude stays below ``COORD_LIMIT`` (so all intermediates fit); larger
inputs silently use the arbitrary-precision pure kernel.  Set
``POLYVIS_KERNEL=pure`` or ``POLYVIS_KERNEL=compiled`` to force one side
(forcing ``compiled`` raises if the extension is missing).
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _kernels_py

Coords = Sequence[tuple[int, int]]

COORD_LIMIT = 1 << 29

_forced = os.environ.get("POLYVIS_KERNEL", "").strip().lower()
_compiled = None
if _forced != "pure":
    try:
        from . import _kernels_c as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None
        if _forced == "compiled":
            raise ImportError(
                "POLYVIS_KERNEL=compiled but the polyvis._kernels_c extension "
                "is not built; run `python setup.py build_ext --inplace`"
            )

ACTIVE_KERNEL = "compiled" if _compiled is not None else "pure"


def _fits_int64(coords: Coords) -> bool:
    return all(-COORD_LIMIT < x < COORD_LIMIT and -COORD_LIMIT < y < COORD_LIMIT for x, y in coords)


def _impl(coords: Coords):
    if _compiled is not None and _fits_int64(coords):
        return _compiled
    return _kernels_py


def segment_visible(coords: Coords, i: int, j: int) -> bool:
    return _impl(coords).segment_visible(coords, i, j)


def visibility_edges(coords: Coords) -> list[tuple[int, int]]:
    return _impl(coords).visibility_edges(coords)


def has_collinear_triple(coords: Coords) -> bool:
    return _impl(coords).has_collinear_triple(coords)
