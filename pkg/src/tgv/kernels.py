"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set TGV_PURE=1 to force the fallback even when the extension is built (used by
the benchmark and by tests that compare the two implementations).
"""

from __future__ import annotations

import os

from . import _pykernels as pure

try:
    from . import _speedups as compiled  # type: ignore[attr-defined]
except ImportError:
    compiled = None

if compiled is not None and not os.environ.get("TGV_PURE"):
    _active = compiled
else:
    _active = pure

HAVE_COMPILED = compiled is not None
IS_COMPILED = bool(getattr(_active, "IS_COMPILED", False))

distance_census = _active.distance_census
local_census = _active.local_census
adjacency = _active.adjacency
