"""Kernel backend selection: compiled Cython core with a pure-Python fallback.

Set FACBAL_PURE_PYTHON=1 to force the fallback (used by the benchmark and by
backend-parity tests).
"""

import os

if os.environ.get("FACBAL_PURE_PYTHON"):
    from . import _pykern as _impl

    BACKEND = "pure-python"
else:
    try:
        from . import _ckern as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _pykern as _impl  # type: ignore[no-redef]

        BACKEND = "pure-python"

bfs_distances = _impl.bfs_distances
eccentricities = _impl.eccentricities
ball_sizes = _impl.ball_sizes
accumulate_scores = _impl.accumulate_scores
enumerate_placements = _impl.enumerate_placements
matvec = _impl.matvec

__all__ = [
    "BACKEND",
    "bfs_distances",
    "eccentricities",
    "ball_sizes",
    "accumulate_scores",
    "enumerate_placements",
    "matvec",
]
