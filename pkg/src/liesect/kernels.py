"""Backend selection for the hot integer kernels.

The compiled Cython extension is preferred when present; the pure
Python/numpy fallback is always available.  Set LIESECT_KERNELS=python to
force the fallback (used by the benchmark and for debugging).
"""

from __future__ import annotations

import os

from ._kernels_py import EnumerationBound  # noqa: F401  (single exception type)

if os.environ.get("LIESECT_KERNELS", "").lower() in ("python", "py"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND
weyl_enumerate = _impl.weyl_enumerate
conjugacy_classes = _impl.conjugacy_classes
gram_backtrack = _impl.gram_backtrack
