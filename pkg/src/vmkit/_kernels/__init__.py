"""Kernel backend selection.

Prefers the compiled extension when it imported cleanly; otherwise (or
when ``VMKIT_PURE=1`` is set) falls back to the pure-Python twin.  Both
backends expose ``rank_masks``, ``cutrank_table`` and ``depth_levels``
with identical semantics; ``BACKEND`` names the one in use.
"""

import os

from vmkit._kernels import pure

if os.environ.get("VMKIT_PURE") == "1":
    _impl = pure
    BACKEND = "python"
else:
    try:
        from vmkit._kernels import _fastcore as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = pure
        BACKEND = "python"

rank_masks = _impl.rank_masks
cutrank_table = _impl.cutrank_table
depth_levels = _impl.depth_levels
