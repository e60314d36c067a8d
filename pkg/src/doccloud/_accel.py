"""Loader for the compiled kernels.

`speedups` is the compiled module or None. The pure-Python code paths are
the reference implementation; the extension mirrors them byte-for-byte
(enforced by the equivalence tests). Set DOCCLOUD_PURE=1 to force the
pure-Python paths even when the extension is installed.
"""

import os

speedups = None
if not os.environ.get("DOCCLOUD_PURE"):
    try:
        from doccloud import _speedups as speedups  # type: ignore[no-redef]
    except ImportError:
        speedups = None


def backend() -> str:
    """Name of the active kernel implementation: 'c' or 'python'."""
    return "c" if speedups is not None else "python"
