"""Backend selection for the graph kernels.

Imports the compiled extension when it is available and falls back to the
pure-Python implementation otherwise; ``BACKEND`` records which one is live.
Both expose the same four functions (``make_handle``, ``fold_arcs``,
``trace``, ``scan_loops``).  Set CONJSEP_BACKEND=python to force the
fallback.
"""

import os

if os.environ.get("CONJSEP_BACKEND") == "python":
    from . import _pykernel as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernel as _impl

        BACKEND = "c"
    except ImportError:  # extension not built
        from . import _pykernel as _impl

        BACKEND = "python"

make_handle = _impl.make_handle
fold_arcs = _impl.fold_arcs
trace = _impl.trace
scan_loops = _impl.scan_loops
