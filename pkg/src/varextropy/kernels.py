"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the numpy
fallback is used. Set the environment variable VAREXTROPY_NO_EXTENSION to
any non-empty value before import to force the fallback. Both backends
produce bit-identical results, so the choice never affects output, only
speed.
"""

import os

from . import _kernels_py

if os.environ.get("VAREXTROPY_NO_EXTENSION"):
    _impl = _kernels_py
    BACKEND = "numpy"
else:
    try:
        from . import _kernels as _compiled
    except ImportError:
        _impl = _kernels_py
        BACKEND = "numpy"
    else:
        _impl = _compiled
        BACKEND = "compiled"

spacing_stat_batch = _impl.spacing_stat_batch
