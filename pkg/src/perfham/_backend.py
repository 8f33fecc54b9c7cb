"""Select the compiled kernels when available, else the pure-Python ones."""

import os

if os.environ.get("PERFHAM_PURE") == "1":
    from . import _kernels_py as kernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels
        BACKEND = "compiled"
    except ImportError:  # extension not built
        from . import _kernels_py as kernels
        BACKEND = "python"

ColouringSearch = kernels.ColouringSearch
CycleCoverSearch = kernels.CycleCoverSearch

__all__ = ["BACKEND", "ColouringSearch", "CycleCoverSearch"]
