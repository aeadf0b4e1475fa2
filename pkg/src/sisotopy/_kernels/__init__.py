"""Backend selection for the search kernels.

The compiled module is used when it was built and imports cleanly; otherwise the
pure-Python twin takes over.  Set ``SISOTOPY_PURE_PYTHON=1`` to force the
fallback (the test suite and the benchmark load both explicitly).
"""

import os

from . import _pykernels

BACKENDS = {"python": _pykernels}

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None
else:
    BACKENDS["cython"] = _ckernels

if _ckernels is not None and not os.environ.get("SISOTOPY_PURE_PYTHON"):
    _active = _ckernels
    BACKEND = "cython"
else:
    _active = _pykernels
    BACKEND = "python"

hom_search = _active.hom_search
autotopisms = _active.autotopisms
first_nonassociative = _active.first_nonassociative

__all__ = ["BACKEND", "BACKENDS", "hom_search", "autotopisms", "first_nonassociative"]
