"""Hot table kernels.

The compiled module ``_ccore`` is used when it was built; otherwise the numpy
implementation in ``_pycore`` is selected. Set ``CENTLAB_PURE=1`` to force the
fallback.
"""
import os

from . import _pycore

BACKEND = "python"
if not os.environ.get("CENTLAB_PURE"):
    try:
        from . import _ccore as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pycore
else:
    _impl = _pycore

closure = _impl.closure
extend_hom = _impl.extend_hom
commute_matrix = _impl.commute_matrix
assoc_violation = _impl.assoc_violation
assoc_violation_all = _impl.assoc_violation_all

__all__ = [
    "BACKEND",
    "closure",
    "extend_hom",
    "commute_matrix",
    "assoc_violation",
    "assoc_violation_all",
]
