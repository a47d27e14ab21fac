"""Kernel selection: compiled extension when present, numpy otherwise.

Both implementations produce identical int64 histograms; the extension only
changes speed.  Set TWL_KERNEL=numpy to force the fallback.
"""

import os

from . import numpy_impl

try:
    from . import _native
except ImportError:
    _native = None

if _native is not None and os.environ.get("TWL_KERNEL") != "numpy":
    _impl = _native
else:
    _impl = numpy_impl

IMPL = _impl.IMPL
HAVE_NATIVE = _native is not None

two_zero_counts = _impl.two_zero_counts
irreducible_counts = numpy_impl.irreducible_counts  # cheap enough everywhere
