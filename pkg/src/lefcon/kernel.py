"""Backend selection for the row-reduction kernel.

Prefers the compiled extension (`lefcon._rowreduce`) and falls back to the
pure-Python reference (`lefcon._rowreduce_py`).  Set ``LEFCON_PURE_PYTHON=1``
to force the fallback; both backends are exact and bit-identical, so the
choice only affects speed.
"""

import os

if os.environ.get("LEFCON_PURE_PYTHON"):
    from . import _rowreduce_py as _impl
else:
    try:
        from . import _rowreduce as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _rowreduce_py as _impl

BACKEND = _impl.BACKEND_NAME

rref = _impl.rref
matmul = _impl.matmul
