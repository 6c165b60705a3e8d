"""Select the compiled kernel when it is importable, else the pure-Python one.

Set ``PERIMOD_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and by the kernel-equivalence tests).
"""

from __future__ import annotations

import os

if os.environ.get("PERIMOD_PURE_PYTHON") == "1":
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

IMPLEMENTATION: str = _impl.IMPLEMENTATION
poly_submul = _impl.poly_submul
vec_submul = _impl.vec_submul
vec_scale = _impl.vec_scale
vec_shift = _impl.vec_shift
vec_lead = _impl.vec_lead
top_reduce = _impl.top_reduce
full_reduce = _impl.full_reduce
max_degree = _impl.max_degree
