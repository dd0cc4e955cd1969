"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python twin
is the fallback. Set ``BIVAR_KERNEL=pure`` or ``BIVAR_KERNEL=compiled``
to force one side (forcing the compiled kernel raises ImportError when
the extension was not built).
"""

import os

_FORCED = os.environ.get("BIVAR_KERNEL", "").strip().lower()

if _FORCED in ("pure", "py", "python"):
    from . import _kernel_py as _impl
elif _FORCED in ("compiled", "c", "ext"):
    from . import _kernel as _impl  # type: ignore[attr-defined]
elif _FORCED:
    raise ValueError(f"unknown BIVAR_KERNEL value {_FORCED!r}; use 'pure' or 'compiled'")
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND

tensor_sum_bcd = _impl.tensor_sum_bcd
tensor_sum_a = _impl.tensor_sum_a
