"""Kernel selection: compiled extension with a pure-Python fallback.

The Cython extension ``_ckern`` is built at install time when a compiler is
available.  Set ``HOPFSHARP_KERNELS=py`` to force the pure-Python kernels
(used by the benchmark to compare both).
"""

import os

from . import _pykern

if os.environ.get("HOPFSHARP_KERNELS") == "py":
    _impl = _pykern
else:
    try:
        from . import _ckern as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykern

IMPL = _impl.IMPL
convolve = _impl.convolve
pack_pair = _impl.pack_pair
int_rank = _impl.int_rank
mod_rank = _impl.mod_rank

PY = _pykern

__all__ = ["IMPL", "convolve", "pack_pair", "int_rank", "mod_rank", "PY"]
