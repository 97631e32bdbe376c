"""Integer hot loops, compiled when the extension is available.

The compiled module ``_ckernels`` is used when it imports; otherwise, or when
the environment variable ``SPERNDEG_PURE_PYTHON`` is set, the pure-Python
twins in ``_pykernels`` are used.  ``BACKEND`` names the active choice.
"""

from __future__ import annotations

import os
from array import array

from . import _pykernels

try:
    if os.environ.get("SPERNDEG_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels as _impl
    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"


def _ints(seq) -> array:
    return seq if isinstance(seq, array) and seq.typecode == "q" else array("q", seq)


def transition_counts(seq, n):
    return _impl.transition_counts(_ints(seq), n)


def table_scan(flat, width, labels, table, n):
    return _impl.table_scan(_ints(flat), width, _ints(labels), table, n)


def distinct_label_simplices(flat, width, labels):
    return _impl.distinct_label_simplices(_ints(flat), width, _ints(labels))


def opposite_pairs(flat, labels):
    return _impl.opposite_pairs(_ints(flat), _ints(labels))


def backends():
    """Available kernel modules by name, for tests and benchmarks."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
