"""Kernel backend selection.

The compiled extension is used when it was built; otherwise, or when the
``ANNIGRAPH_PURE_PYTHON`` environment variable is set to a non-empty value
other than ``0``, the numpy implementation is used.  ``BACKEND`` names the
active one.
"""

from __future__ import annotations

import os

from . import _pykernels

_force_python = os.environ.get("ANNIGRAPH_PURE_PYTHON", "") not in ("", "0")

_impl = _pykernels
BACKEND = "python"
if not _force_python:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

INDEX = _pykernels.INDEX

axiom_violation = _impl.axiom_violation
sumset = _impl.sumset
prodset = _impl.prodset
additive_closure = _impl.additive_closure
annihilator = _impl.annihilator
ai_witness = _impl.ai_witness
nilpotent_elements = _impl.nilpotent_elements
bfs_distances = _impl.bfs_distances
girth = _impl.girth


def available_backends() -> dict:
    """Map backend name to module for every backend importable here."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels

        found["cython"] = _ckernels
    except ImportError:
        pass
    return found
