"""Bindings for the tqft library: fusion data, Turaev-Viro and surgery invariants, centers, indicators."""

import os as _os

# Wheels carry the bundled fixtures next to the module.
_here = _os.path.join(_os.path.dirname(__file__), "data")
if _os.path.isdir(_here):
    _os.environ.setdefault("TQFT_DATA_DIR", _here)

from ._tqft import *  # noqa: E402,F401,F403
from ._tqft import __version__  # noqa: E402,F401
