"""Hot-loop kernels with a compiled core and a pure-python fallback.

The compiled extension is preferred when importable. Set ``ENTX_BACKEND`` to
``python`` or ``compiled`` to force a choice; forcing ``compiled`` raises if
the extension is missing.
"""

from __future__ import annotations

import os

from . import _py
from ._py import (
    linear_entanglement_amplitudes,
    von_neumann_entanglement_amplitudes,
    von_neumann_entanglement_batch,
)

_requested = os.environ.get("ENTX_BACKEND") or None
if _requested not in (None, "python", "compiled"):
    raise ImportError(
        f"ENTX_BACKEND must be 'python' or 'compiled', got {_requested!r}"
    )

if _requested == "python":
    _impl = _py
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError as exc:
        if _requested == "compiled":
            raise ImportError(
                "ENTX_BACKEND=compiled, but the compiled kernel is not built; "
                "reinstall without ENTX_NO_EXT or unset ENTX_BACKEND"
            ) from exc
        _impl = _py

backend = "python" if _impl is _py else "compiled"
linear_entanglement_batch = _impl.linear_entanglement_batch


def available_backends() -> dict:
    """Importable backend name -> linear batch kernel."""
    found = {"python": _py.linear_entanglement_batch}
    try:
        from . import _core
    except ImportError:
        return found
    found["compiled"] = _core.linear_entanglement_batch
    return found
