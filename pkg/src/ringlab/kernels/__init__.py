"""Kernel dispatch: compiled fast path with a pure-Python fallback.

The compiled twin (ringlab.kernels._ckernels, built from the .pyx source)
is preferred when importable. Set RINGLAB_KERNEL=pure to force the
fallback or RINGLAB_KERNEL=compiled to insist on the extension; the
default ("auto") picks whatever is available. Both backends implement the
same scan order, so results are identical either way.
"""

from __future__ import annotations

import os

from . import pure as _pure

_REQUESTED = os.environ.get("RINGLAB_KERNEL", "auto").strip().lower() or "auto"

_compiled = None
if _REQUESTED in ("auto", "compiled", "cython", "c"):
    try:
        from . import _ckernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None
    if _compiled is None and _REQUESTED != "auto":
        raise ImportError(
            "RINGLAB_KERNEL requested the compiled backend but "
            "ringlab.kernels._ckernels is not built; run "
            "`python setup.py build_ext --inplace`"
        )
elif _REQUESTED in ("pure", "python"):
    _compiled = None
else:
    raise ValueError(f"unrecognized RINGLAB_KERNEL value: {_REQUESTED!r}")

_impl = _compiled if _compiled is not None else _pure

ring_axiom_witness = _impl.ring_axiom_witness
inverse_table = _impl.inverse_table
radical_members = _impl.radical_members
decomposition_witness = _impl.decomposition_witness


def backend() -> str:
    """Name of the active backend: "compiled" or "pure"."""
    return "pure" if _impl is _pure else "compiled"


def backends() -> dict[str, object]:
    """All importable backends keyed by name (for parity tests/benchmarks)."""
    out: dict[str, object] = {"pure": _pure}
    if _compiled is not None:
        out["compiled"] = _compiled
    else:
        try:
            from . import _ckernels  # type: ignore[attr-defined]

            out["compiled"] = _ckernels
        except ImportError:
            pass
    return out
