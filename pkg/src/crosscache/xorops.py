"""XOR kernels with backend selection.

The byte-level verifier spends nearly all its time XOR-folding subfile
payloads, so that one primitive is compiled (crosscache._fastxor, Cython)
when the extension built, with a pure-Python fallback otherwise. The
active backend is chosen once at import; `use_backend` exists for tests
and benchmarks.
"""

from __future__ import annotations

from collections.abc import Sequence


def _xor_accumulate_py(dst: bytearray, src: bytes, offsets: Sequence[int],
                       length: int) -> None:
    """dst[:length] ^= XOR of src[o:o+length] for every offset o."""
    if length < 0 or length > len(dst):
        raise ValueError("length out of range for destination")
    acc = int.from_bytes(dst[:length], "little")
    for off in offsets:
        if off < 0 or off + length > len(src):
            raise ValueError("offset out of range for source")
        acc ^= int.from_bytes(src[off:off + length], "little")
    dst[:length] = acc.to_bytes(length, "little")


_BACKENDS: dict[str, object] = {"python": _xor_accumulate_py}

try:
    from crosscache import _fastxor
except ImportError:
    _fastxor = None
else:
    _BACKENDS["cython"] = _fastxor.xor_accumulate

_active = "cython" if "cython" in _BACKENDS else "python"
xor_accumulate = _BACKENDS[_active]


def active_backend() -> str:
    return _active


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def use_backend(name: str) -> None:
    """Force a specific kernel backend (tests/benchmarks only)."""
    global _active, xor_accumulate
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; have {available_backends()}")
    _active = name
    xor_accumulate = _BACKENDS[name]
