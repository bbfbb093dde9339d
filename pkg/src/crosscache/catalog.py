"""Bundled small reference designs, addressable as example1..example8.

These are stored verbatim (not regenerated from constructions) so the golden
tests pinned to their exact class/block layout cannot drift. example1-6 are
minimal designs illustrating cross intersection behavior; example7 (27
points) and example8 (16 points) are the two fully worked delivery cases.
"""

from __future__ import annotations

from crosscache.designs import ResolvableDesign

_D = ResolvableDesign.from_classes

_EXAMPLES: dict[str, ResolvableDesign] = {
    "example1": _D(4, [
        [{1, 2}, {3, 4}],
        [{1, 3}, {2, 4}],
        [{1, 4}, {2, 3}],
    ]),
    "example2": _D(6, [
        [{1, 2, 3}, {4, 5, 6}],
        [{1, 4, 5}, {2, 3, 6}],
    ]),
    "example3": _D(9, [
        [{1, 2, 3}, {4, 5, 6}, {7, 8, 9}],
        [{1, 4, 7}, {2, 5, 8}, {3, 6, 9}],
    ]),
    "example4": _D(8, [
        [{1, 2, 3, 4}, {5, 6, 7, 8}],
        [{1, 2, 5, 6}, {3, 4, 7, 8}],
        [{1, 3, 5, 7}, {2, 4, 6, 8}],
    ]),
    "example5": _D(12, [
        [{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12}],
        [{1, 2, 3, 7, 8, 9}, {4, 5, 6, 10, 11, 12}],
    ]),
    "example6": _D(9, [
        [{1, 2, 3}, {4, 5, 6}, {7, 8, 9}],
        [{1, 4, 7}, {2, 5, 8}, {3, 6, 9}],
        [{1, 5, 9}, {2, 6, 7}, {3, 4, 8}],
        [{1, 6, 8}, {2, 4, 9}, {3, 5, 7}],
    ]),
    "example7": _D(27, [
        [{1, 4, 7, 10, 13, 16, 19, 22, 25},
         {2, 5, 8, 11, 14, 17, 20, 23, 26},
         {3, 6, 9, 12, 15, 18, 21, 24, 27}],
        [{1, 2, 3, 10, 11, 12, 19, 20, 21},
         {4, 5, 6, 13, 14, 15, 22, 23, 24},
         {7, 8, 9, 16, 17, 18, 25, 26, 27}],
        [{1, 2, 3, 4, 5, 6, 7, 8, 9},
         {10, 11, 12, 13, 14, 15, 16, 17, 18},
         {19, 20, 21, 22, 23, 24, 25, 26, 27}],
    ]),
    "example8": _D(16, [
        [{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}, {13, 14, 15, 16}],
        [{1, 5, 9, 13}, {2, 6, 10, 14}, {3, 7, 11, 15}, {4, 8, 12, 16}],
        [{1, 6, 11, 16}, {2, 7, 12, 13}, {3, 8, 9, 14}, {4, 5, 10, 15}],
    ]),
}


def builtin_names() -> tuple[str, ...]:
    return tuple(sorted(_EXAMPLES))


def builtin(name: str) -> ResolvableDesign:
    """Return a bundled design by name (example1..example8)."""
    try:
        return _EXAMPLES[name]
    except KeyError:
        raise KeyError(f"unknown builtin design {name!r}; available: {', '.join(builtin_names())}") from None
