"""Radially maximal graphs: constructions, certificates, exhaustive search.

Thin re-export of the compiled _radmax module. The fallback import path lets
the package run straight out of a CMake build tree (where the extension sits
next to the sources on PYTHONPATH) as well as from an installed wheel.
"""

try:
    from ._radmax import *  # noqa: F401,F403
    from ._radmax import __doc__ as _core_doc
except ImportError:  # build-tree layout: extension importable as top-level _radmax
    from _radmax import *  # noqa: F401,F403
    from _radmax import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
