"""Python interface to the radial 2D nonlinear Dirac laboratory.

The compiled extension carries the whole API; this package selects the right
import path for the installed layout (extension inside the package) and the
build-tree layout (extension directly on ``sys.path``, as used by the test
driver of the C++ build).
"""

try:
    from ._nldirac import *  # noqa: F401,F403
    from . import _nldirac as _impl
except ImportError:  # build tree: _nldirac.so sits next to the package dir
    from _nldirac import *  # type: ignore  # noqa: F401,F403
    import _nldirac as _impl

__all__ = [_name for _name in dir(_impl) if not _name.startswith("_")]
__version__ = "0.1.0"
