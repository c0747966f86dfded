"""Multiword-expression detection and German compound splitting."""

try:
    from ._mmwe import *  # noqa: F401,F403
    from ._mmwe import __doc__  # noqa: F401
except ImportError:  # module built outside the package (e.g. plain CMake build)
    from _mmwe import *  # noqa: F401,F403
