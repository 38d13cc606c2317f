"""Lipschitz bound exploration for fully connected networks."""

try:
    from ._lipscope import *  # noqa: F401,F403
    from ._lipscope import __version__  # noqa: F401
except ImportError:  # in-tree runs load the extension straight from the build dir
    from _lipscope import *  # noqa: F401,F403
    from _lipscope import __version__  # noqa: F401
