"""Exact-arithmetic toolkit: cyclotomic lattice isometries, K3/CY3 quotient
Hodge numbers, block monodromy and cohomology-action classification."""

try:
    from ._cyhodge import *  # noqa: F401,F403
    from ._cyhodge import __doc__ as _core_doc  # noqa: F401
except ImportError:  # running against a build tree
    from _cyhodge import *  # noqa: F401,F403

__version__ = "0.1.0"
