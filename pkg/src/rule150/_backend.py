"""Kernel selection: compiled extension if importable, else pure Python.

Set ``RULE150_PURE=1`` to force the fallback.
"""
import os

from . import _fallback as pure

if os.environ.get("RULE150_PURE"):
    kernels = pure
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = pure

compiled = None
if kernels is not pure:
    compiled = kernels

NAME = "compiled" if kernels.COMPILED else "pure"


class using:
    """Temporarily route all kernel calls through ``module``."""

    def __init__(self, module):
        self.module = module

    def __enter__(self):
        global kernels
        self.saved = kernels
        kernels = self.module
        return self.module

    def __exit__(self, *exc):
        global kernels
        kernels = self.saved
