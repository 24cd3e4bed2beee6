"""Counting pattern-avoiding involutions: enumeration, generating functions,
growth rates and the 1324 coloring bound."""

from .perm import Permutation, avoids, contains, inverse, is_involution, is_simple

__version__ = "0.1.0"

__all__ = ["Permutation", "avoids", "contains", "inverse", "is_involution",
           "is_simple", "__version__"]
