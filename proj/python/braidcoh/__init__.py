"""Coherence verification for a symmetric monoidal sum and a braided
monoidal product with distributivity, over an exact q-graded matrix model.

The API is text-based: objects, morphism words and braid words are strings
in the same grammar the command line tool uses; matrices come back as nested
lists of Laurent-polynomial strings.
"""

from ._core import (
    ArityError,
    ParseError,
    TypeCheckError,
    UnassignedAtomError,
    braid_equal,
    braid_image,
    check,
    cod,
    conditions,
    dom,
    eval_morphism,
    run_suite,
)

__all__ = [
    "ArityError",
    "ParseError",
    "TypeCheckError",
    "UnassignedAtomError",
    "braid_equal",
    "braid_image",
    "check",
    "cod",
    "conditions",
    "dom",
    "eval_morphism",
    "run_suite",
]
