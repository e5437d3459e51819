"""Exact computation of graded Lie brackets on Grassmann algebras.

The heavy lifting happens in the C++ extension `_core`; this package
re-exports its surface.
"""

from ._core import (
    Chart,
    InputError,
    Scalar,
    canonical,
    check_algebroid,
    check_jacobi,
    exterior_d,
    lift,
    poissonize,
    run_suite,
    sj_bracket,
    sn_bracket,
    suite_names,
)

__all__ = [
    "Chart",
    "InputError",
    "Scalar",
    "canonical",
    "check_algebroid",
    "check_jacobi",
    "exterior_d",
    "lift",
    "poissonize",
    "run_suite",
    "sj_bracket",
    "sn_bracket",
    "suite_names",
]
