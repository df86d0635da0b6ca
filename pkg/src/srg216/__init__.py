"""Exact construction and certification of the strongly regular graph
with parameters (216, 40, 4, 8) from the Hermitian surface of PG(3,4).

The build pipeline: GF(4) tables -> PG(3,4) -> Hermitian surface ->
36 subquadrangles -> 216 ovoid vertices -> graph -> certification.
"""

from ._kernels import DEFAULT_BACKEND, HAVE_COMPILED
from .pipeline import Build, build_all

__version__ = "0.1.0"

__all__ = ["Build", "build_all", "DEFAULT_BACKEND", "HAVE_COMPILED", "__version__"]
