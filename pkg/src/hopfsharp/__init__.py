"""Exact computer algebra for the transform that kills the first power sum.

The library works in three graded algebras carrying an internal
(degree-preserving) product: noncommutative symmetric functions realized
as descent algebras, the permutation algebra on the F/G bases, and the
packed-word realization of the Solomon-Tits algebras.  Everything is
computed in exact rational arithmetic.
"""

from .guards import CostGuardExceeded, ConsistencyError, max_degree

__version__ = "0.1.0"

__all__ = ["CostGuardExceeded", "ConsistencyError", "max_degree", "__version__"]
