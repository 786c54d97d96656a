"""Exact algebra for graded matrix factorizations, window combinatorics,
Clifford algebras of quadric families, and their endomorphism algebras.

Subpackages by task: field/poly (exact coefficient fields, multigraded
polynomial rings), groebner (module Groebner bases, syzygies, presented
subquotients), mf (graded matrix factorizations and the reference local
models), homalg (cohomology and presented endomorphism algebras),
windows (weight regions, reductions, exceptional collections), clifford
(Clifford algebras and corank stratification), cli (command line and
scenario runner).
"""

from .field import QQ, PrimeField, parse_field
from .poly import Poly, RingSpec, global_ring, so2_local_ring

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "PrimeField",
    "parse_field",
    "Poly",
    "RingSpec",
    "global_ring",
    "so2_local_ring",
    "__version__",
]
