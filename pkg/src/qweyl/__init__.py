"""Exact computer algebra for quantum special linear superalgebras sl(m|n)
at odd roots of unity.

The engine constructs the Weyl groupoid of Dynkin diagrams, the quantum
superalgebras attached to each diagram with their PBW normal forms, the
Lusztig-type isomorphisms between them, Hopf superstructures and their
twists, universal R-matrices, and the Hopf-isomorphism classification.
All arithmetic is exact over the cyclotomic field Q(zeta_p).
"""

from .scalars import CycField, CycScalar, FieldMismatchError

__all__ = ["CycField", "CycScalar", "FieldMismatchError"]
__version__ = "0.1.0"
