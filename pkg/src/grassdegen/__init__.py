"""Exact toric degenerations of Gr(3,n) from iterated birational sequences.

The package computes, entirely in exact integer/rational arithmetic:
Pluecker relations, lowest-term valuations and weighting matrices of
iterated birational sequences, binomial initial forms, order-preserving
projections into the tropical Grassmannian via exact linear programming,
canonical fingerprints of the resulting toric initial ideals, their orbits
under the signed symmetric-group action, and flatness/toricity evidence
(graded ranks and lattice saturation).
"""

__version__ = "1.0.0"
