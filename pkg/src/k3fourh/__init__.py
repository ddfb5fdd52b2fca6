"""Verification toolkit for K3 surfaces obtained as double covers of
P^1 x P^1 branched along four (1,1)-curves.

Modules
-------
exact_core   exact integer/rational linear algebra (Smith form, kernels)
lattice      quadratic lattices, discriminant forms, congruence subgroup
fibration    the reference elliptic surface: monodromy and 2-cycles
genericity   determinant predicates for general position of four curves
gkz          toric ideal, Groebner bases and the GKZ operators
periods      numerical period integrals and the PDE / bilinear checks
kuga_satake  even Clifford algebra and the Kuga-Satake Riemann form
cli          command line front end
"""

__version__ = "0.1.0"
