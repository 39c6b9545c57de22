"""
Conserved integrals of the two-wall system
==========================================

The Hamiltonian carries a quartic-over-quartic potential in x plus a
free harmonic direction in y.  Two differential operators commute
with it: a quadratic one (A) and a cubic one (B).  Everything here is
exact rational Weyl-algebra arithmetic; no floats appear.
"""

from cubicalg import weylop

suite = weylop.suite()
H = suite.hamiltonian
A = suite.first_integral
B = suite.second_integral

# both commutators must vanish identically as differential operators
for name, op in (("A", A), ("B", B)):
    residual = weylop.comm(H, op)
    print("[H, %s] = 0:" % name, residual.is_zero())

# C = [A, B] closes the algebra; it commutes with H as well
C = suite.commutator
print("[H, [A, B]] = 0:", weylop.comm(H, C).is_zero())

# the derived structure constants, as exact polynomials in the energy
from cubicalg import algebra

derived = algebra.q5_algebra()
print()
print("cubic algebra constants:")
for name, value in derived.spec.as_dict().items():
    print("  %-8s %s" % (name, value.format()))
print("casimir value k(E):")
print("  %s" % derived.k.format())
