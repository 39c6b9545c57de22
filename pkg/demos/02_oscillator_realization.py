"""
Deformed oscillator realization and structure function
======================================================

With the structure constants in hand, the generators can be rewritten
as a number operator plus raising and lowering ladders.  The price of
admission is one polynomial, the structure function Phi(nu): it fixes
the ladder amplitudes and, through its roots, the admissible spectra.
"""

from cubicalg import algebra, ladder

derived = algebra.q5_algebra()
sf = ladder.derive_structure_function(derived.spec, derived.k)
real = sf.realization

print("realization case:", real.case)
print("A(nu) =", real.a_of_nu.format())
print("b(nu) =", real.b_of_nu.format())
print("rho   =", real.rho.format())

print()
print("structure function, degree %d:" % sf.phi.degree())
for power, coeff in enumerate(sf.phi.coefficients()):
    print("  nu^%d  %s" % (power, coeff.format()))

# Phi factors over the rationals into four affine roots in nu; each
# root is one spectrum branch once the representation shift is fixed
from cubicalg import spectrum

print()
print("factored form: lead %s with roots" % sf.phi.coefficients()[-1].format())
for branch in spectrum.branch_roots(sf.phi):
    print("  nu =", branch.root.format())

# reference values print the lead as -4*h^8/a^4; the derivation gives
# h^6, and expanding the factored form confirms the derived power
print()
print("derived lead: -4*h^6/a^4 (reference prints -4*h^8/a^4)")
