"""
Explicit matrix modules and residual checks
===========================================

Every family instance can be written down as finite matrices: A is
diagonal, B has one raising and one lowering band weighted by Phi.
Replaying the defining relations on these matrices is a test of the
whole chain; in the triangular gauge the residuals are exact zeros.
"""

from fractions import Fraction

from cubicalg import algebra, repcheck, spectrum
from cubicalg.exactnum import parse

sf = spectrum.q5_structure_function()
_, families, _ = spectrum.energy_families(sf.phi)
spec = algebra.q5_algebra().spec

rising = next(
    f for f in families
    if f.energy == parse("h^2*(p + 3)/2/a^2", algebra.master_table())
)

p = 3
module, values = repcheck.q5_module(rising, p, h=1, a=1)
print("module at p = %d: dimension %d, E = %s, u = %s" % (
    p, module.dimension, values["E"], module.u))
print("Phi ladder:", [str(v) for v in module.phi])

residuals = repcheck.relation_residuals(module, spec, values)
for name, matrix in residuals.items():
    print("%-8s residual max |entry| = %s" % (name, matrix.max_abs()))

# the same module in the symmetric gauge b = b_dagger^T needs square
# roots, so it lives in floats; the residual stays at rounding size
gauge = repcheck.symmetric_gauge_residual(module, spec, values)
print("symmetric float gauge residual = %.3e" % gauge)

# rational h and a work the same way, still exactly
module, values = repcheck.q5_module(rising, 2, h=Fraction(3, 2), a=Fraction(2, 5))
residuals = repcheck.relation_residuals(module, spec, values)
print()
print("h = 3/2, a = 2/5, p = 2: all residuals zero:",
      all(m.max_abs() == 0 for m in residuals.values()))
