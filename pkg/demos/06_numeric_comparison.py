"""
Finite-difference wells versus the formal ladder
================================================

The potential splits into three impenetrable 1D wells in x plus a
harmonic ladder in y.  A Sturm-bisection tridiagonal solver with
Richardson extrapolation gives the confined levels; the calibration
problems pin its accuracy first.

The punchline is a disagreement, reported as found: the algebraic
module ladder starts at E = 3/2 and climbs by 1/2, but the lowest
confined level sits near 2.20.  The formal modules do not correspond
to square-integrable states of the confined wells, and the comparison
below says so rather than smoothing it over.
"""

from cubicalg import schrodinger

# calibration: particle in a box and the harmonic ground state
box = schrodinger.box_ground(2000)
print("box ground level     %.10f (target pi^2/2 = 4.9348022005)" % box)
harm = schrodinger.harmonic_ground(4000)
print("harmonic ground      %.10f (target 0.25)" % harm)

# confined levels of the full two-dimensional problem below E = 6
levels = schrodinger.q5_levels(a=1.0, cutoff=6.0, n=2000)
print()
print("lowest confined levels (x wells + y ladder):")
for energy in levels[:8]:
    print("  %.8f" % energy)

# the formal ladder E = (p + 3) / 2 from the rising unitary family
predictions = [("p=%d" % p, (p + 3) / 2.0) for p in range(5)]
report = schrodinger.compare(predictions, levels, 2e-3)
print()
print("formal ladder versus confined levels (tolerance 2e-3):")
for row in report.rows:
    print("  %s  predicted %.4f  nearest %.4f  off by %.4f" % (
        row.label, row.energy, row.nearest, row.deviation))
print("agreement:", report.passed)
