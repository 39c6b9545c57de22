"""Finite-dimensional modules read off from the structure function.

A lowest weight u needs Phi(u) = 0, and a module with p + 1 levels
also needs Phi(u + p + 1) = 0.  Pairing zeros of Phi therefore lists
every candidate family: when the spacing between two zeros depends on
the energy, the pairing fixes the energy as a function of p; when the
spacing is a bare integer, it pins p instead.  Everything here stays
exact, and a factorization that cannot be completed is reported as
such rather than approximated.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import algebra, ladder
from .errors import SingularSystem, UnresolvedFactor
from .exactnum.errors import ExactDivisionError
from .exactnum.linsolve import InconsistentSystem, RankDeficientSystem, solve_fractions
from .exactnum.nfunc import NFunc
from .exactnum.polyfraction import PolyFraction
from .exactnum.upoly import rational_roots

# Rational sample points for the energy; any generic values work, the
# exact division step rejects every accidental match.
SAMPLE_POINTS = (Fraction(7, 3), Fraction(11, 5), Fraction(13, 7))

ENERGY_SYMBOL = "E"
LEVEL_SYMBOL = "p"


@dataclass(frozen=True)
class Branch:
    """One zero of Phi, exact in the energy, with multiplicity."""

    root: PolyFraction
    multiplicity: int


@dataclass(frozen=True)
class Family:
    """A (p + 1)-level module family fixed by a pair of branches."""

    start: int
    end: int
    energy: PolyFraction
    lowest: PolyFraction
    phi_levels: NFunc
    lead: PolyFraction
    roots: tuple
    residual: object


@dataclass(frozen=True)
class DegeneratePair:
    """Branch pair with an energy-free integer spacing; p is forced."""

    start: int
    end: int
    p: int


@dataclass(frozen=True)
class FamilyInstance:
    """One family at a concrete number of levels."""

    p: int
    energy: PolyFraction
    lowest: PolyFraction
    phi: NFunc
    values: tuple


@dataclass(frozen=True)
class Verdict:
    """Unitarity of one family instance; Phi must be positive inside."""

    p: int
    unitary: bool
    failure_level: object


def _deflate(coeffs, root):
    """Divide an ascending coefficient list by (x - root)."""
    rev = list(reversed(coeffs))
    out = [rev[0]]
    for c in rev[1:-1]:
        out.append(c + root * out[-1])
    rem = rev[-1] + root * out[-1] if len(rev) > 1 else rev[0]
    return list(reversed(out)), rem


def _atom_symbol(atom, table):
    """The symbol name of a bare-symbol atom, else None."""
    if len(atom.terms) == 1 and atom.constant == 0 and atom.terms[0][1] == 1:
        return table.symbols[atom.terms[0][0]]
    return None


def _axis_weight(value, axis_index):
    """Exponent vector over the axis symbols, or None if not a monomial."""
    mono = value.num.as_rational_monomial()
    if mono is None:
        return None
    _, exps = mono
    table = value.table
    weight = [Fraction(0)] * len(axis_index)
    for idx, e in enumerate(exps):
        if not e:
            continue
        name = table.symbols[idx]
        if name not in axis_index:
            return None
        weight[axis_index[name]] += e
    for k, e in enumerate(value.den):
        if not e:
            continue
        name = _atom_symbol(table.atoms[k], table)
        if name is None or name not in axis_index:
            return None
        weight[axis_index[name]] -= e
    return weight


def _scaling_terms(coeffs, param):
    """(k, d, coefficient) triples of Phi split by energy degree."""
    terms = []
    for k, c in enumerate(coeffs):
        if c.is_zero():
            continue
        if param in c.table.symbols:
            parts = c.univariate_in(param)
        else:
            parts = [c]
        for d, part in enumerate(parts):
            if not part.is_zero():
                terms.append((k, d, part))
    return terms


def _detect_grading(coeffs, param):
    """Scaling weights (axes, omega, gamma) consistent with Phi.

    Each term phi_{k,d} nu^k param^d must be a rational monomial over
    the remaining symbols, and the exponents must satisfy
    weight + k*omega + d*gamma = const for one choice of the weight
    omega of nu and gamma of the parameter.
    """
    terms = _scaling_terms(coeffs, param)
    # collect every symbol that shows up in any term
    names = set()
    for _, _, part in terms:
        for exps in part.num.terms:
            for idx, e in enumerate(exps):
                if e:
                    names.add(part.table.symbols[idx])
        for k, e in enumerate(part.den):
            if not e:
                continue
            name = _atom_symbol(part.table.atoms[k], part.table)
            if name is None:
                raise UnresolvedFactor("denominator atom is not a bare symbol")
            names.add(name)
    names.discard(param)
    axes = tuple(sorted(names))
    zero = [Fraction(0)] * len(axes)
    if not axes:
        return axes, zero, zero
    axis_index = {name: i for i, name in enumerate(axes)}
    rows = []
    for k, d, part in terms:
        weight = _axis_weight(part, axis_index)
        if weight is None:
            raise UnresolvedFactor(
                "coefficient %s is not a graded monomial" % part.format()
            )
        rows.append((k, d, weight))
    # solve k*omega + d*gamma - tau = -weight per axis, pruning the
    # unknowns the data cannot see
    use_omega = len({k for k, _, _ in rows}) > 1
    use_gamma = len({d for _, d, _ in rows}) > 1
    cols = []
    if use_omega:
        cols.append(0)
    if use_gamma:
        cols.append(1)
    cols.append(2)
    omega = list(zero)
    gamma = list(zero)
    matrix = [
        [(Fraction(k), Fraction(d), Fraction(-1))[c] for c in cols] for k, d, _ in rows
    ]
    for ax in range(len(axes)):
        rhs = [-w[ax] for _, _, w in rows]
        try:
            solution = solve_fractions(matrix, rhs)
        except (RankDeficientSystem, InconsistentSystem) as exc:
            raise UnresolvedFactor("no consistent scaling weight") from exc
        position = 0
        if use_omega:
            omega[ax] = solution[position]
            position += 1
        if use_gamma:
            gamma[ax] = solution[position]
    return axes, omega, gamma


def _axis_monomial(table, axes, exponents):
    out = PolyFraction.const(table, 1)
    for name, e in zip(axes, exponents):
        if e.denominator != 1:
            return None
        e = int(e)
        if not e:
            continue
        sym = PolyFraction.sym(table, name)
        try:
            out = out * (sym ** e if e > 0 else sym.invert() ** (-e))
        except ExactDivisionError:
            return None
    return out


def _lift_candidate(table, fit, param, axes, omega, gamma):
    """Restore the scaling monomials on a root fitted at axes = 1."""
    out = PolyFraction.const(table, 0)
    base = (
        PolyFraction.sym(table, param)
        if param in table.symbols
        else PolyFraction.const(table, 0)
    )
    for d, c in enumerate(fit):
        if not c:
            continue
        mono = _axis_monomial(
            table, axes, [omega[i] - d * gamma[i] for i in range(len(axes))]
        )
        if mono is None:
            return None
        out = out + mono * c * base ** d
    return out


def _sampled_roots(coeffs, param, point):
    table = coeffs[0].table
    mapping = {
        name: (point if name == param else Fraction(1)) for name in table.symbols
    }
    flat = [c.evaluate(mapping) for c in coeffs]
    return rational_roots(flat)


def _fit_through(points):
    """Polynomial fit through (sample, value) pairs, ascending coefficients."""
    degree = len(points) - 1
    matrix = [[x ** d for d in range(degree + 1)] for x, _ in points]
    rhs = [v for _, v in points]
    return solve_fractions(matrix, rhs)


def _trim_fit(fit):
    while fit and fit[-1] == 0:
        fit = fit[:-1]
    return tuple(fit)


def branch_roots(phi, param=ENERGY_SYMBOL):
    """Zeros of Phi as exact functions of the energy, with multiplicity.

    Roots are recovered in layers: rational roots of sampled instances
    propose candidates polynomial in the energy, the scaling grading of
    the coefficients restores their unit content, and exact division
    keeps only the true factors.  Raises UnresolvedFactor when a factor
    survives every layer.
    """
    if not phi.is_polynomial():
        raise ValueError("Phi must be polynomial: %s" % phi.format())
    if phi.degree() < 1:
        return ()
    table = phi.table
    coeffs = list(phi.coefficients())
    try:
        flat = [c.as_fraction() for c in coeffs]
    except ValueError:
        flat = None
    if flat is not None:
        found = [
            Branch(PolyFraction.const(table, r), m) for r, m in rational_roots(flat)
        ]
        if sum(b.multiplicity for b in found) < phi.degree():
            raise UnresolvedFactor("no rational split of %s" % phi.format())
        return tuple(found)

    axes, omega, gamma = _detect_grading(coeffs, param)
    has_param = param in table.symbols and any(
        c.num.degree_in(param) > 0 for c in coeffs
    )
    max_fit = 2 if has_param else 0
    samples = [
        (e, _sampled_roots(coeffs, param, e))
        for e in SAMPLE_POINTS[: max_fit + 1]
    ]

    work = list(coeffs)
    found = []
    for fit_degree in range(max_fit + 1):
        if len(work) <= 1:
            break
        candidates = []
        seen = set()
        for combo in _root_tuples(samples[: fit_degree + 1]):
            fit = _trim_fit(_fit_through(combo))
            if len(fit) != fit_degree + 1 and fit_degree:
                continue
            lifted = _lift_candidate(table, fit, param, axes, omega, gamma)
            if lifted is None or lifted in seen:
                continue
            seen.add(lifted)
            candidates.append(lifted)
        candidates.sort(key=lambda pf: pf.format())
        for cand in candidates:
            multiplicity = 0
            while len(work) > 1:
                quotient, remainder = _deflate(work, cand)
                if not remainder.is_zero():
                    break
                work = quotient
                multiplicity += 1
            if multiplicity:
                found.append(Branch(cand, multiplicity))
    if len(work) > 1:
        raise UnresolvedFactor(
            "unsplit factor of degree %d remains" % (len(work) - 1)
        )
    found.sort(key=lambda b: (b.root.num.total_degree(), b.root.format()))
    return tuple(found)


def _root_tuples(samples):
    """Cartesian root choices, one (sample, root) pair per sample."""
    combos = [[]]
    for point, roots in samples:
        combos = [prefix + [(point, r)] for prefix in combos for r, _ in roots]
    return combos


def _compose(phi, offset):
    """Polynomial composition Phi(offset + x) as a function of x."""
    if not phi.is_polynomial():
        raise ValueError("Phi must be polynomial: %s" % phi.format())
    table = phi.table
    base = NFunc.nu(table) + offset
    out = NFunc.const(table, 0)
    for k, c in enumerate(phi.coefficients()):
        if not c.is_zero():
            out = out + base ** k * c
    return out


def _factor_levels(phi_x, known):
    """Split off the known roots, then whatever stays within reach.

    Returns (lead, roots, residual); residual is None once the level
    polynomial is a product of exact linear factors.  Quadratic
    leftovers are split when their discriminant has an exact square
    root; anything beyond that is returned unfactored.
    """
    table = phi_x.table
    coeffs = list(phi_x.coefficients())
    lead = coeffs[-1]
    roots = []
    for r in known:
        coeffs, remainder = _deflate(coeffs, r)
        if not remainder.is_zero():
            raise UnresolvedFactor("Phi does not vanish at %s" % r.format())
        roots.append(r)
    while len(coeffs) > 1:
        if len(coeffs) == 2:
            try:
                roots.append(-coeffs[0] * coeffs[1].invert())
            except ExactDivisionError:
                break
            coeffs = coeffs[-1:]
        elif len(coeffs) == 3:
            try:
                inv = coeffs[2].invert()
                b = coeffs[1] * inv
                c = coeffs[0] * inv
                root_of_disc = (b * b - c * 4).sqrt()
            except (ExactDivisionError, ValueError):
                break
            pair = [
                (root_of_disc - b) * Fraction(1, 2),
                (root_of_disc + b) * Fraction(-1, 2),
            ]
            pair.sort(key=lambda pf: pf.format())
            roots.extend(pair)
            coeffs = coeffs[-1:]
        else:
            break
    residual = NFunc.from_coeffs(table, coeffs) if len(coeffs) > 1 else None
    return lead, tuple(roots), residual


def energy_families(phi, param=ENERGY_SYMBOL, level=LEVEL_SYMBOL):
    """Every module family obtained by pairing zeros of Phi.

    Returns (branches, families, pinned).  A branch pair whose spacing
    moves with the energy fixes the energy as a function of the level
    count p and yields a Family; a pair with a constant integer spacing
    pins p itself and is reported as a DegeneratePair.  Spacings beyond
    affine in the energy are not searched.
    """
    table = phi.table
    if level not in table.symbols:
        raise ValueError("level symbol %r is not in the table" % level)
    branches = branch_roots(phi, param)
    level_sym = PolyFraction.sym(table, level)
    families = []
    pinned = []
    for i, bi in enumerate(branches):
        for j, bj in enumerate(branches):
            if i == j:
                continue
            gap = bj.root - bi.root
            if param in table.symbols:
                parts = gap.univariate_in(param)
            else:
                parts = [gap]
            if len(parts) > 2:
                continue
            while len(parts) < 2:
                parts = parts + [PolyFraction.const(table, 0)]
            c0, c1 = parts
            if c1.is_zero():
                try:
                    spacing = gap.as_fraction()
                except ValueError:
                    continue
                if spacing >= 1 and spacing.denominator == 1:
                    pinned.append(DegeneratePair(i, j, int(spacing) - 1))
                continue
            try:
                energy = (level_sym + 1 - c0) * c1.invert()
            except ExactDivisionError:
                continue
            subs = {param: energy}
            phi_e = NFunc.from_coeffs(
                table, [c.substitute(subs) for c in phi.coefficients()]
            )
            lowest = bi.root.substitute(subs)
            phi_x = _compose(phi_e, lowest)
            lead, roots, residual = _factor_levels(
                phi_x, (PolyFraction.const(table, 0), level_sym + 1)
            )
            families.append(
                Family(i, j, energy, lowest, phi_x, lead, roots, residual)
            )
    return branches, tuple(families), tuple(pinned)


def family_instance(family, p_value, level=LEVEL_SYMBOL):
    """The family at one concrete p, with Phi at x = 0 .. p + 1."""
    p_value = int(p_value)
    if p_value < 0:
        raise ValueError("p must be a nonnegative integer")
    table = family.phi_levels.table
    subs = {level: Fraction(p_value)}
    phi = NFunc.from_coeffs(
        table, [c.substitute(subs) for c in family.phi_levels.coefficients()]
    )
    values = tuple(phi.evaluate(x) for x in range(p_value + 2))
    return FamilyInstance(
        p_value,
        family.energy.substitute(subs),
        family.lowest.substitute(subs),
        phi,
        values,
    )


def unitarity_verdict(family, p_value, level=LEVEL_SYMBOL):
    """Whether Phi stays positive at the interior levels 1 .. p."""
    instance = family_instance(family, p_value, level)
    for x in range(1, instance.p + 1):
        sign = instance.values[x].sign_for_positive_symbols()
        if sign is None:
            raise ValueError(
                "sign of %s is not fixed by positivity" % instance.values[x].format()
            )
        if sign <= 0:
            return Verdict(instance.p, False, x)
    return Verdict(instance.p, True, None)


def unitarity_table(family, p_values, level=LEVEL_SYMBOL):
    return tuple(unitarity_verdict(family, p, level) for p in p_values)


def complete_truncation(phi, u, p, unknowns=("k", "zeta")):
    """Choose the named constants so Phi(u) = 0 = Phi(u + p + 1).

    Phi must be affine in the named symbols with rational data; the two
    truncation conditions then form a square linear system.  Raises
    SingularSystem when the pair of conditions cannot fix the unknowns.
    """
    u = Fraction(u)
    p = int(p)
    if p < 0:
        raise ValueError("p must be a nonnegative integer")
    table = phi.table
    matrix = []
    rhs = []
    for point in (u, u + p + 1):
        value = phi.evaluate(point)
        row = []
        rest = value
        for name in unknowns:
            parts = rest.univariate_in(name) if not rest.is_zero() else []
            if len(parts) > 2:
                raise ValueError("Phi is not affine in %s" % name)
            row.append(parts[1].as_fraction() if len(parts) == 2 else Fraction(0))
            rest = parts[0] if parts else PolyFraction.const(table, 0)
        matrix.append(row)
        rhs.append(-rest.as_fraction())
    try:
        solution = solve_fractions(matrix, rhs)
    except RankDeficientSystem as exc:
        raise SingularSystem(
            "truncation pair does not determine %s" % (unknowns,)
        ) from exc
    return dict(zip(unknowns, solution))


_Q5_SF = None


def q5_structure_function():
    """Structure function of the two-wall system, cached."""
    global _Q5_SF
    if _Q5_SF is None:
        derived = algebra.q5_algebra()
        _Q5_SF = ladder.derive_structure_function(derived.spec, derived.k)
    return _Q5_SF
