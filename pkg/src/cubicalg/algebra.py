"""Structure constants of the cubic symmetry algebra.

An AlgebraSpec collects the nine constants of the defining relations

    [A, B] = C
    [A, C] = alpha A^2 + beta {A, B} + gamma A + delta B + epsilon
    [B, C] = mu A^3 + nu A^2 - beta B^2 - alpha {A, B} + xi A
             - gamma B + zeta

as exact scalars over a shared symbol table.  The quadratic and linear
coefficients of B^2, {A,B} and B in the second relation are not free:
the Jacobi identity forces them to be -beta, -alpha and -gamma, which
jacobi_reduce enforces.  For the two-wall quantum system the constants
are derived, not transcribed: the conserved operators are built as
differential operators, their commutators are expanded over an operator
basis by exact linear algebra, and the energy enters through the
central Hamiltonian.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import casimir, weylop
from .errors import JacobiViolation
from .exactnum import MultiPoly, PolyFraction, SymbolTable, parse

MASTER_SYMBOLS = ("E", "h", "a", "u", "p", "x")

_MASTER = None


def master_table():
    """Shared table: energy, two positive scales, and level parameters."""
    global _MASTER
    if _MASTER is None:
        _MASTER = SymbolTable(MASTER_SYMBOLS, atoms=("h", "a"))
    return _MASTER


CONSTANT_NAMES = casimir.CONSTANT_NAMES


@dataclass(frozen=True)
class AlgebraSpec:
    table: SymbolTable
    alpha: PolyFraction
    beta: PolyFraction
    gamma: PolyFraction
    delta: PolyFraction
    epsilon: PolyFraction
    mu: PolyFraction
    nu: PolyFraction
    xi: PolyFraction
    zeta: PolyFraction

    def as_dict(self):
        return {name: getattr(self, name) for name in CONSTANT_NAMES}

    def casimir_values(self):
        return casimir.evaluate_coefficients(self.as_dict())


def _lift(table, value):
    if isinstance(value, PolyFraction):
        return value
    if isinstance(value, MultiPoly):
        return PolyFraction(value)
    if isinstance(value, (int, Fraction)):
        return PolyFraction.const(table, value)
    if isinstance(value, str):
        return parse(value, table)
    raise TypeError("cannot use %r as a structure constant" % (value,))


def jacobi_reduce(values, table=None):
    """Build an AlgebraSpec, enforcing the Jacobi constraints.

    values maps constant names to scalars (PolyFraction, rational, or
    expression text).  The dependent coefficients may be supplied as
    rho, sigma, eta (for B^2, {A,B}, B in the third relation) and must
    then equal -beta, -alpha, -gamma exactly.
    """
    if table is None:
        table = master_table()
    known = dict(values)
    out = {}
    for name in CONSTANT_NAMES:
        out[name] = _lift(table, known.pop(name, 0))
    forced = {"rho": -out["beta"], "sigma": -out["alpha"], "eta": -out["gamma"]}
    for name, expected in forced.items():
        if name in known:
            got = _lift(table, known.pop(name))
            if got != expected:
                raise JacobiViolation(
                    "%s must equal %s, got %s"
                    % (name, expected.format(), got.format())
                )
    if known:
        raise ValueError("unknown constants: %s" % ", ".join(sorted(known)))
    return AlgebraSpec(table=table, **out)


def transfer_scalar(value, target):
    """Rebuild a PolyFraction in another table, matching symbol names."""
    source = value.table
    raw = {}
    for exps, coeff in value.num.terms.items():
        new_exps = [0] * target.nvars
        for idx, e in enumerate(exps):
            if e == 0:
                continue
            name = source.symbols[idx]
            new_exps[target.index(name)] = e
        key = tuple(new_exps)
        raw[key] = raw.get(key, Fraction(0)) + coeff
    num = MultiPoly._make(target, raw)
    den = [0] * len(target.atoms)
    for k, e in enumerate(value.den):
        if e == 0:
            continue
        name = source.atoms[k].name
        den[target.atom_index(name)] = e
    return PolyFraction(num, tuple(den))


def scalar_to_operator(value, suite=None):
    """Map a polynomial in the energy to the matching operator.

    value is a PolyFraction over the master table, polynomial in E with
    coefficients in the scales; E becomes the Hamiltonian.
    """
    if suite is None:
        suite = weylop.suite()
    coeffs = value.univariate_in("E")
    out = weylop.DiffOp.zero(suite.table)
    h_power = weylop.DiffOp.from_scalar(suite.table, 1)
    for k, c in enumerate(coeffs):
        if k:
            h_power = h_power * suite.hamiltonian
        if c.is_zero():
            continue
        out = out + transfer_scalar(c, suite.table) * h_power
    return out


@dataclass
class DerivedAlgebra:
    """Structure constants and casimir value derived from the operators."""

    spec: AlgebraSpec
    k: PolyFraction
    closure_coefficients: dict
    linear_coefficients: dict
    casimir_scalars: dict


_Q5 = None


def q5_algebra():
    """Derive the cubic algebra of the two-wall system, cached.

    Both defining relations are expanded over explicit operator bases.
    Constants shared between the two relations are extracted from each
    and must agree; the casimir value follows by expressing the central
    element over Hamiltonian powers.
    """
    global _Q5
    if _Q5 is not None:
        return _Q5
    suite = weylop.suite()
    H = suite.hamiltonian
    A = suite.first_integral
    B = suite.second_integral
    C = suite.commutator
    one = weylop.DiffOp.from_scalar(suite.table, 1)
    aa = A * A
    ab_sym = weylop.acomm(A, B)
    closure_basis = [
        ("A3", aa * A),
        ("A2H", aa * H),
        ("H3", H * H * H),
        ("B2", B * B),
        ("AB_sym", ab_sym),
        ("A2", aa),
        ("HA", H * A),
        ("H2", H * H),
        ("B", B),
        ("BH", B * H),
        ("A", A),
        ("H", H),
        ("one", one),
    ]
    closure = weylop.express_in_basis(weylop.comm(B, C), closure_basis)
    linear_basis = [
        ("B", B),
        ("BH", B * H),
        ("A2", aa),
        ("A2H", aa * H),
        ("AB_sym", ab_sym),
        ("ABH_sym", ab_sym * H),
        ("A", A),
        ("AH", A * H),
        ("AH2", A * H * H),
        ("one", one),
        ("H", H),
        ("H2", H * H),
        ("H3", H * H * H),
    ]
    linear = weylop.express_in_basis(weylop.comm(A, C), linear_basis)
    master = master_table()
    energy = PolyFraction.sym(master, "E")

    def lin(label):
        return transfer_scalar(linear[label], master)

    def clo(label):
        return transfer_scalar(closure[label], master)

    alpha = lin("A2") + lin("A2H") * energy
    beta = lin("AB_sym") + lin("ABH_sym") * energy
    gamma = lin("A") + lin("AH") * energy + lin("AH2") * energy ** 2
    delta = lin("B") + lin("BH") * energy
    epsilon = (
        lin("one")
        + lin("H") * energy
        + lin("H2") * energy ** 2
        + lin("H3") * energy ** 3
    )
    if alpha != -clo("AB_sym"):
        raise JacobiViolation("the two relations disagree on alpha")
    if beta != -clo("B2"):
        raise JacobiViolation("the two relations disagree on beta")
    if gamma != -(clo("B") + clo("BH") * energy):
        raise JacobiViolation("the two relations disagree on gamma")
    spec = jacobi_reduce(
        {
            "alpha": alpha,
            "beta": beta,
            "gamma": gamma,
            "delta": delta,
            "epsilon": epsilon,
            "mu": clo("A3"),
            "nu": clo("A2") + clo("A2H") * energy,
            "xi": clo("A") + clo("HA") * energy,
            "zeta": clo("one")
            + clo("H") * energy
            + clo("H2") * energy ** 2
            + clo("H3") * energy ** 3,
        },
        master,
    )
    scalars = spec.casimir_values()
    op_coeffs = {
        name: scalar_to_operator(value, suite)
        for name, value in scalars.items()
    }
    k_op = casimir.realize(op_coeffs, A, B, C)
    k_basis = [("one", one)] + [("H%d" % n, H ** n) for n in range(1, 5)]
    k_parts = weylop.express_in_basis(k_op, k_basis)
    k_value = transfer_scalar(k_parts["one"], master)
    for n in range(1, 5):
        k_value = k_value + transfer_scalar(k_parts["H%d" % n], master) * energy ** n
    _Q5 = DerivedAlgebra(
        spec=spec,
        k=k_value,
        closure_coefficients={
            label: transfer_scalar(v, master) for label, v in closure.items()
        },
        linear_coefficients={
            label: transfer_scalar(v, master) for label, v in linear.items()
        },
        casimir_scalars=scalars,
    )
    return _Q5
