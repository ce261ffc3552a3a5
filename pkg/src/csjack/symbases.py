"""Symmetric polynomial bases, basis conversion, and the two scalar products.

Monomial symmetric functions m_lam, power sums p_lam, conversion of a
symmetric homogeneous polynomial into either basis, the coupling-weighted
power-sum pairing, the torus constant-term pairing for integer coupling, and
Schur polynomials by bialternant division.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import fieldring
from .errors import (
    BasisMismatch,
    ContextMismatch,
    DegreeExceedsVariables,
    DegreeMismatch,
    LaurentInput,
    NonIntegerBeta,
    NotHomogeneous,
    NotSymmetric,
    TooManyParts,
)
from .fieldring import ONE, ZERO, FieldElement
from .partitions import Partition, partitions_of, z_factor
from .polyring import LaurentPoly, VarContext, divide_by_vardiff

MONOMIAL = "m"
POWER_SUM = "p"


def monomial_sym(lam: Partition, ctx: VarContext) -> LaurentPoly:
    """Sum of all distinct variable rearrangements of z^lam."""
    lam = Partition(lam)
    if len(lam) > ctx.nvars:
        raise TooManyParts(f"l({lam}) = {len(lam)} > {ctx.nvars} variables")
    padded = lam.pad(ctx.nvars)
    terms = {e: ONE for e in set(itertools.permutations(padded))}
    return LaurentPoly._raw(ctx, terms)


def power_sum(lam: Partition, ctx: VarContext) -> LaurentPoly:
    """Product over parts k of (z_1^k + ... + z_N^k)."""
    lam = Partition(lam)
    out = LaurentPoly.one(ctx)
    for k in lam:
        pk = LaurentPoly(
            ctx,
            {
                tuple(k if t == v else 0 for t in range(ctx.nvars)): ONE
                for v in range(ctx.nvars)
            },
        )
        out = out * pk
    return out


@dataclass
class BasisExpansion:
    basis: str
    degree: int
    ctx: VarContext
    coords: dict[Partition, FieldElement]

    def sorted_coords(self) -> list[tuple[Partition, FieldElement]]:
        order = partitions_of(self.degree, None)
        return [(lam, self.coords[lam]) for lam in order if lam in self.coords]

    def reconstruct(self) -> LaurentPoly:
        build = monomial_sym if self.basis == MONOMIAL else power_sum
        out = LaurentPoly.zero(self.ctx)
        for lam, c in self.coords.items():
            out = out + build(lam, self.ctx).scale(c)
        return out

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "coords": [
                {"partition": list(lam), "coeff": c.to_json()}
                for lam, c in self.sorted_coords()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict, ctx: VarContext) -> "BasisExpansion":
        coords = {
            Partition(entry["partition"]): FieldElement.from_json(entry["coeff"])
            for entry in obj["coords"]
        }
        return cls(obj["basis"], int(obj["degree"]), ctx, coords)


def _require_symmetric_homogeneous(p: LaurentPoly) -> int:
    if p.has_negative_exponents():
        raise LaurentInput("basis expansion needs ordinary polynomials")
    if not p.is_homogeneous():
        raise NotHomogeneous("input mixes total degrees")
    if not p.is_symmetric():
        raise NotSymmetric("input is not symmetric")
    return p.total_degree()


def _monomial_coords(p: LaurentPoly) -> dict[Partition, FieldElement]:
    coords = {}
    for e, c in p.terms.items():
        if all(a >= b for a, b in zip(e, e[1:])):
            coords[Partition(e)] = c
    return coords


def _powersum_matrix(n: int, ctx: VarContext) -> tuple[list[Partition], list[list[Fraction]]]:
    """Integer matrix of p_mu expanded over m_rho, both indexed by partitions of n."""
    parts = partitions_of(n, None)
    cols = {}
    for mu in parts:
        cols[mu] = _monomial_coords(power_sum(mu, ctx))
    matrix = [
        [cols[mu].get(rho, ZERO).as_fraction() for mu in parts] for rho in parts
    ]
    return parts, matrix


def expand_in_basis(p: LaurentPoly, basis: str) -> BasisExpansion:
    """Coordinates of a homogeneous symmetric polynomial in the m or p basis.

    The power-sum route needs degree <= nvars, where the p_mu stay linearly
    independent; it solves the integer transition system exactly.
    """
    if basis not in (MONOMIAL, POWER_SUM):
        raise BasisMismatch(f"unknown basis {basis!r}")
    n = _require_symmetric_homogeneous(p)
    if not p.terms:
        return BasisExpansion(basis, 0, p.ctx, {})
    mcoords = _monomial_coords(p)
    if basis == MONOMIAL:
        return BasisExpansion(MONOMIAL, n, p.ctx, mcoords)
    if n > p.ctx.nvars:
        raise DegreeExceedsVariables(
            f"power-sum coordinates need degree <= {p.ctx.nvars}, got {n}"
        )
    parts, matrix = _powersum_matrix(n, p.ctx)
    rhs = [mcoords.get(rho, ZERO) for rho in parts]
    coeffs = _solve_rational_system(matrix, rhs)
    coords = {mu: c for mu, c in zip(parts, coeffs) if c}
    return BasisExpansion(POWER_SUM, n, p.ctx, coords)


def _solve_rational_system(matrix: list[list[Fraction]], rhs: list[FieldElement]) -> list[FieldElement]:
    """Gaussian elimination with rational pivots and field-valued right sides."""
    from .errors import InconsistentSystem

    size = len(matrix)
    a = [row[:] for row in matrix]
    b = list(rhs)
    where = [-1] * size
    row = 0
    for col in range(size):
        pivot = next((r for r in range(row, size) if a[r][col]), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        b[row], b[pivot] = b[pivot], b[row]
        inv = Fraction(1) / a[row][col]
        a[row] = [x * inv for x in a[row]]
        b[row] = b[row] * inv
        for r in range(size):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
                b[r] = b[r] - b[row] * f
        where[col] = row
        row += 1
    for r in range(row, size):
        if b[r]:
            raise InconsistentSystem("basis transition system has no solution")
    out = []
    for col in range(size):
        if where[col] < 0:
            raise InconsistentSystem("basis transition system is singular")
        out.append(b[where[col]])
    return out


def scalar_product_p(f: BasisExpansion, g: BasisExpansion) -> FieldElement:
    """Power-sum pairing: <p_lam, p_mu> = delta z_lam b^(-l(lam))."""
    if f.basis != POWER_SUM or g.basis != POWER_SUM:
        raise BasisMismatch("scalar product needs power-sum coordinates")
    if f.coords and g.coords and f.degree != g.degree:
        raise DegreeMismatch(f"degrees {f.degree} != {g.degree}")
    out = ZERO
    for lam, a in f.coords.items():
        c = g.coords.get(lam)
        if c is None:
            continue
        weight = FieldElement((z_factor(lam),)) * FieldElement.beta(-len(lam))
        out = out + a * c * weight
    return out


_weight_cache: dict[tuple[int, int], dict] = {}


def _fraction_terms(p: LaurentPoly, beta_value: Fraction) -> dict[tuple, Fraction]:
    out = {}
    for e, c in p.terms.items():
        v = c.specialize(beta_value)
        if v:
            out[e] = v
    return out


def _dict_mul(a: dict, b: dict) -> dict:
    out: dict[tuple, Fraction] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            acc = out.get(e)
            if acc is None:
                out[e] = c1 * c2
            else:
                acc = acc + c1 * c2
                if acc:
                    out[e] = acc
                else:
                    del out[e]
    return out


def _circle_weight(nvars: int, beta_int: int) -> dict:
    key = (nvars, beta_int)
    cached = _weight_cache.get(key)
    if cached is not None:
        return cached
    weight = {(0,) * nvars: Fraction(1)}
    for j in range(nvars):
        for k in range(j + 1, nvars):
            zj = [0] * nvars
            zj[j] = 1
            zk = [0] * nvars
            zk[k] = 1
            forward = {tuple(zj): Fraction(1), tuple(zk): Fraction(-1)}
            backward = {
                tuple(-x for x in zj): Fraction(1),
                tuple(-x for x in zk): Fraction(-1),
            }
            for _ in range(beta_int):
                weight = _dict_mul(weight, forward)
                weight = _dict_mul(weight, backward)
    _weight_cache[key] = weight
    return weight


def circle_inner_product(f: LaurentPoly, g: LaurentPoly, beta_int: int) -> Fraction:
    """Constant term of weight * f * bar(g) with the torus weight
    prod_{j<k} (z_j - z_k)^beta (1/z_j - 1/z_k)^beta, for positive integer
    coupling."""
    if not isinstance(beta_int, int) or beta_int < 1:
        raise NonIntegerBeta(f"torus pairing needs a positive integer coupling, got {beta_int!r}")
    if f.ctx.nvars != g.ctx.nvars:
        raise ContextMismatch(f"{f.ctx} vs {g.ctx}")
    bval = Fraction(beta_int)
    prod = _dict_mul(_fraction_terms(f, bval), _fraction_terms(g.bar_involution(), bval))
    prod = _dict_mul(_circle_weight(f.ctx.nvars, beta_int), prod)
    return prod.get((0,) * f.ctx.nvars, Fraction(0))


def _parity(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def schur(lam: Partition, ctx: VarContext) -> LaurentPoly:
    """Schur polynomial via the bialternant: alternant of z^(lam + staircase)
    divided exactly by the Vandermonde determinant, one synthetic division per
    variable pair."""
    lam = Partition(lam)
    n = ctx.nvars
    if len(lam) > n:
        raise TooManyParts(f"l({lam}) = {len(lam)} > {n} variables")
    padded = lam.pad(n)
    delta = tuple(padded[j] + n - 1 - j for j in range(n))
    terms = {}
    for perm in itertools.permutations(range(n)):
        exps = tuple(delta[perm[i]] for i in range(n))
        terms[exps] = fieldring.field(_parity(perm))
    alternant = LaurentPoly(ctx, terms)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            alternant = divide_by_vardiff(alternant, i, j)
    return alternant
