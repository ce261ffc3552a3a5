"""Dunkl operators and everything built from them.

Conventions: variable and operator indices are 1-based; a product of
operators written left to right acts right to left, so in an ordered string
the rightmost factor hits the polynomial first.  All operators preserve the
variable context and total degree (creation operators raise degree by their
cardinality).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    BadCardinality,
    EmptyIndexSet,
    IndexOutOfRange,
    LaurentInput,
    NotSymmetric,
)
from .fieldring import BETA
from .polyring import LaurentPoly, divide_by_vardiff


def _check_index(p: LaurentPoly, i: int):
    if not 1 <= i <= p.ctx.nvars:
        raise IndexOutOfRange(f"index {i} outside 1..{p.ctx.nvars}")


def _check_ordinary(p: LaurentPoly):
    if p.has_negative_exponents():
        raise LaurentInput("operator input must be an ordinary polynomial")


def _check_index_set(J, nvars: int) -> tuple[int, ...]:
    J = tuple(J)
    if not J:
        raise EmptyIndexSet("empty index set")
    if any(not 1 <= j <= nvars for j in J):
        raise IndexOutOfRange(f"index set {J} outside 1..{nvars}")
    if any(a >= b for a, b in zip(J, J[1:])):
        raise IndexOutOfRange(f"index set {J} must be strictly increasing")
    return J


def full_index_set(nvars: int) -> tuple[int, ...]:
    return tuple(range(1, nvars + 1))


def apply_dunkl(i: int, p: LaurentPoly) -> LaurentPoly:
    """Dunkl operator: plain derivative plus coupling-weighted divided
    differences against every other variable."""
    _check_index(p, i)
    _check_ordinary(p)
    out = p.partial_derivative(i)
    for j in range(1, p.ctx.nvars + 1):
        if j != i:
            out = out + p.divided_difference(i, j).scale(BETA)
    return out


def apply_D(i: int, p: LaurentPoly) -> LaurentPoly:
    """Degree-preserving operator z_i * dunkl_i."""
    return apply_dunkl(i, p).shift_var(i, 1)


def apply_D_string(k: int, J, p: LaurentPoly) -> LaurentPoly:
    """Ordered product over J = (j_1 < ... < j_l) of (D_{j_t} + (k+t-1) b),
    the factor with the largest shift acting first."""
    J = _check_index_set(J, p.ctx.nvars)
    for pos in range(len(J) - 1, -1, -1):
        shift = BETA * (k + pos)
        p = apply_D(J[pos], p) + p.scale(shift)
    return p


def apply_B_plus(i: int, J, p: LaurentPoly) -> LaurentPoly:
    """Creation operator of cardinality i over the index set J.

    Sum over i-element subsets J' of J of z_{J'} D-strings started at shift 1.
    The full-cardinality case i = N degenerates to multiplication by
    z_1 ... z_N (the boost).
    """
    nvars = p.ctx.nvars
    J = _check_index_set(J, nvars)
    if not 1 <= i <= nvars:
        raise IndexOutOfRange(f"cardinality {i} outside 1..{nvars}")
    if i > len(J):
        raise BadCardinality(f"cardinality {i} exceeds |J| = {len(J)}")
    if i == nvars:
        out = p
        for v in range(1, nvars + 1):
            out = out.shift_var(v, 1)
        return out
    total = LaurentPoly.zero(p.ctx)
    for subset in itertools.combinations(J, i):
        q = apply_D_string(1, subset, p)
        for v in subset:
            q = q.shift_var(v, 1)
        total = total + q
    return total


def apply_N(i: int, J, p: LaurentPoly) -> LaurentPoly:
    """Annihilation-side sum over i-element subsets of D-strings started at
    shift 0 (no variable prefactor)."""
    J = _check_index_set(J, p.ctx.nvars)
    if i < 1 or i > len(J):
        raise BadCardinality(f"cardinality {i} outside 1..|J| = {len(J)}")
    total = LaurentPoly.zero(p.ctx)
    for subset in itertools.combinations(J, i):
        total = total + apply_D_string(0, subset, p)
    return total


def apply_H(p: LaurentPoly) -> LaurentPoly:
    """Calogero-Sutherland Hamiltonian on symmetric polynomials.

    Differential form: sum of squared Euler operators plus the coupling times
    sum over pairs of (z_j + z_k)/(z_j - z_k) (z_j d_j - z_k d_k).  The pair
    term is evaluated by exact division, which symmetry of p guarantees.
    """
    _check_ordinary(p)
    if not p.is_symmetric():
        raise NotSymmetric("Hamiltonian input must be symmetric")
    n = p.ctx.nvars
    out = LaurentPoly.zero(p.ctx)
    for i in range(1, n + 1):
        out = out + p.euler_derivative(i).euler_derivative(i)
    pair_sum = LaurentPoly.zero(p.ctx)
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            w = p.euler_derivative(j) - p.euler_derivative(k)
            numerator = w.shift_var(j, 1) + w.shift_var(k, 1)
            pair_sum = pair_sum + divide_by_vardiff(numerator, j, k)
    return out + pair_sum.scale(BETA)


def apply_L(j: int, p: LaurentPoly) -> LaurentPoly:
    """Conserved charge: restriction of sum_i D_i^j to symmetric input."""
    if j < 1:
        raise IndexOutOfRange(f"charge order {j} must be >= 1")
    _check_ordinary(p)
    if not p.is_symmetric():
        raise NotSymmetric("charge input must be symmetric")
    total = LaurentPoly.zero(p.ctx)
    for i in range(1, p.ctx.nvars + 1):
        q = p
        for _ in range(j):
            q = apply_D(i, q)
        total = total + q
    return total


def apply_hatD(i: int, p: LaurentPoly) -> LaurentPoly:
    """Shifted variant of D_i whose family commutes: D_i + (i-1) b minus the
    coupling times the sum of (1 - swap_{ji}) over j < i."""
    _check_index(p, i)
    _check_ordinary(p)
    out = apply_D(i, p)
    if i > 1:
        out = out + p.scale(BETA * (i - 1))
        for j in range(1, i):
            out = out - (p - p.swap_vars(j, i)).scale(BETA)
    return out


def apply_hatH(p: LaurentPoly) -> LaurentPoly:
    """Hamiltonian in terms of the commuting family: sum of hatD_i^2
    - (N-1) b hatD_i, plus the constant N(N-1)(N-2) b^2 / 6."""
    _check_ordinary(p)
    n = p.ctx.nvars
    out = LaurentPoly.zero(p.ctx)
    for i in range(1, n + 1):
        first = apply_hatD(i, p)
        out = out + apply_hatD(i, first) - first.scale(BETA * (n - 1))
    shift = BETA * BETA * Fraction(n * (n - 1) * (n - 2), 6)
    return out + p.scale(shift)
