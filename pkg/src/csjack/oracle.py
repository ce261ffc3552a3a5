"""Independent constructions of Jack polynomials used to cross-check the
creation-operator product.

Three routes, none of which touches the creation operators:

* triangular solve of the Hamiltonian eigenproblem over the dominance
  down-set in the monomial basis,
* Gram-Schmidt under the power-sum pairing along a linear extension of
  dominance (degree <= nvars only),
* the non-symmetric route: joint eigenvector of the commuting shifted
  family with leading monomial z^lam, then symmetrization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegenerateDiagonal,
    DegenerateLeadingTerm,
    DegreeExceedsVariables,
    InconsistentSystem,
    TooManyParts,
)
from .fieldring import ONE, ZERO, FieldElement
from .operators import apply_H, apply_hatD
from .partitions import Partition, dominates, partitions_of, z_factor
from .polyring import LaurentPoly, VarContext
from .rodrigues import eigenvalue_epsilon
from .symbases import POWER_SUM, expand_in_basis, monomial_sym


@dataclass
class TriangularSystem:
    """Matrix of the Hamiltonian over monomial symmetric functions of one
    degree, columns indexed by the partition whose m it acts on."""

    degree: int
    nvars: int
    ordered_basis: list[Partition]
    matrix: dict[tuple[Partition, Partition], FieldElement]


_system_cache: dict[tuple[int, int], TriangularSystem] = {}


def triangular_system(degree: int, ctx: VarContext) -> TriangularSystem:
    key = (degree, ctx.nvars)
    hit = _system_cache.get(key)
    if hit is not None:
        return hit
    basis = partitions_of(degree, ctx.nvars)
    matrix: dict[tuple[Partition, Partition], FieldElement] = {}
    for lam in basis:
        image = apply_H(monomial_sym(lam, ctx))
        for mu, c in expand_in_basis(image, "m").coords.items():
            matrix[(mu, lam)] = c
    result = TriangularSystem(degree, ctx.nvars, basis, matrix)
    _system_cache[key] = result
    return result


def jack_by_triangular_H(lam: Partition, ctx: VarContext) -> LaurentPoly:
    """Monic Jack polynomial by back-substitution of (H - eps(lam)) phi = 0
    over the dominance down-set of lam."""
    lam = Partition(lam)
    if len(lam) > ctx.nvars:
        raise TooManyParts(f"l({lam}) = {len(lam)} > {ctx.nvars}")
    system = triangular_system(lam.weight, ctx)
    down = [mu for mu in system.ordered_basis if dominates(lam, mu)]
    eps = eigenvalue_epsilon(lam, ctx.nvars)
    coeffs: dict[Partition, FieldElement] = {lam: ONE}
    for mu in down:
        if mu == lam:
            continue
        acc = ZERO
        for nu, v in coeffs.items():
            entry = system.matrix.get((mu, nu))
            if entry is not None:
                acc = acc + entry * v
        gap = eps - system.matrix.get((mu, mu), ZERO)
        if not gap:
            if acc:
                raise DegenerateDiagonal(
                    f"eigenvalue collision between {lam} and {mu} with nonzero coupling"
                )
            continue
        value = acc / gap
        if value:
            coeffs[mu] = value
    out = LaurentPoly.zero(ctx)
    for mu, v in coeffs.items():
        out = out + monomial_sym(mu, ctx).scale(v)
    return out


def _pairing(f: dict[Partition, FieldElement], g: dict[Partition, FieldElement]) -> FieldElement:
    out = ZERO
    for lam, a in f.items():
        b = g.get(lam)
        if b is None:
            continue
        weight = FieldElement((z_factor(lam),)) * FieldElement.beta(-len(lam))
        out = out + a * b * weight
    return out


def jack_by_gram_schmidt(
    lam: Partition, ctx: VarContext, ordering: list[Partition] | None = None
) -> LaurentPoly:
    """Monic Jack polynomial by orthogonalizing monomial symmetric functions
    under the power-sum pairing, working up any linear extension of dominance
    from the least dominant partition.  Only valid while the power sums of
    the degree stay independent, i.e. degree <= nvars."""
    lam = Partition(lam)
    n = lam.weight
    if n > ctx.nvars:
        raise DegreeExceedsVariables(
            f"pairing route needs degree <= {ctx.nvars}, got {n}"
        )
    if len(lam) > ctx.nvars:
        raise TooManyParts(f"l({lam}) = {len(lam)} > {ctx.nvars}")
    order = list(ordering) if ordering is not None else partitions_of(n, ctx.nvars)
    built: list[tuple[LaurentPoly, dict, FieldElement]] = []
    for mu in reversed(order):
        poly = monomial_sym(mu, ctx)
        coords = dict(expand_in_basis(poly, POWER_SUM).coords)
        for upoly, ucoords, unorm in built:
            c = _pairing(coords, ucoords) / unorm
            if c:
                poly = poly - upoly.scale(c)
                for key, val in ucoords.items():
                    acc = coords.get(key, ZERO) - val * c
                    if acc:
                        coords[key] = acc
                    else:
                        coords.pop(key, None)
        if mu == lam:
            return poly
        built.append((poly, coords, _pairing(coords, coords)))
    raise InconsistentSystem(f"{lam} never appeared in the ordering")


def nonsym_eigenvalues(lam: Partition, ctx: VarContext) -> list[FieldElement]:
    """Joint eigenvalues of the shifted family on the strict leading monomial:
    lam_i + b (N - i)."""
    lam = Partition(lam)
    padded = lam.pad(ctx.nvars)
    return [
        FieldElement((padded[i], ctx.nvars - 1 - i)) for i in range(ctx.nvars)
    ]


def nonsym_eigenfunction(lam: Partition, ctx: VarContext) -> LaurentPoly:
    """Joint eigenvector of the commuting shifted family with leading term
    z^lam, solved exactly over the reachable monomial set.

    Needs the padded parts strictly decreasing (distinct eigenvalue tuple);
    the empty partition is the constant 1.
    """
    lam = Partition(lam)
    n = ctx.nvars
    if len(lam) > n:
        raise TooManyParts(f"l({lam}) = {len(lam)} > {n}")
    if lam.weight == 0:
        return LaurentPoly.one(ctx)
    padded = lam.pad(n)
    if len(set(padded)) < n:
        raise DegenerateLeadingTerm(
            f"padded parts of {lam} are not strictly decreasing in {n} variables"
        )

    # deterministic closure of the leading monomial under the family
    images: dict[tuple, list[LaurentPoly]] = {}
    order: list[tuple] = []
    queue = [padded]
    seen = {padded}
    while queue:
        e = queue.pop(0)
        order.append(e)
        row = []
        for i in range(1, n + 1):
            img = apply_hatD(i, LaurentPoly.monomial(ctx, e))
            row.append(img)
            for new in sorted(img.terms, reverse=True):
                if new not in seen:
                    seen.add(new)
                    queue.append(new)
        images[e] = row

    deltas = nonsym_eigenvalues(lam, ctx)
    cols = [e for e in order if e != padded]
    col_index = {e: t for t, e in enumerate(cols)}

    rows: list[tuple[dict[int, FieldElement], FieldElement]] = []
    for i in range(n):
        # residual of (hatD_i - delta_i) on the ansatz, row per monomial
        residual_rows: dict[tuple, dict[int, FieldElement]] = {}
        rhs_terms: dict[tuple, FieldElement] = {}
        lead = images[padded][i] - LaurentPoly.monomial(ctx, padded, deltas[i])
        for e, c in lead.terms.items():
            rhs_terms[e] = c
        for col in cols:
            contrib = images[col][i] - LaurentPoly.monomial(ctx, col, deltas[i])
            for e, c in contrib.terms.items():
                residual_rows.setdefault(e, {})[col_index[col]] = c
        for e in sorted(set(residual_rows) | set(rhs_terms), reverse=True):
            rows.append((residual_rows.get(e, {}), -rhs_terms.get(e, ZERO)))

    solution = _solve_field_system(rows, len(cols))
    terms = {padded: ONE}
    for e, t in col_index.items():
        if solution[t]:
            terms[e] = solution[t]
    chi = LaurentPoly(ctx, terms)
    for i in range(1, n + 1):
        if apply_hatD(i, chi) != chi.scale(deltas[i - 1]):
            raise InconsistentSystem(f"solved vector fails the family at index {i}")
    return chi


def _solve_field_system(
    rows: list[tuple[dict[int, FieldElement], FieldElement]], ncols: int
) -> list[FieldElement]:
    """Exact Gaussian elimination; the stacked system must determine every
    unknown uniquely and consistently."""
    work = [(dict(r), b) for r, b in rows]
    solved: list = [None] * ncols
    for col in range(ncols):
        pivot = None
        for idx, (r, _) in enumerate(work):
            if r.get(col):
                pivot = idx
                break
        if pivot is None:
            raise InconsistentSystem(f"unknown {col} is undetermined")
        prow, pb = work.pop(pivot)
        inv = prow[col].inverse()
        prow = {k: v * inv for k, v in prow.items()}
        pb = pb * inv
        reduced = []
        for r, b in work:
            f = r.get(col)
            if f:
                nr = dict(r)
                del nr[col]
                for k, v in prow.items():
                    if k == col:
                        continue
                    acc = nr.get(k, ZERO) - v * f
                    if acc:
                        nr[k] = acc
                    else:
                        nr.pop(k, None)
                reduced.append((nr, b - pb * f))
            else:
                reduced.append((r, b))
        work = reduced
        del prow[col]
        solved[col] = (prow, pb)  # back-substitute later
    # rows left over must be trivial
    for r, b in work:
        if not r and b:
            raise InconsistentSystem("stacked system is inconsistent")
    out: list[FieldElement] = [ZERO] * ncols
    for col in range(ncols - 1, -1, -1):
        prow, pb = solved[col]
        acc = pb
        for k, v in prow.items():
            acc = acc - v * out[k]
        out[col] = acc
    return out


def jack_by_symmetrization(lam: Partition, ctx: VarContext) -> LaurentPoly:
    """Sum the non-symmetric eigenfunction over all variable relabelings and
    rescale so the coefficient on z^lam is one."""
    import itertools

    lam = Partition(lam)
    chi = nonsym_eigenfunction(lam, ctx)
    total = LaurentPoly.zero(ctx)
    for perm in itertools.permutations(range(ctx.nvars)):
        total = total + chi.permute_vars(perm)
    lead = total.coefficient(lam.pad(ctx.nvars))
    if not lead:
        raise DegenerateLeadingTerm(f"symmetrization of {lam} lost its leading term")
    return total.scale(lead.inverse())
