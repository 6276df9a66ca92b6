"""The s/t invariants, the bound checks, and per-algebra reports.

Definitions (n = dim L, m = dim L^2, M = dim of the Schur multiplier):

    s(L) = (n-1)(n-2)/2 + 1 - M      (non-abelian L only)
    t(L) = n(n-1)/2 - M

so t - s = n - 2 identically.  Every inequality the classification
applies is packaged as a structured check returning (lhs, rhs, holds,
tight) so reports can show tightness patterns.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import LieAlgebra, LieError, Subspace
from .linalg import unit_vector
from .multiplier import dim_multiplier, is_capable


class AbelianInput(LieError):
    """s(L) is defined for non-abelian algebras only."""


class PreconditionNotMet(LieError):
    pass


class NotCentralIdeal(LieError):
    pass


def s_invariant(L: LieAlgebra) -> int:
    if L.is_abelian:
        raise AbelianInput("s undefined for abelian algebras")
    n = L.dim
    return (n - 1) * (n - 2) // 2 + 1 - dim_multiplier(L)


def t_invariant(L: LieAlgebra) -> int:
    n = L.dim
    return n * (n - 1) // 2 - dim_multiplier(L)


@dataclass(frozen=True)
class BoundCheck:
    check_id: str
    lhs: int
    rhs: int
    holds: bool
    tight: bool | None = None


def check_derived_bound(L: LieAlgebra) -> BoundCheck:
    """dim M(L) <= (n+m-2)(n-m-1)/2 + 1 for m = dim L^2 >= 1."""
    n, m = L.dim, L.derived_subalgebra().dim
    if m < 1:
        raise PreconditionNotMet("bound needs dim L^2 >= 1")
    lhs = dim_multiplier(L)
    rhs = (n + m - 2) * (n - m - 1) // 2 + 1
    return BoundCheck("derived-bound", lhs, rhs, lhs <= rhs, lhs == rhs)


def check_central_ideal_bound(L: LieAlgebra, K: Subspace) -> BoundCheck:
    """dim M(L) + dim(L^2 ^ K) <= dim M(L/K) + dim M(K) + dim((L/K)^ab x K).

    K must be a central ideal; being central it is abelian, so
    dim M(K) = C(dim K, 2).
    """
    if K.ambient is not L:
        raise NotCentralIdeal("K is not a subspace of L")
    if not L.center().contains_subspace(K):
        raise NotCentralIdeal("K is not central")
    k = K.dim
    quotient_alg, _ = L.quotient(K)
    lhs = dim_multiplier(L) + L.derived_subalgebra().intersect(K).dim
    rhs = (
        dim_multiplier(quotient_alg)
        + k * (k - 1) // 2
        + quotient_alg.abelianization_dim() * k
    )
    return BoundCheck("central-ideal-bound", lhs, rhs, lhs <= rhs, lhs == rhs)


def check_noncapable_bound(L: LieAlgebra) -> BoundCheck:
    """n - 3 < s(L) for non-capable L with dim L^2 >= 2."""
    if L.derived_subalgebra().dim < 2:
        raise PreconditionNotMet("needs dim L^2 >= 2")
    if is_capable(L):
        raise PreconditionNotMet("needs a non-capable algebra")
    n = L.dim
    s = s_invariant(L)
    return BoundCheck("non-capable-s-bound", n - 3, s, n - 3 < s, None)


def gamma3_defect(L: LieAlgebra) -> BoundCheck:
    """defect >= n - m - c where

    defect = dim M(L/g3) - dim g3 + dim(L^ab x g3) - dim M(L),
    m = dim L^2, c = nilpotency class; needs class >= 3.
    """
    c = L.nilpotency_class
    if c < 3:
        raise PreconditionNotMet("needs nilpotency class >= 3")
    series = L.lower_central_series()
    g3 = series[2]
    quotient_alg, _ = L.quotient(g3)
    defect = (
        dim_multiplier(quotient_alg)
        - g3.dim
        + L.abelianization_dim() * g3.dim
        - dim_multiplier(L)
    )
    bound = L.dim - series[1].dim - c
    return BoundCheck("gamma3-defect", defect, bound, defect >= bound, None)


def check_third_term_bound(L: LieAlgebra) -> BoundCheck:
    """dim L^3 + dim M(L) <= dim M(L/L^3) + dim(L/Z_2 x L^3); class >= 3."""
    if L.nilpotency_class < 3:
        raise PreconditionNotMet("needs nilpotency class >= 3")
    g3 = L.lower_central_series()[2]
    quotient_alg, _ = L.quotient(g3)
    z2 = L.upper_central_series()[1]
    lhs = g3.dim + dim_multiplier(L)
    rhs = dim_multiplier(quotient_alg) + (L.dim - z2.dim) * g3.dim
    return BoundCheck("third-term-bound", lhs, rhs, lhs <= rhs, lhs == rhs)


# ---------------------------------------------------------------------------
# fingerprints and reports
# ---------------------------------------------------------------------------

def central_basis_vectors(L: LieAlgebra) -> list[int]:
    """Indices i with x_i central (each spans a 1-dim central ideal)."""
    center = L.center()
    return [i for i in range(L.dim) if center.contains(unit_vector(L.dim, i))]


Fingerprint = tuple


def fingerprint(L: LieAlgebra) -> Fingerprint:
    """(n, gamma dims, Z dims, dim M, dim(Z ^ L^2)).

    Equal fingerprints are necessary, never sufficient, for isomorphism;
    collisions between distinct catalog names are reported by the
    verification harness, not resolved.
    """
    zl2 = L.center().intersect(L.derived_subalgebra()).dim
    return (
        L.dim,
        L.lower_central_dims(),
        L.upper_central_dims(),
        dim_multiplier(L),
        zl2,
    )


@dataclass
class InvariantReport:
    name: str
    n: int
    dim_derived: int
    nilpotency_class: int
    dim_M: int
    s: int | None
    t: int
    capable: bool
    gamma_dims: tuple[int, ...]
    z_dims: tuple[int, ...]
    dim_exterior: int
    dim_tensor: int
    bound_checks: list[BoundCheck] = field(default_factory=list)


def invariant_report(L: LieAlgebra, name: str | None = None) -> InvariantReport:
    """Everything the CLI prints for one algebra."""
    from .multiplier import dim_exterior_square, dim_tensor_square

    m = L.derived_subalgebra().dim
    checks: list[BoundCheck] = []
    if m >= 1:
        checks.append(check_derived_bound(L))
    if L.nilpotency_class >= 3:
        checks.append(gamma3_defect(L))
        checks.append(check_third_term_bound(L))
    capable = is_capable(L)
    if not capable and m >= 2:
        checks.append(check_noncapable_bound(L))
    for i in central_basis_vectors(L):
        chk = check_central_ideal_bound(L, L.subspace([unit_vector(L.dim, i)]))
        checks.append(
            BoundCheck(f"central-ideal-bound[x{i + 1}]", chk.lhs, chk.rhs, chk.holds, chk.tight)
        )
    return InvariantReport(
        name=name or L.name or "(unnamed)",
        n=L.dim,
        dim_derived=m,
        nilpotency_class=L.nilpotency_class,
        dim_M=dim_multiplier(L),
        s=None if L.is_abelian else s_invariant(L),
        t=t_invariant(L),
        capable=capable,
        gamma_dims=L.lower_central_dims(),
        z_dims=L.upper_central_dims(),
        dim_exterior=dim_exterior_square(L),
        dim_tensor=dim_tensor_square(L),
        bound_checks=checks,
    )
