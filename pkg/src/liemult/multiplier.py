"""Schur multiplier dimension, covers, epicenter/capability, exterior square.

Two independent routes compute dim M(L):

* cohomology: the Chevalley-Eilenberg slice L* -> Lambda^2 L* -> Lambda^3 L*
  with trivial coefficients; dim M = dim ker(d2) - rank(d1).
* cover (the generators-and-relations elimination count): the homological
  chain slice Lambda^3 L -> Lambda^2 L -> L; adjoining a central generator
  s_ij to every bracket and absorbing redundant ones leaves
  C(n,2) - dim L^2 - rank(boundary_3) survivors.

Both are exact ranks over Q and must agree on every input; the agreement
is asserted whenever both run.

A cover E is built from canonical cocycle representatives: E = L + Q^m
with bracket [(x,a),(y,b)] = ([x,y], f_1(x,y), ..., f_m(x,y)).  Its
kernel lands in Z(E) and in E^2 (checked at runtime, not assumed), and
the epicenter is the image of Z(E) under the projection; L is capable
iff that image vanishes.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import (
    LieAlgebra,
    LieError,
    QuotientMap,
    Subspace,
)
from .linalg import Matrix, Q, Vector, unit_vector


def pair_index(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def triple_index(n: int) -> list[tuple[int, int, int]]:
    return list(combinations(range(n), 3))


def _wedge_coords(i: int, j: int, pos: dict[tuple[int, int], int], coeff: Fraction, out: list[Fraction]) -> None:
    if i == j:
        return
    if i < j:
        out[pos[(i, j)]] += coeff
    else:
        out[pos[(j, i)]] -= coeff


@dataclass(frozen=True)
class CochainComplexSlice:
    """d1: L* -> Lambda^2 L*, d2: Lambda^2 L* -> Lambda^3 L* (trivial coeffs)."""

    d1: Matrix
    d2: Matrix
    pairs: tuple[tuple[int, int], ...]
    triples: tuple[tuple[int, int, int], ...]


def cochain_slice(L: LieAlgebra) -> CochainComplexSlice:
    """Build the degree-(1,2) cochain slice and check d2 . d1 = 0 exactly."""
    n = L.dim
    pairs = pair_index(n)
    triples = triple_index(n)
    pos = {p: a for a, p in enumerate(pairs)}

    d1_rows = []
    for (i, j) in pairs:
        row = [Q(0)] * n
        for k, c in L.bracket_basis(i, j).items():
            row[k] -= c
        d1_rows.append(row)
    d1 = Matrix(d1_rows, cols=n)

    d2_rows = []
    for (i, j, k) in triples:
        row = [Q(0)] * len(pairs)
        # (d2 f)(xi,xj,xk) = -f([xi,xj],xk) + f([xi,xk],xj) - f([xj,xk],xi)
        for (a, b, c, sign) in ((i, j, k, -1), (i, k, j, 1), (j, k, i, -1)):
            for l, cl in L.bracket_basis(a, b).items():
                _wedge_coords(l, c, pos, sign * cl, row)
        d2_rows.append(row)
    d2 = Matrix(d2_rows, cols=len(pairs))

    if not (d2 * d1).is_zero():
        raise LieError("cochain differentials do not compose to zero")
    if d1.rank() != L.derived_subalgebra().dim:
        raise LieError("rank(d1) must equal dim L^2")
    return CochainComplexSlice(d1, d2, tuple(pairs), tuple(triples))


def boundary2(L: LieAlgebra) -> Matrix:
    """Lambda^2 L -> L, x^y -> [x,y]; columns indexed by pairs."""
    n = L.dim
    pairs = pair_index(n)
    cols = []
    for (i, j) in pairs:
        col = [Q(0)] * n
        for k, c in L.bracket_basis(i, j).items():
            col[k] += c
        cols.append(col)
    return (Matrix(cols, cols=n) if cols else Matrix([], cols=n)).transpose()


def boundary3(L: LieAlgebra) -> Matrix:
    """Lambda^3 L -> Lambda^2 L, the standard boundary.

    d(x^y^z) = [x,y]^z - [x,z]^y + [y,z]^x.
    """
    n = L.dim
    pairs = pair_index(n)
    triples = triple_index(n)
    pos = {p: a for a, p in enumerate(pairs)}
    cols = []
    for (i, j, k) in triples:
        col = [Q(0)] * len(pairs)
        for (a, b, c, sign) in ((i, j, k, 1), (i, k, j, -1), (j, k, i, 1)):
            for l, cl in L.bracket_basis(a, b).items():
                _wedge_coords(l, c, pos, sign * cl, col)
        cols.append(col)
    return (Matrix(cols, cols=len(pairs)) if cols else Matrix([], cols=len(pairs))).transpose()


# ---------------------------------------------------------------------------
# multiplier dimension, both methods, memoized
# ---------------------------------------------------------------------------

_DIM_CACHE: dict[tuple, int] = {}
_CACHE_LOCK = threading.Lock()


def dim_multiplier(L: LieAlgebra) -> int:
    """dim M(L) = dim H^2(L; Q) = C(n,2) - dim L^2 - rank(d2)."""
    key = L.canonical_key()
    with _CACHE_LOCK:
        if key in _DIM_CACHE:
            return _DIM_CACHE[key]
    slice_ = cochain_slice(L)
    n_pairs = len(slice_.pairs)
    value = n_pairs - slice_.d1.rank() - slice_.d2.rank()
    with _CACHE_LOCK:
        _DIM_CACHE[key] = value
    return value


@dataclass(frozen=True)
class MultiplierResult:
    dim_M: int
    cocycle_basis: tuple[Vector, ...]
    method: str


class _SpanTracker:
    """Incremental row reduction: add(v) reports whether v enlarged the span."""

    def __init__(self):
        self.rows: list[tuple[int, list[Fraction]]] = []

    def add(self, vec) -> bool:
        w = list(vec)
        for pcol, row in self.rows:
            f = w[pcol]
            if f:
                w = [x - f * y for x, y in zip(w, row)]
        piv = next((idx for idx, x in enumerate(w) if x), None)
        if piv is None:
            return False
        inv = 1 / w[piv]
        if inv != 1:
            w = [x * inv for x in w]
        self.rows.append((piv, w))
        return True


_REPS_CACHE: dict[tuple, tuple[Vector, ...]] = {}


def cocycle_representatives(L: LieAlgebra) -> tuple[Vector, ...]:
    """Canonical basis of a complement of im(d1) inside ker(d2).

    Vectors live in pair coordinates (the value of the 2-form on
    x_i^x_j, pairs ordered lexicographically). Deterministic: the
    coboundary span is extended by nullspace vectors in rref order,
    keeping those that enlarge it.
    """
    key = L.canonical_key()
    with _CACHE_LOCK:
        if key in _REPS_CACHE:
            return _REPS_CACHE[key]
    slice_ = cochain_slice(L)
    tracker = _SpanTracker()
    for j in range(slice_.d1.cols):
        tracker.add(slice_.d1.column(j))
    chosen = tuple(v for v in slice_.d2.nullspace_basis() if tracker.add(v))
    with _CACHE_LOCK:
        _REPS_CACHE[key] = chosen
    return chosen


def dim_multiplier_cover(L: LieAlgebra) -> MultiplierResult:
    """The elimination count: C(n,2) - dim L^2 - rank(boundary_3).

    Adjoining central generators to every bracket, imposing the Jacobi
    relations, and absorbing generators into a basis change on L^2 kills
    exactly rank(boundary_3) + dim L^2 of the C(n,2) candidates.
    """
    n_pairs = len(pair_index(L.dim))
    b3 = boundary3(L)
    b2 = boundary2(L)
    if b2.cols and not (b2 * b3).is_zero():
        raise LieError("chain boundaries do not compose to zero")
    m = n_pairs - L.derived_subalgebra().dim - b3.rank()
    reps = cocycle_representatives(L)
    if len(reps) != m:
        raise LieError("cover and cohomology multiplier dimensions disagree")
    return MultiplierResult(dim_M=m, cocycle_basis=tuple(reps), method="cover")


# ---------------------------------------------------------------------------
# covers, epicenter, capability
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CentralExtension:
    """0 -> kernel -> total -> L -> 0 with central kernel."""

    total: LieAlgebra
    projection: QuotientMap
    kernel: Subspace

    def __post_init__(self):
        if not self.total.center().contains_subspace(self.kernel):
            raise LieError("extension kernel is not central")
        if self.projection.kernel() != self.kernel:
            raise LieError("projection kernel differs from the declared kernel")


_COVER_CACHE: dict[tuple, "CentralExtension"] = {}


def cover(L: LieAlgebra) -> CentralExtension:
    """Stem cover E -> L with kernel of dimension dim M(L).

    E = L + Q^m with bracket [(x,a),(y,b)] = ([x,y], f_1(x,y),...,f_m(x,y))
    over the canonical cocycle representatives.  The stem property
    (kernel inside Z(E) and inside E^2) is asserted, not assumed.
    """
    key = L.canonical_key()
    with _CACHE_LOCK:
        if key in _COVER_CACHE:
            return _COVER_CACHE[key]
    n = L.dim
    reps = cocycle_representatives(L)
    m = len(reps)
    pairs = pair_index(n)
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for idx, (i, j) in enumerate(pairs):
        terms: dict[int, Fraction] = dict(L.bracket_basis(i, j))
        for t, f in enumerate(reps):
            if f[idx]:
                terms[n + t] = f[idx]
        if terms:
            brackets[(i, j)] = terms
    label = f"cover({L.name})" if L.name else "cover"
    total = LieAlgebra(n + m, brackets, name=label)
    proj = Matrix(
        [unit_vector(n + m, i) for i in range(n)], cols=n + m
    )
    # truncation of an adjoined central extension is bracket-compatible
    # by construction; tests re-verify it on samples
    projection = QuotientMap(total, L, proj, check=False)
    kernel = total.subspace([unit_vector(n + m, n + t) for t in range(m)])
    ext = CentralExtension(total=total, projection=projection, kernel=kernel)
    derived = total.derived_subalgebra()
    if not derived.contains_subspace(kernel):
        raise LieError("cover kernel escaped E^2: stem property failed")
    with _CACHE_LOCK:
        _COVER_CACHE[key] = ext
    return ext


_EPICENTER_CACHE: dict[tuple, tuple] = {}


def epicenter(L: LieAlgebra) -> Subspace:
    """Z*(L): image of the cover's center under the covering projection.

    For non-abelian nilpotent input this always lands inside Z(L) ^ L^2
    (asserted).
    """
    key = L.canonical_key()
    with _CACHE_LOCK:
        cached = _EPICENTER_CACHE.get(key)
    if cached is not None:
        return L.subspace(cached)
    ext = cover(L)
    image = ext.projection.apply_subspace(ext.total.center())
    if not L.is_abelian:
        bound = L.center().intersect(L.derived_subalgebra())
        if not bound.contains_subspace(image):
            raise LieError("epicenter escaped Z(L) ^ L^2")
    with _CACHE_LOCK:
        _EPICENTER_CACHE[key] = tuple(image.basis_vectors())
    return image


def is_capable(L: LieAlgebra) -> bool:
    return epicenter(L).dim == 0


# ---------------------------------------------------------------------------
# exterior and tensor squares (dimensions only)
# ---------------------------------------------------------------------------

def dim_exterior_square(L: LieAlgebra) -> int:
    """dim(L^L) = dim L^2 + dim M(L)."""
    return L.derived_subalgebra().dim + dim_multiplier(L)


def dim_square_part(L: LieAlgebra) -> int:
    """dim(L square L) = d(d+1)/2 for d = dim L^ab (characteristic 0)."""
    d = L.abelianization_dim()
    return d * (d + 1) // 2


def dim_tensor_square(L: LieAlgebra) -> int:
    return dim_exterior_square(L) + dim_square_part(L)


def quotient_exterior_check(L: LieAlgebra) -> bool:
    """dim(L^L) equals dim of the exterior square of L/Z*(L)."""
    if L.is_abelian:
        raise LieError("quotient_exterior_check needs non-abelian input")
    z = epicenter(L)
    if z.dim == 0:
        return True
    quotient_alg, _ = L.quotient(z)
    return dim_exterior_square(L) == dim_exterior_square(quotient_alg)


def clear_caches() -> None:
    """Drop memoized multiplier/cover/epicenter results (for tests)."""
    with _CACHE_LOCK:
        _DIM_CACHE.clear()
        _COVER_CACHE.clear()
        _EPICENTER_CACHE.clear()
        _REPS_CACHE.clear()
