"""Nilpotent Lie algebras over Q given by sparse structure constants.

An algebra is a dimension n plus a table of basis brackets
[x_i, x_j] = sum_k c_{ij}^k x_k for i < j (0-based internally; the JSON
presentation format and all human-facing output are 1-based).  Loading
validates the Jacobi identity on every basis triple and nilpotency of
the lower central series; non-nilpotent input is an error, not a
supported case.

Everything here is immutable after construction and all operations are
pure, so concurrent use needs no coordination.
"""

from __future__ import annotations

import ast
import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import (
    Matrix,
    Q,
    Vector,
    format_rational,
    is_zero_vec,
    qf,
    span_rref,
    unit_vector,
)


class LieError(Exception):
    """Base class for all domain errors raised by this package."""


class IndexOutOfRange(LieError):
    pass


class DimensionMismatch(LieError):
    pass


class AmbientMismatch(LieError):
    pass


class PresentationError(LieError):
    """Malformed presentation input (bad JSON shape, i >= j, duplicates...)."""


class JacobiViolation(LieError):
    """Jacobi identity fails on a basis triple.  Indices are 1-based."""

    def __init__(self, triple: tuple[int, int, int], defect: Vector):
        self.triple = triple
        self.defect = defect
        terms = " + ".join(
            f"{format_rational(c)}*x{k + 1}" for k, c in enumerate(defect) if c
        )
        super().__init__(f"Jacobi identity fails on triple {triple}: defect {terms}")


class NotNilpotent(LieError):
    """Lower central series stabilized at a nonzero term."""

    def __init__(self, stabilized_dim: int):
        self.stabilized_dim = stabilized_dim
        super().__init__(
            f"lower central series stabilizes at a nonzero term of dimension {stabilized_dim}"
        )


class NotAnIdeal(LieError):
    pass


class NotCentral(LieError):
    pass


class DependentIdentification(LieError):
    pass


# ---------------------------------------------------------------------------
# rational coefficient expressions ("1", "-1/2", "eps", "1-lam", "-2")
# ---------------------------------------------------------------------------

_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div)


def rational_expr(text: str, params: Mapping[str, Fraction] | None = None) -> Fraction:
    """Evaluate a rational expression with optional named parameters.

    Plain rational strings "p" and "p/q" are the common case; parameter
    names and +,-,*,/ with parentheses are accepted so parameterized
    presentations (eps, lam, 1-lam) share the same parser.
    """
    params = params or {}
    try:
        node = ast.parse(text.strip(), mode="eval").body
    except SyntaxError as exc:
        raise PresentationError(f"bad rational expression {text!r}") from exc

    def ev(n) -> Fraction:
        if isinstance(n, ast.Constant) and isinstance(n.value, int):
            return Q(n.value)
        if isinstance(n, ast.UnaryOp) and isinstance(n.op, (ast.USub, ast.UAdd)):
            v = ev(n.operand)
            return -v if isinstance(n.op, ast.USub) else v
        if isinstance(n, ast.BinOp) and isinstance(n.op, _ALLOWED_BINOPS):
            a, b = ev(n.left), ev(n.right)
            if isinstance(n.op, ast.Add):
                return a + b
            if isinstance(n.op, ast.Sub):
                return a - b
            if isinstance(n.op, ast.Mult):
                return a * b
            if b == 0:
                raise PresentationError(f"division by zero in {text!r}")
            return a / b
        if isinstance(n, ast.Name):
            if n.id not in params:
                raise PresentationError(f"unknown parameter {n.id!r} in {text!r}")
            return params[n.id]
        raise PresentationError(f"bad rational expression {text!r}")

    return ev(node)


# ---------------------------------------------------------------------------
# the algebra
# ---------------------------------------------------------------------------

BracketTable = dict[tuple[int, int], dict[int, Fraction]]


class LieAlgebra:
    """Structure-constant Lie algebra on basis x_1..x_n (stored 0-based)."""

    __slots__ = ("dim", "name", "brackets", "_lcs", "_ucs", "_center", "_key")

    def __init__(
        self,
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, Fraction]],
        name: str | None = None,
        validate: bool = True,
    ):
        if dim < 0:
            raise PresentationError("dimension must be >= 0")
        table: BracketTable = {}
        for (i, j), terms in brackets.items():
            if not (0 <= i < j < dim):
                raise IndexOutOfRange(f"bracket pair ({i + 1}, {j + 1}) out of range for dim {dim}")
            clean = {k: qf(c) for k, c in terms.items() if c}
            for k in clean:
                if not 0 <= k < dim:
                    raise IndexOutOfRange(f"bracket target x{k + 1} out of range for dim {dim}")
            if clean:
                table[(i, j)] = clean
        self.dim = dim
        self.name = name
        self.brackets = table
        self._lcs: list[Subspace] | None = None
        self._ucs: list[Subspace] | None = None
        self._center: Subspace | None = None
        self._key: tuple | None = None
        if validate:
            self._check_jacobi()
            self._check_nilpotent()

    # -- bracket --------------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[x_i, x_j] as a sparse vector; antisymmetry synthesized."""
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        terms = self.brackets.get((j, i), {})
        return {k: -c for k, c in terms.items()}

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        """Bilinear, antisymmetric extension of the basis brackets."""
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch(
                f"expected coordinate vectors of length {self.dim}"
            )
        out = [Q(0)] * self.dim
        for (i, j), terms in self.brackets.items():
            ui, vj, uj, vi = u[i], v[j], u[j], v[i]
            if (ui and vj) or (uj and vi):
                coeff = ui * vj - uj * vi
                if coeff:
                    for k, c in terms.items():
                        out[k] += coeff * c
        return tuple(out)

    def ad_images(self, u: Sequence[Fraction]) -> list[dict[int, Fraction]]:
        """[u, x_j] for every basis index j, in one sweep over the table."""
        outs: list[dict[int, Fraction]] = [{} for _ in range(self.dim)]
        for (i, j), terms in self.brackets.items():
            ui, uj = u[i], u[j]
            if ui:
                d = outs[j]
                for k, c in terms.items():
                    d[k] = d.get(k, Q(0)) + ui * c
            if uj:
                d = outs[i]
                for k, c in terms.items():
                    d[k] = d.get(k, Q(0)) - uj * c
        return outs

    def _sparse_to_vec(self, terms: Mapping[int, Fraction]) -> Vector:
        out = [Q(0)] * self.dim
        for k, c in terms.items():
            out[k] = c
        return tuple(out)

    def _jacobi_defect(self, i: int, j: int, k: int) -> Vector:
        out = [Q(0)] * self.dim
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            for l, cl in self.bracket_basis(a, b).items():
                for m, cm in self.bracket_basis(l, c).items():
                    out[m] += cl * cm
        return tuple(out)

    def _check_jacobi(self) -> None:
        # A triple has zero defect unless one of its pairs is a stored
        # bracket, so only candidates touching a bracket key are checked.
        seen: set[tuple[int, int, int]] = set()
        for (i, j) in self.brackets:
            for k in range(self.dim):
                if k == i or k == j:
                    continue
                triple = tuple(sorted((i, j, k)))
                if triple in seen:
                    continue
                seen.add(triple)
                defect = self._jacobi_defect(*triple)
                if not is_zero_vec(defect):
                    raise JacobiViolation(
                        (triple[0] + 1, triple[1] + 1, triple[2] + 1), defect
                    )

    def _check_nilpotent(self) -> None:
        term = self.full_space()
        while term.dim > 0:
            nxt = self.product_space(term, self.full_space())
            if nxt.dim == term.dim:
                raise NotNilpotent(term.dim)
            term = nxt

    # -- identity -------------------------------------------------------------

    def canonical_key(self) -> tuple:
        """Hashable key identifying the structure-constant table exactly."""
        if self._key is None:
            items = tuple(
                (i, j, tuple(sorted(terms.items())))
                for (i, j), terms in sorted(self.brackets.items())
            )
            self._key = (self.dim, items)
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __repr__(self) -> str:
        label = self.name or "LieAlgebra"
        return f"<{label}: dim {self.dim}, {len(self.brackets)} brackets>"

    # -- subspaces ------------------------------------------------------------

    def subspace(self, vectors: Iterable[Sequence[Fraction]]) -> "Subspace":
        return Subspace(self, span_rref(vectors, self.dim))

    def full_space(self) -> "Subspace":
        return Subspace(self, Matrix.identity(self.dim))

    def zero_subspace(self) -> "Subspace":
        return Subspace(self, Matrix([], cols=self.dim))

    def product_space(self, u: "Subspace", v: "Subspace") -> "Subspace":
        """Span of [a, b] over basis pairs of U x V, in canonical form."""
        for s in (u, v):
            if s.ambient is not self:
                raise AmbientMismatch("subspace belongs to a different algebra")
        if u.dim == self.dim and v.dim == self.dim:
            return self.subspace(self._sparse_to_vec(t) for t in self.brackets.values())
        if v.dim == self.dim:
            vectors = [
                self._sparse_to_vec(img)
                for a in u.basis_vectors()
                for img in self.ad_images(a)
                if img
            ]
            return self.subspace(vectors)
        vectors = [self.bracket(a, b) for a in u.basis_vectors() for b in v.basis_vectors()]
        return self.subspace(vectors)

    def derived_subalgebra(self) -> "Subspace":
        return self.lower_central_series()[1] if self.dim else self.zero_subspace()

    # -- series ---------------------------------------------------------------

    def lower_central_series(self) -> list["Subspace"]:
        """gamma_1 = L, gamma_{i+1} = [gamma_i, L], down to and including 0."""
        if self._lcs is None:
            series = [self.full_space()]
            while series[-1].dim > 0:
                series.append(self.product_space(series[-1], self.full_space()))
            self._lcs = series
        return self._lcs

    @property
    def nilpotency_class(self) -> int:
        return len(self.lower_central_series()) - 1

    def lower_central_dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.lower_central_series())

    def center(self) -> "Subspace":
        """Z(L) via the nullspace of the stacked adjoint matrices."""
        if self._center is None:
            rows: dict[tuple[int, int], list[Fraction]] = {}
            for (i, j), terms in self.brackets.items():
                for k, c in terms.items():
                    row = rows.setdefault((j, k), [Q(0)] * self.dim)
                    row[i] += c
                    row = rows.setdefault((i, k), [Q(0)] * self.dim)
                    row[j] -= c
            if rows:
                stacked = Matrix([rows[key] for key in sorted(rows)], cols=self.dim)
                self._center = self.subspace(stacked.nullspace_basis())
            else:
                self._center = self.full_space()
        return self._center

    def upper_central_series(self) -> list["Subspace"]:
        """[Z_1, Z_2, ...] strictly increasing up to and including L."""
        if self._ucs is None:
            series: list[Subspace] = []
            current = self.center()
            if self.dim == 0:
                self._ucs = [self.full_space()]
                return self._ucs
            while True:
                series.append(current)
                if current.dim == self.dim:
                    break
                quotient_alg, pi = self.quotient(current)
                current = pi.preimage(quotient_alg.center())
            self._ucs = series
        return self._ucs

    def upper_central_dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.upper_central_series())

    @property
    def is_abelian(self) -> bool:
        return not self.brackets

    def abelianization_dim(self) -> int:
        return self.dim - self.derived_subalgebra().dim

    # -- quotients ------------------------------------------------------------

    def is_ideal(self, s: "Subspace") -> bool:
        if s.ambient is not self:
            raise AmbientMismatch("subspace belongs to a different algebra")
        return all(
            s.contains(self._sparse_to_vec(img))
            for b in s.basis_vectors()
            for img in self.ad_images(b)
            if img
        )

    def quotient(self, ideal: "Subspace") -> tuple["LieAlgebra", "QuotientMap"]:
        """L/I on the complement of I's pivot coordinates.

        The quotient basis is the set of standard basis vectors whose
        columns are non-pivot in I's rref, so the construction is
        deterministic and reproducible.
        """
        if not self.is_ideal(ideal):
            raise NotAnIdeal("subspace is not an ideal")
        pivots = ideal.basis.pivot_columns()
        free = [c for c in range(self.dim) if c not in set(pivots)]
        qdim = len(free)
        pos = {c: a for a, c in enumerate(free)}

        def project(v: Sequence[Fraction]) -> Vector:
            w = list(v)
            for prow, pcol in enumerate(pivots):
                f = w[pcol]
                if f:
                    row = ideal.basis.data[prow]
                    w = [x - f * y for x, y in zip(w, row)]
            return tuple(w[c] for c in free)

        proj_matrix = Matrix(
            [project(unit_vector(self.dim, c)) for c in range(self.dim)], cols=qdim
        ).transpose()
        new_brackets: BracketTable = {}
        for a in range(qdim):
            for b in range(a + 1, qdim):
                img = project(self.bracket(unit_vector(self.dim, free[a]), unit_vector(self.dim, free[b])))
                terms = {k: c for k, c in enumerate(img) if c}
                if terms:
                    new_brackets[(a, b)] = terms
        label = f"{self.name}/I" if self.name else None
        target = LieAlgebra(qdim, new_brackets, name=label)
        pi = QuotientMap(self, target, proj_matrix)
        return target, pi


class Subspace:
    """Subspace of an algebra's underlying space, canonical rref basis."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: LieAlgebra, basis: Matrix):
        if basis.cols != ambient.dim:
            raise DimensionMismatch("basis width must equal the ambient dimension")
        if basis.rref() != basis or basis.rank() != basis.rows:
            basis = span_rref(basis.data, basis.cols)
        self.ambient = ambient
        self.basis = basis

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_vectors(self) -> list[Vector]:
        return list(self.basis.data)

    def contains(self, v: Sequence[Fraction]) -> bool:
        w = list(v)
        for prow, pcol in enumerate(self.basis.pivot_columns()):
            f = w[pcol]
            if f:
                row = self.basis.data[prow]
                w = [x - f * y for x, y in zip(w, row)]
        return is_zero_vec(w)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis_vectors())

    def sum(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return self.ambient.subspace(self.basis_vectors() + other.basis_vectors())

    def intersect(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return self.ambient.zero_subspace()
        # x = a^T U = b^T V  <=>  (a, -b) in the nullspace of [U^T | V^T]
        u, v = self.basis, other.basis
        stacked = Matrix(
            [list(u.column(j)) + list(v.column(j)) for j in range(self.ambient.dim)],
            cols=u.rows + v.rows,
        )
        vectors = []
        for sol in stacked.nullspace_basis():
            coeffs = sol[: u.rows]
            x = [Q(0)] * self.ambient.dim
            for c, row in zip(coeffs, u.data):
                if c:
                    for idx, val in enumerate(row):
                        x[idx] += c * val
            vectors.append(tuple(x))
        return self.ambient.subspace(vectors)

    def _same_ambient(self, other: "Subspace") -> None:
        if self.ambient is not other.ambient:
            raise AmbientMismatch("subspaces of different algebras")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient is other.ambient
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((id(self.ambient), self.basis))

    def __repr__(self) -> str:
        return f"<Subspace dim {self.dim} of {self.ambient!r}>"


class QuotientMap:
    """Surjective bracket-compatible linear map in coordinates."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: LieAlgebra, target: LieAlgebra, matrix: Matrix, check: bool = True):
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise DimensionMismatch("projection matrix shape mismatch")
        if matrix.rank() != target.dim:
            raise DimensionMismatch("projection must have full row rank")
        self.source = source
        self.target = target
        self.matrix = matrix
        # check=False is reserved for maps that are compatible by
        # construction (coordinate truncation of an adjoined extension).
        if check:
            self.check_compatible()

    def check_compatible(self) -> None:
        n = self.source.dim
        zero = (Q(0),) * self.target.dim
        images = [self.matrix.column(i) for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                terms = self.source.bracket_basis(i, j)
                lhs = self.apply(self.source._sparse_to_vec(terms)) if terms else zero
                rhs = self.target.bracket(images[i], images[j])
                if lhs != rhs:
                    raise LieError(
                        f"projection is not bracket-compatible on pair ({i + 1}, {j + 1})"
                    )

    def apply(self, v: Sequence[Fraction]) -> Vector:
        return self.matrix.mul_vec(v)

    def apply_subspace(self, s: Subspace) -> Subspace:
        if s.ambient is not self.source:
            raise AmbientMismatch("subspace not in the source algebra")
        return self.target.subspace([self.apply(v) for v in s.basis_vectors()])

    def kernel(self) -> Subspace:
        return self.source.subspace(self.matrix.nullspace_basis())

    def preimage(self, s: Subspace) -> Subspace:
        """{v : pi(v) in S} as a subspace of the source."""
        if s.ambient is not self.target:
            raise AmbientMismatch("subspace not in the target algebra")
        if s.dim == self.target.dim:
            return self.source.full_space()
        perp = Matrix(s.basis.nullspace_basis(), cols=self.target.dim) if s.dim else Matrix.identity(self.target.dim)
        composed = perp * self.matrix
        return self.source.subspace(composed.nullspace_basis())


# ---------------------------------------------------------------------------
# sums and products
# ---------------------------------------------------------------------------

def direct_sum(a: LieAlgebra, b: LieAlgebra, name: str | None = None) -> LieAlgebra:
    """Block direct sum; B's basis is appended after A's."""
    brackets: BracketTable = {k: dict(v) for k, v in a.brackets.items()}
    shift = a.dim
    for (i, j), terms in b.brackets.items():
        brackets[(i + shift, j + shift)] = {k + shift: c for k, c in terms.items()}
    if name is None and a.name and b.name:
        name = f"{a.name}⊕{b.name}"
    return LieAlgebra(a.dim + b.dim, brackets, name=name)


def central_product(
    a: LieAlgebra,
    b: LieAlgebra,
    identify: Sequence[tuple[Sequence[Fraction], Sequence[Fraction]]],
    name: str | None = None,
) -> LieAlgebra:
    """Quotient of A (+) B identifying central vectors pairwise.

    Each pair (u, v) must be central in its factor and the identified
    lists must be linearly independent on both sides; the result is
    A (+) B / span{(u, -v)}.
    """
    za, zb = a.center(), b.center()
    for u, v in identify:
        if not za.contains(u):
            raise NotCentral("left identification vector is not central in A")
        if not zb.contains(v):
            raise NotCentral("right identification vector is not central in B")
    if identify:
        left = span_rref([u for u, _ in identify], a.dim)
        right = span_rref([v for _, v in identify], b.dim)
        if left.rows != len(identify) or right.rows != len(identify):
            raise DependentIdentification("identified vectors are linearly dependent")
    total = direct_sum(a, b)
    glue = [tuple(u) + tuple(-qf(x) for x in v) for u, v in identify]
    ideal = total.subspace(glue)
    result, _ = total.quotient(ideal)
    if name is None and a.name and b.name:
        name = f"{a.name}∔{b.name}"
    return LieAlgebra(result.dim, result.brackets, name=name, validate=False)


# ---------------------------------------------------------------------------
# presentation format (JSON)
# ---------------------------------------------------------------------------

def presentation_from_dict(doc: Mapping, params: Mapping[str, Fraction] | None = None) -> LieAlgebra:
    """Load the JSON presentation document format.

    { "name": str?, "dim": int, "params": {name: rational-string}?,
      "brackets": [ {"i": int, "j": int,
                     "terms": [ {"k": int, "c": rational-string} ]} ] }

    Indices are 1-based and i < j is required; duplicate (i, j) entries
    are rejected.  Coefficients may reference declared parameter names.
    """
    if not isinstance(doc, Mapping):
        raise PresentationError("presentation must be a JSON object")
    if "dim" not in doc or not isinstance(doc["dim"], int):
        raise PresentationError('presentation needs an integer "dim"')
    dim = doc["dim"]
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise PresentationError('"name" must be a string')
    declared = {}
    for key, value in (doc.get("params") or {}).items():
        declared[key] = rational_expr(str(value))
    if params:
        declared.update(params)
    brackets: BracketTable = {}
    for item in doc.get("brackets", []):
        try:
            i, j = item["i"], item["j"]
        except (TypeError, KeyError) as exc:
            raise PresentationError('each bracket needs integer "i" and "j"') from exc
        if not (isinstance(i, int) and isinstance(j, int)):
            raise PresentationError('bracket indices "i", "j" must be integers')
        if not (1 <= i < j <= dim):
            raise PresentationError(
                f"bracket pair ({i}, {j}) must satisfy 1 <= i < j <= dim"
            )
        if (i - 1, j - 1) in brackets:
            raise PresentationError(f"duplicate bracket pair ({i}, {j})")
        terms: dict[int, Fraction] = {}
        for term in item.get("terms", []):
            k = term.get("k")
            if not isinstance(k, int) or not 1 <= k <= dim:
                raise PresentationError(f"bracket target {k!r} out of range in pair ({i}, {j})")
            c = rational_expr(str(term.get("c", "1")), declared)
            if c:
                terms[k - 1] = terms.get(k - 1, Q(0)) + c
        brackets[(i - 1, j - 1)] = terms
    return LieAlgebra(dim, brackets, name=name)


def load_presentation(text_or_path: str, params: Mapping[str, Fraction] | None = None) -> LieAlgebra:
    """Parse a presentation from a JSON string or a file path."""
    text = text_or_path
    if not text.lstrip().startswith("{"):
        with open(text_or_path, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationError(f"invalid JSON: {exc}") from exc
    return presentation_from_dict(doc, params)


def presentation_to_dict(algebra: LieAlgebra) -> dict:
    """Inverse of presentation_from_dict (parameters already resolved)."""
    out: dict = {"dim": algebra.dim}
    if algebra.name:
        out["name"] = algebra.name
    rows = []
    for (i, j) in sorted(algebra.brackets):
        terms = algebra.brackets[(i, j)]
        rows.append(
            {
                "i": i + 1,
                "j": j + 1,
                "terms": [
                    {"k": k + 1, "c": format_rational(c)} for k, c in sorted(terms.items())
                ],
            }
        )
    out["brackets"] = rows
    return out
