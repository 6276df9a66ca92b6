"""Structure-constant algebras: loading, validation, subspaces, constructions."""

import json
from fractions import Fraction as Q

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from liemult import (
    DependentIdentification,
    JacobiViolation,
    LieAlgebra,
    NotAnIdeal,
    NotCentral,
    NotNilpotent,
    PresentationError,
    abelian,
    central_product,
    direct_sum,
    fingerprint,
    get,
    heisenberg,
    load_presentation,
    presentation_from_dict,
    presentation_to_dict,
)
from liemult.linalg import unit_vector


def mk(dim, spec, name=None):
    brackets = {(i - 1, j - 1): {k - 1: Q(c) for k, c in t.items()} for (i, j), t in spec.items()}
    return LieAlgebra(dim, brackets, name=name)


# -- loading and validation --------------------------------------------------

def test_load_L58():
    alg = mk(5, {(1, 2): {4: 1}, (1, 3): {5: 1}})
    assert alg.dim == 5
    assert alg.derived_subalgebra().dim == 2


def test_load_abelian():
    alg = LieAlgebra(3, {})
    assert alg.is_abelian and alg.nilpotency_class == 1


def test_jacobi_violation_reported_with_triple():
    with pytest.raises(JacobiViolation) as err:
        mk(4, {(1, 2): {3: 1}, (1, 3): {4: 1}, (2, 4): {3: 1}})
    assert err.value.triple == (1, 2, 3)
    assert any(c != 0 for c in err.value.defect)


def test_non_nilpotent_rejected():
    # [x1, x2] = x2 is solvable, not nilpotent
    with pytest.raises(NotNilpotent):
        mk(2, {(1, 2): {2: 1}})


def test_index_out_of_range():
    from liemult import IndexOutOfRange
    with pytest.raises(IndexOutOfRange):
        LieAlgebra(3, {(0, 1): {7: Q(1)}})


# -- bracket ------------------------------------------------------------------

def test_bracket_basis_pair():
    L = get("L_{5,8}")
    x1, x2 = unit_vector(5, 0), unit_vector(5, 1)
    assert L.bracket(x1, x2) == unit_vector(5, 3)


def test_bracket_antisymmetry_on_vectors():
    L = get("L_{6,19}", eps=1)
    v = tuple(Q(i + 1, 2) for i in range(6))
    assert all(c == 0 for c in L.bracket(v, v))


def test_bracket_bilinearity_example():
    L = get("L_{5,8}")
    x1, x2, x3 = (unit_vector(5, i) for i in range(3))
    combo = tuple(a + b for a, b in zip(x1, x3))
    assert L.bracket(combo, x2) == unit_vector(5, 3)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6),
       st.lists(st.integers(-4, 4), min_size=6, max_size=6))
def test_bracket_antisymmetric_pairs(u, v):
    L = get("L_{6,24}", eps=1)
    uu, vv = tuple(map(Q, u)), tuple(map(Q, v))
    lhs = L.bracket(uu, vv)
    rhs = L.bracket(vv, uu)
    assert lhs == tuple(-x for x in rhs)


# -- product spaces and series -------------------------------------------------

def test_product_space_L58():
    L = get("L_{5,8}")
    full = L.full_space()
    sq = L.product_space(full, full)
    assert sq.dim == 2
    assert sq.contains(unit_vector(5, 3)) and sq.contains(unit_vector(5, 4))


def test_product_space_abelian():
    L = abelian(4)
    assert L.product_space(L.full_space(), L.full_space()).dim == 0


def test_product_space_L610_second_term():
    L = get("L_{6,10}")
    g2 = L.derived_subalgebra()
    g3 = L.product_space(g2, L.full_space())
    assert g3.dim == 1 and g3.contains(unit_vector(6, 5))


def test_lower_series_dims():
    assert abelian(4).lower_central_dims() == (4, 0)
    assert get("L_{6,10}").lower_central_dims() == (6, 2, 1, 0)
    assert get("L_{6,18}").lower_central_dims() == (6, 4, 3, 2, 1, 0)
    assert get("L_{6,18}").nilpotency_class == 5


def test_center_heisenberg():
    for m in (1, 2, 3):
        assert heisenberg(m).center().dim == 1


def test_center_L58():
    z = get("L_{5,8}").center()
    assert z.dim == 2
    assert z.contains(unit_vector(5, 3)) and z.contains(unit_vector(5, 4))


def test_upper_series_L43():
    L = get("L_{4,3}")
    series = L.upper_central_series()
    assert [s.dim for s in series] == [1, 2, 4]
    assert series[0].contains(unit_vector(4, 3))
    assert series[1].contains(unit_vector(4, 2))


def test_series_consistency_across_catalog_samples():
    for name in ("L_{5,6}", "L_{6,13}", "27B", "257J", "1357A"):
        L = get(name)
        gammas = L.lower_central_series()
        zs = L.upper_central_series()
        c = L.nilpotency_class
        assert gammas[c].dim == 0 or c == 0
        dims = [g.dim for g in gammas]
        assert dims == sorted(dims, reverse=True)
        zdims = [z.dim for z in zs]
        assert zdims == sorted(zdims) and zdims[-1] == L.dim
        assert len(zs) == c


# -- quotients ------------------------------------------------------------------

def test_quotient_L626_by_x6():
    L = get("L_{6,26}")
    ideal = L.subspace([unit_vector(6, 5)])
    q, pi = L.quotient(ideal)
    assert q == get("L_{5,8}")
    assert pi.matrix.rows == 5


def test_quotient_by_everything():
    L = get("L_{6,10}")
    q, _ = L.quotient(L.full_space())
    assert q.dim == 0


def test_quotient_L43_by_gamma3():
    L = get("L_{4,3}")
    g3 = L.lower_central_series()[2]
    q, _ = L.quotient(g3)
    assert q.dim == 3
    assert q.brackets == {(0, 1): {2: Q(1)}}


def test_quotient_requires_ideal():
    L = get("L_{4,3}")
    with pytest.raises(NotAnIdeal):
        L.quotient(L.subspace([unit_vector(4, 0)]))


def test_quotient_respects_brackets():
    L = get("L_{6,24}", eps=2)
    ideal = L.subspace([unit_vector(6, 5)])
    _, pi = L.quotient(ideal)
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = pi.apply(L.bracket(unit_vector(n, i), unit_vector(n, j)))
            rhs = pi.target.bracket(pi.apply(unit_vector(n, i)), pi.apply(unit_vector(n, j)))
            assert lhs == rhs


# -- sums and products ----------------------------------------------------------

def test_direct_sum_basic():
    alg = direct_sum(heisenberg(1), abelian(2))
    assert alg.dim == 5 and alg.derived_subalgebra().dim == 1
    assert direct_sum(abelian(2), abelian(3)) == abelian(5)


def test_direct_sum_matches_table_row():
    assert direct_sum(get("L_{6,10}"), abelian(1)) == get("L_{6,10}⊕A(1)")


def test_direct_sum_series_blocks():
    a, b = get("L_{4,3}"), get("L_{6,13}")
    total = direct_sum(a, b)
    da, db = a.lower_central_dims(), b.lower_central_dims()
    dt = total.lower_central_dims()
    for k in range(max(len(da), len(db))):
        ga = da[k] if k < len(da) else 0
        gb = db[k] if k < len(db) else 0
        assert (dt[k] if k < len(dt) else 0) == ga + gb


def test_central_product_L610_H1():
    a, b = get("L_{6,10}"), heisenberg(1)
    alg = central_product(a, b, [(unit_vector(6, 5), unit_vector(3, 2))])
    assert alg.dim == 8
    assert alg.derived_subalgebra().dim == 2


def test_central_product_H1_H1_is_H2():
    a, b = heisenberg(1), heisenberg(1)
    alg = central_product(a, b, [(unit_vector(3, 2), unit_vector(3, 2))])
    assert alg.dim == 5
    assert alg.derived_subalgebra().dim == 1
    assert alg.center().dim == 1
    assert fingerprint(alg) == fingerprint(heisenberg(2))


def test_central_product_empty_identification():
    a, b = heisenberg(1), abelian(2)
    assert central_product(a, b, []) == direct_sum(a, b)


def test_central_product_rejects_non_central():
    with pytest.raises(NotCentral):
        central_product(heisenberg(1), heisenberg(1),
                        [(unit_vector(3, 0), unit_vector(3, 2))])


def test_central_product_rejects_dependent():
    a = direct_sum(heisenberg(1), abelian(1))
    z = unit_vector(4, 2)
    z4 = unit_vector(4, 3)
    with pytest.raises(DependentIdentification):
        central_product(a, a, [(z, z), (tuple(2 * x for x in z), z4)])


def test_central_product_dimension_formula():
    a = direct_sum(heisenberg(1), abelian(1))
    b = heisenberg(2)
    pairs = [(unit_vector(4, 2), unit_vector(5, 4))]
    assert central_product(a, b, pairs).dim == a.dim + b.dim - len(pairs)


# -- presentation format ---------------------------------------------------------

H1_DOC = {
    "name": "h",
    "dim": 3,
    "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]}],
}


def test_presentation_roundtrip(tmp_path):
    doc = presentation_to_dict(get("L_{6,19}", eps=Q(1, 2)))
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(doc))
    again = load_presentation(str(path))
    assert again == get("L_{6,19}", eps=Q(1, 2))


def test_presentation_rational_strings():
    doc = {
        "dim": 3,
        "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "-2/3"}]}],
    }
    alg = presentation_from_dict(doc)
    assert alg.brackets[(0, 1)][2] == Q(-2, 3)


def test_presentation_params():
    doc = {
        "dim": 3,
        "params": {"a": "1/2"},
        "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "1-a"}]}],
    }
    alg = presentation_from_dict(doc)
    assert alg.brackets[(0, 1)][2] == Q(1, 2)


def test_presentation_rejects_bad_order():
    doc = {"dim": 3, "brackets": [{"i": 2, "j": 1, "terms": [{"k": 3, "c": "1"}]}]}
    with pytest.raises(PresentationError) as err:
        presentation_from_dict(doc)
    assert "(2, 1)" in str(err.value)


def test_presentation_rejects_duplicates():
    doc = {
        "dim": 3,
        "brackets": [
            {"i": 1, "j": 2, "terms": [{"k": 3, "c": "1"}]},
            {"i": 1, "j": 2, "terms": [{"k": 3, "c": "2"}]},
        ],
    }
    with pytest.raises(PresentationError):
        presentation_from_dict(doc)


def test_presentation_rejects_bad_rational():
    doc = {"dim": 3, "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": "0.5"}]}]}
    with pytest.raises(PresentationError):
        presentation_from_dict(doc)


def test_presentation_accepts_json_string():
    alg = load_presentation(json.dumps(H1_DOC))
    assert alg.name == "h" and alg == heisenberg(1)
