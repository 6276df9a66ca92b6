"""Verification harness: reference tables, classification sweeps, claim suites.

run_all() evaluates, over a finite closure of algebras (catalog instances,
their abelian paddings, and the Heisenberg family, up to a dimension cap):

* tables 7-10: computed (dim M, s) against the recorded values;
* classification sweeps: for each s in 0..7 the closure members with that
  s must match the classification list, compared by structural fingerprint;
* capability claims; cover stem properties; epicenter containment;
* method agreement (cohomology vs cover count) and the direct-sum law;
* every inequality suite (derived bound, central-ideal bound, non-capable
  bound, third-term bound, gamma3 defect);
* the generators-and-relations fixtures and the documented-discrepancy
  allowlist.

Reports are deterministic: two runs produce byte-identical JSON/CSV/
Markdown.  Recorded-value mismatches that are on the pinned allowlist are
report content, never failures; anything else fails the run (exit code 1).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import catalog
from .catalog import CPROD, DSUM, CatalogEntry, abelian, heisenberg
from .core import LieAlgebra, direct_sum
from .invariants import (
    central_basis_vectors,
    check_derived_bound,
    check_third_term_bound,
    check_noncapable_bound,
    check_central_ideal_bound,
    fingerprint,
    gamma3_defect,
    s_invariant,
    t_invariant,
)
from .linalg import Q, unit_vector
from .multiplier import (
    cover,
    dim_exterior_square,
    dim_multiplier,
    dim_multiplier_cover,
    epicenter,
    is_capable,
)

KUNNETH_SEED = 0x5138
VERIFY_EPS = (Q(1), Q(-1), Q(2))


def verify_samples(entry: CatalogEntry) -> list[Fraction | None]:
    """Sample set {1, -1, 2} intersected with the family domain."""
    if entry.param is None:
        return [None]
    return [v for v in VERIFY_EPS if entry.param.contains(v)]


# ---------------------------------------------------------------------------
# closure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosureMember:
    name: str
    algebra: LieAlgebra
    origin: str          # "catalog" | "padding" | "heisenberg"
    base_entry: str | None


def build_closure(dim_cap: int = 9, heisenberg_max: int = 3) -> list[ClosureMember]:
    """Catalog instances + A(k)-paddings + H(m)(+A(k)), dim <= dim_cap.

    Catalog instances are added first so that a padding that happens to
    coincide with a named entry (L_{4,3}+A(1) vs the printed L_{5,3})
    dedupes onto the named one.
    """
    members: list[ClosureMember] = []
    seen: set[tuple] = set()

    def add(name: str, alg: LieAlgebra, origin: str, base: str | None) -> bool:
        key = alg.canonical_key()
        if key in seen:
            return False
        seen.add(key)
        members.append(ClosureMember(name, alg, origin, base))
        return True

    bases: list[tuple[LieAlgebra, str]] = []
    for entry in catalog.entries():
        for value in verify_samples(entry):
            alg = entry.build(value)
            if alg.dim > dim_cap:
                continue
            add(alg.name, alg, "catalog", entry.name)
            bases.append((alg, entry.name))
    for m in range(1, heisenberg_max + 1):
        if 2 * m + 1 > dim_cap:
            break
        h = heisenberg(m)
        add(h.name, h, "heisenberg", None)
        bases.append((h, None))
    for alg, entry_name in bases:
        for k in range(1, dim_cap - alg.dim + 1):
            padded = direct_sum(alg, abelian(k), name=f"{alg.name}{DSUM}A({k})")
            add(padded.name, padded, "padding", entry_name)
    return members


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

TABLE_ORDER: dict[int, list[str]] = {
    7: [
        "L_{5,6}", "L_{5,7}", "L_{5,9}",
        "L_{6,6}", "L_{6,7}", "L_{6,9}", "L_{6,11}", "L_{6,12}",
        "L_{6,19}(eps)", "L_{6,20}", "L_{6,24}(eps)",
        "L_{6,13}",
        "L_{6,23}", "L_{6,25}",
        "L_{6,26}",
    ],
    8: [
        "37A",
        "37B", "37C", "37D",
        "257A", "257C", "257F",
        "257B", "257D", "257E", "257G", "257H", "257I", "257J",
        "147A", "147B", "L_{4,3}" + DSUM + "H(1)",
        "L_{5,6}" + DSUM + "A(2)", "L_{5,7}" + DSUM + "A(2)", "L_{5,9}" + DSUM + "A(2)",
        "L_{6,11}" + DSUM + "A(1)", "L_{6,12}" + DSUM + "A(1)",
        "L_{6,19}(eps)" + DSUM + "A(1)", "L_{6,20}" + DSUM + "A(1)",
        "L_{6,24}(eps)" + DSUM + "A(1)", "257K", "257L",
        "1457A", "1457B", "1357B", "1357C",
        "137A", "137B", "137C", "137D", "1357A", "L_{6,13}" + DSUM + "A(1)",
        "L_{6,23}" + DSUM + "A(1)", "L_{6,25}" + DSUM + "A(1)",
        "L_{6,26}" + DSUM + "A(1)",
    ],
    9: [
        "L_{6,14}", "L_{6,16}",
        "L_{6,15}", "L_{6,17}", "L_{6,18}",
        "L_{6,21}(eps)",
    ],
    10: [
        "L_{6,10}",
        "27A", "L_{6,10}" + DSUM + "A(1)", "157",
    ],
}


@dataclass
class TableRow:
    name: str
    params: str
    dim_M_computed: int
    dim_M_expected: int
    s_computed: int
    s_expected: int
    match: bool


@dataclass
class TableReport:
    table_id: int
    rows: list[TableRow]
    discrepancies: list[str]

    @property
    def passed(self) -> bool:
        return not self.discrepancies


def verify_table(table_id: int) -> TableReport:
    if table_id not in TABLE_ORDER:
        raise ValueError(f"no reference table {table_id}")
    rows: list[TableRow] = []
    discrepancies: list[str] = []
    for name in TABLE_ORDER[table_id]:
        entry = catalog.lookup(name)
        values = []
        for v in verify_samples(entry):
            alg = entry.build(v)
            values.append((dim_multiplier(alg), s_invariant(alg)))
        if len(set(values)) != 1:
            discrepancies.append(f"{name}: samples disagree: {sorted(set(values))}")
        dim_m, s = values[0]
        params = "" if entry.param is None else (
            entry.param.name + " in {" + ", ".join(str(v) for v in verify_samples(entry)) + "}"
        )
        match = (dim_m == entry.expected_dim_M and s == entry.expected_s)
        rows.append(TableRow(name, params, dim_m, entry.expected_dim_M, s, entry.expected_s, match))
        if not match:
            discrepancies.append(
                f"{name}: computed (dim M, s) = ({dim_m}, {s}), "
                f"recorded ({entry.expected_dim_M}, {entry.expected_s})"
            )
    return TableReport(table_id, rows, discrepancies)


# ---------------------------------------------------------------------------
# classification sweeps
# ---------------------------------------------------------------------------

def _eps22(tail: str = "") -> list[str]:
    return [f"L_{{6,22}}({v}){tail}" for v in (1, -1, 2)]


def _eps(stem: str, tail: str = "") -> list[str]:
    return [f"{stem}({v}){tail}" for v in (1, -1, 2)]


def classification_list(s_value: int, dim_cap: int, heisenberg_max: int = 3) -> list[str]:
    """The classification list for one s value, instantiated by name.

    A(k)-tail families are instantiated up to dim_cap; fixed names are
    always returned (callers report those beyond dim_cap as out of
    closure rather than missing).
    """
    a1, a2 = DSUM + "A(1)", DSUM + "A(2)"
    if s_value == 0:
        return [f"H(1){DSUM}A({k})" if k else "H(1)" for k in range(0, max(dim_cap - 2, 1))]
    if s_value == 1:
        return ["L_{5,8}"]
    if s_value == 2:
        names = ["L_{5,8}" + a1, "L_{4,3}"]
        for m in range(2, heisenberg_max + 1):
            for k in range(0, dim_cap - 2 * m):
                names.append(f"H({m}){DSUM}A({k})" if k else f"H({m})")
        return names
    if s_value == 3:
        return ["L_{5,8}" + a2, "L_{4,3}" + a1, "L_{5,5}"] + _eps22() + ["L_{6,26}"]
    if s_value == 4:
        return (["L_{5,8}" + DSUM + "A(3)", "L_{4,3}" + a2, "L_{5,5}" + a1]
                + _eps22(a1) + ["L_{5,6}", "L_{5,7}", "L_{5,9}", "37A"])
    if s_value == 5:
        return (["L_{5,8}" + DSUM + "A(4)", "L_{4,3}" + DSUM + "A(3)", "L_{5,5}" + a2]
                + _eps22(a2)
                + ["L_{6,26}" + a1, "L_{6,10}", "L_{6,23}", "L_{6,25}", "37B", "37C", "37D"])
    if s_value == 6:
        return (["L_{5,8}" + DSUM + "A(5)", "L_{4,3}" + DSUM + "A(4)", "L_{5,5}" + DSUM + "A(3)"]
                + _eps22(DSUM + "A(3)")
                + ["L_{6,10}" + a1, "27A", "157", "37A" + a1,
                   "L_{6,6}", "L_{6,7}", "L_{6,9}", "L_{6,11}", "L_{6,12}"]
                + _eps("L_{6,19}") + ["L_{6,20}"] + _eps("L_{6,24}"))
    if s_value == 7:
        return (["L_{5,8}" + DSUM + "A(6)", "L_{4,3}" + DSUM + "A(5)", "L_{5,5}" + DSUM + "A(4)"]
                + _eps22(DSUM + "A(4)")
                + ["27B", "L_{6,10}" + a2, "27A" + a1, "157" + a1,
                   "L_{6,10}" + CPROD + "H(1)", "H(1)" + DSUM + "H(2)", "S1",
                   "L_{6,23}" + a1, "L_{6,25}" + a1,
                   "37B" + a1, "37C" + a1, "37D" + a1,
                   "L_{6,26}" + a2, "L_{6,13}", "257A", "257C", "257F"]
                + _eps("L_{6,21}"))
    raise ValueError("classification lists cover s in 0..7 only")


@dataclass
class ClassificationReport:
    s_value: int
    expected_names: list[str]
    computed_names: list[str]
    missing: list[str]
    extra: list[str]
    out_of_closure: list[str]
    aliases: list[str]

    @property
    def passed(self) -> bool:
        return not self.missing and not self.extra


def classify_by_s(s_value: int, dim_cap: int = 9,
                  closure: list[ClosureMember] | None = None) -> ClassificationReport:
    if closure is None:
        closure = build_closure(dim_cap)
    expected_names = classification_list(s_value, dim_cap)
    expected_in, out_of_closure, expected_fps = [], [], {}
    for name in expected_names:
        alg = catalog.get(name)
        if alg.dim > dim_cap:
            out_of_closure.append(name)
            continue
        expected_in.append((name, alg))
        expected_fps.setdefault(fingerprint(alg), []).append(name)
    computed = [
        m for m in closure
        if not m.algebra.is_abelian and s_invariant(m.algebra) == s_value
    ]
    computed_fps = {}
    for m in computed:
        computed_fps.setdefault(fingerprint(m.algebra), []).append(m.name)
    missing = sorted(
        name for fp, names in expected_fps.items() if fp not in computed_fps for name in names
    )
    extra = sorted(
        m.name for m in computed if fingerprint(m.algebra) not in expected_fps
    )
    expected_set = set(expected_names)
    aliases = sorted(
        f"{m.name} ~ {expected_fps[fingerprint(m.algebra)][0]}"
        for m in computed
        if m.name not in expected_set and fingerprint(m.algebra) in expected_fps
    )
    return ClassificationReport(
        s_value=s_value,
        expected_names=expected_names,
        computed_names=sorted(m.name for m in computed),
        missing=missing,
        extra=extra,
        out_of_closure=out_of_closure,
        aliases=aliases,
    )


# ---------------------------------------------------------------------------
# capability claims
# ---------------------------------------------------------------------------

# (name for get(), expected capability, catalog entry the claim certifies)
CAPABILITY_CLAIMS: list[tuple[str, bool, str]] = (
    [
        ("L_{6,10}", False, "L_{6,10}"),
        ("27A", False, "27A"),
        ("27B", True, "27B"),
        ("157", False, "157"),
        ("L_{6,10}" + DSUM + "A(1)", False, "L_{6,10}" + DSUM + "A(1)"),
        ("L_{6,3}" + DSUM + "A(1)", True, "L_{6,3}" + DSUM + "A(1)"),
        ("L_{6,5}" + DSUM + "A(1)", True, "L_{6,5}" + DSUM + "A(1)"),
        ("L_{6,8}" + DSUM + "A(1)", True, "L_{6,8}" + DSUM + "A(1)"),
    ]
    + [(f"L_{{6,22}}({v}){DSUM}A(1)", True, "L_{6,22}(eps)" + DSUM + "A(1)") for v in (1, -1, 2)]
)


@dataclass
class ClaimResult:
    name: str
    expected: bool
    computed: bool

    @property
    def match(self) -> bool:
        return self.expected == self.computed


def verify_capability_claims() -> list[ClaimResult]:
    out = []
    for name, expected, _ in CAPABILITY_CLAIMS:
        out.append(ClaimResult(name, expected, is_capable(catalog.get(name))))
    return out


# ---------------------------------------------------------------------------
# fixtures (generators-and-relations method) and discrepancy allowlist
# ---------------------------------------------------------------------------

def _mk(dim: int, spec: dict, name: str) -> LieAlgebra:
    table = {(i - 1, j - 1): {k - 1: Q(c) for k, c in t.items()} for (i, j), t in spec.items()}
    return LieAlgebra(dim, table, name=name)


def witness_extensions() -> list[tuple[str, LieAlgebra, int]]:
    """The four 8-dim one-generator extensions used as non-existence
    witnesses, with their recorded multiplier dimensions."""
    return [
        ("ext(37A; [x1,x7]=x8)",
         _mk(8, {(1, 2): {5: 1}, (2, 3): {6: 1}, (2, 4): {8: 1}, (1, 7): {8: 1}},
             "ext(37A; [x1,x7]=x8)"), 14),
        ("stem(37A; [x1,x3]=x8)",
         _mk(8, {(1, 2): {5: 1}, (2, 3): {6: 1}, (2, 4): {7: 1}, (1, 3): {8: 1}},
             "stem(37A; [x1,x3]=x8)"), 14),
        ("ext(147A; [x6,x8]=x7)",
         _mk(8, {(1, 2): {4: 1}, (1, 3): {5: 1}, (1, 6): {7: 1}, (2, 5): {7: 1},
                 (3, 4): {7: 1}, (6, 8): {7: 1}},
             "ext(147A; [x6,x8]=x7)"), 12),
        ("ext(L_{5,8}+A(2); [x6,x8]=x7)",
         _mk(8, {(1, 2): {4: 1}, (1, 3): {5: 1}, (6, 8): {7: 1}},
             "ext(L_{5,8}+A(2); [x6,x8]=x7)"), 14),
    ]


@dataclass
class FixtureRow:
    name: str
    computed: int
    expected: int
    match: bool
    note: str = ""


def fixtures_suite() -> list[FixtureRow]:
    """Pinned multiplier values, computed with the cover-count method."""
    rows: list[FixtureRow] = []

    def check(name: str, alg: LieAlgebra, expected: int, note: str = "") -> None:
        got = dim_multiplier_cover(alg).dim_M
        rows.append(FixtureRow(name, got, expected, got == expected, note))

    check("H(1)", heisenberg(1), 2)
    for name, alg, expected in witness_extensions():
        check(name, alg, expected)
    check("357A", catalog.get("357A"), 8)
    check("247N", catalog.get("247N"), 7)
    check("147D", catalog.get("147D"), 7)
    check("147F", catalog.get("147F"), 7, "presentation repaired; see catalog note")
    check("147E(3)", catalog.get("147E", lam=3), 7, "generic family member")
    check("147E(2)", catalog.get("147E", lam=2), 7,
          "documented discrepancy: the recorded value 7 holds generically but "
          "the eigenvalue-coincidence orbit lam in {2, -1, 1/2} gives 8")
    return rows


def discrepancy_notes() -> list[dict]:
    """The pinned allowlist of recorded values that the computation refutes."""
    l58 = dim_multiplier(catalog.get("L_{5,8}"))
    lemma_s = {
        name: s_invariant(catalog.get(name))
        for name in ("357A", "247N", "147D", "147F")
    }
    lemma_s["147E(3)"] = s_invariant(catalog.get("147E", lam=3))
    e2 = dim_multiplier(catalog.get("147E", lam=2))
    return [
        {
            "id": "multiplier-L_{5,8}",
            "recorded": 9,
            "computed": l58,
            "note": "an in-proof citation records dim M(L_{5,8}) = 9; the computed value "
                    f"{l58} is consistent with s(L_{{5,8}}) = 1 and is used throughout",
        },
        {
            "id": "stem-witness-s-values",
            "recorded": {"357A": 14, "247N": 15, "147D": 15, "147E": 15, "147F": 15},
            "computed": {k: v for k, v in sorted(lemma_s.items())},
            "note": "the recorded s-values contradict s = (n-1)(n-2)/2 + 1 - dim M; "
                    "s is always recomputed from the definition",
        },
        {
            "id": "multiplier-147E-special-orbit",
            "recorded": 7,
            "computed": e2,
            "note": "dim M(147E(lam)) = 7 for generic lam but 8 on the coincidence "
                    "orbit lam in {2, -1, 1/2} (the eigenvalue triple {-1, lam, 1-lam} "
                    "degenerates); the recorded blanket value 7 is an overclaim there",
        },
    ]


# ---------------------------------------------------------------------------
# bound, stem, and structure suites over the closure
# ---------------------------------------------------------------------------

@dataclass
class SuiteResult:
    checked: int
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def bound_suites(closure: list[ClosureMember]) -> dict[str, SuiteResult]:
    derived_bound = SuiteResult(0)
    ideal_bound = SuiteResult(0)
    noncapable = SuiteResult(0)
    third_term = SuiteResult(0)
    gamma3 = SuiteResult(0)
    for member in closure:
        L = member.algebra
        if L.is_abelian:
            continue
        chk = check_derived_bound(L)
        derived_bound.checked += 1
        if not chk.holds:
            derived_bound.violations.append(f"{member.name}: {chk.lhs} > {chk.rhs}")
        if L.derived_subalgebra().dim == 1:
            reference = fingerprint(direct_sum(heisenberg(1), abelian(L.dim - 3)))
            should_be_tight = fingerprint(L) == reference
            if chk.tight != should_be_tight:
                derived_bound.violations.append(
                    f"{member.name}: m=1 equality holds iff H(1)+A(n-3); "
                    f"tight={chk.tight} fingerprint-match={should_be_tight}"
                )
        for i in central_basis_vectors(L):
            chk_ideal = check_central_ideal_bound(L, L.subspace([unit_vector(L.dim, i)]))
            ideal_bound.checked += 1
            if not chk_ideal.holds:
                ideal_bound.violations.append(f"{member.name}, K=<x{i+1}>: {chk_ideal.lhs} > {chk_ideal.rhs}")
        if L.derived_subalgebra().dim >= 2 and not is_capable(L):
            chk_nc = check_noncapable_bound(L)
            noncapable.checked += 1
            if not chk_nc.holds:
                noncapable.violations.append(f"{member.name}: n-3 = {chk_nc.lhs} >= s = {chk_nc.rhs}")
        if L.nilpotency_class >= 3:
            chk_third = check_third_term_bound(L)
            third_term.checked += 1
            if not chk_third.holds:
                third_term.violations.append(f"{member.name}: {chk_third.lhs} > {chk_third.rhs}")
            gd = gamma3_defect(L)
            gamma3.checked += 1
            if not gd.holds:
                gamma3.violations.append(f"{member.name}: defect {gd.lhs} < bound {gd.rhs}")
    return {"derived_bound": derived_bound, "central_ideal_bound": ideal_bound,
            "non_capable_bound": noncapable, "third_term_bound": third_term,
            "gamma3_defect": gamma3}


def structure_suites(closure: list[ClosureMember]) -> dict[str, SuiteResult]:
    agreement = SuiteResult(0)
    stem = SuiteResult(0)
    epi = SuiteResult(0)
    derived_one = SuiteResult(0)
    for member in closure:
        L = member.algebra
        mr = dim_multiplier_cover(L)
        agreement.checked += 1
        if mr.dim_M != dim_multiplier(L):
            agreement.violations.append(member.name)
        try:
            ext = cover(L)
            stem.checked += 1
            if ext.total.dim != L.dim + mr.dim_M or ext.kernel.dim != mr.dim_M:
                stem.violations.append(f"{member.name}: cover dimensions wrong")
        except Exception as exc:  # stem property failures raise
            stem.checked += 1
            stem.violations.append(f"{member.name}: {exc}")
        if not L.is_abelian:
            try:
                z = epicenter(L)
                epi.checked += 1
                bound = L.center().intersect(L.derived_subalgebra())
                if not bound.contains_subspace(z):
                    epi.violations.append(member.name)
            except Exception as exc:
                epi.checked += 1
                epi.violations.append(f"{member.name}: {exc}")
        if L.derived_subalgebra().dim == 1:
            derived_one.checked += 1
            n = L.dim
            ok = any(
                fingerprint(L) == fingerprint(
                    direct_sum(heisenberg(m), abelian(n - 2 * m - 1))
                )
                for m in range(1, (n - 1) // 2 + 1)
            )
            if not ok:
                derived_one.violations.append(member.name)
    return {"method_agreement": agreement, "cover_stem": stem,
            "epicenter_containment": epi, "derived_dim_one_form": derived_one}


def kunneth_suite(pairs: int = 50, seed: int = KUNNETH_SEED) -> SuiteResult:
    """dim M(A+B) = dim M(A) + dim M(B) + dim A^ab * dim B^ab on random pairs."""
    rng = random.Random(seed)
    pool: list[LieAlgebra] = []
    for entry in catalog.entries():
        if entry.dim > 7:
            continue
        for v in verify_samples(entry):
            pool.append(entry.build(v))
    result = SuiteResult(0)
    while result.checked < pairs:
        a, b = rng.choice(pool), rng.choice(pool)
        if a.dim + b.dim > 11:
            continue
        total = direct_sum(a, b)
        lhs = dim_multiplier(total)
        rhs = dim_multiplier(a) + dim_multiplier(b) + a.abelianization_dim() * b.abelianization_dim()
        result.checked += 1
        if lhs != rhs:
            result.violations.append(f"{a.name} + {b.name}: {lhs} != {rhs}")
    return result


def exterior_consequence_suite() -> SuiteResult:
    """The wedge-dimension eliminations at n = 8 and n = 9.

    A non-capable algebra with 2-dimensional derived subalgebra has
    L^L isomorphic to the exterior square of A(n-2) or H(1)+A(n-4);
    the resulting s values must avoid 6 (n=8) and 7 (n=9).
    """
    result = SuiteResult(0)
    def s_from_wedge(n: int, wedge: int, m: int = 2) -> int:
        return (n - 1) * (n - 2) // 2 + 1 - (wedge - m)

    expectations = [
        ("dim(A(6)^A(6))", dim_exterior_square(abelian(6)), 15),
        ("dim((H(1)+A(4))^)", dim_exterior_square(direct_sum(heisenberg(1), abelian(4))), 17),
        ("s at n=8 from wedge 15", s_from_wedge(8, 15), 9),
        ("s at n=8 from wedge 17", s_from_wedge(8, 17), 7),
        ("dim((H(1)+A(5))^)", dim_exterior_square(direct_sum(heisenberg(1), abelian(5))), 23),
        ("s at n=9 from wedge 15", s_from_wedge(9, 15), 16),
        ("s at n=9 from wedge 23", s_from_wedge(9, 23), 8),
    ]
    for label, got, want in expectations:
        result.checked += 1
        if got != want:
            result.violations.append(f"{label}: computed {got}, expected {want}")
    return result


def subalgebra_series_suite() -> SuiteResult:
    """If L^2 = H^2 + L^3 for a subalgebra H then L^i = H^i for i >= 2.

    Exercised on the central product recipe, where H is the image of the
    left factor.
    """
    result = SuiteResult(0)
    pairs = [("L_{6,10}", "H(1)")]
    for left, right in pairs:
        a, b = catalog.get(left), catalog.get(right)
        total = direct_sum(a, b)
        wa = a.center().intersect(a.derived_subalgebra())
        wb = b.center().intersect(b.derived_subalgebra())
        glue = total.subspace(
            [tuple(wa.basis.data[0]) + tuple(-x for x in wb.basis.data[0])]
        )
        product_alg, pi = total.quotient(glue)
        h_img = product_alg.subspace(
            [pi.apply(unit_vector(total.dim, i)) for i in range(a.dim)]
        )
        h2 = product_alg.product_space(h_img, h_img)
        series = product_alg.lower_central_series()
        l2, l3 = series[1], series[2]
        result.checked += 1
        if not (h2.sum(l3) == l2):
            continue  # premise failed: vacuous here, nothing to assert
        hi = h2
        ok = product_alg.is_ideal(h_img)
        for idx in range(1, len(series) - 1):
            if series[idx] != hi:
                ok = False
                break
            hi = product_alg.product_space(hi, h_img)
        if not ok:
            result.violations.append(f"{left} .+ {right}")
    return result


def fingerprint_collisions() -> list[list[str]]:
    """Distinct catalog names sharing a structural fingerprint (reported)."""
    groups: dict[tuple, list[str]] = {}
    for entry in catalog.entries():
        for v in verify_samples(entry):
            alg = entry.build(v)
            groups.setdefault(fingerprint(alg), []).append(alg.name)
    out = []
    for fp, names in sorted(groups.items(), key=lambda kv: repr(kv[0])):
        stems = sorted(set(names))
        if len(stems) > 1:
            out.append(stems)
    return out


# ---------------------------------------------------------------------------
# full run
# ---------------------------------------------------------------------------

@dataclass
class FullReport:
    dim_cap: int
    closure_size: int
    tables: list[TableReport]
    classifications: list[ClassificationReport]
    capability: list[ClaimResult]
    bounds: dict[str, SuiteResult]
    structure: dict[str, SuiteResult]
    kunneth: SuiteResult
    exterior: SuiteResult
    series_law: SuiteResult
    fixtures: list[FixtureRow]
    collisions: list[list[str]]
    discrepancies: list[dict]
    uncovered_entries: list[str]

    @property
    def passed(self) -> bool:
        fixture_fail = any(
            not row.match and "documented discrepancy" not in row.note for row in self.fixtures
        )
        return (
            all(t.passed for t in self.tables)
            and all(c.passed for c in self.classifications)
            and all(c.match for c in self.capability)
            and all(s.passed for s in self.bounds.values())
            and all(s.passed for s in self.structure.values())
            and self.kunneth.passed
            and self.exterior.passed
            and self.series_law.passed
            and not fixture_fail
            and not self.uncovered_entries
        )

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1


def run_all(dim_cap: int = 9, kunneth_pairs: int = 50) -> FullReport:
    closure = build_closure(dim_cap)
    tables = [verify_table(t) for t in (7, 8, 9, 10)]
    classifications = [classify_by_s(s, dim_cap, closure) for s in range(8)]
    capability = verify_capability_claims()
    bounds = bound_suites(closure)
    structure = structure_suites(closure)
    kunneth = kunneth_suite(kunneth_pairs)
    exterior = exterior_consequence_suite()
    series_law = subalgebra_series_suite()
    fixtures = fixtures_suite()
    collisions = fingerprint_collisions()
    discrepancies = discrepancy_notes()

    covered: set[str] = set()
    for table in tables:
        for row in table.rows:
            covered.add(row.name)
    covered.update({"357A", "247N", "147D", "147E(lam)", "147F"})
    covered.update(entry_name for _, _, entry_name in CAPABILITY_CLAIMS)
    swept_names = set()
    for cls in classifications:
        swept_names.update(cls.computed_names)
    for member in closure:
        if member.base_entry is not None and member.name in swept_names:
            covered.add(member.base_entry)
    # entries beyond the cap cannot appear in sweeps; only a degraded cap
    # (< 9) leaves any, and those are a cap artifact, not a coverage gap
    uncovered = [
        e.name for e in catalog.entries()
        if e.name not in covered and e.dim <= dim_cap
    ]

    return FullReport(
        dim_cap=dim_cap,
        closure_size=len(closure),
        tables=tables,
        classifications=classifications,
        capability=capability,
        bounds=bounds,
        structure=structure,
        kunneth=kunneth,
        exterior=exterior,
        series_law=series_law,
        fixtures=fixtures,
        collisions=collisions,
        discrepancies=discrepancies,
        uncovered_entries=uncovered,
    )


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def report_to_dict(report: FullReport) -> dict:
    return {
        "format": "liemult-report/1",
        "closure": {
            "dim_cap": report.dim_cap,
            "heisenberg_max": 3,
            "size": report.closure_size,
            "samples": {"eps": ["1", "-1", "2"], "lam": ["-1", "2"]},
        },
        "tables": [
            {
                "table": t.table_id,
                "passed": t.passed,
                "rows": [
                    {
                        "name": r.name,
                        "params": r.params,
                        "dim_M": {"computed": r.dim_M_computed, "expected": r.dim_M_expected},
                        "s": {"computed": r.s_computed, "expected": r.s_expected},
                        "match": r.match,
                    }
                    for r in t.rows
                ],
                "discrepancies": t.discrepancies,
            }
            for t in report.tables
        ],
        "classification": [
            {
                "s": c.s_value,
                "passed": c.passed,
                "expected": c.expected_names,
                "computed": c.computed_names,
                "missing": c.missing,
                "extra": c.extra,
                "out_of_closure": c.out_of_closure,
                "aliases": c.aliases,
            }
            for c in report.classifications
        ],
        "capability": [
            {"name": c.name, "expected": c.expected, "computed": c.computed, "match": c.match}
            for c in report.capability
        ],
        "bounds": {
            key: {"checked": s.checked, "violations": s.violations}
            for key, s in report.bounds.items()
        },
        "structure": {
            key: {"checked": s.checked, "violations": s.violations}
            for key, s in report.structure.items()
        },
        "kunneth": {"checked": report.kunneth.checked, "violations": report.kunneth.violations},
        "exterior_consequences": {
            "checked": report.exterior.checked,
            "violations": report.exterior.violations,
        },
        "subalgebra_series_law": {
            "checked": report.series_law.checked,
            "violations": report.series_law.violations,
        },
        "fixtures": [
            {
                "name": f.name,
                "computed": f.computed,
                "expected": f.expected,
                "match": f.match,
                "note": f.note,
            }
            for f in report.fixtures
        ],
        "fingerprint_collisions": report.collisions,
        "documented_discrepancies": report.discrepancies,
        "uncovered_entries": report.uncovered_entries,
        "summary": {"passed": report.passed},
    }


def report_to_json(report: FullReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2) + "\n"


def table_csv_rows(report: FullReport) -> list[list[str]]:
    rows = []
    for t in report.tables:
        for r in t.rows:
            rows.append([
                f"table{t.table_id}", r.name, r.params,
                str(r.dim_M_computed), str(r.dim_M_expected),
                str(r.s_computed), str(r.s_expected),
                "ok" if r.match else "mismatch",
            ])
    return rows


def report_to_csv(report: FullReport) -> str:
    lines = ["section,check,subject,computed,expected,status,note"]

    def emit(section, check, subject, computed, expected, ok, note=""):
        row = [section, check, subject, str(computed), str(expected),
               "ok" if ok else "fail", note]
        lines.append(",".join('"' + x.replace('"', '""') + '"' if ("," in x or '"' in x) else x
                              for x in row))

    for t in report.tables:
        for r in t.rows:
            emit(f"table{t.table_id}", "dim_M,s", r.name,
                 f"({r.dim_M_computed}; {r.s_computed})",
                 f"({r.dim_M_expected}; {r.s_expected})", r.match, r.params)
    for c in report.classifications:
        emit("classification", f"s={c.s_value}", f"{len(c.computed_names)} members",
             "missing=" + "|".join(c.missing), "extra=" + "|".join(c.extra), c.passed,
             "out_of_closure=" + "|".join(c.out_of_closure))
    for claim in report.capability:
        emit("capability", "is_capable", claim.name, claim.computed, claim.expected, claim.match)
    for key, s in {**report.bounds, **report.structure}.items():
        emit("suite", key, f"{s.checked} checks", len(s.violations), 0, s.passed,
             "|".join(s.violations))
    emit("suite", "kunneth", f"{report.kunneth.checked} pairs",
         len(report.kunneth.violations), 0, report.kunneth.passed)
    emit("suite", "exterior_consequences", f"{report.exterior.checked} checks",
         len(report.exterior.violations), 0, report.exterior.passed)
    emit("suite", "subalgebra_series_law", f"{report.series_law.checked} checks",
         len(report.series_law.violations), 0, report.series_law.passed)
    for f in report.fixtures:
        emit("fixture", "dim_M", f.name, f.computed, f.expected, f.match, f.note)
    for d in report.discrepancies:
        emit("discrepancy", d["id"], "", str(d["computed"]), str(d["recorded"]), True, d["note"])
    return "\n".join(lines) + "\n"


def report_to_markdown(report: FullReport) -> str:
    out = ["# Verification report", ""]
    out.append(f"Closure: dimension cap {report.dim_cap}, {report.closure_size} members.")
    out.append(f"Overall: **{'PASS' if report.passed else 'FAIL'}**")
    out.append("")
    for t in report.tables:
        status = "pass" if t.passed else "FAIL"
        out.append(f"## Table {t.table_id} ({len(t.rows)} rows, {status})")
        out.append("")
        out.append("| name | params | dim M | recorded | s | recorded | match |")
        out.append("|---|---|---|---|---|---|---|")
        for r in t.rows:
            out.append(
                f"| {r.name} | {r.params} | {r.dim_M_computed} | {r.dim_M_expected} "
                f"| {r.s_computed} | {r.s_expected} | {'yes' if r.match else 'NO'} |"
            )
        out.append("")
    out.append("## Classification sweeps")
    out.append("")
    out.append("| s | expected | computed | missing | extra | out of closure | pass |")
    out.append("|---|---|---|---|---|---|---|")
    for c in report.classifications:
        out.append(
            f"| {c.s_value} | {len(c.expected_names)} | {len(c.computed_names)} "
            f"| {len(c.missing)} | {len(c.extra)} | {len(c.out_of_closure)} "
            f"| {'yes' if c.passed else 'NO'} |"
        )
    out.append("")
    out.append("## Capability claims")
    out.append("")
    for claim in report.capability:
        flag = "ok" if claim.match else "MISMATCH"
        out.append(f"- {claim.name}: computed {claim.computed}, expected {claim.expected} ({flag})")
    out.append("")
    out.append("## Suites")
    out.append("")
    for key, s in {**report.bounds, **report.structure,
                   "kunneth": report.kunneth,
                   "exterior_consequences": report.exterior,
                   "subalgebra_series_law": report.series_law}.items():
        flag = "pass" if s.passed else "FAIL: " + "; ".join(s.violations)
        out.append(f"- {key}: {s.checked} checks, {flag}")
    out.append("")
    out.append("## Fixtures")
    out.append("")
    for f in report.fixtures:
        flag = "ok" if f.match else "differs"
        note = f" ({f.note})" if f.note else ""
        out.append(f"- {f.name}: computed {f.computed}, recorded {f.expected} [{flag}]{note}")
    out.append("")
    out.append("## Documented discrepancies")
    out.append("")
    for d in report.discrepancies:
        out.append(f"- {d['id']}: recorded {d['recorded']}, computed {d['computed']}. {d['note']}")
    out.append("")
    if report.collisions:
        out.append("## Fingerprint collisions (necessary invariants only; reported, not resolved)")
        out.append("")
        for group in report.collisions:
            out.append("- " + ", ".join(group))
        out.append("")
    return "\n".join(out)
