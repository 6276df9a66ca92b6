"""Verification harness: tables, sweeps, suites, reports."""

import liemult.catalog as cat
from liemult import verify
from liemult.verify import (
    build_closure,
    classify_by_s,
    report_to_csv,
    report_to_json,
    report_to_markdown,
    run_all,
    classification_list,
    verify_capability_claims,
    verify_table,
)


def test_table9_rows_match():
    rep = verify_table(9)
    assert rep.passed
    values = {r.name: (r.dim_M_computed, r.s_computed) for r in rep.rows}
    assert values["L_{6,14}"] == (2, 9)
    assert values["L_{6,15}"] == (3, 8)
    assert values["L_{6,21}(eps)"] == (4, 7)
    assert {v[0] for v in values.values()} == {2, 3, 4}


def test_table10_rows_match():
    rep = verify_table(10)
    assert rep.passed
    values = {r.name: (r.dim_M_computed, r.s_computed) for r in rep.rows}
    assert values["L_{6,10}"] == (6, 5)
    for name in ("27A", "L_{6,10}⊕A(1)", "157"):
        assert values[name] == (10, 6)


def test_table8_block_values():
    rep = verify_table(8)
    assert rep.passed
    values = {r.name: (r.dim_M_computed, r.s_computed) for r in rep.rows}
    for name in ("257B", "257D", "257E", "257G", "257H", "257I", "257J",
                 "147A", "147B"):
        assert values[name] == (8, 8)
    assert values["37A"] == (12, 4)


def test_table7_passes():
    assert verify_table(7).passed


def test_table_row_counts(full_report):
    counts = {t.table_id: len(t.rows) for t in full_report.tables}
    assert counts == {7: 15, 8: 40, 9: 6, 10: 4}


def test_classify_s1():
    rep = classify_by_s(1, 9)
    assert rep.computed_names == ["L_{5,8}"]
    assert rep.passed


def test_classify_s6(full_report):
    rep = full_report.classifications[6]
    assert rep.passed
    # sixteen names, three of them eps-families instantiated over 3 samples
    assert len(rep.expected_names) == 13 + 3 * 3
    assert rep.out_of_closure == ["L_{5,8}⊕A(5)"]


def test_classify_s7(full_report):
    rep = full_report.classifications[7]
    assert rep.passed
    for name in ("S1", "H(1)⊕H(2)", "L_{6,10}∔H(1)", "L_{6,13}",
                 "257A", "257C", "257F", "27B"):
        assert name in rep.computed_names
    assert "L_{5,8}⊕A(6)" in rep.out_of_closure


def test_sweeps_all_pass(full_report):
    for rep in full_report.classifications:
        assert rep.passed, (rep.s_value, rep.missing, rep.extra)


def test_aliases_are_reported(full_report):
    # printed synonyms are matched by fingerprint, not asserted by name
    rep = full_report.classifications[3]
    assert any(alias.startswith("L_{5,3}") for alias in rep.aliases)


def test_capability_claims():
    claims = verify_capability_claims()
    assert all(c.match for c in claims)
    byname = {c.name: c.computed for c in claims}
    assert byname["27B"] is True
    assert byname["157"] is False
    assert byname["L_{6,22}(1)⊕A(1)"] is True


def test_closure_size_and_composition():
    closure = build_closure(9)
    assert len(closure) >= 200
    names = {m.name for m in closure}
    assert "H(2)⊕A(3)" in names
    assert "S1" in names
    dims = {m.algebra.dim for m in closure}
    assert max(dims) == 9


def test_classification_list_instantiation():
    expected = classification_list(0, 9)
    assert expected == ["H(1)", "H(1)⊕A(1)", "H(1)⊕A(2)", "H(1)⊕A(3)",
                        "H(1)⊕A(4)", "H(1)⊕A(5)", "H(1)⊕A(6)"]
    assert "L_{5,8}⊕A(5)" in classification_list(6, 9)


def test_run_all_passes(full_report):
    assert full_report.passed
    assert full_report.exit_code == 0


def test_bound_suites_are_nonempty(full_report):
    for key in ("derived_bound", "central_ideal_bound", "non_capable_bound",
                "third_term_bound", "gamma3_defect"):
        suite = full_report.bounds[key]
        assert suite.checked > 0
        assert suite.violations == []


def test_structure_suites(full_report):
    for key in ("method_agreement", "cover_stem", "epicenter_containment",
                "derived_dim_one_form"):
        suite = full_report.structure[key]
        assert suite.checked > 0
        assert suite.violations == []
    assert full_report.structure["method_agreement"].checked == full_report.closure_size


def test_kunneth_suite(full_report):
    assert full_report.kunneth.checked >= 50
    assert full_report.kunneth.passed


def test_exterior_consequences(full_report):
    assert full_report.exterior.passed


def test_documented_discrepancies(full_report):
    ids = [d["id"] for d in full_report.discrepancies]
    assert ids == ["multiplier-L_{5,8}", "stem-witness-s-values",
                   "multiplier-147E-special-orbit"]
    l58 = full_report.discrepancies[0]
    assert l58["recorded"] == 9 and l58["computed"] == 6


def test_fixtures_in_report(full_report):
    rows = {f.name: f for f in full_report.fixtures}
    assert rows["357A"].computed == 8
    assert rows["247N"].computed == 7
    assert rows["147E(2)"].computed == 8 and not rows["147E(2)"].match
    assert "documented discrepancy" in rows["147E(2)"].note


def test_collisions_reported(full_report):
    flattened = [set(group) for group in full_report.collisions]
    assert {"L_{5,6}", "L_{5,7}"} <= set().union(*flattened)


def test_every_entry_covered(full_report):
    assert full_report.uncovered_entries == []


def test_reports_deterministic(full_report):
    again = run_all(9)
    assert report_to_json(full_report) == report_to_json(again)
    assert report_to_csv(full_report) == report_to_csv(again)
    assert report_to_markdown(full_report) == report_to_markdown(again)


def test_small_dim_cap_reports_out_of_closure_not_failure():
    report = run_all(5, kunneth_pairs=5)
    by_s = {c.s_value: c for c in report.classifications}
    assert by_s[6].out_of_closure  # fixed names above the cap are notes
    assert by_s[6].missing == []
    assert by_s[7].out_of_closure
    for rep in report.classifications:
        assert rep.passed, (rep.s_value, rep.missing, rep.extra)


def test_csv_table_section_row_count(full_report):
    lines = [l for l in report_to_csv(full_report).splitlines() if l.startswith("table")]
    assert len(lines) == 65
