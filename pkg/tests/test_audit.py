import random
from fractions import Fraction as F

import pytest

from genocchi.appell import X, Polynomial
from genocchi.audit import (
    AS_WRITTEN,
    ORACLE_VERIFIED,
    REGISTRY,
    IdentityId,
    Outcome,
    OutOfDomain,
    Tag,
    build_lhs,
    build_rhs,
    evaluate_identity,
    identity_ids,
    run_audit,
)
from genocchi.cli import report_to_json

THEOREMS = [Tag.THM3_1, Tag.COR3_2, Tag.THM3_3, Tag.COR3_4, Tag.THM3_6, Tag.THM3_7, Tag.COR3_8, Tag.THM3_9, Tag.COR3_10]


def ID(tag, variant=AS_WRITTEN):
    return IdentityId(tag, variant)


# --- build_lhs / build_rhs --------------------------------------------------

def test_lhs_examples():
    assert build_lhs(ID(Tag.THM3_1), 1, 2) == 8 * X - 6
    assert build_lhs(ID(Tag.EQ14), 3, 2) == 6 * X - 6
    for k in range(1, 4):
        assert build_lhs(ID(Tag.EQ13), 0, k) == Polynomial()


def test_rhs_examples():
    assert build_rhs(ID(Tag.EQ14), 3, 2) == 6 * X - 6
    assert build_rhs(ID(Tag.EQ18), 4, 2) == 12 * X**2 - 24 * X + 6
    assert build_rhs(ID(Tag.EQ13), 2, 1) == -(X + 1) ** 2
    assert build_rhs(ID(Tag.EQ13, "standard-summand"), 2, 1) == 2 * X - 1
    assert build_lhs(ID(Tag.EQ13), 2, 1) == 2 * X - 1


def test_out_of_domain_is_marked():
    with pytest.raises(OutOfDomain):
        build_lhs(ID(Tag.EQ18), 1, 2)
    assert evaluate_identity(ID(Tag.EQ18), 1, 2).outcome is Outcome.SKIP


def test_component_required():
    with pytest.raises(ValueError):
        build_lhs(ID(Tag.LEMMA2_3), 3, 1)
    assert build_lhs(ID(Tag.LEMMA2_3), 1, 2, 1) == Polynomial([8])
    # G_1(x) = 1, so both sides are the interval length
    assert build_rhs(ID(Tag.EQ12), 1, 1, (F(-1), F(2))) == build_lhs(ID(Tag.EQ12), 1, 1, (F(-1), F(2))) == Polynomial([3])


# --- evaluate_identity ------------------------------------------------------

def test_evaluate_examples():
    assert evaluate_identity(ID(Tag.EQ11), 5, 3).passed
    v = evaluate_identity(ID(Tag.EQ13), 2, 1)
    assert v.outcome is Outcome.FAIL
    assert (v.mismatch.degree, v.mismatch.lhs, v.mismatch.rhs) == (1, 2, -2)
    assert evaluate_identity(ID(Tag.EQ14), 4, 2).passed


def test_mismatch_is_lowest_degree():
    v = evaluate_identity(ID(Tag.EULER_DIFF_LAW), 3, 2)
    lhs, rhs = build_lhs(v.id, 3, 2), build_rhs(v.id, 3, 2)
    d = v.mismatch.degree
    assert all(lhs[i] == rhs[i] for i in range(d))
    assert (lhs[d], rhs[d]) == (v.mismatch.lhs, v.mismatch.rhs) and lhs[d] != rhs[d]


def test_component_localization():
    # a case with components reports which component failed; none do for the lemmas
    for n in range(5):
        assert evaluate_identity(ID(Tag.LEMMA3_5), n, 2).passed


# --- run_audit --------------------------------------------------------------

def test_audit_derivative_law_all_pass():
    r = run_audit([Tag.EQ11], (1, 3), (0, 8))
    assert r.verdicts and all(v.passed for v in r.verdicts)
    assert r.summary[0].skipped == 3  # n = 0 for each k
    assert r.exit_code == 0


def test_audit_eq13_variants():
    r = run_audit([Tag.EQ13], (1, 1), (0, 6), "both")
    by = {(v.id.variant, v.n): v for v in r.verdicts}
    assert all(by[("standard-summand", n)].passed for n in range(7))
    assert all(not by[(AS_WRITTEN, n)].passed for n in range(2, 7))
    assert r.exit_code == 0


def test_audit_empty_range():
    with pytest.raises(ValueError):
        run_audit(None, (3, 1), (0, 2))
    with pytest.raises(ValueError):
        run_audit(None, (1, 1), (4, 2))


def test_oracle_verified_identities_pass():
    tags = sorted({i.tag for i in ORACLE_VERIFIED}, key=list(Tag).index)
    r = run_audit(tags, (1, 4), (0, 10), "both")
    for v in r.verdicts:
        if v.id in ORACLE_VERIFIED:
            assert v.passed, v
    assert r.exit_code == 0


def test_oracle_set():
    expected = {
        ID(Tag.EQ11), ID(Tag.EQ12), ID(Tag.EQ14), ID(Tag.EQ15), ID(Tag.EQ18), ID(Tag.EQ19), ID(Tag.EQ20),
        ID(Tag.LEMMA2_3), ID(Tag.LEMMA3_5), ID(Tag.EQ13, "standard-summand"),
        ID(Tag.EULER_DIFF_LAW, "standard-index"),
    }
    assert set(ORACLE_VERIFIED) == expected


def test_every_tag_has_as_written_and_rationales():
    assert set(REGISTRY) == set(Tag)
    for d in REGISTRY.values():
        assert d.variants[0].label == AS_WRITTEN
        labels = [v.label for v in d.variants]
        assert len(labels) == len(set(labels))
        assert all(v.rationale for v in d.variants)


def test_variant_selection():
    aw = identity_ids(None, "as-written")
    assert [i.tag for i in aw] == list(Tag) and all(not i.corrected for i in aw)
    corr = identity_ids(None, "corrected")
    # tags without a corrected form keep their printed one
    assert ID(Tag.EQ11) in corr and ID(Tag.EQ13) not in corr
    both = identity_ids(None, "both")
    assert len(both) == sum(len(d.variants) for d in REGISTRY.values())
    with pytest.raises(ValueError):
        identity_ids(None, "some")


def test_soundness_pass_iff_equal():
    r = run_audit(THEOREMS + [Tag.EQ13, Tag.EULER_DIFF_LAW], (1, 2), (0, 4))
    for v in r.verdicts:
        lhs, rhs = build_lhs(v.id, v.n, v.k), build_rhs(v.id, v.n, v.k)
        assert v.passed == (lhs == rhs)


def test_theorem_report_completeness():
    r = run_audit(THEOREMS, (1, 3), (0, 8), "both")
    seen = {(v.id, v.k, v.n) for v in r.verdicts}
    for tag in THEOREMS:
        for var in REGISTRY[tag].variants:
            for k in range(1, 4):
                for n in range(0, 9):
                    assert (ID(tag, var.label), k, n) in seen
    for v in r.verdicts:
        assert (v.outcome is Outcome.FAIL) == (v.mismatch is not None)


def test_corollaries_follow_their_parent_variant():
    # a substituted corollary passes exactly when its parent variant does
    pairs = {
        Tag.COR3_2: (Tag.THM3_1, {"via-Thm3_1": AS_WRITTEN, "via-Thm3_1-inner-from-k+j": "inner-from-k+j"}),
        Tag.COR3_4: (Tag.THM3_3, {"via-Thm3_3": AS_WRITTEN, "via-Thm3_3-inner-from-k+j-1": "inner-from-k+j-1"}),
        Tag.COR3_8: (Tag.THM3_7, {AS_WRITTEN: AS_WRITTEN, "via-Thm3_7-basis-range": "basis-range"}),
        Tag.COR3_10: (Tag.THM3_9, {
            "via-Thm3_9": AS_WRITTEN, "via-Thm3_9-plus-sign": "plus-sign",
            "via-Thm3_9-basis-range": "basis-range", "via-Thm3_9-plus-sign-basis-range": "plus-sign-basis-range",
        }),
    }
    for cor, (parent, mapping) in pairs.items():
        for cv, pv in mapping.items():
            for k in range(1, 4):
                for n in range(0, 7):
                    assert build_rhs(ID(cor, cv), n, k) == build_rhs(ID(parent, pv), n, k), (cor, cv, n, k)


def test_skipped_never_counted_as_fail():
    r = run_audit([Tag.EQ18, Tag.EULER_DIFF_LAW], (1, 3), (0, 4), "both")
    for row in r.summary:
        assert row.passed + row.failed + row.skipped == 15
    assert all(v.outcome is not Outcome.SKIP for v in r.verdicts)
    eq18 = [row for row in r.summary if row.id.tag is Tag.EQ18][0]
    assert (eq18.failed, eq18.skipped) == (0, 6)


def test_report_independent_of_order_and_threads():
    tags = list(Tag)
    base = report_to_json(run_audit(tags, (1, 2), (0, 5), "both", workers=1))
    shuffled = tags[:]
    random.Random(5).shuffle(shuffled)
    assert report_to_json(run_audit(shuffled, (1, 2), (0, 5), "both", workers=4)) == base
    assert report_to_json(run_audit(tags, (1, 2), (0, 5), "both", workers=8)) == base
