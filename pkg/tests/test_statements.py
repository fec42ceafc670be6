"""Statement catalog: expansion, verdict semantics, and a small sweep."""

import pytest

from sgblow.core import NumericalSemigroup
from sgblow.enumeration import enumerate_semigroups
from sgblow.errors import UnknownStatement
from sgblow.fixtures import analysis_for
from sgblow.statements import (
    STATEMENTS,
    TheoremVerdict,
    catalog_ids,
    expand_statement_ids,
    verify_many,
    verify_statement,
)


def test_catalog_is_complete_and_ordered():
    ids = catalog_ids()
    assert len(ids) == 50
    assert ids[0] == "Prop2.9"
    assert ids[-1] == "Cor6.14"
    assert ids == tuple(STATEMENTS)
    assert len(set(ids)) == 50
    for sid in ("Thm4.7.1", "Thm5.3.2", "Cor6.7u", "Lemma6.4.3"):
        assert sid in ids


def test_expansion_rules():
    assert expand_statement_ids(["Thm4.7"]) == ("Thm4.7.1", "Thm4.7.2")
    assert expand_statement_ids(["Cor6.7"]) \
        == ("Cor6.7.1", "Cor6.7.2", "Cor6.7.3", "Cor6.7u")
    assert expand_statement_ids(["Cor6.10"]) == ("Cor6.10",)
    assert expand_statement_ids(["Cor6.10", "Cor6.10"]) == ("Cor6.10",)
    assert expand_statement_ids([]) == ()
    with pytest.raises(UnknownStatement):
        expand_statement_ids(["Thm9.9"])
    with pytest.raises(UnknownStatement):
        verify_statement("Thm9.9",
                         NumericalSemigroup.from_generators([3, 4])
                         .maximal_ideal())


def test_every_statement_holds_on_a_gorenstein_pair():
    m = NumericalSemigroup.from_generators([3, 4]).maximal_ideal()
    verdicts = verify_many(m)
    assert len(verdicts) == 50
    assert [v.statement_id for v in verdicts] == list(catalog_ids())
    for v in verdicts:
        assert isinstance(v, TheoremVerdict)
        assert v.holds
        assert v.status in ("held", "vacuous")
        assert v.status == ("held" if v.hypotheses_met else "vacuous")
        assert v.witness is None


def test_vacuous_statements_report_cleanly():
    m = NumericalSemigroup.from_generators([3, 4]).maximal_ideal()
    v = verify_statement("Cor6.14", m)
    assert not v.hypotheses_met
    assert v.holds and v.status == "vacuous"
    assert v.lhs is None and v.rhs is None and v.witness is None


def test_defect_identity_on_a_positive_defect_case():
    a = analysis_for("f05")
    assert a.report.d == 2
    v = verify_statement("Thm4.7.1", a.ideal)
    assert v.status == "held"
    assert v.lhs == v.rhs


def test_reflexive_blowup_equivalences_on_a_known_case():
    a = analysis_for("f08")
    v = verify_statement("Thm5.3.2", a.ideal)
    assert v.status == "held"
    assert v.lhs == (True, True, True, True)


def test_verify_many_respects_the_filter():
    m = NumericalSemigroup.from_generators([5, 21, 32, 48]).maximal_ideal()
    picked = ("Thm4.4.1", "Cor5.2", "Prop6.9.2")
    verdicts = verify_many(m, picked)
    assert tuple(v.statement_id for v in verdicts) == picked
    full = {v.statement_id: v for v in verify_many(m)}
    for v in verdicts:
        w = full[v.statement_id]
        assert (v.holds, v.status, v.lhs, v.rhs) \
            == (w.holds, w.status, w.lhs, w.rhs)


def test_verdict_values_are_json_safe():
    m = NumericalSemigroup.from_generators([6, 11, 16, 20, 25]).maximal_ideal()
    ok_types = (bool, int, tuple, str, type(None))
    for v in verify_many(m):
        assert isinstance(v.lhs, ok_types)
        assert isinstance(v.rhs, ok_types)
        assert isinstance(v.notes, str)


def test_no_failures_on_a_small_exhaustive_sweep():
    for s in enumerate_semigroups(4):
        if s.is_natural_numbers:
            continue
        for v in verify_many(s.maximal_ideal()):
            assert v.status in ("held", "vacuous"), \
                f"{v.statement_id} failed on {s.small_elements}"
