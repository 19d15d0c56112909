"""Smoke tests for the python bindings."""

from pathlib import Path

import pytest

import freemod as fm

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def test_scalar_arithmetic():
    gf2 = fm.Semiring.gfp(2)
    assert gf2.one() + gf2.one() == gf2.zero()

    trop = fm.Semiring.tropical_min_plus()
    assert trop.from_int(3) + trop.from_int(5) == trop.from_int(3)
    assert trop.from_int(3) * trop.from_int(5) == trop.from_int(8)
    assert str(trop.infinity()) == "inf"

    q = fm.Semiring.rationals()
    assert q.from_rational(2, 4) == q.from_rational(1, 2)
    assert str(q.from_rational(2, 4)) == "1/2"


def test_mixed_semirings_raise():
    gf2 = fm.Semiring.gfp(2)
    gf3 = fm.Semiring.gfp(3)
    with pytest.raises(fm.DomainMismatchError):
        _ = gf2.one() + gf3.one()


def test_vectors_and_literals():
    gf2 = fm.Semiring.gfp(2)
    v = fm.parse_dense(gf2, "[1,0,1]")
    w = fm.parse_dense(gf2, "[1,1,1]")
    assert str(v + w) == "[0,1,0]"
    assert str(fm.dense_to_finsupp(v)) == "{1:1, 3:1}"
    assert fm.finsupp_to_dense(fm.dense_to_finsupp(v), 3) == v

    z = fm.Semiring.integers()
    s = fm.parse_finsupp(z, "{1:2, k:-2}")
    t = fm.parse_finsupp(z, "{1:-2}")
    total = s + t
    assert len(total) == 1
    assert total.is_canonical()


def test_structure_pipeline():
    diamond = fm.parse_structure((FIXTURES / "diamond.structure").read_text())
    report = fm.check_axioms(diamond)
    assert report.passes_1_to_8()
    assert not report.passes_all()  # no additive inverses in a lattice

    verdict = fm.find_basis(diamond)
    assert verdict.status == fm.FreenessStatus.free_with_basis
    assert verdict.rank == 2
    assert [diamond.label(i) for i in verdict.basis.elements] == ["a", "b"]

    coord = fm.coordinatize(diamond, verdict.basis)
    assert coord.psi.linear_state() == fm.TriState.yes
    assert coord.psi.invertible_state() == fm.TriState.yes
    transported = fm.transport_axioms(diamond, coord.psi, coord.codomain)
    assert transported.all_pass()


def test_isomorphism_search():
    klein = fm.parse_structure((FIXTURES / "klein.structure").read_text())
    power = fm.RealizedPower(fm.Semiring.gfp(2), 2)
    result = fm.check_isomorphic(klein, power.structure)
    assert result.status == fm.IsoStatus.isomorphic
    assert result.witness.linear_state() == fm.TriState.yes

    chain = fm.parse_structure((FIXTURES / "chain3.structure").read_text())
    assert fm.find_basis(chain).status == fm.FreenessStatus.not_free


def test_enumeration_and_lemmas():
    boolean = fm.Semiring.boolean()
    en = fm.StructureEnumerator(boolean, 2)
    assert en.total() == "256"
    seen = sum(1 for _ in en)
    assert seen == 256

    gf2sq = fm.RealizedPower(fm.Semiring.gfp(2), 2).structure
    assert fm.lemma_8_iff_1_and_9(gf2sq).status == fm.LemmaStatus.holds
    assert fm.lemma_a_zero(gf2sq).status == fm.LemmaStatus.holds

    with pytest.raises(fm.BudgetError):
        fm.StructureEnumerator(boolean, 4, budget=1000)


def test_semiring_classification():
    assert fm.check_field(fm.Semiring.gfp(5)).is_field
    nn = fm.check_ring(fm.Semiring.nonneg_rationals())
    assert not nn.is_ring
    assert str(nn.witness) == "1"

    table = fm.parse_semiring((FIXTURES / "gf2.semiring").read_text())
    assert fm.check_semiring_axioms(table).all_pass()
