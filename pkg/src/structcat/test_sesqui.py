from src.common.errors import ComposabilityError, InvalidStructureError
from src.corpus.structures import commutative_cells, free_sesqui, noncommutative_cells, whisker_unit_defect
from src.structcat.category import composable_pair_category, walking_arrow
from src.structcat.sesqui import (
    discrete_sesqui,
    interchange_sides,
    is_two_category,
    sesqui_cospan_commutes,
    sesqui_interchange,
    sesqui_validate,
    to_two_category,
    validate_two_category,
)

import pytest
from pytest import raises


@pytest.mark.parametrize("make", [free_sesqui, commutative_cells, noncommutative_cells])
def test_corpus_sesquicategories_are_valid(make):
    report = sesqui_validate(make())
    assert report.ok, report.failures


def test_free_sesquicategory_breaks_interchange():
    S = free_sesqui()
    assert sesqui_interchange(S) == [("alpha", "beta")]
    assert not is_two_category(S)
    assert interchange_sides(S, "alpha", "beta") == ("betag_halpha", "kalpha_betaf")
    assert not sesqui_interchange(S, ("alpha", "beta"))
    assert sesqui_cospan_commutes(S, ["alpha"], ["beta"]) == (False, ("alpha", "beta"))
    with raises(InvalidStructureError):
        to_two_category(S)
    with raises(ComposabilityError):
        interchange_sides(S, "beta", "alpha")


@pytest.mark.parametrize("make", [commutative_cells, lambda: discrete_sesqui(walking_arrow())])
def test_two_categories(make):
    S = make()
    assert is_two_category(S)
    report = validate_two_category(to_two_category(S))
    assert report.ok, report.failures


def test_noncommutative_labels_break_interchange():
    S = noncommutative_cells()
    failing = sesqui_interchange(S)
    assert ("f_1", "h_2") in failing
    lhs, rhs = interchange_sides(S, "f_1", "h_2")
    assert (lhs, rhs) == ("hf_2", "hf_1")


def test_seeded_whisker_defect():
    report = sesqui_validate(whisker_unit_defect())
    assert "whisker_unit" in report.failed_laws()
    assert report.failures[0].witness == "whiskL id_b.f_1"


def test_discrete_sesqui_cells():
    S = discrete_sesqui(composable_pair_category())
    assert set(S.cells) == {f"id_{f}" for f in composable_pair_category().arrows}
