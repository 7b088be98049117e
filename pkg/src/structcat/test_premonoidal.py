from src.common.errors import InvalidStructureError, ObjectMismatchError
from src.corpus.structures import (
    idempotent_writer,
    monoidal_writer,
    noncentral_freyd,
    noncentral_writer,
    pentagon_defect,
)
from src.structcat.category import Functor
from src.structcat.premonoidal import (
    CospanVerdict,
    central_arrows,
    centre_inclusion,
    centre_maximality_witnesses,
    freyd_cospan_commutes,
    freyd_validate,
    premonoidal_centre,
    premonoidal_validate,
    square_sides,
)

from pytest import raises


def test_monoidal_example_is_its_own_centre():
    P = monoidal_writer()
    report = premonoidal_validate(P)
    assert report.ok, report.failures
    assert central_arrows(P) == list(P.base.arrows)
    Z = premonoidal_centre(P)
    assert Z.category.arrows == P.base.arrows
    assert Z.report.ok


def test_noncentral_example_has_smaller_centre():
    P = noncentral_writer()
    report = premonoidal_validate(P)
    assert report.ok, report.failures
    assert "non-central: w1_0 (against w2_0)" in report.notes
    Z = premonoidal_centre(P)
    assert Z.category.arrows == ("w0_0", "w0_1")
    assert Z.report.ok, Z.report.failures
    assert set(centre_maximality_witnesses(P)) == {"w1_0", "w2_0", "w1_1", "w2_1"}


def test_square_sides_of_writer():
    P = noncentral_writer()
    assert square_sides(P, "w1_0", "w2_0") == ("w1_0", "w2_0")
    verdict = freyd_cospan_commutes(P, P.base.arrows, P.base.arrows)
    assert not verdict.commutes
    assert verdict.witness == ("w1_0", "w2_0")
    assert freyd_cospan_commutes(P, ["w0_0", "w0_1"], P.base.arrows) == CospanVerdict(True)


def test_centre_inclusion_is_a_freyd_category():
    Z, F = centre_inclusion(noncentral_writer())
    report = freyd_validate(Z, noncentral_writer(), F)
    assert report.ok, report.failures


def test_seeded_noncentral_freyd_functor():
    A, M, F = noncentral_freyd()
    report = freyd_validate(A, M, F)
    assert report.failed_laws() == ["central"]
    assert report.failures[0].witness.startswith("w1_0 -> w1_0")


def test_freyd_needs_bijection_on_objects():
    A, M = idempotent_writer(), noncentral_writer()
    F = Functor(A.base, M.base, {0: 0, 1: 0}, {})
    with raises(ObjectMismatchError):
        freyd_validate(A, M, F)


def test_pentagon_defect():
    report = premonoidal_validate(pentagon_defect())
    assert "pentagon" in report.failed_laws()
    with raises(InvalidStructureError):
        premonoidal_centre(pentagon_defect())
