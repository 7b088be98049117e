from src.algebra.model import FiniteModel, failing_instance
from src.common.errors import InvalidStructureError
from src.corpus.algebras import (
    and_or_lattice,
    binary_algebras,
    builtin_algebras,
    negation,
    one_element,
    semilattice_or,
    z2_module,
)
from src.corpus.structures import (
    free_sesqui,
    idempotent_writer,
    left_zero_monoid,
    noncentral_writer,
)
from src.corpus.theories import (
    collapse_presentation,
    group_presentation,
    monoid_presentation,
    semilattice_presentation,
    z2_module_presentation,
)
from src.infrastructure.parsers.category import load_premonoidal, load_sesqui

import pytest
from pytest import raises


def _model(alg, pres):
    return FiniteModel(alg.k, pres, dict(alg.tables))


def test_builtin_algebras_satisfy_their_theories():
    _model(semilattice_or(), semilattice_presentation(join="join"))
    _model(z2_module(), z2_module_presentation())
    latt = and_or_lattice()
    for op in ("and", "or"):
        FiniteModel(2, semilattice_presentation(join=op), {op: latt.tables[op]})


def test_groups_and_monoids():
    z3 = {"mul": (0, 1, 2, 1, 2, 0, 2, 0, 1), "e": (0,)}
    FiniteModel(3, monoid_presentation(), z3)
    FiniteModel(3, group_presentation(), {**z3, "inv": (0, 2, 1)})
    with raises(InvalidStructureError):
        FiniteModel(3, group_presentation(), {**z3, "inv": (0, 1, 2)})
    lz = left_zero_monoid()
    assert lz.mul(1, 2) == 1
    assert lz.mul(2, 1) == 2


def test_collapse_only_on_one_element():
    assert failing_instance(FiniteModel(1, collapse_presentation(), {})) is None
    assert failing_instance(FiniteModel(2, collapse_presentation(), {}, checked=False)) is not None


def test_builtin_algebra_catalogue():
    algs = builtin_algebras()
    assert len(algs) == 22
    assert algs["bin7"].tables["op"] == semilattice_or().tables["join"]
    assert algs["not"] == negation()
    assert algs["one"] == one_element()
    assert [a.name for a in binary_algebras()][:3] == ["bin0", "bin1", "bin2"]


def test_free_sesqui_matches_data_file(data_dir):
    S, T = free_sesqui(), load_sesqui(data_dir / "free.sesqui")
    assert T.cells == S.cells
    assert T.whisk_left == S.whisk_left
    assert T.vcomp == S.vcomp


@pytest.mark.parametrize(
    "filename, builder",
    [("writer_i2.pm", idempotent_writer), ("writer_lz3.pm", noncentral_writer)],
)
def test_writer_matches_data_file(data_dir, filename, builder):
    P, Q = builder(), load_premonoidal(data_dir / filename)
    assert Q.name == P.name
    assert Q.base.composition == P.base.composition
    assert Q.tensor_obj == P.tensor_obj
    assert Q.left_tensor == P.left_tensor
    assert Q.right_tensor == P.right_tensor
    assert Q.alpha == P.alpha
