from src.algebra.graded import graded_q_cospan_commutes
from src.algebra.monoid import cyclic_group
from src.algebra.term import App, Signature, Var
from src.common.errors import InputError
from src.corpus.algebras import and_or_lattice, semilattice_or, z2_module
from src.corpus.theories import group_presentation, semilattice_presentation
from src.infrastructure.parsers.algebra import (
    load_algebra,
    load_graded,
    load_monoid,
    parse_algebra,
    parse_graded,
    parse_monoid,
    render_algebra,
    render_graded,
    render_monoid,
)
from src.infrastructure.parsers.base import read_source, safe_name
from src.infrastructure.parsers.category import (
    load_category,
    load_functor,
    load_premonoidal,
    load_sesqui,
    parse_category,
    parse_functor,
    parse_premonoidal,
    parse_sesqui,
    render_category,
    render_functor,
    render_premonoidal,
    render_sesqui,
)
from src.infrastructure.parsers.operad import (
    load_operad,
    load_operad_presentation,
    parse_operad,
    parse_operad_presentation,
    render_operad,
    render_operad_presentation,
)
from src.infrastructure.parsers.theory import (
    load_presentation,
    parse_presentation,
    parse_term,
    render_presentation,
)
from src.operad.operad import ComOperad, operad_pair_commutes, validate_operad
from src.operad.presentation import ass_presentation, com_presentation
from src.structcat.category import composable_pair_category, enumerate_functors
from src.structcat.premonoidal import central_arrows, freyd_validate, premonoidal_validate
from src.structcat.sesqui import sesqui_interchange, sesqui_validate

import pytest
from pytest import raises


# ---------- 理論 ----------


def _equations(pres) -> set:
    """向きを無視した等式の集合"""
    return {frozenset((str(eq.lhs), str(eq.rhs))) for eq in pres.equations}


def test_theory_file_matches_builtin(data_dir):
    pres = load_presentation(data_dir / "sl.thy")
    assert pres.signature == semilattice_presentation().signature
    assert _equations(pres) == _equations(semilattice_presentation())
    grp = load_presentation(data_dir / "grp.thy")
    assert grp.signature == group_presentation().signature
    assert _equations(grp) == _equations(group_presentation())


def test_theory_render_is_canonical(data_dir):
    text = render_presentation(load_presentation(data_dir / "monoid.thy"))
    assert text.splitlines()[:3] == ["theory monoid {", "  op e:0;", "  op mul:2;"]
    assert render_presentation(parse_presentation(text)) == text


def test_theory_errors_have_locations():
    with raises(InputError) as e:
        parse_presentation("theory t {\n  op f:2;\n  eq f(x1) = x1;\n}", "t.thy")
    assert (e.value.source, e.value.line) == ("t.thy", 3)
    with raises(InputError) as e:
        parse_presentation("theory t {\n  op f 2;\n}")
    assert (e.value.line, e.value.column) == (2, 8)
    with raises(InputError) as e:
        parse_presentation("theory t {\n  op f:2;\n  op f:1;\n}")
    assert e.value.line == 3
    with raises(InputError):
        parse_presentation("theory t {\n  op f:2;\n")


def test_parse_term():
    sig = Signature("s", {"join": 2})
    assert parse_term("join(x2,x1)", sig) == App("join", (Var(2), Var(1)))
    with raises(InputError):
        parse_term("meet(x1,x2)", sig)


# ---------- 代数 ----------


def test_algebra_files_match_builtins(data_dir):
    assert load_algebra(data_dir / "latt.alg") == and_or_lattice()
    assert load_algebra(data_dir / "sl.alg") == semilattice_or()
    assert load_algebra(data_dir / "z2.alg") == z2_module()
    assert load_monoid(data_dir / "z3.monoid") == cyclic_group(3)


@pytest.mark.parametrize("alg", [and_or_lattice(), z2_module()])
def test_algebra_render_round_trip(alg):
    assert parse_algebra(render_algebra(alg)) == alg


def test_algebra_errors():
    with raises(InputError) as e:
        parse_algebra("algebra a {\n  carrier 2;\n  op f/2 = [0,1];\n}")
    assert e.value.line == 3
    with raises(InputError):
        parse_algebra("algebra a { carrier 2; op f/1 = [0,2]; }")
    with raises(InputError):
        parse_monoid("monoid m { carrier 2; unit 1; table = [0,1,1,1]; }")
    assert parse_monoid(render_monoid(cyclic_group(2))) == cyclic_group(2)


def test_graded_file(data_dir):
    c = load_graded(data_dir / "qplane.graded")
    assert [b for b, _ in c.basis] == ["1", "x", "y", "x^2", "xy", "y^2"]
    assert graded_q_cospan_commutes(c, c.basis_vector("x"), c.basis_vector("y")) == (False, True)
    again = parse_graded(render_graded(c))
    assert again.products == c.products
    with raises(InputError):
        parse_graded("graded g { p 5; D 1; basis 1:0; }")


# ---------- オペラド ----------


def test_operad_file(data_dir):
    o = load_operad(data_dir / "com2.operad")
    assert [o.size(n) for n in range(3)] == [1, 1, 1]
    assert validate_operad(o).ok
    assert operad_pair_commutes(o, 0, 2, 0, 1)


def test_operad_render_round_trip():
    o = parse_operad(render_operad(ComOperad(3)))
    assert o.K == 3
    assert o.describe(0, 2) == "c2"
    assert validate_operad(o).ok


def test_operad_errors():
    with raises(InputError):
        parse_operad("operad o { elements 1 = [id]; }")
    with raises(InputError):
        parse_operad("operad o { bound 2; elements 2 = [m]; act m/2 . perm(1,1) = m; }")


def test_operad_presentation_files(data_dir):
    ass = load_operad_presentation(data_dir / "ass.opres")
    assert render_operad_presentation(ass) == render_operad_presentation(ass_presentation(unital=True))
    com = load_operad_presentation(data_dir / "com.opres")
    assert render_operad_presentation(com) == render_operad_presentation(com_presentation())
    again = parse_operad_presentation(render_operad_presentation(com))
    assert [str(r) for r in again.relations] == [str(r) for r in com.relations]


def test_operad_presentation_errors():
    with raises(InputError):
        parse_operad_presentation("operad_pres p { gen m:2; rel m(1,1) = 1; }")
    with raises(InputError):
        parse_operad_presentation("operad_pres p { gen m:2; rel m(1,2) = m(1,2) . perm(1,1); }")


# ---------- 圏 ----------


def test_category_files(data_dir):
    arrow = load_category(data_dir / "arrow.cat")
    assert arrow.objects == (0, 1)
    assert arrow.hom(0, 1) == ["f"]
    assert len(enumerate_functors(arrow, arrow)) == 3
    pair = load_category(data_dir / "pair.cat")
    assert pair.compose("h", "f") == "hf"


def test_category_render_round_trip():
    C = composable_pair_category()
    again = parse_category(render_category(C))
    assert again.name == safe_name(C.name)
    assert again.arrows == C.arrows
    assert again.composition == C.composition


def test_category_errors():
    with raises(InputError) as e:
        parse_category("category c {\n  object a;\n  arrow f : a -> b;\n}")
    assert e.value.line == 3
    with raises(InputError):
        parse_category("category c { object a, b; arrow f : a -> b; comp f.g = f; }")


def test_sesqui_file(data_dir):
    S = load_sesqui(data_dir / "free.sesqui")
    assert sesqui_validate(S).ok
    assert sesqui_interchange(S) == [("alpha", "beta")]
    again = parse_sesqui(render_sesqui(S))
    assert again.cells == S.cells
    assert sesqui_interchange(again) == [("alpha", "beta")]


def test_premonoidal_and_functor_files(data_dir):
    M = load_premonoidal(data_dir / "writer_lz3.pm")
    A = load_premonoidal(data_dir / "writer_i2.pm")
    assert premonoidal_validate(M).ok
    assert central_arrows(M) == ["w0_0", "w0_1"]
    assert parse_premonoidal(render_premonoidal(M)).left_tensor == M.left_tensor
    F = load_functor(data_dir / "i2_to_lz3.functor", {"writer_I2": A.base, "writer_LZ3": M.base})
    assert freyd_validate(A, M, F).failed_laws() == ["central"]
    with raises(InputError):
        parse_functor("functor F : x -> y { }", {})


def test_missing_file(tmp_path):
    with raises(InputError) as e:
        read_source(tmp_path / "none.thy")
    assert e.value.source.endswith("none.thy")


def test_functor_render_round_trip(data_dir):
    cats = {
        "writer_I2": load_premonoidal(data_dir / "writer_i2.pm").base,
        "writer_LZ3": load_premonoidal(data_dir / "writer_lz3.pm").base,
    }
    F = load_functor(data_dir / "i2_to_lz3.functor", cats)
    again = parse_functor(render_functor(F, "F", "writer_I2", "writer_LZ3"), cats)
    assert again.on_objects == F.on_objects
    assert again.on_arrows == F.on_arrows
