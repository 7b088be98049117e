from src.corpus.algebras import and_or_lattice
from src.infrastructure.cli.command import build_command
from src.infrastructure.cli.main import catcom
from src.infrastructure.cli.render import witness_blocks
from src.infrastructure.parsers.algebra import parse_algebra
from src.common.errors import InputError
from src.common.settings import DEFAULT_ARITY, DEFAULT_DEPTH, DEFAULT_MODEL_BOUND, DEFAULT_SIZE, DEFAULT_WORD_LEN

from click.testing import CliRunner
import pytest
from pytest import raises


def invoke(*args, tmp_path=None):
    """(終了コード, structured のレポート)。レポートはファイル経由で受け取り stderr と混ぜない"""
    out = tmp_path / "report.txt"
    result = CliRunner().invoke(catcom, [*map(str, args), "--format", "structured", "--out", str(out)])
    text = out.read_text(encoding="utf-8") if out.exists() else ""
    return result.exit_code, text


def lines_of(text: str) -> list:
    return text.splitlines()


def test_semilattice_join_commutes(data_dir, tmp_path):
    code, text = invoke(
        "commute", data_dir / "sl.thy", "--ops", "join,join", "--arity", "4", "--depth", "3", tmp_path=tmp_path
    )
    assert code == 0
    assert lines_of(text)[-1] == "verdict: pass"
    assert "count.proved: 1" in lines_of(text)


def test_lattice_and_or_fail_with_reparseable_witness(data_dir, tmp_path):
    code, text = invoke("commute", data_dir / "latt.alg", "--ops", "and,or", tmp_path=tmp_path)
    assert code == 1
    assert lines_of(text)[-1] == "verdict: fail"
    model, assignment = witness_blocks(text)
    assert parse_algebra(model) == and_or_lattice()
    assert assignment == "and,or: x1=0, x2=1, x3=1, x4=0 -> 1 != 0"


def test_group_commutation_is_unknown_within_bounds(data_dir, tmp_path):
    code, text = invoke(
        "commute", data_dir / "grp.thy", "--ops", "mul,mul", "--depth", "3", "--model-bound", "2", tmp_path=tmp_path
    )
    assert code == 2
    lines = lines_of(text)
    assert lines[-1] == "verdict: unknown"
    assert lines[-2] == "bound: depth=3, model_bound=2"


def test_arity_bound_gives_unknown(data_dir, tmp_path):
    code, text = invoke("commute", data_dir / "sl.thy", "--ops", "join,join", "--arity", "3", tmp_path=tmp_path)
    assert code == 2
    assert "bound: required=4 > bound=3" in lines_of(text)


def test_malformed_file_is_input_error(tmp_path):
    bad = tmp_path / "bad.thy"
    bad.write_text("theory t {\n  op f 2;\n}\n", encoding="utf-8")
    result = CliRunner().invoke(catcom, ["check-theory", str(bad)])
    assert result.exit_code == 3
    assert "line 2, column 8" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ["commute"],
        ["commute", "missing.thy"],
        ["tensor", "only-one.thy"],
    ],
)
def test_bad_invocations_exit_3(args):
    assert CliRunner().invoke(catcom, args).exit_code == 3


def test_structured_output_is_deterministic(data_dir, tmp_path):
    first = invoke("clone", data_dir / "latt.alg", "--arity", "3", tmp_path=tmp_path)
    second = invoke("clone", data_dir / "latt.alg", "--arity", "3", tmp_path=tmp_path)
    assert first == second
    code, text = first
    assert code == 0
    assert "count.T(3): 18" in lines_of(text)
    assert any(x.startswith("note: commutative: no") for x in lines_of(text))


def test_tensor_and_check_theory(data_dir, tmp_path):
    code, text = invoke("tensor", data_dir / "sl.thy", data_dir / "sl.thy", tmp_path=tmp_path)
    assert code == 0
    assert "count.operations: 2" in lines_of(text)
    code, text = invoke("check-theory", data_dir / "monoid.thy", tmp_path=tmp_path)
    assert code == 0
    assert "count.equations: 3" in lines_of(text)


def test_operad_verbs(data_dir, tmp_path):
    code, text = invoke("operad", data_dir / "com2.operad", tmp_path=tmp_path)
    assert code == 0
    assert "count.non_commuting_pairs: 0" in lines_of(text)
    code, text = invoke("bv", data_dir / "ass.opres", data_dir / "ass.opres", "--size", "2", tmp_path=tmp_path)
    assert code == 0
    assert "count.algebras: 4" in lines_of(text)
    assert "count.interchanging_pairs: 4" in lines_of(text)


def test_category_verbs(data_dir, tmp_path):
    code, text = invoke("cat", data_dir / "arrow.cat", data_dir / "arrow.cat", tmp_path=tmp_path)
    assert code == 0
    lines = lines_of(text)
    assert "count.functors: 3" in lines
    assert "note: hom (0, 0) -> (1, 1): funny=2, product=1" in lines
    code, text = invoke("sesqui", data_dir / "free.sesqui", tmp_path=tmp_path)
    assert code == 1
    assert witness_blocks(text) == ["interchange alpha,beta: betag_halpha != kalpha_betaf"]


def test_premonoidal_and_freyd(data_dir, tmp_path):
    code, text = invoke("premonoidal", data_dir / "writer_lz3.pm", tmp_path=tmp_path)
    assert code == 0
    assert "note: monoidal: no" in lines_of(text)
    code, text = invoke("premonoidal", data_dir / "writer_lz3.pm", "--ops", "w1_0,w2_0", tmp_path=tmp_path)
    assert code == 1
    code, text = invoke(
        "freyd", data_dir / "writer_i2.pm", data_dir / "writer_lz3.pm", data_dir / "i2_to_lz3.functor",
        tmp_path=tmp_path,
    )
    assert code == 1
    assert witness_blocks(text)[0].startswith("central: ")


def test_graded_quantum_plane(data_dir, tmp_path):
    code, text = invoke("graded", data_dir / "qplane.graded", "--left", "x", "--right", "y", tmp_path=tmp_path)
    assert code == 1
    assert {"note: left: false", "note: right: true"} <= set(lines_of(text))


def test_gen_is_reproducible(tmp_path):
    a = invoke("gen", "--count", "5", "--seed", "1", tmp_path=tmp_path)
    b = invoke("gen", "--count", "5", "--seed", "1", tmp_path=tmp_path)
    assert a == b
    assert a[0] == 0


def test_command_validation(data_dir):
    cmd = build_command(verb="commute", inputs=[str(data_dir / "sl.thy")], ops="join, join")
    assert cmd.ops == ("join", "join")
    assert cmd.bounds() == {
        "arity": DEFAULT_ARITY,
        "size": DEFAULT_SIZE,
        "depth": DEFAULT_DEPTH,
        "model_bound": DEFAULT_MODEL_BOUND,
        "word_len": DEFAULT_WORD_LEN,
    }
    assert build_command(verb="gen", seed=7).bounds()["seed"] == 7
    with raises(InputError):
        build_command(verb="graded", inputs=[str(data_dir / "qplane.graded")])
    with raises(InputError):
        build_command(verb="commute", inputs=[str(data_dir / "sl.thy")], ops="join")


@pytest.mark.parametrize("left, right", [("pointed.thy", "pointed.thy"), ("monoid.thy", "empty.thy")])
def test_verify_tensor(data_dir, tmp_path, left, right):
    code, text = invoke("verify-tensor", data_dir / left, data_dir / right, "--size", "2", tmp_path=tmp_path)
    assert code == 0
    lines = lines_of(text)
    tensor = next(x for x in lines if x.startswith("count.tensor_models: "))
    pairs = next(x for x in lines if x.startswith("count.commuting_pairs: "))
    assert tensor.split(": ")[1] == pairs.split(": ")[1]
    assert "bound.derived_arity: 2" in lines


@pytest.mark.parametrize(
    "args",
    [
        ("check-theory", "monoid.thy"),
        ("cat", "arrow.cat", "arrow.cat"),
        ("verify-tensor", "pointed.thy", "pointed.thy", "--size", "2"),
        ("gen", "--count", "2"),
    ],
    ids=lambda a: a[0],
)
def test_every_report_records_all_bounds_and_seed(data_dir, tmp_path, args):
    verb, *rest = args
    rest = [data_dir / r if r.endswith((".thy", ".cat")) else r for r in rest]
    code, text = invoke(verb, *rest, "--seed", "11", tmp_path=tmp_path)
    assert code == 0
    lines = lines_of(text)
    for name in ("arity", "size", "depth", "model_bound", "word_len"):
        assert any(x.startswith(f"bound.{name}: ") for x in lines), name
    assert "bound.seed: 11" in lines
