# 動詞ごとの検査: 入力を読み込み、各モジュールの操作を呼んで Report を作る
from src.algebra.clone import (
    NotCommutative,
    centralizer_clone,
    clone_of_algebra,
    clone_sizes,
    is_commutative_clone,
    op_commutes,
    render_clone,
    validate_clone,
)
from src.algebra.decide import Proved, Refuted, decide_equal
from src.algebra.graded import graded_q_cospan_commutes
from src.algebra.model import enumerate_models, render_model, verify_tensor_correspondence
from src.algebra.tensor import commuting_tensor_presentation
from src.algebra.term import commutation_equation, generator_term
from src.common.errors import BoundExceededError, CatcomError, CeilingExceededError, InputError
from src.common.report import Report
from src.common.tables import commutation_witness
from src.infrastructure.cli.command import Command
from src.infrastructure.cli.gen import run_stress
from src.infrastructure.cli.render import law_report_to_report
from src.infrastructure.parsers.algebra import load_algebra, load_graded, render_algebra
from src.infrastructure.parsers.base import read_source
from src.infrastructure.parsers.category import load_category, load_functor, load_premonoidal, load_sesqui
from src.infrastructure.parsers.operad import (
    load_operad,
    load_operad_presentation,
    render_operad_presentation,
)
from src.infrastructure.parsers.theory import load_presentation, render_presentation
from src.operad.operad import operad_pair_commutes, validate_operad
from src.operad.presentation import bv_tensor_presentation, enumerate_operad_algebras, interchanging_algebra_pairs
from src.structcat.category import enumerate_functors
from src.structcat.funny import compare_with_product, funny_tensor, generator_squares_commute
from src.structcat.premonoidal import (
    central_arrows,
    centre_maximality_witnesses,
    freyd_validate,
    premonoidal_centre,
    premonoidal_validate,
    square_sides,
)
from src.structcat.sesqui import (
    interchange_sides,
    sesqui_interchange,
    sesqui_validate,
    to_two_category,
    validate_two_category,
)

from itertools import combinations_with_replacement, product
import logging
import time

logger = logging.getLogger(__name__)

EXIT_CODES = {"pass": 0, "fail": 1, "unknown": 2}
INPUT_ERROR_EXIT = 3

# 合流性を網羅的に確かめる語の長さの上限
CONFLUENCE_WORD_LEN = 4


def first_keyword(path) -> str:
    """ファイルの最初の語（theory / algebra / operad / operad_pres など）"""
    for line in read_source(path).splitlines():
        body = line.split("#", 1)[0].split()
        if body:
            return body[0]
    raise InputError("空のファイルです", str(path), 1, 1)


def _report(cmd: Command, subject: str, verdict: str = "pass") -> Report:
    return Report(command=cmd.verb, subject=subject, verdict=verdict, bounds=cmd.bounds())


def _known(names, declared, what: str) -> None:
    for x in names:
        if x not in declared:
            raise InputError(f"{what} {x} が宣言されていません")


def _pairs(symbols, ops):
    if ops is not None:
        return [ops]
    return list(combinations_with_replacement(symbols, 2))


# ---------- 理論・代数 ----------


def check_theory(cmd: Command) -> Report:
    pres = load_presentation(cmd.inputs[0])
    report = _report(cmd, pres.name)
    report.counts.update({"operations": len(pres.signature.operations), "equations": len(pres.equations)})
    report.artifact = render_presentation(pres)
    return report


def _commute_theory(cmd: Command, path) -> Report:
    pres = load_presentation(path)
    sig = pres.signature
    report = _report(cmd, pres.name)
    report.counts.update({"proved": 0, "refuted": 0, "unknown": 0})
    exhausted = []
    for f, g in _pairs(sig.symbols, cmd.ops):
        n, m = sig.arity(f), sig.arity(g)
        if n * m > cmd.arity:
            raise BoundExceededError(f"{f}, {g} の可換性には {n * m} 変数が必要です", cmd.arity, n * m)
        eq = commutation_equation(generator_term(f, n), n, generator_term(g, m), m)
        result = decide_equal(pres, eq, cmd.depth, cmd.model_bound)
        if isinstance(result, Proved):
            report.counts["proved"] += 1
            report.notes.append(f"{f},{g}: proved (universe {result.certificate.universe_size})")
        elif isinstance(result, Refuted):
            report.counts["refuted"] += 1
            values = ", ".join(f"x{i + 1}={v}" for i, v in enumerate(result.assignment))
            report.witnesses.append(render_model(result.model, f"{pres.name}_witness"))
            report.witnesses.append(f"{f},{g}: {values} -> {result.lhs_value} != {result.rhs_value}")
            report.verdict = "fail"
            break
        else:
            report.counts["unknown"] += 1
            report.notes.append(f"{f},{g}: unknown ({result.reason})")
            exhausted.append(f"depth={result.depth_bound}, model_bound={result.model_bound}")
    if report.verdict == "pass" and exhausted:
        report.verdict = "unknown"
        report.exhausted = exhausted[0]
    return report


def _commute_algebra(cmd: Command, path) -> Report:
    alg = load_algebra(path)
    sig = alg.signature
    report = _report(cmd, alg.name)
    c = clone_of_algebra(alg, cmd.arity)
    report.counts.update({f"T({n})": s for n, s in enumerate(clone_sizes(c))})
    if cmd.ops is None:
        verdict = is_commutative_clone(c)
        if isinstance(verdict, NotCommutative):
            report.verdict = "fail"
            report.witnesses.append(verdict.witness)
        return report
    f, g = cmd.ops
    n, m = sig.arity(f), sig.arity(g)
    fi, gi = c.index_of(alg.tables[f], n), c.index_of(alg.tables[g], m)
    if op_commutes(c, fi, n, gi, m):
        return report
    xs, lhs, rhs = commutation_witness(alg.tables[f], n, alg.tables[g], m, alg.k)
    values = ", ".join(f"x{i + 1}={v}" for i, v in enumerate(xs))
    report.verdict = "fail"
    report.witnesses.append(render_algebra(alg).rstrip("\n"))
    report.witnesses.append(f"{f},{g}: {values} -> {lhs} != {rhs}")
    return report


def commute(cmd: Command) -> Report:
    path = cmd.inputs[0]
    kind = first_keyword(path)
    if kind == "theory":
        return _commute_theory(cmd, path)
    if kind == "algebra":
        return _commute_algebra(cmd, path)
    raise InputError(f"commute は theory か algebra のファイルを受け付けます（{kind}）", path, 1, 1)


def tensor(cmd: Command) -> Report:
    s, t = (load_presentation(p) for p in cmd.inputs)
    u = commuting_tensor_presentation(s, t)
    report = _report(cmd, u.name)
    report.counts.update({"operations": len(u.signature.operations), "equations": len(u.equations)})
    report.artifact = render_presentation(u)
    return report


def models(cmd: Command) -> Report:
    pres = load_presentation(cmd.inputs[0])
    found = enumerate_models(pres, cmd.size)
    report = _report(cmd, pres.name)
    report.counts["models"] = len(found)
    report.artifact = "\n".join(render_model(m, f"{pres.name}_{i}") for i, m in enumerate(found))
    return report


def verify_tensor(cmd: Command) -> Report:
    s, t = (load_presentation(p) for p in cmd.inputs)
    return verify_tensor_correspondence(s, t, cmd.size)


def _clone_report(cmd: Command, c) -> Report:
    report = law_report_to_report(cmd.verb, validate_clone(c), cmd.bounds())
    report.subject = c.name
    report.counts = {**{f"T({n})": s for n, s in enumerate(clone_sizes(c))}, **report.counts}
    verdict = is_commutative_clone(c)
    if isinstance(verdict, NotCommutative):
        report.notes.append(f"commutative: no {verdict.witness}")
    else:
        report.notes.append(f"commutative: up to {verdict.bound}")
    report.artifact = render_clone(c)
    return report


def clone(cmd: Command) -> Report:
    return _clone_report(cmd, clone_of_algebra(load_algebra(cmd.inputs[0]), cmd.arity))


def centralizer(cmd: Command) -> Report:
    return _clone_report(cmd, centralizer_clone(load_algebra(cmd.inputs[0]), cmd.arity))


# ---------- オペラド ----------


def operad(cmd: Command) -> Report:
    path = cmd.inputs[0]
    kind = first_keyword(path)
    if kind == "operad_pres":
        p = load_operad_presentation(path)
        report = _report(cmd, p.name)
        report.counts["algebras"] = len(enumerate_operad_algebras(p, cmd.size))
        report.artifact = render_operad_presentation(p)
        return report
    if kind != "operad":
        raise InputError(f"operad は operad か operad_pres のファイルを受け付けます（{kind}）", path, 1, 1)
    o = load_operad(path)
    report = law_report_to_report(cmd.verb, validate_operad(o), {"size": o.K})
    report.subject = o.name
    commuting, other = 0, []
    for n, m in product(range(1, o.K + 1), repeat=2):
        if n * m > o.K:
            continue
        for psi, phi in product(o.elements(n), o.elements(m)):
            if operad_pair_commutes(o, psi, n, phi, m):
                commuting += 1
            else:
                other.append(f"({o.describe(psi, n)}, {o.describe(phi, m)})")
    report.counts.update({"commuting_pairs": commuting, "non_commuting_pairs": len(other)})
    if other:
        report.notes.append(f"non-commuting: {other[0]}")
    return report


def bv(cmd: Command) -> Report:
    p1, p2 = (load_operad_presentation(p) for p in cmd.inputs)
    p = bv_tensor_presentation(p1, p2)
    report = _report(cmd, p.name)
    report.counts["algebras"] = len(enumerate_operad_algebras(p, cmd.size))
    report.counts["interchanging_pairs"] = len(interchanging_algebra_pairs(p1, p2, cmd.size))
    report.artifact = render_operad_presentation(p)
    return report


# ---------- 圏 ----------


def cat(cmd: Command) -> Report:
    A = load_category(cmd.inputs[0])
    if len(cmd.inputs) == 1:
        report = _report(cmd, A.name)
        report.counts.update({"objects": len(A.objects), "arrows": len(A.arrows)})
        return report
    B = load_category(cmd.inputs[1])
    t = funny_tensor(A, B)
    report = _report(cmd, t.name)
    funny_total = product_total = 0
    truncated = False
    for x, y in product(t.objects, repeat=2):
        n_funny, n_product, cut = compare_with_product(t, x, y, cmd.word_len)
        funny_total += n_funny
        product_total += n_product
        truncated |= cut
        if n_funny != n_product:
            report.notes.append(f"hom {x} -> {y}: funny={n_funny}, product={n_product}")
    report.counts.update(
        {"funny_arrows": funny_total, "product_arrows": product_total, "functors": len(enumerate_functors(A, B))}
    )
    if truncated:
        report.notes.append(f"truncated: 長さ {cmd.word_len} を超える語があります")
    report.notes.append(f"generator squares commute: {'yes' if generator_squares_commute(t) else 'no'}")
    word = t.confluence_witness(min(CONFLUENCE_WORD_LEN, max(cmd.word_len, 1)))
    if word is not None:
        report.verdict = "fail"
        report.witnesses.append("confluence: " + " ; ".join(str(x) for x in word))
    return report


def sesqui(cmd: Command) -> Report:
    S = load_sesqui(cmd.inputs[0])
    law = sesqui_validate(S)
    if not law.ok:
        return law_report_to_report(cmd.verb, law, cmd.bounds())
    report = _report(cmd, S.name)
    report.counts.update({"cells": len(S.cells), **{f"checked.{k}": v for k, v in law.checked.items()}})
    if cmd.ops is None:
        failing = sesqui_interchange(S)
    else:
        _known(cmd.ops, S.cells, "セル")
        failing = [] if sesqui_interchange(S, cmd.ops) else [cmd.ops]
    if failing:
        alpha, beta = failing[0]
        lhs, rhs = interchange_sides(S, alpha, beta)
        report.verdict = "fail"
        report.witnesses.append(f"interchange {alpha},{beta}: {lhs} != {rhs}")
        report.counts["failing_pairs"] = len(failing)
        return report
    if cmd.ops is None:
        two = validate_two_category(to_two_category(S))
        report.counts.update({f"checked.{k}": v for k, v in two.checked.items()})
        for failure in two.failures:
            report.verdict = "fail"
            report.witnesses.append(f"{failure.law}: {failure.witness}")
        report.notes.append("2-category: " + ("yes" if two.ok else "no"))
    return report


def premonoidal(cmd: Command) -> Report:
    P = load_premonoidal(cmd.inputs[0])
    law = premonoidal_validate(P)
    report = law_report_to_report(cmd.verb, law, cmd.bounds())
    if not law.ok:
        return report
    if cmd.ops is not None:
        _known(cmd.ops, P.base.arrows, "射")
        lhs, rhs = square_sides(P, *cmd.ops)
        if lhs != rhs:
            report.verdict = "fail"
            report.witnesses.append(f"square {cmd.ops[0]},{cmd.ops[1]}: {lhs} != {rhs}")
        return report
    central = central_arrows(P)
    Z = premonoidal_centre(P)
    report.counts.update({"arrows": len(P.base.arrows), "central_arrows": len(central)})
    report.notes.append("monoidal: " + ("yes" if len(central) == len(P.base.arrows) else "no"))
    report.notes.append("centre: " + ("ok" if Z.report.ok else ", ".join(Z.report.failed_laws())))
    for f, (x, y) in centre_maximality_witnesses(P).items():
        report.notes.append(f"maximality {f}: {x},{y}")
    return report


def freyd(cmd: Command) -> Report:
    A, M = load_premonoidal(cmd.inputs[0]), load_premonoidal(cmd.inputs[1])
    F = load_functor(cmd.inputs[2], {A.base.name: A.base, M.base.name: M.base})
    return law_report_to_report(cmd.verb, freyd_validate(A, M, F), cmd.bounds())


def graded(cmd: Command) -> Report:
    c = load_graded(cmd.inputs[0])
    left, right = graded_q_cospan_commutes(c, c.basis_vector(cmd.left), c.basis_vector(cmd.right))
    report = _report(cmd, c.name)
    report.notes += [f"left: {str(left).lower()}", f"right: {str(right).lower()}"]
    if not left:
        report.verdict = "fail"
        report.witnesses.append(f"{cmd.left}*{cmd.right} != q^(rs) {cmd.right}*{cmd.left}")
    return report


def gen(cmd: Command) -> Report:
    return run_stress(cmd.seed, cmd.count, cmd.depth, cmd.model_bound)


HANDLERS = {
    "check-theory": check_theory,
    "commute": commute,
    "tensor": tensor,
    "models": models,
    "verify-tensor": verify_tensor,
    "clone": clone,
    "centralizer": centralizer,
    "operad": operad,
    "bv": bv,
    "cat": cat,
    "sesqui": sesqui,
    "premonoidal": premonoidal,
    "freyd": freyd,
    "graded": graded,
    "gen": gen,
}


def dispatch(cmd: Command):
    """
    (Report, 終了コード) を返す
    上限・資源上限に達したら unknown（2）、入力の不備は InputError として呼び出し側へ
    """
    start = time.perf_counter()
    try:
        report = HANDLERS[cmd.verb](cmd)
    except BoundExceededError as e:
        logger.warning("上限に達しました: %s", e)
        report = _report(cmd, cmd.inputs[0] if cmd.inputs else "", "unknown")
        report.exhausted = f"required={e.required} > bound={e.bound}"
        report.notes.append(str(e))
    except CeilingExceededError as e:
        logger.warning("資源上限に達しました: %s", e)
        report = _report(cmd, cmd.inputs[0] if cmd.inputs else "", "unknown")
        report.exhausted = f"ceiling={e.ceiling}, reached={e.reached}"
        report.notes.append(str(e))
    except InputError:
        raise
    except CatcomError as e:
        # 構成時の検査で弾かれた入力
        raise InputError(str(e), cmd.inputs[0] if cmd.inputs else None)
    # 使った上限はすべての動詞で同じ形で残す
    report.bounds = {**cmd.bounds(), **report.bounds}
    report.timing = time.perf_counter() - start
    return report, EXIT_CODES[report.verdict]
