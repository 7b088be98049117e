# gen: 乱数で表示と等式を作り、decide_equal の判定が互いに矛盾しないかを確かめる
from src.algebra.decide import Proved, Refuted, Unknown, decide_equal, recheck_refutation, refute_in_models
from src.algebra.term import App, Equation, Presentation, Signature, Var
from src.common.report import Report
from src.common.workers import parallel_map
from src.infrastructure.parsers.theory import render_presentation

from dataclasses import dataclass
from functools import partial
import logging

import numpy as np

logger = logging.getLogger(__name__)

VAR_COUNT = 3


@dataclass(frozen=True)
class StressCase:
    presentation: Presentation
    goal: Equation


def random_signature(rng: np.random.Generator, index: int) -> Signature:
    ops = {f"f{i}": int(rng.integers(0, 3)) for i in range(int(rng.integers(1, 3)))}
    return Signature(f"gen{index}", ops)


def random_term(rng: np.random.Generator, sig: Signature, size: int):
    """大きさ size 程度の項（変数は x1..x3）"""
    compound = [s for s in sig.symbols if sig.arity(s) > 0]
    constants = [s for s in sig.symbols if sig.arity(s) == 0]
    if size <= 1 or not compound or rng.random() < 0.25:
        if constants and rng.random() < 0.2:
            return App(constants[int(rng.integers(len(constants)))])
        return Var(int(rng.integers(1, VAR_COUNT + 1)))
    symbol = compound[int(rng.integers(len(compound)))]
    arity = sig.arity(symbol)
    return App(symbol, tuple(random_term(rng, sig, (size - 1) // arity) for _ in range(arity)))


def random_equation(rng: np.random.Generator, sig: Signature) -> Equation:
    return Equation(
        random_term(rng, sig, int(rng.integers(1, 5))), random_term(rng, sig, int(rng.integers(1, 5))), VAR_COUNT
    )


def random_case(rng: np.random.Generator, index: int) -> StressCase:
    sig = random_signature(rng, index)
    axioms = tuple(random_equation(rng, sig) for _ in range(int(rng.integers(0, 3))))
    return StressCase(Presentation(sig, axioms), random_equation(rng, sig))


def stress_corpus(seed, count: int) -> list:
    """seed が同じなら同じ列"""
    rng = np.random.default_rng(seed)
    return [random_case(rng, i) for i in range(count)]


def _kind(result) -> str:
    if isinstance(result, Proved):
        return "proved"
    if isinstance(result, Refuted):
        return "refuted"
    return "unknown"


def check_case(case: StressCase, depth: int, model_bound: int):
    """(判定の種類, 矛盾の説明または None)"""
    pres, eq = case.presentation, case.goal
    result = decide_equal(pres, eq, depth, model_bound)
    mirror = decide_equal(pres, Equation(eq.rhs, eq.lhs, eq.var_count), depth, model_bound)
    kind = _kind(result)
    if {kind, _kind(mirror)} == {"proved", "refuted"}:
        return kind, "左右を入れ替えると判定が逆になります"
    if isinstance(result, Refuted) and not recheck_refutation(eq, result):
        return kind, "反例が再検証できません"
    if isinstance(result, Proved) and refute_in_models(pres, eq, min(model_bound, 2)) is not None:
        return kind, "証明された等式に有限の反例があります"
    if isinstance(result, Unknown):
        logger.info("%s: 判定できませんでした (%s)", pres.name, result.reason)
    return kind, None


def run_stress(seed, count: int, depth: int, model_bound: int) -> Report:
    cases = stress_corpus(seed, count)
    report = Report(
        command="gen",
        subject=f"seed={seed}",
        verdict="pass",
        bounds={"depth": depth, "model_bound": model_bound},
        counts={"cases": count, "proved": 0, "refuted": 0, "unknown": 0, "contradictions": 0},
    )
    results = parallel_map(partial(check_case, depth=depth, model_bound=model_bound), cases)
    for case, (kind, problem) in zip(cases, results):
        report.counts[kind] += 1
        if problem is None:
            continue
        report.counts["contradictions"] += 1
        report.witnesses.append(f"{render_presentation(case.presentation)}# {problem}\n# goal: {case.goal}")
    if report.witnesses:
        report.verdict = "fail"
        logger.error("矛盾した判定が %d 件あります", len(report.witnesses))
    return report
