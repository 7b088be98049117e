from src.algebra.term import check_term
from src.infrastructure.cli.gen import random_case, run_stress, stress_corpus

import numpy as np
import pytest


def test_corpus_is_seeded():
    a = stress_corpus(7, 20)
    b = stress_corpus(7, 20)
    assert [str(c.goal) for c in a] == [str(c.goal) for c in b]
    assert [c.presentation.name for c in a] == [f"gen{i}" for i in range(20)]


def test_random_cases_are_well_formed():
    rng = np.random.default_rng(3)
    for i in range(50):
        case = random_case(rng, i)
        sig = case.presentation.signature
        check_term(case.goal.lhs, sig)
        check_term(case.goal.rhs, sig)


def test_small_stress_run():
    report = run_stress(0, 20, 3, 2)
    assert report.counts["cases"] == 20
    assert report.counts["proved"] + report.counts["refuted"] + report.counts["unknown"] == 20
    assert report.counts["contradictions"] == 0
    assert report.verdict == "pass"


@pytest.mark.slow
def test_thousand_case_stress_run():
    report = run_stress(0, 1000, 4, 2)
    assert report.counts["contradictions"] == 0
    assert report.witnesses == []
