# pytest の共通設定: リポジトリ直下を import パスに入れ、組み込みの例を fixture にする
from pathlib import Path
import sys

import pytest

ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(ROOT))

from src.corpus.algebras import and_or_lattice, semilattice_or, z2_module  # noqa: E402
from src.corpus.theories import monoid_presentation, semilattice_presentation  # noqa: E402


@pytest.fixture
def data_dir() -> Path:
    return ROOT / "data"


@pytest.fixture
def sl_alg():
    return semilattice_or()


@pytest.fixture
def latt_alg():
    return and_or_lattice()


@pytest.fixture
def z2_alg():
    return z2_module()


@pytest.fixture
def monoid_pres():
    return monoid_presentation()


@pytest.fixture
def sl_pres():
    return semilattice_presentation()
