# 有限モデル: 表示のモデルの列挙・準同型・可換なモデルの組
from src.algebra.clone import FiniteAlgebra, clone_of_algebra
from src.algebra.tensor import commuting_tensor_with_renaming
from src.algebra.term import Presentation, Term, Var
from src.common.errors import (
    ArityError,
    CarrierMismatchError,
    CeilingExceededError,
    InvalidStructureError,
)
from src.common.report import Report
from src.common.settings import MODEL_CEILING
from src.common.tables import (
    all_tuples,
    apply_table,
    check_table,
    encode,
    functions_commute,
)

from dataclasses import dataclass, field
from itertools import product
import logging
import numpy as np
import time

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteModel:
    """
    carrier {0..k-1} 上の表示 pres のモデル
        tables : 記号 -> 行優先の演算表（長さ k^n）
    生成時にすべての等式をすべての割り当てで確認する
    """

    k: int
    presentation: Presentation
    tables: dict = field(default_factory=dict)
    checked: bool = True

    def __post_init__(self):
        sig = self.presentation.signature
        if set(self.tables) != set(sig.operations):
            raise ArityError("モデルの演算表がシグネチャと一致しません")
        fixed = {s: check_table(self.tables[s], self.k, sig.arity(s), s) for s in sig.symbols}
        object.__setattr__(self, "tables", fixed)
        if self.checked:
            bad = failing_instance(self)
            if bad is not None:
                eq, asg = bad
                raise InvalidStructureError(f"等式 {eq} が割り当て {asg} で成り立ちません")

    def table(self, symbol: str) -> tuple:
        return self.tables[symbol]

    def key(self) -> tuple:
        return tuple(self.tables[s] for s in self.presentation.signature.symbols)


@dataclass(frozen=True)
class ModelHom:
    source: FiniteModel
    target: FiniteModel
    map: tuple


def evaluate_term(model: FiniteModel, t: Term, assignment) -> int:
    """割り当て assignment（x1 が先頭）での項の値"""
    if isinstance(t, Var):
        if t.index > len(assignment):
            raise ArityError(f"変数 x{t.index} に値が割り当てられていません")
        return assignment[t.index - 1]
    args = [evaluate_term(model, a, assignment) for a in t.args]
    return apply_table(model.tables[t.symbol], model.k, args)


def failing_instance(model: FiniteModel):
    """成り立たない最初の等式インスタンス (等式, 割り当て)。すべて成り立てば None"""
    for eq in model.presentation.equations:
        for asg in product(range(model.k), repeat=eq.var_count):
            if evaluate_term(model, eq.lhs, asg) != evaluate_term(model, eq.rhs, asg):
                return eq, asg
    return None


# ---------- モデル列挙（等式伝播つきバックトラック） ----------


def cell_order(pres: Presentation) -> list:
    """表を埋める記号の順: 定数が先、次にアリティ昇順、同じなら宣言順"""
    sig = pres.signature
    return sorted(sig.symbols, key=lambda s: (sig.arity(s), sig.symbols.index(s)))


def _compile(t: Term, index: dict):
    if isinstance(t, Var):
        return (-1, t.index - 1)
    return (index[t.symbol], tuple(_compile(a, index) for a in t.args))


def _partial_eval(node, tables, arities, k, asg):
    head, rest = node
    if head == -1:
        return asg[rest]
    idx = 0
    for child in rest:
        v = _partial_eval(child, tables, arities, k, asg)
        if v < 0:
            return -1
        idx = idx * k + v
    return tables[head][idx]


def iter_models(pres: Presentation, k: int, ceiling: int = MODEL_CEILING):
    """
    carrier k 上のモデルを順に生成する（cell_order の表を連結した辞書式順）
    探索ノード数が ceiling を超えたら CeilingExceededError
    """
    if k < 0:
        raise ArityError("carrier のサイズは 0 以上です")
    sig = pres.signature
    order = cell_order(pres)
    index = {s: i for i, s in enumerate(order)}
    arities = [sig.arity(s) for s in order]
    tables = [[-1] * (k**a) for a in arities]
    cells = [(i, c) for i, a in enumerate(arities) for c in range(k**a)]

    instances = []
    for eq in pres.equations:
        lhs, rhs = _compile(eq.lhs, index), _compile(eq.rhs, index)
        for asg in product(range(k), repeat=eq.var_count):
            instances.append((lhs, rhs, asg))

    attempted = k ** (k**sig.max_arity) if k > 0 else 1
    nodes = 0

    def consistent(pending):
        rest = []
        for lhs, rhs, asg in pending:
            a = _partial_eval(lhs, tables, arities, k, asg)
            if a < 0:
                rest.append((lhs, rhs, asg))
                continue
            b = _partial_eval(rhs, tables, arities, k, asg)
            if b < 0:
                rest.append((lhs, rhs, asg))
            elif a != b:
                return None
        return rest

    def search(pos, pending):
        nonlocal nodes
        nodes += 1
        if nodes > ceiling:
            raise CeilingExceededError(
                f"{pres.name} のモデル列挙が上限を超えました（k={k}, 表の候補数 {attempted}）",
                ceiling,
                nodes,
            )
        if pos == len(cells):
            yield {s: tuple(tables[index[s]]) for s in sig.symbols}
            return
        t, c = cells[pos]
        for v in range(k):
            tables[t][c] = v
            rest = consistent(pending)
            if rest is not None:
                yield from search(pos + 1, rest)
        tables[t][c] = -1

    # 変数を含まない等式は最初に確認する
    initial = consistent(instances)
    if initial is None:
        return
    for found in search(0, initial):
        yield FiniteModel(k, pres, found, checked=False)


def enumerate_models(pres: Presentation, k: int, ceiling: int = MODEL_CEILING) -> list:
    logger.info("モデル列挙中... %s (k=%d)", pres.name, k)
    models = list(iter_models(pres, k, ceiling))
    logger.info("%s: k=%d のモデル %d 個", pres.name, k, len(models))
    return models


# ---------- 準同型 ----------


def is_hom(a: FiniteModel, b: FiniteModel, h) -> bool:
    """準同型の条件 h.[[op]]_a = [[op]]_b.h^n をすべての演算で確認"""
    h_arr = np.asarray(h, dtype=np.int64)
    sig = a.presentation.signature
    for s in sig.symbols:
        n = sig.arity(s)
        xs = all_tuples(a.k, n)
        if xs.shape[0] == 0:
            continue
        lhs = h_arr[np.asarray(a.tables[s], dtype=np.int64)]
        rhs = np.asarray(b.tables[s], dtype=np.int64)[encode(h_arr[xs], b.k)]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def enumerate_homs(a: FiniteModel, b: FiniteModel) -> list:
    if a.presentation.signature.operations != b.presentation.signature.operations:
        raise ArityError("同じ表示のモデル間でのみ準同型を列挙できます")
    homs = []
    for h in product(range(b.k), repeat=a.k):
        if is_hom(a, b, h):
            homs.append(ModelHom(a, b, tuple(h)))
    return homs


# ---------- 可換なモデルの組 ----------


def is_commuting_pair(s_model: FiniteModel, t_model: FiniteModel) -> bool:
    """
    同じ carrier 上の S-モデルと T-モデルが可換か
    生成演算のすべての組が具体的な関数として可換であることと同値
    """
    if s_model.k != t_model.k:
        raise CarrierMismatchError(f"carrier が異なります: {s_model.k} != {t_model.k}")
    k = s_model.k
    s_sig = s_model.presentation.signature
    t_sig = t_model.presentation.signature
    for f in s_sig.symbols:
        for g in t_sig.symbols:
            if not functions_commute(
                s_model.tables[f], s_sig.arity(f), t_model.tables[g], t_sig.arity(g), k
            ):
                return False
    return True


def render_model(model: FiniteModel, name=None) -> str:
    """代数ファイルの文法でモデルを書き出す（clone モジュールへの入力になる）"""
    name = name or f"{model.presentation.name}_model"
    sig = model.presentation.signature
    lines = [f"algebra {name} {{", f"  carrier {model.k};"]
    for s in sig.symbols:
        values = ",".join(str(v) for v in model.tables[s])
        lines.append(f"  op {s}/{sig.arity(s)} = [{values}];")
    lines.append("}")
    return "\n".join(lines)



# ---------- テンソルとの対応 ----------


def _algebra_part(model: FiniteModel, names: dict, sig, label: str):
    tables = {sym: model.tables[names[sym]] for sym in sig.symbols}
    return FiniteAlgebra(label, model.k, sig, tables)


def _restrict(model: FiniteModel, names: dict, pres: Presentation) -> FiniteModel:
    tables = {sym: model.tables[names[sym]] for sym in pres.signature.symbols}
    return FiniteModel(model.k, pres, tables, checked=False)


def verify_tensor_correspondence(
    s: Presentation, t: Presentation, k: int, ceiling: int = MODEL_CEILING, derived_arity: int = 2
) -> Report:
    """
    U = S ⊙ T のモデル（carrier k）と、可換な (S-モデル, T-モデル) の組の対応を確認する
        - 構造の制限による全単射
        - k ≤ 2 で準同型の数の一致
        - 生成記号の可換性から derived_arity 以下の導出演算の可換性が従うこと
    """
    start = time.perf_counter()
    u, renaming = commuting_tensor_with_renaming(s, t)
    report = Report(
        command="verify-tensor", subject=u.name, verdict="pass", bounds={"k": k, "derived_arity": derived_arity}
    )

    u_models = enumerate_models(u, k, ceiling)
    s_models = enumerate_models(s, k, ceiling)
    t_models = enumerate_models(t, k, ceiling)
    pairs = {}
    for i, sm in enumerate(s_models):
        for j, tm in enumerate(t_models):
            if is_commuting_pair(sm, tm):
                pairs[(sm.key(), tm.key())] = (i, j)
    report.counts.update(
        {
            "tensor_models": len(u_models),
            "commuting_pairs": len(pairs),
            "s_models": len(s_models),
            "t_models": len(t_models),
        }
    )

    # 制限写像 U-モデル -> (S-モデル, T-モデル)
    image = {}
    restricted = []
    for idx, um in enumerate(u_models):
        sm = _restrict(um, renaming.left, s)
        tm = _restrict(um, renaming.right, t)
        restricted.append((sm, tm))
        key = (sm.key(), tm.key())
        if key not in pairs:
            report.witnesses.append(f"U-モデル #{idx} の制限が可換な組になりません\n{render_model(um)}")
        elif key in image:
            report.witnesses.append(f"U-モデル #{idx} と #{image[key]} が同じ組に制限されます")
        else:
            image[key] = idx
            i, j = pairs[key]
            report.notes.append(f"bijection: U#{idx} -> (S#{i}, T#{j})")
    for key, (i, j) in pairs.items():
        if key not in image:
            report.witnesses.append(f"可換な組 (S#{i}, T#{j}) に対応する U-モデルがありません")

    # 準同型の数（k ≤ 2 の抜き取り検査）
    if k <= 2:
        checked = 0
        for a, ua in enumerate(u_models):
            for b, ub in enumerate(u_models):
                left = len(enumerate_homs(ua, ub))
                (sa, ta), (sb, tb) = restricted[a], restricted[b]
                right = sum(
                    1 for h in product(range(k), repeat=k) if is_hom(sa, sb, h) and is_hom(ta, tb, h)
                )
                checked += 1
                if left != right:
                    report.witnesses.append(f"準同型の数が一致しません: U#{a} -> U#{b} ({left} != {right})")
        report.counts["hom_pairs_checked"] = checked

    # 導出演算の可換性
    derived = 0
    if k >= 1 and derived_arity >= 1:
        for idx, um in enumerate(u_models):
            sc = clone_of_algebra(_algebra_part(um, renaming.left, s.signature, f"{s.name}_part"), derived_arity)
            tc = clone_of_algebra(_algebra_part(um, renaming.right, t.signature, f"{t.name}_part"), derived_arity)
            for n in range(derived_arity + 1):
                for m in range(derived_arity + 1):
                    for f in sc.elements(n):
                        for g in tc.elements(m):
                            derived += 1
                            if not functions_commute(sc.table(f, n), n, tc.table(g, m), m, k):
                                report.witnesses.append(
                                    f"generator_suffices: U#{idx} で {sc.describe(f, n)} と "
                                    f"{tc.describe(g, m)} が可換ではありません"
                                )
    report.counts["derived_pairs_checked"] = derived

    if report.witnesses:
        report.verdict = "fail"
        logger.error("%s: テンソルの対応に不一致があります (k=%d)", u.name, k)
    report.timing = time.perf_counter() - start
    return report
