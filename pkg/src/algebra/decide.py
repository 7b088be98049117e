# 等式の判定: 有界な合同閉包による証明と有限モデルによる反駁
from src.algebra.model import FiniteModel, evaluate_term, iter_models
from src.algebra.term import Equation, Presentation, Term, Var, variables
from src.common.errors import ArityError, CeilingExceededError
from src.common.settings import TERM_CEILING

from dataclasses import dataclass
from itertools import product
import logging

from networkx.utils import UnionFind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certificate:
    """合同閉包による証明の記録"""

    depth_bound: int
    universe_size: int
    instance_count: int
    congruence_rounds: int


@dataclass(frozen=True)
class Proved:
    certificate: Certificate


@dataclass(frozen=True)
class Refuted:
    model: FiniteModel
    assignment: tuple
    lhs_value: int
    rhs_value: int


@dataclass(frozen=True)
class Unknown:
    depth_bound: int
    model_bound: int
    reason: str = "bounds exhausted"


class _Universe:
    """サイズ depth_bound 以下の項をハッシュコンスして並べた集合 U"""

    def __init__(self, pres: Presentation, var_count: int, depth_bound: int, ceiling: int):
        self.sig = pres.signature
        self.nodes = []  # id -> (symbol or None, children or var index)
        self.index = {}
        self.ceiling = ceiling
        by_size = [[self._add(None, i) for i in range(1, var_count + 1)]]
        for s in range(1, depth_bound + 1):
            level = []
            for symbol in self.sig.symbols:
                arity = self.sig.arity(symbol)
                if arity == 0:
                    if s == 1:
                        level.append(self._add(symbol, ()))
                    continue
                for sizes in _compositions(s - 1, arity):
                    for children in product(*(by_size[c] for c in sizes)):
                        level.append(self._add(symbol, children))
            by_size.append(level)

    def _add(self, symbol, payload):
        key = (symbol, payload)
        nid = self.index.get(key)
        if nid is None:
            if len(self.nodes) >= self.ceiling:
                raise CeilingExceededError("項の宇宙が上限を超えました", self.ceiling, len(self.nodes))
            nid = len(self.nodes)
            self.nodes.append(key)
            self.index[key] = nid
        return nid

    def intern(self, t: Term) -> int:
        """項を U に加える（部分項も含む）"""
        if isinstance(t, Var):
            return self._add(None, t.index)
        return self._add(t.symbol, tuple(self.intern(a) for a in t.args))

    def lookup(self, t: Term, binding: dict):
        """束縛つきの項が U にあればその id、なければ None"""
        if isinstance(t, Var):
            return binding[t.index]
        children = []
        for a in t.args:
            c = self.lookup(a, binding)
            if c is None:
                return None
            children.append(c)
        return self.index.get((t.symbol, tuple(children)))

    def match(self, pattern: Term, nid: int, binding: dict) -> bool:
        if isinstance(pattern, Var):
            bound = binding.get(pattern.index)
            if bound is None:
                binding[pattern.index] = nid
                return True
            return bound == nid
        symbol, payload = self.nodes[nid]
        if symbol != pattern.symbol or len(payload) != len(pattern.args):
            return False
        return all(self.match(p, c, binding) for p, c in zip(pattern.args, payload))


def _compositions(total: int, parts: int):
    """total を parts 個の非負整数の列に分ける"""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def prove_bounded(pres: Presentation, eq: Equation, depth_bound: int, ceiling: int = TERM_CEILING):
    """
    U を作り、(a) U に両辺が入る等式インスタンス (b) U 内の文脈による合同
    で union-find を閉じる。lhs ~ rhs なら Certificate、そうでなければ None
    """
    universe = _Universe(pres, eq.var_count, depth_bound, ceiling)
    lhs_id = universe.intern(eq.lhs)
    rhs_id = universe.intern(eq.rhs)
    uf = UnionFind(range(len(universe.nodes)))

    # (a) 等式インスタンス（両向き）
    instance_count = 0
    rules = []
    for axiom in pres.equations:
        rules.append((axiom.lhs, axiom.rhs))
        rules.append((axiom.rhs, axiom.lhs))
    base_size = len(universe.nodes)
    for pattern, other in rules:
        extra = sorted(variables(other) - variables(pattern))
        for nid in range(base_size):
            binding = {}
            if not universe.match(pattern, nid, binding):
                continue
            # 片側にしか現れない変数は U のすべての項を動く
            for choice in product(range(base_size), repeat=len(extra)):
                full = dict(binding)
                full.update(zip(extra, choice))
                target = universe.lookup(other, full)
                if target is not None:
                    uf.union(nid, target)
                    instance_count += 1
                    if instance_count > ceiling:
                        raise CeilingExceededError("等式インスタンスが上限を超えました", ceiling, instance_count)

    # (b) 合同閉包
    rounds = 0
    apps = [nid for nid, (symbol, _) in enumerate(universe.nodes) if symbol is not None]
    while True:
        rounds += 1
        changed = False
        table = {}
        for nid in apps:
            symbol, children = universe.nodes[nid]
            key = (symbol, tuple(uf[c] for c in children))
            other = table.get(key)
            if other is None:
                table[key] = nid
            elif uf[other] != uf[nid]:
                uf.union(other, nid)
                changed = True
        if not changed:
            break

    logger.info(
        "合同閉包: |U|=%d, インスタンス %d, ラウンド %d", len(universe.nodes), instance_count, rounds
    )
    if uf[lhs_id] == uf[rhs_id]:
        return Certificate(depth_bound, len(universe.nodes), instance_count, rounds)
    return None


def refute_in_models(pres: Presentation, eq: Equation, model_bound: int):
    """サイズの小さい順・辞書式順で最初の反例モデルと割り当てを探す"""
    for k in range(1, model_bound + 1):
        for model in iter_models(pres, k):
            for asg in product(range(k), repeat=eq.var_count):
                a = evaluate_term(model, eq.lhs, asg)
                b = evaluate_term(model, eq.rhs, asg)
                if a != b:
                    return Refuted(model, tuple(asg), a, b)
    return None


def decide_equal(pres: Presentation, eq: Equation, depth_bound: int, model_bound: int):
    """
    自由モデルでの等式 lhs = rhs を健全に判定する
    戻り値: Proved / Refuted / Unknown
    """
    if depth_bound < 1 or model_bound < 1:
        raise ArityError("depth_bound と model_bound は 1 以上です")
    reasons = []
    try:
        cert = prove_bounded(pres, eq, depth_bound)
        if cert is not None:
            return Proved(cert)
    except CeilingExceededError as e:
        logger.warning("証明探索を打ち切りました: %s", e)
        reasons.append(str(e))
    try:
        refutation = refute_in_models(pres, eq, model_bound)
        if refutation is not None:
            return refutation
    except CeilingExceededError as e:
        logger.warning("モデル探索を打ち切りました: %s", e)
        reasons.append(str(e))
    return Unknown(depth_bound, model_bound, "; ".join(reasons) or "bounds exhausted")


def recheck_refutation(eq: Equation, refutation: Refuted) -> bool:
    """反例の再検証: モデルが表示を満たし、両辺の値が異なる"""
    model = FiniteModel(refutation.model.k, refutation.model.presentation, refutation.model.tables)
    return evaluate_term(model, eq.lhs, refutation.assignment) != evaluate_term(
        model, eq.rhs, refutation.assignment
    )
