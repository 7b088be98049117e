# 構文層: シグネチャ・項・等式・表示（presentation）と代入
from src.common.errors import ArityError, InputError
from src.common.finmap import flat_index

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Var:
    """変数 x_i（1 始まり）"""

    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ArityError(f"変数の番号は 1 以上です: x{self.index}")

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class App:
    """記号の適用。定数は引数なしの App"""

    symbol: str
    args: tuple = ()

    def __str__(self):
        return f"{self.symbol}({','.join(str(a) for a in self.args)})"


Term = Var | App


@dataclass(frozen=True)
class Signature:
    """
    name : シグネチャ名
    operations : 記号 -> アリティ
    """

    name: str
    operations: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "operations", dict(self.operations))
        for symbol, arity in self.operations.items():
            if arity < 0:
                raise ArityError(f"{symbol} のアリティが負です: {arity}")

    def __hash__(self):
        # 等値性は dict の比較なので宣言順によらない形でハッシュする
        return hash((self.name, tuple(sorted(self.operations.items()))))

    def arity(self, symbol: str) -> int:
        if symbol not in self.operations:
            raise InputError(f"宣言されていない記号です: {symbol}")
        return self.operations[symbol]

    @property
    def symbols(self) -> list:
        # 宣言順
        return list(self.operations)

    @property
    def max_arity(self) -> int:
        return max(self.operations.values(), default=0)


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term
    var_count: int

    def __post_init__(self):
        top = max(max_var(self.lhs), max_var(self.rhs))
        if top > self.var_count:
            raise ArityError(f"変数 x{top} は var_count={self.var_count} を超えています")

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class Presentation:
    """シグネチャと等式の組（代数的理論の構文的な表示）"""

    signature: Signature
    equations: tuple = ()

    def __post_init__(self):
        for eq in self.equations:
            check_term(eq.lhs, self.signature)
            check_term(eq.rhs, self.signature)

    @property
    def name(self) -> str:
        return self.signature.name


# ---------- 項の基本操作 ----------


def check_term(t: Term, sig: Signature) -> None:
    """記号が宣言済みで、アリティが一致することを確認"""
    if isinstance(t, Var):
        return
    arity = sig.arity(t.symbol)
    if arity != len(t.args):
        raise InputError(
            f"{t.symbol} のアリティは {arity} ですが {len(t.args)} 個の引数が与えられました"
        )
    for a in t.args:
        check_term(a, sig)


def max_var(t: Term) -> int:
    if isinstance(t, Var):
        return t.index
    return max((max_var(a) for a in t.args), default=0)


def variables(t: Term) -> set:
    if isinstance(t, Var):
        return {t.index}
    out = set()
    for a in t.args:
        out |= variables(a)
    return out


def size(t: Term) -> int:
    """App ノードの数"""
    if isinstance(t, Var):
        return 0
    return 1 + sum(size(a) for a in t.args)


def symbols_of(t: Term) -> set:
    if isinstance(t, Var):
        return set()
    out = {t.symbol}
    for a in t.args:
        out |= symbols_of(a)
    return out


def generator_term(symbol: str, arity: int) -> App:
    """記号 f を f(x1, ..., xn) として項にする"""
    return App(symbol, tuple(Var(i + 1) for i in range(arity)))


def substitute(outer: Term, args, var_count=None) -> Term:
    """
    Var(i) を args[i-1] に同時に置き換える
        var_count : 外側の項が動く変数の数（指定時は len(args) と一致が必要）
    """
    args = tuple(args)
    if var_count is not None and var_count != len(args):
        raise ArityError(f"代入の引数の数が一致しません: {len(args)} != {var_count}")
    if max_var(outer) > len(args):
        raise ArityError(f"x{max_var(outer)} に対応する引数がありません（{len(args)} 個）")
    return _subst(outer, args)


def _subst(t: Term, args: tuple) -> Term:
    if isinstance(t, Var):
        return args[t.index - 1]
    return App(t.symbol, tuple(_subst(a, args) for a in t.args))


def normalize_variables(t: Term) -> Term:
    """変数を出現順に x1, x2, ... と付け替える"""
    order = {}

    def walk(s):
        if isinstance(s, Var):
            order.setdefault(s.index, len(order) + 1)
            return
        for a in s.args:
            walk(a)

    walk(t)
    return _subst(t, tuple(Var(order.get(i, 1)) for i in range(1, max_var(t) + 1)))


def commutation_equation(f: Term, n: int, g: Term, m: int) -> Equation:
    """
    f (n 変数) と g (m 変数) の可換性の等式を nm 変数で作る
        左辺 = f(g(x_{11..1m}), ..., g(x_{n1..nm}))
        右辺 = g(f(x_{11..n1}), ..., f(x_{1m..nm}))
    x_{ij} は x_{(i-1)m+j}（行優先）
    """

    def x(i, j):
        return Var(flat_index(i, j, m) + 1)

    rows = [substitute(g, [x(i, j) for j in range(m)], m) for i in range(n)]
    cols = [substitute(f, [x(i, j) for i in range(n)], n) for j in range(m)]
    lhs = substitute(f, rows, n)
    rhs = substitute(g, cols, m)
    return Equation(lhs, rhs, n * m)
