# 有限代数・モノイド・次数付き代数のファイル
from src.infrastructure.parsers.base import build_parser, located, read_source, run_parser, safe_name
from src.algebra.clone import FiniteAlgebra
from src.algebra.graded import GradedAlgebra
from src.algebra.monoid import FiniteMonoid
from src.algebra.term import Signature
from src.common.errors import CatcomError

from lark import Transformer, v_args

GRAMMAR = r"""
    algebra: "algebra" IDENT "{" "carrier" NAT ";" opdef* "}"
    opdef: "op" IDENT "/" NAT "=" values ";"
    values: "[" [NAT ("," NAT)*] "]"

    monoid: "monoid" IDENT "{" "carrier" NAT ";" "unit" NAT ";" "table" "=" values ";" "}"

    graded: "graded" IDENT "{" gitem* "}"
    gitem: "p" NAT ";"                        -> g_p
         | "q" NAT ";"                        -> g_q
         | "D" NAT ";"                        -> g_d
         | "basis" gdecl ("," gdecl)* ";"     -> g_basis
         | "unit" GEN ";"                     -> g_unit
         | "mul" GEN "*" GEN "=" mono ("+" mono)* ";" -> g_mul
    gdecl: GEN ":" NAT
    mono: GEN "*" GEN                         -> scaled
        | GEN                                 -> bare
    GEN: /[A-Za-z0-9_^]+/
"""

_PARSER = None


def _parser():
    global _PARSER
    if _PARSER is None:
        _PARSER = build_parser(GRAMMAR, ["algebra", "monoid", "graded"])
    return _PARSER


class _ToAlgebra(Transformer):
    def __init__(self, source=None):
        super().__init__()
        self.source = source

    def values(self, items):
        return tuple(int(v) for v in items if v is not None)

    @v_args(meta=True)
    def opdef(self, meta, items):
        name, arity, table = items
        return str(name), int(arity), table, meta

    @v_args(meta=True)
    def algebra(self, meta, items):
        name, k, *ops = items
        k = int(k)
        arities, tables = {}, {}
        for symbol, arity, table, op_meta in ops:
            if symbol in arities:
                raise located(f"演算 {symbol} が二重に定義されています", op_meta, self.source)
            if len(table) != k**arity:
                raise located(f"{symbol}/{arity} の表の長さは {k**arity} です（{len(table)} 個）", op_meta, self.source)
            if any(v >= k for v in table):
                raise located(f"{symbol}/{arity} の表に 0..{k - 1} 以外の値があります", op_meta, self.source)
            arities[symbol], tables[symbol] = arity, table
        try:
            return FiniteAlgebra(str(name), k, Signature(str(name), arities), tables)
        except CatcomError as e:
            raise located(str(e), meta, self.source)

    @v_args(meta=True)
    def monoid(self, meta, items):
        name, k, unit, table = items
        try:
            return FiniteMonoid(str(name), int(k), table, int(unit))
        except CatcomError as e:
            raise located(str(e), meta, self.source)

    # ---------- 次数付き ----------

    @v_args(meta=True)
    def g_p(self, meta, items):
        return ("p", int(items[0]), meta)

    @v_args(meta=True)
    def g_q(self, meta, items):
        return ("q", int(items[0]), meta)

    @v_args(meta=True)
    def g_d(self, meta, items):
        return ("D", int(items[0]), meta)

    def gdecl(self, items):
        return (str(items[0]), int(items[1]))

    @v_args(meta=True)
    def g_basis(self, meta, items):
        return ("basis", list(items), meta)

    @v_args(meta=True)
    def g_unit(self, meta, items):
        return ("unit", str(items[0]), meta)

    def scaled(self, items):
        coeff, name = items
        if not coeff.isdigit():
            raise located(f"係数は自然数です: {coeff}", coeff, self.source)
        return (int(coeff), str(name))

    def bare(self, items):
        (name,) = items
        return (0, None) if str(name) == "0" else (1, str(name))

    @v_args(meta=True)
    def g_mul(self, meta, items):
        left, right, *monos = items
        return ("mul", (str(left), str(right), monos), meta)

    @v_args(meta=True)
    def graded(self, meta, items):
        name, *entries = items
        fields = {"basis": []}
        muls = []
        for key, value, where in entries:
            if key == "mul":
                muls.append((value, where))
            elif key == "basis":
                fields["basis"] += value
            else:
                fields[key] = value
        for key in ("p", "q", "D"):
            if key not in fields:
                raise located(f"{key} が指定されていません", meta, self.source)
        basis = tuple(fields["basis"])
        index = {b: i for i, (b, _) in enumerate(basis)}
        if len(index) != len(basis):
            raise located("基底の名前が重複しています", meta, self.source)
        unit_name = fields.get("unit")
        if unit_name is None:
            unit_name = next((b for b, g in basis if g == 0), None)
        if unit_name not in index:
            raise located(f"単位元 {unit_name} が基底にありません", meta, self.source)
        products = {}
        for (left, right, monos), mul_meta in muls:
            vec = [0] * len(basis)
            for name_ in (left, right):
                if name_ not in index:
                    raise located(f"基底 {name_} が宣言されていません", mul_meta, self.source)
            for coeff, target in monos:
                if target is None:
                    continue
                if target not in index:
                    raise located(f"基底 {target} が宣言されていません", mul_meta, self.source)
                vec[index[target]] += coeff
            products[(index[left], index[right])] = tuple(vec)
        try:
            return GradedAlgebra(str(name), fields["p"], fields["q"], fields["D"], basis, products, index[unit_name])
        except CatcomError as e:
            raise located(str(e), meta, self.source)


def parse_algebra(text: str, source=None) -> FiniteAlgebra:
    return run_parser(_parser(), _ToAlgebra(source), text, source, "algebra")


def parse_monoid(text: str, source=None) -> FiniteMonoid:
    return run_parser(_parser(), _ToAlgebra(source), text, source, "monoid")


def parse_graded(text: str, source=None) -> GradedAlgebra:
    return run_parser(_parser(), _ToAlgebra(source), text, source, "graded")


def load_algebra(path) -> FiniteAlgebra:
    return parse_algebra(read_source(path), str(path))


def load_monoid(path) -> FiniteMonoid:
    return parse_monoid(read_source(path), str(path))


def load_graded(path) -> GradedAlgebra:
    return parse_graded(read_source(path), str(path))


def _values(table) -> str:
    return "[" + ",".join(str(int(v)) for v in table) + "]"


def render_algebra(alg: FiniteAlgebra) -> str:
    sig = alg.signature
    lines = [f"algebra {safe_name(alg.name)} {{", f"  carrier {alg.k};"]
    for s in sig.symbols:
        lines.append(f"  op {s}/{sig.arity(s)} = {_values(alg.tables[s])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_monoid(m: FiniteMonoid) -> str:
    return "\n".join([
        f"monoid {safe_name(m.name)} {{",
        f"  carrier {m.k};",
        f"  unit {m.unit};",
        f"  table = {_values(m.table)};",
        "}",
    ]) + "\n"


def render_graded(c: GradedAlgebra) -> str:
    lines = [f"graded {safe_name(c.name)} {{", f"  p {c.p};", f"  q {c.q};", f"  D {c.D};"]
    lines.append("  basis " + ", ".join(f"{b}:{g}" for b, g in c.basis) + ";")
    lines.append(f"  unit {c.basis[c.unit][0]};")
    for (i, j), vec in sorted(c.products.items()):
        monos = [f"{int(v) % c.p}*{c.basis[t][0]}" for t, v in enumerate(vec) if int(v) % c.p]
        lines.append(f"  mul {c.basis[i][0]}*{c.basis[j][0]} = {' + '.join(monos) or '0'};")
    lines.append("}")
    return "\n".join(lines) + "\n"
