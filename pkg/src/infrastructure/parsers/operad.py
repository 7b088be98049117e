# オペラドの切り詰め（表）と生成元・関係による表示のファイル
from src.infrastructure.parsers.base import build_parser, located, read_source, run_parser, safe_name
from src.operad.operad import SymOperadTruncation, TabulatedOperad, arity_lists
from src.operad.presentation import Leaf, Node, OperadPresentation, Relation, leaves
from src.common.errors import CatcomError
from src.common.finmap import FinMap, all_permutations, identity

from itertools import product
from lark import Transformer, v_args
import re

GRAMMAR = r"""
    operad: "operad" IDENT "{" oitem* "}"
    oitem: "bound" NAT ";"                                -> o_bound
         | "elements" NAT "=" "[" [label ("," label)*] "]" ";" -> o_elements
         | "unit" label ";"                               -> o_unit
         | "act" typed "." perm "=" label ";"             -> o_act
         | "gamma" typed "(" [typed ("," typed)*] ")" "=" label ";" -> o_gamma
    typed: label "/" NAT
    label: IDENT | ESCAPED_STRING
    perm: "perm" "(" [NAT ("," NAT)*] ")"

    operad_pres: "operad_pres" IDENT "{" pitem* "}"
    pitem: "gen" IDENT ":" NAT ";"                        -> p_gen
         | "rel" tree "=" tree ["." perm] ";"             -> p_rel
    tree: NAT                                             -> leaf
        | IDENT "(" [tree ("," tree)*] ")"                -> node

    %import common.ESCAPED_STRING
"""

_PARSER = None


def _parser():
    global _PARSER
    if _PARSER is None:
        _PARSER = build_parser(GRAMMAR, ["operad", "operad_pres"])
    return _PARSER


def _unquote(token) -> str:
    text = str(token)
    if text.startswith('"'):
        return text[1:-1].replace('\\"', '"').replace("\\\\", "\\")
    return text


def _quote(label: str) -> str:
    if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", label) and label not in {"perm", "bound", "elements", "unit", "act", "gamma"}:
        return label
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


class _ToOperad(Transformer):
    def __init__(self, source=None):
        super().__init__()
        self.source = source

    def label(self, items):
        return _unquote(items[0])

    def typed(self, items):
        return (items[0], int(items[1]))

    def perm(self, items):
        return tuple(int(v) for v in items if v is not None)

    @v_args(meta=True)
    def o_bound(self, meta, items):
        return ("bound", int(items[0]), meta)

    @v_args(meta=True)
    def o_elements(self, meta, items):
        n, *labels = items
        return ("elements", (int(n), [x for x in labels if x is not None]), meta)

    @v_args(meta=True)
    def o_unit(self, meta, items):
        return ("unit", items[0], meta)

    @v_args(meta=True)
    def o_act(self, meta, items):
        (f, n), values, out = items
        return ("act", (f, n, values, out), meta)

    @v_args(meta=True)
    def o_gamma(self, meta, items):
        (f, k), *rest = items
        out = rest[-1]
        args = [x for x in rest[:-1] if x is not None]
        return ("gamma", (f, k, args, out), meta)

    @v_args(meta=True)
    def operad(self, meta, items):
        name, *entries = items
        K, labels, unit = None, {}, None
        for key, value, where in entries:
            if key == "bound":
                K = value
            elif key == "elements":
                n, names = value
                if len(set(names)) != len(names):
                    raise located(f"O({n}) の名前が重複しています", where, self.source)
                labels[n] = names
            elif key == "unit":
                unit = (value, where)
        if K is None:
            raise located("bound が指定されていません", meta, self.source)

        def lookup(label, n, where):
            if label not in labels.get(n, []):
                raise located(f"O({n}) に {label} がありません", where, self.source)
            return labels[n].index(label)

        sizes = {n: len(labels.get(n, [])) for n in range(K + 1)}
        actions = {}
        for n in range(K + 1):
            actions[(n, identity(n).values)] = tuple(range(sizes[n]))
        gammas = {}
        for key, value, where in entries:
            if key == "act":
                f, n, values, out = value
                if sorted(values) != list(range(1, n + 1)):
                    raise located(f"perm{values} は {n} 次の置換ではありません", where, self.source)
                sigma = tuple(v - 1 for v in values)
                row = list(actions.get((n, sigma), [None] * sizes[n]))
                row[lookup(f, n, where)] = lookup(out, n, where)
                actions[(n, sigma)] = tuple(row)
            elif key == "gamma":
                f, k, args, out = value
                if len(args) != k:
                    raise located(f"{f}/{k} に {len(args)} 個の引数があります", where, self.source)
                ids = tuple((lookup(g, m, where), m) for g, m in args)
                total = sum(m for _, m in args)
                if total > K:
                    raise located(f"γ のアリティ {total} が bound を超えます", where, self.source)
                gammas[(lookup(f, k, where), ids)] = lookup(out, total, where)
        for n in range(K + 1):
            for sigma in all_permutations(n):
                row = actions.get((n, sigma.values))
                if row is None or None in row:
                    raise located(f"O({n}) の {sigma} の作用が不完全です", meta, self.source)
        unit_id = 0
        if unit is not None:
            unit_id = lookup(unit[0], 1, unit[1])
        try:
            return TabulatedOperad(str(name), K, sizes, actions, gammas, unit_id, labels)
        except CatcomError as e:
            raise located(str(e), meta, self.source)

    # ---------- 表示 ----------

    def leaf(self, items):
        return Leaf(int(items[0]) - 1)

    def node(self, items):
        gen, *children = items
        return Node(str(gen), tuple(c for c in children if c is not None))

    @v_args(meta=True)
    def p_gen(self, meta, items):
        return ("gen", (str(items[0]), int(items[1])), meta)

    @v_args(meta=True)
    def p_rel(self, meta, items):
        lhs, rhs, values = items
        return ("rel", (lhs, rhs, values), meta)

    @v_args(meta=True)
    def operad_pres(self, meta, items):
        name, *entries = items
        gens = {}
        for key, value, where in entries:
            if key == "gen":
                if value[0] in gens:
                    raise located(f"生成元 {value[0]} が二重に宣言されています", where, self.source)
                gens[value[0]] = value[1]
        rels = []
        for key, value, where in entries:
            if key != "rel":
                continue
            lhs, rhs, values = value
            arity = len(leaves(lhs))
            perm = None
            if values is not None:
                if sorted(values) != list(range(1, arity + 1)):
                    raise located(f"perm{values} は {arity} 次の置換ではありません", where, self.source)
                perm = FinMap(arity, arity, tuple(v - 1 for v in values))
            try:
                rels.append(Relation(lhs, rhs, arity, perm))
                OperadPresentation(str(name), gens, (rels[-1],))
            except CatcomError as e:
                raise located(str(e), where, self.source)
        return OperadPresentation(str(name), gens, tuple(rels))


def parse_operad(text: str, source=None) -> TabulatedOperad:
    return run_parser(_parser(), _ToOperad(source), text, source, "operad")


def parse_operad_presentation(text: str, source=None) -> OperadPresentation:
    return run_parser(_parser(), _ToOperad(source), text, source, "operad_pres")


def load_operad(path) -> TabulatedOperad:
    return parse_operad(read_source(path), str(path))


def load_operad_presentation(path) -> OperadPresentation:
    return parse_operad_presentation(read_source(path), str(path))


def _labels(o: SymOperadTruncation) -> dict:
    """各アリティの要素名（重複すれば #i を付ける）"""
    out = {}
    for n in range(o.K + 1):
        names = [o.describe(f, n) for f in o.elements(n)]
        if len(set(names)) != len(names):
            names = [f"{x}#{i}" for i, x in enumerate(names)]
        out[n] = names
    return out


def render_operad(o: SymOperadTruncation) -> str:
    """作用と γ の全表を書き出す（恒等置換の作用は省略）"""
    labels = _labels(o)
    lines = [f"operad {safe_name(o.name)} {{", f"  bound {o.K};"]
    for n in range(o.K + 1):
        lines.append(f"  elements {n} = [{', '.join(_quote(x) for x in labels[n])}];")
    if o.size(1):
        lines.append(f"  unit {_quote(labels[1][o.unit_element])};")
    for n in range(o.K + 1):
        for sigma in all_permutations(n):
            if sigma.values == identity(n).values:
                continue
            perm = ",".join(str(v + 1) for v in sigma.values)
            for f in o.elements(n):
                out = o.act(f, n, sigma)
                lines.append(f"  act {_quote(labels[n][f])}/{n} . perm({perm}) = {_quote(labels[n][out])};")
    for k in range(o.K + 1):
        for arities in arity_lists(k, o.K):
            for f in o.elements(k):
                for gs in product(*(o.elements(m) for m in arities)):
                    args = tuple(zip(gs, arities))
                    try:
                        out = o.compose(f, k, args)
                    except CatcomError:
                        continue
                    inner = ", ".join(f"{_quote(labels[m][g])}/{m}" for g, m in args)
                    lines.append(f"  gamma {_quote(labels[k][f])}/{k}({inner}) = {_quote(labels[sum(arities)][out])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_operad_presentation(p: OperadPresentation) -> str:
    lines = [f"operad_pres {safe_name(p.name)} {{"]
    for g, a in p.generators.items():
        lines.append(f"  gen {g}:{a};")
    for rel in p.relations:
        lines.append(f"  rel {rel};")
    lines.append("}")
    return "\n".join(lines) + "\n"
