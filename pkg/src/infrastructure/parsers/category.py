# 圏・sesquicategory・premonoidal 圏・関手のファイル
from src.infrastructure.parsers.base import (
    build_parser,
    located,
    object_token,
    parse_object,
    read_source,
    run_parser,
    safe_name,
)
from src.structcat.category import FiniteCategory, Functor, category_from_table
from src.structcat.premonoidal import PremonoidalData
from src.structcat.sesqui import SesquiData
from src.common.errors import CatcomError

from itertools import product
from lark import Transformer, v_args

GRAMMAR = r"""
    category: "category" IDENT "{" catitem* "}"
    sesqui: "sesqui" IDENT "{" (catitem | cellitem)* "}"
    premonoidal: "premonoidal" IDENT "{" (catitem | pmitem)* "}"
    functor: "functor" IDENT ":" IDENT "->" IDENT "{" fitem* "}"

    catitem: "object" obj ("," obj)* ";"          -> c_objects
           | "arrow" IDENT ":" obj "->" obj ";"   -> c_arrow
           | "identity" obj "=" IDENT ";"         -> c_identity
           | "comp" IDENT "." IDENT "=" IDENT ";" -> c_comp
    cellitem: "cell" IDENT ":" IDENT "=>" IDENT ";"   -> s_cell
            | "idcell" IDENT "=" IDENT ";"            -> s_idcell
            | "whiskL" IDENT "." IDENT "=" IDENT ";"  -> s_left
            | "whiskR" IDENT "." IDENT "=" IDENT ";"  -> s_right
            | "vcomp" IDENT "." IDENT "=" IDENT ";"   -> s_vcomp
    pmitem: "unit" obj ";"                      -> p_unit
          | "tensor" obj obj "=" obj ";"         -> p_tensor
          | "ltensor" obj "." IDENT "=" IDENT ";" -> p_left
          | "rtensor" IDENT "." obj "=" IDENT ";" -> p_right
          | "lambda" obj "=" IDENT ";"           -> p_lambda
          | "rho" obj "=" IDENT ";"              -> p_rho
          | "alpha" obj obj obj "=" IDENT ";"    -> p_alpha
    fitem: "obj" obj "=" obj ";"                 -> f_obj
         | "map" IDENT "=" IDENT ";"             -> f_map
    obj: IDENT | NAT
"""

_PARSER = None


def _parser():
    global _PARSER
    if _PARSER is None:
        _PARSER = build_parser(GRAMMAR, ["category", "sesqui", "premonoidal", "functor"])
    return _PARSER


def _entry(kind):
    @v_args(meta=True)
    def rule(self, meta, items):
        return (kind, tuple(items), meta)

    return rule


class _ToStructure(Transformer):
    def __init__(self, source=None, categories=None):
        super().__init__()
        self.source = source
        self.categories = categories or {}

    def obj(self, items):
        return parse_object(str(items[0]))

    def IDENT(self, token):
        return str(token)

    c_arrow = _entry("arrow")
    c_identity = _entry("identity")
    c_comp = _entry("comp")
    s_cell = _entry("cell")
    s_idcell = _entry("idcell")
    s_left = _entry("whiskL")
    s_right = _entry("whiskR")
    s_vcomp = _entry("vcomp")
    p_unit = _entry("unit")
    p_tensor = _entry("tensor")
    p_left = _entry("ltensor")
    p_right = _entry("rtensor")
    p_lambda = _entry("lambda")
    p_rho = _entry("rho")
    p_alpha = _entry("alpha")
    f_obj = _entry("obj")
    f_map = _entry("map")

    @v_args(meta=True)
    def c_objects(self, meta, items):
        return ("objects", tuple(items), meta)

    def _category(self, name, entries, meta) -> FiniteCategory:
        objects, arrows, identity, comp = [], {}, {}, {}
        for kind, args, where in entries:
            if kind == "objects":
                for a in args:
                    if a in objects:
                        raise located(f"対象 {a} が二重に宣言されています", where, self.source)
                    objects.append(a)
        for kind, args, where in entries:
            if kind == "arrow":
                f, s, t = args
                if f in arrows:
                    raise located(f"射 {f} が二重に宣言されています", where, self.source)
                if s not in objects or t not in objects:
                    raise located(f"射 {f} の域・余域が宣言されていません", where, self.source)
                arrows[f] = (s, t)
        for kind, args, where in entries:
            if kind == "identity":
                a, f = args
                if a not in objects or arrows.get(f) != (a, a):
                    raise located(f"{f} は {a} 上の自己射ではありません", where, self.source)
                identity[a] = f
        known = set(arrows) | {f"id_{a}" for a in objects if a not in identity}
        for kind, args, where in entries:
            if kind == "comp":
                for x in args:
                    if x not in known:
                        raise located(f"射 {x} が宣言されていません", where, self.source)
                comp[(args[0], args[1])] = args[2]
        try:
            return category_from_table(name, objects, arrows, comp, identity)
        except (CatcomError, KeyError) as e:
            raise located(f"{name}: {e}", meta, self.source)

    @v_args(meta=True)
    def category(self, meta, items):
        name, *entries = items
        return self._category(name, entries, meta)

    @v_args(meta=True)
    def sesqui(self, meta, items):
        name, *entries = items
        X = self._category(name, entries, meta)
        cells, ident, wl, wr, vc = {}, {}, {}, {}, {}
        for kind, args, where in entries:
            if kind == "cell":
                cell, f, g = args
                if cell in cells:
                    raise located(f"セル {cell} が二重に宣言されています", where, self.source)
                if f not in X.arrows or g not in X.arrows:
                    raise located(f"セル {cell} の射が宣言されていません", where, self.source)
                cells[cell] = (f, g)
        # 各行でセル名が入る位置
        cell_slots = {"idcell": (1,), "whiskL": (1, 2), "whiskR": (0, 2), "vcomp": (0, 1, 2)}
        tables = {"whiskL": wl, "whiskR": wr, "vcomp": vc}
        used = []
        for kind, args, where in entries:
            if kind not in cell_slots:
                continue
            if kind == "idcell":
                ident[args[0]] = args[1]
            else:
                tables[kind][(args[0], args[1])] = args[2]
            used += [(args[i], where) for i in cell_slots[kind]]
        _fill_identity_cells(X, cells, ident, wl, wr, vc)
        for cell, where in used:
            if cell not in cells:
                raise located(f"セル {cell} が宣言されていません", where, self.source)
        return SesquiData(name, X, cells, ident, wl, wr, vc)

    @v_args(meta=True)
    def premonoidal(self, meta, items):
        name, *entries = items
        M = self._category(name, entries, meta)
        unit = None
        tensor, lt, rt, lam, rho, alpha = {}, {}, {}, {}, {}, {}
        for kind, args, where in entries:
            if kind == "unit":
                unit = args[0]
            elif kind == "tensor":
                tensor[(args[0], args[1])] = args[2]
            elif kind == "ltensor":
                lt[(args[0], args[1])] = args[2]
            elif kind == "rtensor":
                rt[(args[0], args[1])] = args[2]
            elif kind == "lambda":
                lam[args[0]] = args[1]
            elif kind == "rho":
                rho[args[0]] = args[1]
            elif kind == "alpha":
                alpha[tuple(args[:3])] = args[3]
            else:
                continue
            for x in args:
                if isinstance(x, str) and x not in M.arrows and x not in M.objects:
                    raise located(f"{x} は対象でも射でもありません", where, self.source)
        if unit not in M.objects:
            raise located("unit が指定されていないか対象ではありません", meta, self.source)
        # 恒等射のテンソルは省略できる
        for a, b in product(M.objects, repeat=2):
            if (a, b) in tensor:
                lt.setdefault((a, M.identity[b]), M.identity[tensor[(a, b)]])
            if (b, a) in tensor:
                rt.setdefault((M.identity[b], a), M.identity[tensor[(b, a)]])
        return PremonoidalData(name, M, unit, tensor, lt, rt, lam, rho, alpha)

    @v_args(meta=True)
    def functor(self, meta, items):
        name, src_name, tgt_name, *entries = items
        for x in (src_name, tgt_name):
            if x not in self.categories:
                raise located(f"圏 {x} が与えられていません", meta, self.source)
        A, B = self.categories[src_name], self.categories[tgt_name]
        on_obj, on_arr = {}, {}
        for kind, args, where in entries:
            if kind == "obj":
                on_obj[args[0]] = args[1]
            elif kind == "map":
                on_arr[args[0]] = args[1]
        for a in A.objects:
            if a in on_obj:
                on_arr.setdefault(A.identity[a], B.identity.get(on_obj[a]))
        return Functor(A, B, on_obj, on_arr)


def _fill_identity_cells(X: FiniteCategory, cells, ident, wl, wr, vc) -> None:
    """明示されていない恒等セル 1_f とその whiskering・単位律を補う"""
    for f in X.arrows:
        if f not in ident:
            ident[f] = f"id_{f}"
        cells.setdefault(ident[f], (f, f))
    for h, f in X.composable_pairs():
        wl.setdefault((h, ident[f]), ident[X.compose(h, f)])
        wr.setdefault((ident[h], f), ident[X.compose(h, f)])
    for cell, (f, g) in cells.items():
        wl.setdefault((X.identity[X.target[f]], cell), cell)
        wr.setdefault((cell, X.identity[X.source[f]]), cell)
        vc.setdefault((ident[g], cell), cell)
        vc.setdefault((cell, ident[f]), cell)


def parse_category(text: str, source=None) -> FiniteCategory:
    return run_parser(_parser(), _ToStructure(source), text, source, "category")


def parse_sesqui(text: str, source=None) -> SesquiData:
    return run_parser(_parser(), _ToStructure(source), text, source, "sesqui")


def parse_premonoidal(text: str, source=None) -> PremonoidalData:
    return run_parser(_parser(), _ToStructure(source), text, source, "premonoidal")


def parse_functor(text: str, categories: dict, source=None) -> Functor:
    """categories : 名前 -> FiniteCategory（関手の域・余域）"""
    return run_parser(_parser(), _ToStructure(source, categories), text, source, "functor")


def load_category(path) -> FiniteCategory:
    return parse_category(read_source(path), str(path))


def load_sesqui(path) -> SesquiData:
    return parse_sesqui(read_source(path), str(path))


def load_premonoidal(path) -> PremonoidalData:
    return parse_premonoidal(read_source(path), str(path))


def load_functor(path, categories: dict) -> Functor:
    return parse_functor(read_source(path), categories, str(path))


# ---------- 書き出し ----------


def _category_lines(C: FiniteCategory) -> list:
    lines = ["  object " + ", ".join(object_token(a) for a in C.objects) + ";"]
    for f in C.arrows:
        lines.append(f"  arrow {f} : {object_token(C.source[f])} -> {object_token(C.target[f])};")
    for a in C.objects:
        lines.append(f"  identity {object_token(a)} = {C.identity[a]};")
    for g, f in C.composable_pairs():
        if not (C.is_identity(g) or C.is_identity(f)):
            lines.append(f"  comp {g}.{f} = {C.compose(g, f)};")
    return lines


def render_category(C: FiniteCategory) -> str:
    return "\n".join([f"category {safe_name(C.name)} {{"] + _category_lines(C) + ["}"]) + "\n"


def render_sesqui(S: SesquiData) -> str:
    lines = [f"sesqui {safe_name(S.name)} {{"] + _category_lines(S.base)
    for cell, (f, g) in S.cells.items():
        lines.append(f"  cell {cell} : {f} => {g};")
    for f, cell in S.identity_cell.items():
        lines.append(f"  idcell {f} = {cell};")
    for (h, cell), out in S.whisk_left.items():
        lines.append(f"  whiskL {h}.{cell} = {out};")
    for (cell, k), out in S.whisk_right.items():
        lines.append(f"  whiskR {cell}.{k} = {out};")
    for (beta, alpha), out in S.vcomp.items():
        lines.append(f"  vcomp {beta}.{alpha} = {out};")
    return "\n".join(lines + ["}"]) + "\n"


def render_premonoidal(P: PremonoidalData) -> str:
    o = object_token
    lines = [f"premonoidal {safe_name(P.name)} {{"] + _category_lines(P.base)
    lines.append(f"  unit {o(P.unit)};")
    for (a, b), c in P.tensor_obj.items():
        lines.append(f"  tensor {o(a)} {o(b)} = {o(c)};")
    for (a, f), g in P.left_tensor.items():
        lines.append(f"  ltensor {o(a)}.{f} = {g};")
    for (f, a), g in P.right_tensor.items():
        lines.append(f"  rtensor {f}.{o(a)} = {g};")
    for a, f in P.lam.items():
        lines.append(f"  lambda {o(a)} = {f};")
    for a, f in P.rho.items():
        lines.append(f"  rho {o(a)} = {f};")
    for (a, b, c), f in P.alpha.items():
        lines.append(f"  alpha {o(a)} {o(b)} {o(c)} = {f};")
    return "\n".join(lines + ["}"]) + "\n"


def render_functor(F: Functor, name: str, source_name: str, target_name: str) -> str:
    lines = [f"functor {safe_name(name)} : {source_name} -> {target_name} {{"]
    for a, b in F.on_objects.items():
        lines.append(f"  obj {object_token(a)} = {object_token(b)};")
    for f, g in F.on_arrows.items():
        lines.append(f"  map {f} = {g};")
    return "\n".join(lines + ["}"]) + "\n"
