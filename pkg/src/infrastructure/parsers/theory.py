# 理論ファイル: theory NAME { op f:n; eq s = t; }
from src.infrastructure.parsers.base import build_parser, located, read_source, run_parser, safe_name
from src.algebra.term import App, Equation, Presentation, Signature, Var, check_term, max_var
from src.common.errors import InputError

from lark import Transformer, v_args

GRAMMAR = r"""
    start: "theory" IDENT "{" item* "}"
    item: "op" IDENT ":" NAT ";"        -> op
        | "eq" term "=" term ";"         -> eq
    term: VAR                            -> var
        | IDENT "(" [term ("," term)*] ")" -> app
    VAR.2: /x[0-9]+(?![A-Za-z0-9_])/
"""

_PARSER = None


def _parser():
    global _PARSER
    if _PARSER is None:
        _PARSER = build_parser(GRAMMAR, "start")
    return _PARSER


class _ToPresentation(Transformer):
    def __init__(self, source=None):
        super().__init__()
        self.source = source

    def var(self, items):
        (token,) = items
        index = int(token[1:])
        if index < 1:
            raise located(f"変数の番号は 1 以上です: {token}", token, self.source)
        return Var(index)

    def app(self, items):
        symbol, *args = items
        return App(str(symbol), tuple(a for a in args if a is not None))

    @v_args(meta=True)
    def op(self, meta, items):
        name, arity = items
        return ("op", str(name), int(arity), meta)

    @v_args(meta=True)
    def eq(self, meta, items):
        lhs, rhs = items
        return ("eq", lhs, rhs, meta)

    def start(self, items):
        name, *entries = items
        ops = {}
        for entry in entries:
            if entry[0] == "op":
                _, symbol, arity, meta = entry
                if symbol in ops:
                    raise located(f"記号 {symbol} が二重に宣言されています", meta, self.source)
                ops[symbol] = arity
        sig = Signature(str(name), ops)
        eqs = []
        for entry in entries:
            if entry[0] != "eq":
                continue
            _, lhs, rhs, meta = entry
            try:
                check_term(lhs, sig)
                check_term(rhs, sig)
            except InputError as e:
                raise located(e.message, meta, self.source)
            eqs.append(Equation(lhs, rhs, max(max_var(lhs), max_var(rhs))))
        return Presentation(sig, tuple(eqs))


def parse_presentation(text: str, source=None) -> Presentation:
    """理論ファイルのテキストから Presentation を作る"""
    return run_parser(_parser(), _ToPresentation(source), text, source)


def load_presentation(path) -> Presentation:
    return parse_presentation(read_source(path), str(path))


def parse_term(text: str, sig: Signature):
    """単独の項（CLI の引数など）"""
    pres = parse_presentation(
        "theory t { " + " ".join(f"op {s}:{a};" for s, a in sig.operations.items()) + f" eq {text} = {text}; }}"
    )
    return pres.equations[0].lhs


def render_presentation(pres: Presentation) -> str:
    """標準形: 1 行 1 項目、op が先、それぞれ辞書式順"""
    sig = pres.signature
    lines = [f"theory {safe_name(sig.name)} {{"]
    for symbol in sorted(sig.operations):
        lines.append(f"  op {symbol}:{sig.operations[symbol]};")
    for text in sorted(str(eq) for eq in pres.equations):
        lines.append(f"  eq {text};")
    lines.append("}")
    return "\n".join(lines) + "\n"
