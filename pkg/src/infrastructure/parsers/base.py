# lark パーサの共通部分: 構文エラーを InputError（行・列つき）に変換する
from src.common.errors import CatcomError, InputError

from lark import Lark, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError
from pathlib import Path
import re

# 各文法で共有する終端記号
COMMON_TERMINALS = r"""
    IDENT: /[A-Za-z_][A-Za-z0-9_]*/
    NAT: /[0-9]+/
    SIGNED: /-?[0-9]+/
    COMMENT: /#[^\n]*/
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


def build_parser(grammar: str, start) -> Lark:
    return Lark(grammar + COMMON_TERMINALS, start=start, parser="lalr", propagate_positions=True)


def located(message: str, meta, source=None) -> InputError:
    """meta（lark の位置情報）つきの InputError"""
    line = getattr(meta, "line", None)
    column = getattr(meta, "column", None)
    return InputError(message, source, line, column)


def run_parser(parser: Lark, transformer: Transformer, text: str, source=None, start=None):
    """構文解析して変換する。失敗は InputError（可能なら行・列つき）"""
    try:
        tree = parser.parse(text, start=start) if start else parser.parse(text)
    except UnexpectedEOF as e:
        lines = text.splitlines() or [""]
        raise InputError(f"入力が途中で終わっています（期待: {sorted(e.expected)}）", source, len(lines), len(lines[-1]) + 1)
    except UnexpectedInput as e:
        raise InputError(f"構文エラー: {_snippet(e, text)}", source, e.line, e.column)
    try:
        return transformer.transform(tree)
    except VisitError as e:
        inner = e.orig_exc
        if isinstance(inner, InputError):
            if inner.source is None:
                inner.source = source
            raise InputError(inner.message, inner.source, inner.line, inner.column)
        if isinstance(inner, CatcomError):
            raise InputError(str(inner), source)
        raise


def _snippet(e: UnexpectedInput, text: str) -> str:
    try:
        return e.get_context(text, span=20).splitlines()[0].strip()
    except Exception:
        return type(e).__name__


def read_source(path) -> str:
    path = Path(path)
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"ファイルを読めません: {e.strerror}", str(path))


def safe_name(name: str) -> str:
    """ファイル文法の識別子に使える名前へ変換する"""
    out = re.sub(r"[^A-Za-z0-9_]+", "_", str(name)).strip("_")
    if not out or out[0].isdigit():
        out = "n_" + out
    return out


def object_token(value) -> str:
    return str(value) if isinstance(value, int) else safe_name(value)


def parse_object(token: str):
    """対象名: 数字だけなら整数として扱う"""
    return int(token) if token.isdigit() else token
