# CLI の入力（pydantic モデル）: 計算の前に動詞・入力・オプションを検証する
from src.common.errors import InputError
from src.common.settings import (
    DEFAULT_ARITY,
    DEFAULT_DEPTH,
    DEFAULT_MODEL_BOUND,
    DEFAULT_SIZE,
    DEFAULT_WORD_LEN,
)

from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

Verb = Literal[
    "check-theory",
    "commute",
    "tensor",
    "models",
    "verify-tensor",
    "clone",
    "centralizer",
    "operad",
    "bv",
    "cat",
    "sesqui",
    "premonoidal",
    "freyd",
    "graded",
    "gen",
]

# 動詞 -> (入力ファイル数の下限, 上限)
INPUT_COUNTS = {
    "check-theory": (1, 1),
    "commute": (1, 1),
    "tensor": (2, 2),
    "models": (1, 1),
    "verify-tensor": (2, 2),
    "clone": (1, 1),
    "centralizer": (1, 1),
    "operad": (1, 1),
    "bv": (2, 2),
    "cat": (1, 2),
    "sesqui": (1, 1),
    "premonoidal": (1, 1),
    "freyd": (3, 3),
    "graded": (1, 1),
    "gen": (0, 0),
}


class Command(BaseModel):
    """
    1 回の起動で実行する検査
        inputs : 入力ファイル（動詞ごとに個数が決まっている）
        ops : --ops f,g の組
        left, right : graded の像（基底元の名前）
    """

    verb: Verb
    inputs: list[str] = Field(default_factory=list)
    arity: int = Field(DEFAULT_ARITY, ge=1)
    size: int = Field(DEFAULT_SIZE, ge=0)
    depth: int = Field(DEFAULT_DEPTH, ge=1)
    model_bound: int = Field(DEFAULT_MODEL_BOUND, ge=1)
    word_len: int = Field(DEFAULT_WORD_LEN, ge=0)
    ops: Optional[tuple[str, str]] = None
    left: Optional[str] = None
    right: Optional[str] = None
    out: Optional[str] = None
    format: Literal["text", "structured"] = "text"
    seed: Optional[int] = None
    count: int = Field(100, ge=1)

    @field_validator("ops", mode="before")
    @classmethod
    def split_ops(cls, value):
        if value is None or isinstance(value, (tuple, list)):
            return value
        parts = [p.strip() for p in str(value).split(",")]
        if len(parts) != 2 or not all(parts):
            raise ValueError(f"--ops は f,g の形で指定してください: {value!r}")
        return tuple(parts)

    @model_validator(mode="after")
    def check_inputs(self):
        low, high = INPUT_COUNTS[self.verb]
        if not low <= len(self.inputs) <= high:
            want = str(low) if low == high else f"{low}〜{high}"
            raise ValueError(f"{self.verb} の入力ファイルは {want} 個です（{len(self.inputs)} 個）")
        for path in self.inputs:
            if not Path(path).is_file():
                raise ValueError(f"ファイルがありません: {path}")
        if self.verb == "graded" and (self.left is None or self.right is None):
            raise ValueError("graded には --left と --right が必要です")
        return self

    def bounds(self) -> dict:
        """レポートに出す上限（N, K, D, B, L は毎回、--seed は指定されたときだけ）"""
        out = {name: getattr(self, name) for name in ("arity", "size", "depth", "model_bound", "word_len")}
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def build_command(**kwargs) -> Command:
    """pydantic の検証エラーを InputError に変える"""
    try:
        return Command(**kwargs)
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise InputError(f"コマンドが不正です: {messages}")
