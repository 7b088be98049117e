# 検証結果のレポート（pydantic モデル）
from typing import Literal

from pydantic import BaseModel, Field

Verdict = Literal["pass", "fail", "unknown"]


class LawFailure(BaseModel):
    """
    破れた法則 1 件
        law : 法則名（例: "unit_right", "naturality_mu"）
        witness : 最小の反例（入力文法で再読込できる文字列）
    """

    law: str
    witness: str


class LawReport(BaseModel):
    """
    validate_* 系の結果
        subject : 検証対象の名前
        failures : 破れた法則の一覧（法則ごとに最初の反例のみ）
        checked : 法則ごとの検査件数
        truncated : 件数上限で打ち切った法則があれば True
    """

    subject: str = ""
    failures: list[LawFailure] = Field(default_factory=list)
    checked: dict[str, int] = Field(default_factory=dict)
    truncated: bool = False
    notes: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failed_laws(self) -> list[str]:
        return [f.law for f in self.failures]

    def record(self, law: str, witness: str) -> None:
        # 同じ法則は最初の反例だけ残す
        if law not in self.failed_laws():
            self.failures.append(LawFailure(law=law, witness=witness))

    def count(self, law: str, n: int = 1) -> None:
        self.checked[law] = self.checked.get(law, 0) + n


class Report(BaseModel):
    """
    CLI が出力する最終レポート
        verdict : pass / fail / unknown
        witnesses : fail のときの反例（必ず 1 件以上）
        bounds : 使用した上限
        exhausted : unknown のとき使い切った上限（例 "depth=3, model_bound=2"）
        artifact : 結果として書き出す文書（正準形の表示・モデル・クローンの表など）
    """

    command: str
    subject: str = ""
    verdict: Verdict
    witnesses: list[str] = Field(default_factory=list)
    counts: dict[str, int] = Field(default_factory=dict)
    bounds: dict[str, int] = Field(default_factory=dict)
    exhausted: str = ""
    artifact: str = ""
    notes: list[str] = Field(default_factory=list)
    timing: float = 0.0
