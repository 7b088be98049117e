# catcom の例外階層


class CatcomError(Exception):
    """catcom 固有の例外の基底クラス"""


class InputError(CatcomError):
    """
    入力ファイル・入力値の不備
        source : ファイル名（不明なら None）
        line, column : 1 始まりの位置（不明なら None）
    """

    def __init__(self, message: str, source=None, line=None, column=None):
        self.message = message
        self.source = source
        self.line = line
        self.column = column
        super().__init__(self.__str__())

    def __str__(self):
        where = []
        if self.source:
            where.append(str(self.source))
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        prefix = ", ".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message


class BoundExceededError(CatcomError):
    """切り詰め上限を超えるアリティが要求された（required に必要な上限）"""

    def __init__(self, message: str, bound: int, required: int):
        self.bound = bound
        self.required = required
        super().__init__(f"{message} (bound={bound}, required={required})")


class CeilingExceededError(CatcomError):
    """資源上限（列挙数・宇宙サイズ）に到達した"""

    def __init__(self, message: str, ceiling: int, reached: int):
        self.ceiling = ceiling
        self.reached = reached
        super().__init__(f"{message} (ceiling={ceiling}, reached={reached})")


class ArityError(CatcomError, ValueError):
    pass


class CarrierMismatchError(CatcomError, ValueError):
    pass


class CodomainMismatchError(CatcomError, ValueError):
    pass


class ObjectMismatchError(CatcomError, ValueError):
    pass


class ComposabilityError(CatcomError, ValueError):
    pass


class ClosureError(CatcomError):
    """代入・作用の結果が切り詰めの要素集合に入っていない"""


class InvalidStructureError(CatcomError, ValueError):
    """構成時に公理（結合律・単位律など）が成り立たない"""


class GradingError(CatcomError, ValueError):
    pass
