# CPU を使う検査を CATCOM_THREADS 個までのプロセスに分ける
from src.common import settings

from concurrent.futures import ProcessPoolExecutor


def parallel_map(fn, items) -> list:
    """
    items の順序を保ったまま fn を適用する
    fn と各要素は pickle できること（モジュール最上位の関数と partial）
    """
    items = list(items)
    if settings.THREADS <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=settings.THREADS) as pool:
        return list(pool.map(fn, items))
