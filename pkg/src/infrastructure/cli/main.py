# catcom のコマンドライン: python -m src.infrastructure.cli.main <verb> FILE... [options]
from src.common.errors import InputError
from src.common.settings import configure_logging
from src.infrastructure.cli.command import INPUT_COUNTS, build_command
from src.infrastructure.cli.dispatch import INPUT_ERROR_EXIT, dispatch
from src.infrastructure.cli.render import report_render

from pathlib import Path
import logging
import sys

import click

logger = logging.getLogger(__name__)


def _options(fn):
    """全動詞に共通のオプション（使わない動詞では無視する）"""
    decorators = [
        click.option("--arity", type=int, default=None, help="切り詰めの上限 N"),
        click.option("--size", type=int, default=None, help="オペラドの上限 K / carrier のサイズ"),
        click.option("--depth", type=int, default=None, help="項の大きさの上限 D"),
        click.option("--model-bound", type=int, default=None, help="反例モデルのサイズ上限 B"),
        click.option("--word-len", type=int, default=None, help="funny テンソルの語の長さの上限 L"),
        click.option("--ops", default=None, help="f,g の組"),
        click.option("--left", default=None, help="graded: f の像"),
        click.option("--right", default=None, help="graded: g の像"),
        click.option("--out", default=None, help="レポートの書き出し先"),
        click.option("--format", "format_", type=click.Choice(["text", "structured"]), default="text"),
        click.option("--seed", type=int, default=None, help="gen の乱数の種（記録のみ）"),
        click.option("--verbose", is_flag=True, help="INFO ログを stderr に出す"),
    ]
    for d in reversed(decorators):
        fn = d(fn)
    return fn


def run(verb: str, inputs, options: dict) -> int:
    """コマンドを組み立てて実行し、終了コードを返す"""
    configure_logging(options.pop("verbose", False))
    options["format"] = options.pop("format_", "text")
    options = {k: v for k, v in options.items() if v is not None}
    try:
        cmd = build_command(verb=verb, inputs=list(inputs), **options)
        report, code = dispatch(cmd)
    except InputError as e:
        logger.error("入力エラー: %s", e)
        click.echo(f"error: {e}", err=True)
        return INPUT_ERROR_EXIT
    text = report_render(report, cmd.format)
    if cmd.out:
        Path(cmd.out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)
    return code


@click.group()
def catcom():
    """可換性の検証エンジン"""


def _register(verb: str):
    # 入力ファイルの個数は Command で検証する
    @catcom.command(verb)
    @click.argument("inputs", nargs=-1)
    @_options
    def command(inputs, **options):
        sys.exit(run(verb, inputs, options))

    return command


for _verb in INPUT_COUNTS:
    if _verb != "gen":
        _register(_verb)


@catcom.command("gen")
@click.option("--count", type=int, default=100, help="生成する表示の数")
@click.option("--depth", type=int, default=4)
@click.option("--model-bound", type=int, default=2)
@click.option("--seed", type=int, default=0)
@click.option("--format", "format_", type=click.Choice(["text", "structured"]), default="text")
@click.option("--out", default=None)
@click.option("--verbose", is_flag=True)
def gen(**options):
    """乱数で作った表示で decide_equal の健全性を確かめる"""
    sys.exit(run("gen", (), options))


if __name__ == "__main__":
    catcom()
