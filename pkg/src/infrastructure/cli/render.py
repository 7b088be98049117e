# レポートの書き出し: text（人向け）と structured（行単位の key: value、最終行は verdict:）
from src.common.report import LawReport, Report

INDENT = "  "


def _pairs(values: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in values.items())


def _structured(r: Report) -> list:
    lines = [f"command: {r.command}", f"subject: {r.subject}"]
    lines += [f"bound.{k}: {v}" for k, v in r.bounds.items()]
    lines += [f"count.{k}: {v}" for k, v in r.counts.items()]
    lines += [f"note: {n}" for n in r.notes]
    if r.artifact:
        lines.append("artifact:")
        lines += [INDENT + x for x in r.artifact.splitlines()]
    for w in r.witnesses:
        if "\n" in w:
            lines.append("witness:")
            lines += [INDENT + x for x in w.splitlines()]
        else:
            lines.append(f"witness: {w}")
    if r.verdict == "unknown":
        lines.append(f"bound: {r.exhausted or _pairs(r.bounds)}")
    return lines


def _text(r: Report) -> list:
    lines = [f"== {r.command}: {r.subject} =="]
    if r.artifact:
        lines += r.artifact.rstrip("\n").splitlines() + [""]
    if r.bounds:
        lines.append(f"上限: {_pairs(r.bounds)}")
    if r.counts:
        lines.append("件数:")
        lines += [f"{INDENT}{k}: {v}" for k, v in r.counts.items()]
    if r.notes:
        lines.append("メモ:")
        lines += [INDENT + n for n in r.notes]
    if r.witnesses:
        lines.append("反例:")
        for w in r.witnesses:
            lines += [INDENT + x for x in w.splitlines()]
    if r.verdict == "unknown":
        lines.append(f"bound: {r.exhausted or _pairs(r.bounds)}")
    lines.append(f"時間: {r.timing:.3f}s")
    return lines


def report_render(r: Report, format: str = "text") -> str:
    lines = _structured(r) if format == "structured" else _text(r)
    lines.append(f"verdict: {r.verdict}")
    return "\n".join(lines) + "\n"


def witness_blocks(rendered: str) -> list:
    """structured 出力から witness を取り出す（複数行のものはインデントを外す）"""
    out, current = [], None
    for line in rendered.splitlines():
        if current is not None:
            if line.startswith(INDENT):
                current.append(line[len(INDENT):])
                continue
            out.append("\n".join(current))
            current = None
        if line == "witness:":
            current = []
        elif line.startswith("witness: "):
            out.append(line[len("witness: "):])
    if current is not None:
        out.append("\n".join(current))
    return out


def law_report_to_report(command: str, law: LawReport, bounds=None) -> Report:
    """validate_* の LawReport を CLI のレポートに変える（破れた法則ごとに反例 1 件）"""
    report = Report(
        command=command,
        subject=law.subject,
        verdict="pass" if law.ok else "fail",
        bounds=dict(bounds or {}),
        counts={f"checked.{k}": v for k, v in law.checked.items()},
        notes=list(law.notes),
    )
    for failure in law.failures:
        report.witnesses.append(f"{failure.law}: {failure.witness}")
    if law.truncated:
        report.notes.append("truncated: 件数上限で打ち切った法則があります")
    return report
