"""One pass/fail line per acceptance criterion, collected across the run."""

LINES: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
    line = f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {title}"
    if detail:
        line += f" :: {detail}"
    LINES.append(line)
    print(line)
    return ok
