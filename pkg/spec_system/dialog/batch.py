# -*- coding: utf-8 -*-
import logging
from pathlib import Path

from spec_system.console import print
from spec_system.report import BatchReport

from .repl import render_outcome
from .session import Session

logger = logging.getLogger(__name__)


def run_batch(
        session: Session,
        path: str | Path,
        report_dir: str | Path,
        lenient: bool = False,
        echo: bool = True
) -> tuple[BatchReport, int]:
    """
    Feed a text file to the session line by line.

    Blank lines and lines starting with '#' are skipped. Every other line
    gets one report row.

    :param echo: Print each line and its outcome while running
    :return: The report and the exit code; 1 if any line was rejected and lenient is off
    :raises FileNotFoundError: If the input file does not exist
    """
    path = Path(path)
    report = BatchReport(report_dir, name=path.stem)
    with open(path, 'r', encoding='utf-8') as file:
        lines = file.read().splitlines()

    for number, line in enumerate(lines, start=1):
        outcome = session.handle(line)
        if outcome.status == 'skipped':
            continue
        if echo:
            print(f"[bold]{number}: {line.strip()}")
            render_outcome(outcome)
        report.add(number, line.strip(), outcome.status, outcome.output, outcome.clauses)
        if outcome.status == 'quit':
            break

    report.save()
    logger.info("batch report written to %s", report.path)
    report.print_summary()
    return report, 1 if report.rejections and not lenient else 0
