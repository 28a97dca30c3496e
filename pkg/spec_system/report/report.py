# -*- coding: utf-8 -*-
from datetime import datetime
from pathlib import Path
from typing import Optional

import pandas as pd

from spec_system.console import print


class Report:
    def __init__(self):
        """
        Initializes the Report class and sets pandas display options.
        """
        pd.set_option('display.max_rows', None)
        pd.set_option('display.max_columns', None)
        pd.set_option("expand_frame_repr", False)

    @staticmethod
    def value_count(df: pd.DataFrame, column_name: str) -> pd.Series:
        """
        Returns the count of unique values in a specified column of a DataFrame.
        :param df: The DataFrame to analyze.
        :param column_name: The name of the column to count unique values in.
        """
        return df[column_name].value_counts()

    @staticmethod
    def save_csv(df: pd.DataFrame, csv_path: str | Path, delimiter="\t") -> str:
        """
        Saves a DataFrame to a CSV file.
        :return: The path to the saved CSV file.
        """
        Path(csv_path).parent.mkdir(parents=True, exist_ok=True)
        df.to_csv(csv_path, index=False, sep=delimiter)
        return str(csv_path)


class BatchReport:
    """
    Per-line outcome of a batch run: one row per input line with its status
    (accepted, redundant, answered, command, rejected), the produced output and
    the number of clauses added.
    """
    titles = ['line', 'input', 'status', 'output', 'clauses']
    failed_statuses = ('rejected',)

    def __init__(self, report_dir: str | Path, name: Optional[str] = None):
        self.base_report = Report()
        self.rows: list[dict] = []
        stamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        self.path = Path(report_dir) / f"{name or 'batch'}_{stamp}.csv"

    def add(self, line: int, text: str, status: str, output: str = '', clauses: int = 0) -> None:
        self.rows.append(dict(zip(self.titles, (line, text, status, output, clauses))))

    @property
    def df(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=self.titles)

    @property
    def rejections(self) -> int:
        return sum(row['status'] in self.failed_statuses for row in self.rows)

    def save(self) -> str:
        return self.base_report.save_csv(self.df, self.path)

    def print_summary(self) -> None:
        df = self.df
        if df.empty:
            print('[cyan]|INFO| Batch input was empty')
            return
        counts = self.base_report.value_count(df, 'status')
        summary = ', '.join(f"{status}: {count}" for status, count in counts.items())
        color = 'red' if self.rejections else 'green'
        print(f"[{color}]|INFO| {len(df)} lines, {summary}, {int(df['clauses'].sum())} clauses added")
