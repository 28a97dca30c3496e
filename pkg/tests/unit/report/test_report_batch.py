from spec_system.report import BatchReport, Report
import pandas as pd
import pytest


@pytest.fixture
def report(tmp_path):
    report = BatchReport(tmp_path / 'reports', name='atm_specification')
    report.add(1, "SimpleMat is a simple money dispenser.", 'accepted', "SimpleMat is a simple money dispenser.", 3)
    report.add(2, "Every customer has a card.", 'accepted', "Every customer has [an individual] card.", 2)
    report.add(3, "Customer the enters.", 'rejected', "No rule applies at token 1 ('Customer')")
    report.add(4, "Is SimpleMat a money dispenser?", 'answered', "yes")
    return report

def test_rows_follow_titles(report):
    df = report.df
    assert list(df.columns) == ['line', 'input', 'status', 'output', 'clauses']
    assert df['line'].tolist() == [1, 2, 3, 4]
    assert df['clauses'].tolist() == [3, 2, 0, 0]

def test_rejections(report):
    assert report.rejections == 1

def test_empty_report(tmp_path):
    report = BatchReport(tmp_path)
    assert report.df.empty
    assert report.rejections == 0
    assert report.path.name.startswith('batch_')
    report.print_summary()

def test_report_path(report, tmp_path):
    assert report.path.parent == tmp_path / 'reports'
    assert report.path.name.startswith('atm_specification_')
    assert report.path.suffix == '.csv'

def test_save_and_read(report):
    path = report.save()
    df = pd.read_csv(path, sep="\t", keep_default_na=False)
    assert df['status'].tolist() == ['accepted', 'accepted', 'rejected', 'answered']
    assert df.loc[2, 'output'] == "No rule applies at token 1 ('Customer')"
    assert df.loc[3, 'output'] == 'yes'

def test_value_count(report):
    counts = Report.value_count(report.df, 'status')
    assert counts['accepted'] == 2
    assert counts['rejected'] == 1

def test_print_summary(report):
    report.print_summary()
