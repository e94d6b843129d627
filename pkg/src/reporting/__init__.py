"""Experiment exports and summary reports."""

from reporting.csv_exporter import TRIAL_FIELDNAMES, CSVExporter, export
from reporting.report_generator import ReportGenerator

__all__ = ['TRIAL_FIELDNAMES', 'CSVExporter', 'export', 'ReportGenerator']
