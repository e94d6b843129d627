"""
CSV and JSON export of experiment trials.
"""

import csv
import json
import os
from typing import Any, Dict, List, Optional

from harness.plan import TARGET_FEASIBLE, TARGET_OPTIMUM, TARGET_RATIO
from harness.runner import ExperimentResult, TrialRow

CSV = 'csv'
JSON = 'json'
FORMATS = (CSV, JSON)

TRIAL_FIELDNAMES = [
    'trial',
    'seed',
    'instance',
    'algorithm',
    'budget',
    'iterations_to_feasible',
    'iterations_to_ratio',
    'iterations_to_opt',
    'best_cardinality',
    'terminated_by',
]


def _cell(value: Optional[Any]) -> str:
    return '' if value is None else str(value)


class CSVExporter:
    """Writes one row per trial; unreached targets leave empty cells."""

    def __init__(self, reports_dir: str):
        """
        Args:
            reports_dir: Directory for exports given by bare file name
        """
        self.reports_dir = reports_dir
        os.makedirs(reports_dir, exist_ok=True)

    def _path(self, filename: str) -> str:
        return filename if os.path.dirname(filename) else os.path.join(self.reports_dir, filename)

    def trial_rows(self, result: ExperimentResult) -> List[Dict[str, str]]:
        labels = {target.kind: target.label for target in reversed(result.plan.targets)}

        def reached(row: TrialRow, kind: str) -> str:
            return _cell(row.iterations.get(labels[kind])) if kind in labels else ''

        rows = []
        for row in sorted(result.rows, key=lambda r: r.trial):
            record = row.record
            rows.append({
                'trial': str(row.trial),
                'seed': _cell(record.seed),
                'instance': result.stats.instance,
                'algorithm': record.algorithm,
                'budget': str(record.budget),
                'iterations_to_feasible': reached(row, TARGET_FEASIBLE),
                'iterations_to_ratio': reached(row, TARGET_RATIO),
                'iterations_to_opt': reached(row, TARGET_OPTIMUM),
                'best_cardinality': _cell(record.best_cardinality),
                'terminated_by': record.terminated_by,
            })
        return rows

    def export_trials(self, result: ExperimentResult, filename: Optional[str] = None) -> str:
        """
        Export per-trial CSV. The first ratio target fills iterations_to_ratio.

        Returns:
            Path to exported CSV
        """
        csv_path = self._path(filename or f"{result.plan.name}_trials.csv")
        with open(csv_path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.DictWriter(f, fieldnames=TRIAL_FIELDNAMES, lineterminator='\n')
            writer.writeheader()
            writer.writerows(self.trial_rows(result))
        return csv_path

    def export_json(self, result: ExperimentResult, filename: Optional[str] = None) -> str:
        """Stats plus every RunRecord as one JSON document."""
        json_path = self._path(filename or f"{result.plan.name}_results.json")
        document = {
            'stats': result.stats.to_dict(),
            'trials': [
                {'trial': row.trial, 'iterations': row.iterations, 'record': row.record.to_dict()}
                for row in sorted(result.rows, key=lambda r: r.trial)
            ],
        }
        with open(json_path, 'w', encoding='utf-8') as f:
            json.dump(document, f, indent=2, ensure_ascii=False)
        return json_path


def export(result: ExperimentResult, path: str, format: str = CSV) -> str:
    """
    Write result to path as CSV or JSON.

    Raises:
        ValueError: On an unknown format
        OSError: If the file cannot be written
    """
    if format not in FORMATS:
        raise ValueError(f"Unknown export format {format!r}; expected one of {', '.join(FORMATS)}")
    directory = os.path.dirname(path) or '.'
    exporter = CSVExporter(directory)
    if format == CSV:
        return exporter.export_trials(result, path)
    return exporter.export_json(result, path)
