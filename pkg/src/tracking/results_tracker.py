"""
Run store: every trial's RunRecord as a JSON file plus a CSV index.
"""

import csv
import json
import os
from typing import Any, Dict, List

from evolutionary.records import RunRecord


class RunStore:
    """Persists RunRecords so experiments can be inspected afterwards."""

    INDEX_FILE = 'runs_index.csv'

    def __init__(self, results_dir: str):
        """
        Args:
            results_dir: Directory to store run dumps
        """
        self.results_dir = results_dir
        os.makedirs(results_dir, exist_ok=True)

        self.csv_fieldnames = [
            'run_id',
            'experiment',
            'trial',
            'algorithm',
            'seed',
            'budget',
            'iterations_used',
            'best_solution',
            'best_cardinality',
            'terminated_by',
        ]

    @staticmethod
    def run_id(experiment: str, trial: int) -> str:
        return f"{experiment}_trial{trial:05d}"

    def save(self, experiment: str, trial: int, record: RunRecord) -> str:
        """
        Dump one record and append it to the index.

        Returns:
            The run id
        """
        run_id = self.run_id(experiment, trial)
        json_path = os.path.join(self.results_dir, f"{run_id}.json")
        with open(json_path, 'w', encoding='utf-8') as f:
            json.dump(record.to_dict(), f, indent=2)
        self._append_index(run_id, experiment, trial, record)
        return run_id

    def _append_index(self, run_id: str, experiment: str, trial: int, record: RunRecord) -> None:
        csv_path = os.path.join(self.results_dir, self.INDEX_FILE)
        file_exists = os.path.exists(csv_path)

        row = {
            'run_id': run_id,
            'experiment': experiment,
            'trial': trial,
            'algorithm': record.algorithm,
            'seed': '' if record.seed is None else record.seed,
            'budget': record.budget,
            'iterations_used': record.iterations_used,
            'best_solution': record.best_solution.bits(),
            'best_cardinality': '' if record.best_cardinality is None else record.best_cardinality,
            'terminated_by': record.terminated_by,
        }

        with open(csv_path, 'a', newline='', encoding='utf-8') as f:
            writer = csv.DictWriter(f, fieldnames=self.csv_fieldnames, lineterminator='\n')
            if not file_exists:
                writer.writeheader()
            writer.writerow(row)

    def load_index(self) -> List[Dict[str, Any]]:
        """All index rows, or an empty list if nothing was stored yet."""
        csv_path = os.path.join(self.results_dir, self.INDEX_FILE)
        if not os.path.exists(csv_path):
            return []
        with open(csv_path, 'r', encoding='utf-8') as f:
            return [dict(row) for row in csv.DictReader(f)]

    def load(self, run_id: str) -> RunRecord:
        """
        Raises:
            FileNotFoundError: If no dump exists for run_id
        """
        json_path = os.path.join(self.results_dir, f"{run_id}.json")
        if not os.path.exists(json_path):
            raise FileNotFoundError(f"Run not found: {run_id}")
        with open(json_path, 'r', encoding='utf-8') as f:
            return RunRecord.from_dict(json.load(f))

    def runs_for(self, experiment: str) -> List[Dict[str, Any]]:
        return [row for row in self.load_index() if row.get('experiment') == experiment]
