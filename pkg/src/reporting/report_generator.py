"""
Plain-text summary reports for experiments.
"""

import os
from typing import List

from harness.runner import TrialStats


class ReportGenerator:
    """Generates aligned plain-text summaries from trial statistics."""

    def __init__(self, reports_dir: str):
        """
        Initialize the report generator.

        Args:
            reports_dir: Directory to save reports
        """
        self.reports_dir = reports_dir
        os.makedirs(reports_dir, exist_ok=True)

    def summary_lines(self, stats: TrialStats) -> List[str]:
        report_lines = []
        report_lines.append("=" * 80)
        report_lines.append(f"EXPERIMENT SUMMARY - {stats.name}")
        report_lines.append("=" * 80)
        report_lines.append(f"Algorithm: {stats.algorithm}")
        report_lines.append(f"Instance: {stats.instance}")
        report_lines.append(f"Trials: {stats.trials}")
        report_lines.append(f"Budget: {stats.budget}")
        report_lines.append(f"OPT: {stats.opt if stats.opt is not None else 'unknown'}")
        report_lines.append("")

        report_lines.append("TARGETS")
        report_lines.append("-" * 80)
        header = f"{'Target':<16}{'Successes':<12}{'Min':>10}{'Median':>12}{'P95':>12}{'Max':>12}"
        report_lines.append(header)
        for target in stats.targets:
            row = f"{target.target:<16}{f'{target.successes}/{stats.trials}':<12}"
            if target.quantiles:
                q = target.quantiles
                row += f"{q['min']:>10.0f}{q['median']:>12.1f}{q['p95']:>12.1f}{q['max']:>12.0f}"
            else:
                row += f"{'-':>10}{'-':>12}{'-':>12}{'-':>12}"
            report_lines.append(row)
        report_lines.append("")

        report_lines.append("BEST CARDINALITY")
        report_lines.append("-" * 80)
        for cardinality, count in stats.cardinality_distribution.items():
            report_lines.append(f"{cardinality:<16}{count} trials")
        report_lines.append("")

        report_lines.append("RUNTIME")
        report_lines.append("-" * 80)
        report_lines.append(f"Total Iterations: {stats.total_iterations}")
        report_lines.append(f"Wall Clock: {stats.wall_clock_seconds:.2f}s")
        report_lines.append("=" * 80)
        return report_lines

    def generate_summary_report(self, stats: TrialStats) -> str:
        """
        Save the summary of one experiment.

        Returns:
            Path to the generated report file
        """
        report_text = "\n".join(self.summary_lines(stats)) + "\n"
        return self._save_report(report_text, f"{stats.name}_summary.txt")

    def print_quick_summary(self, stats: TrialStats) -> None:
        print("\n".join(self.summary_lines(stats)))

    def _save_report(self, content: str, filename: str) -> str:
        report_path = os.path.join(self.reports_dir, filename)
        with open(report_path, 'w', encoding='utf-8') as f:
            f.write(content)
        return report_path
