# Copyright 2026 HS-Frames Toolkit Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Rendering of check reports as JSON lines, JSON summaries or CSV tables"""

import csv
import io
import json
from collections.abc import Iterable

from hsframes.core.vector_frames import FrameBounds
from hsframes.models import CheckReport, CheckRun, OutputFormat, SuiteRun

__all__ = [
    "CSV_COLUMNS",
    "render_bounds",
    "render_check",
    "render_csv",
    "render_suite",
]

CSV_COLUMNS = (
    "theorem",
    "trial",
    "K",
    "f_index",
    "lambda",
    "lhs_re",
    "lhs_im",
    "rhs_re",
    "rhs_im",
    "residual",
    "bound",
    "margin",
    "pass",
)


def _csv_row(report: CheckReport) -> dict[str, object]:
    row = report.model_dump(
        by_alias=True, exclude={"lhs", "rhs", "scale", "dual_index"}
    )
    row["lhs_re"], row["lhs_im"] = report.lhs
    row["rhs_re"], row["rhs_im"] = report.rhs
    row["pass"] = str(report.passed).lower()
    return row


def render_csv(reports: Iterable[CheckReport]) -> str:
    """Render a header plus one row per report; unset fields stay empty."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        writer.writerow(_csv_row(report))
    return buffer.getvalue()


def render_check(run: CheckRun, output_format: OutputFormat) -> str:
    """Render a single-theorem sweep.

    JSON output has one report per line followed by a summary line.
    """
    if output_format == OutputFormat.CSV:
        return render_csv(run.reports)
    lines = [report.model_dump_json(by_alias=True) for report in run.reports]
    summary = {
        "theorem": run.theorem.value,
        "summary": run.summary.model_dump(mode="json", by_alias=True),
    }
    lines.append(json.dumps(summary))
    return "\n".join(lines) + "\n"


def render_suite(run: SuiteRun, output_format: OutputFormat) -> str:
    """Render a suite run: the aggregate summary as JSON, or every report as CSV."""
    if output_format == OutputFormat.CSV:
        return render_csv(run.reports)
    return run.summary.model_dump_json(by_alias=True, indent=2) + "\n"


def render_bounds(bounds: FrameBounds) -> str:
    """Render frame bounds as printed by the generator command."""
    return f"A={bounds.lower:.12g} B={bounds.upper:.12g}"
