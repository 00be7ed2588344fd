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

"""Tests for the validation of the file models."""

import pytest
from pydantic import ValidationError

from hsframes.models import (
    CheckReport,
    GenKind,
    GenSpec,
    HSFrameDocument,
    SuiteConfig,
    TheoremSummary,
    VectorFrameDocument,
)


def _report(**kwargs) -> CheckReport:
    fields = {
        "theorem": "parseval_inequality",
        "lhs": (1.0, 0.0),
        "rhs": (1.0, 0.0),
        "residual": 0.0,
        "passed": True,
        "scale": 2.0,
    }
    return CheckReport(**(fields | kwargs))


def test_gen_spec_requires_kind_fields():
    """Each kind of recipe names the fields it needs."""
    spec = GenSpec.model_validate({"kind": "gaussian_vector", "n": 3, "N": 5})
    assert spec.count == 5
    with pytest.raises(ValidationError, match="requires: m"):
        GenSpec.model_validate({"kind": "gaussian_hs", "n": 3, "N": 5})
    with pytest.raises(ValidationError, match="N >= n"):
        GenSpec.model_validate({"kind": "harmonic", "n": 3, "N": 2})
    with pytest.raises(ValidationError):
        GenSpec.model_validate({"kind": "gaussian_g", "n": 3, "dims": [1, 2], "N": 3})
    with pytest.raises(ValidationError):
        GenSpec.model_validate({"kind": "harmonic", "n": 3, "N": 5, "extra": 1})


def test_with_seed_reaches_inner_recipe():
    """Reseeding a parsevalize_of recipe reseeds the wrapped recipe too."""
    spec = GenSpec(
        kind=GenKind.PARSEVALIZE_OF,
        of=GenSpec(kind=GenKind.GAUSSIAN_VECTOR, n=2, count=3, seed=1),
    )
    reseeded = spec.with_seed(17)
    assert reseeded.seed == 17
    assert reseeded.of is not None
    assert reseeded.of.seed == 17
    assert spec.of is not None
    assert spec.of.seed == 1


@pytest.mark.parametrize("mode", ["all", "random:1", "random:512"])
def test_valid_subset_modes(mode: str):
    """'all' and 'random:k' with k >= 1 are accepted."""
    suite = SuiteConfig.model_validate(
        {"gen": {"kind": "harmonic", "n": 2, "N": 3}, "subset_mode": mode}
    )
    assert suite.subset_mode == mode


@pytest.mark.parametrize("mode", ["some", "random:0", "random:", "random:-3"])
def test_invalid_subset_modes(mode: str):
    """Other subset modes are rejected."""
    with pytest.raises(ValidationError):
        SuiteConfig.model_validate(
            {"gen": {"kind": "harmonic", "n": 2, "N": 3}, "subset_mode": mode}
        )


def test_suite_rejects_out_of_range_lambda():
    """Lambda values must lie in [0, 1]."""
    with pytest.raises(ValidationError):
        SuiteConfig.model_validate(
            {"gen": {"kind": "harmonic", "n": 2, "N": 3}, "lambda_grid": [1.5]}
        )


def test_frame_documents_check_shapes():
    """Vectors need n entries and coefficient matrices m^2 x n."""
    VectorFrameDocument(n=2, vectors=[[(1.0, 0.0), (0.0, 0.0)]])
    with pytest.raises(ValidationError):
        VectorFrameDocument(n=2, vectors=[[(1.0, 0.0)]])
    with pytest.raises(ValidationError):
        HSFrameDocument.model_validate(
            {"n": 1, "m": 2, "maps": [{"coeff": [[[1.0, 0.0]], [[0.0, 0.0]]]}]}
        )


def test_report_aliases():
    """Reports are written with the keys pass, K and lambda."""
    report = _report(subset="101", lambda_=0.5)
    dumped = report.model_dump(by_alias=True)
    assert dumped["pass"] is True
    assert dumped["K"] == "101"
    assert dumped["lambda"] == 0.5
    assert dumped["lhs"] == (1.0, 0.0)


def test_theorem_summary_tracks_worst_case():
    """The summary keeps the worst relative residual and margin."""
    summary = TheoremSummary()
    summary.add(_report(residual=1e-12, margin=1.0))
    summary.add(_report(residual=4e-12, margin=-0.5, passed=False))
    summary.add(_report(residual=2e-12))
    assert summary.checks_run == 3
    assert summary.worst_residual == pytest.approx(2e-12)
    assert summary.worst_margin == pytest.approx(-0.25)
    assert not summary.passed
