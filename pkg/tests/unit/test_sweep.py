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

"""Unit tests for subset selection and the verifier service with mocked DAOs."""

from pathlib import Path
from unittest.mock import AsyncMock

import pytest

from hsframes.core.errors import NotParsevalError
from hsframes.core.hs_frames import HSFrame
from hsframes.core.sweep import FrameVerifier, SweepConfig, select_subsets
from hsframes.core.vector_frames import SubsetMask, VectorFrame, canonical_dual
from hsframes.models import GenKind, GenSpec, SuiteConfig, Theorem, ToleranceOverrides
from hsframes.ports.outbound.dao import ResourceNotFoundError
from tests.fixtures.config import get_config

FRAME_PATH = Path("frame.json")
DUAL_PATH = Path("dual.json")


def _verifier(*frames: object, **config_overrides) -> FrameVerifier:
    """A verifier whose frame DAO hands out the given frames in order."""
    frame_dao = AsyncMock()
    frame_dao.find.side_effect = list(frames)
    return FrameVerifier(
        config=get_config(**config_overrides),
        frame_dao=frame_dao,
        gen_spec_dao=AsyncMock(),
        suite_config_dao=AsyncMock(),
    )


def test_all_subsets_in_bitmask_order():
    """Small index sets are enumerated completely."""
    subsets = select_subsets(3, "all", seed=0)
    assert [str(subset) for subset in subsets] == [
        "000",
        "100",
        "010",
        "110",
        "001",
        "101",
        "011",
        "111",
    ]


def test_random_subsets():
    """random:64 on 16 indices gives the 4 forced subsets plus 64 distinct ones."""
    subsets = select_subsets(16, "random:64", seed=3)
    assert len(subsets) == 68
    assert len({subset.bits for subset in subsets}) == 68
    assert subsets[:4] == [
        SubsetMask.empty(16),
        SubsetMask.full(16),
        SubsetMask.from_indices(16, [0]),
        SubsetMask.from_indices(16, [0]).complement(),
    ]
    assert subsets == select_subsets(16, "random:64", seed=3)
    assert subsets != select_subsets(16, "random:64", seed=4)


def test_all_mode_samples_above_limit():
    """Above the exhaustive limit mode 'all' keeps every singleton and its
    complement, then adds the random sample.
    """
    subsets = select_subsets(13, "all", seed=1, exhaustive_limit=12, default_random=20)
    assert len(subsets) == 2 + 2 * 13 + 20
    assert len({subset.bits for subset in subsets}) == len(subsets)
    assert subsets[:2] == [SubsetMask.empty(13), SubsetMask.full(13)]
    for index in range(13):
        single = SubsetMask.from_indices(13, [index])
        assert subsets[2 + 2 * index] == single
        assert subsets[3 + 2 * index] == single.complement()


def test_small_random_request_returns_everything():
    """When the sample would cover nearly every subset all of them are returned."""
    assert len(select_subsets(3, "random:10", seed=1)) == 8
    assert len(select_subsets(1, "random:1", seed=1)) == 2


@pytest.mark.parametrize("name", ["HSFRAMES_SEED", "HSFRAME_SEED"])
def test_seed_from_environment(monkeypatch: pytest.MonkeyPatch, name: str):
    """The master seed can be set through the environment."""
    monkeypatch.setenv(name, "99")
    assert SweepConfig().seed == 99


def test_unprefixed_seed_variable_is_ignored(monkeypatch: pytest.MonkeyPatch):
    """Only the prefixed variables set the seed; the field name still works."""
    for name in ("HSFRAMES_SEED", "HSFRAME_SEED"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("SEED", "5")
    assert SweepConfig().seed == 0
    assert SweepConfig(seed=3).seed == 3


@pytest.mark.asyncio()
async def test_check_sweeps_subsets_and_vectors(harmonic_frame: VectorFrame):
    """Every subset is paired with every test vector, in that order."""
    verifier = _verifier(harmonic_frame)
    run = await verifier.check(
        frame_path=FRAME_PATH, dual_path=None, theorem=Theorem.PARSEVAL_IDENTITY
    )
    assert run.summary.passed
    assert run.summary.checks_run == 32 * 5
    first, second = run.reports[:2]
    assert (first.subset, first.f_index) == ("00000", 0)
    assert (second.subset, second.f_index) == ("00000", 1)
    assert run.reports[5].subset == "10000"
    assert all(report.lambda_ is None for report in run.reports)


@pytest.mark.asyncio()
async def test_check_sweeps_lambda_grid(gaussian_frame: VectorFrame):
    """Lambda-dependent checks are repeated for every value of the grid."""
    verifier = _verifier(gaussian_frame)
    run = await verifier.check(
        frame_path=FRAME_PATH, dual_path=None, theorem=Theorem.CANONICAL_DUAL
    )
    assert run.summary.passed
    assert run.summary.checks_run == 32 * 5 * 4
    assert [report.lambda_ for report in run.reports[:4]] == [0.0, 0.25, 0.5, 1.0]


@pytest.mark.asyncio()
async def test_check_uses_every_configured_dual(gaussian_hs_frame: HSFrame):
    """Dual-dependent checks run once per configured dual scale."""
    verifier = _verifier(gaussian_hs_frame)
    run = await verifier.check(
        frame_path=FRAME_PATH, dual_path=None, theorem=Theorem.COMPLEX_IDENTITY
    )
    assert run.summary.passed
    assert {report.dual_index for report in run.reports} == {0, 1}
    assert run.summary.checks_run == 2 * 8 * 5


@pytest.mark.asyncio()
async def test_operator_checks_have_no_test_vector(gaussian_hs_frame: HSFrame):
    """The lemmas are checked once per subset and dual."""
    verifier = _verifier(gaussian_hs_frame)
    run = await verifier.check(
        frame_path=FRAME_PATH, dual_path=None, theorem=Theorem.LEMMA_PP
    )
    assert run.summary.passed
    assert run.summary.checks_run == 2 * 8
    assert all(report.f_index is None for report in run.reports)


@pytest.mark.asyncio()
async def test_check_with_supplied_dual(gaussian_frame: VectorFrame):
    """A valid supplied dual replaces the configured ones."""
    verifier = _verifier(gaussian_frame, canonical_dual(gaussian_frame))
    run = await verifier.check(
        frame_path=FRAME_PATH,
        dual_path=DUAL_PATH,
        theorem=Theorem.FRAME_COMPLEX_IDENTITY,
    )
    assert run.summary.passed
    assert {report.dual_index for report in run.reports} == {0}


@pytest.mark.asyncio()
async def test_check_rejects_invalid_dual(gaussian_frame: VectorFrame):
    """A supplied dual that is not a dual is an input error."""
    verifier = _verifier(gaussian_frame, gaussian_frame)
    with pytest.raises(FrameVerifier.InvalidDualError):
        await verifier.check(
            frame_path=FRAME_PATH,
            dual_path=DUAL_PATH,
            theorem=Theorem.ALTERNATE_DUAL,
        )


@pytest.mark.asyncio()
async def test_classical_theorem_on_hs_frame(gaussian_hs_frame: HSFrame):
    """Scalar frame checks only apply to vector frames."""
    verifier = _verifier(gaussian_hs_frame)
    with pytest.raises(FrameVerifier.UnknownTheoremError):
        await verifier.check(
            frame_path=FRAME_PATH,
            dual_path=None,
            theorem=Theorem.FRAME_PARSEVAL_IDENTITY,
        )


@pytest.mark.asyncio()
async def test_check_does_not_parsevalize(gaussian_frame: VectorFrame):
    """Parseval checks on a frame file require the frame to be Parseval."""
    verifier = _verifier(gaussian_frame)
    with pytest.raises(NotParsevalError):
        await verifier.check(
            frame_path=FRAME_PATH, dual_path=None, theorem=Theorem.PARSEVAL_INEQUALITY
        )


@pytest.mark.asyncio()
async def test_missing_frame_file():
    """A missing file is reported as a frame file error."""
    verifier = _verifier(ResourceNotFoundError(id_=str(FRAME_PATH)))
    with pytest.raises(FrameVerifier.FrameFileError):
        await verifier.check(
            frame_path=FRAME_PATH, dual_path=None, theorem=Theorem.LEMMA_PQ
        )


def _suite(**kwargs) -> SuiteConfig:
    return SuiteConfig(
        gen=GenSpec(kind=GenKind.GAUSSIAN_HS, n=3, m=2, count=2),
        trials=3,
        theorems=[Theorem.COMPLEX_IDENTITY, Theorem.PARSEVAL_IDENTITY],
        **kwargs,
    )


@pytest.mark.asyncio()
async def test_suite_is_independent_of_workers():
    """The same seed gives the same reports for one or several workers."""
    suite = _suite()
    serial = await _verifier(workers=1).run_suite(suite=suite)
    parallel = await _verifier(workers=3).run_suite(suite=suite)
    assert serial.reports == parallel.reports
    assert serial.summary == parallel.summary
    assert serial.summary.passed
    assert serial.reports[0].trial == 0
    assert serial.reports[-1].trial == 2
    assert set(serial.summary.theorems) == {"complex_identity", "parseval_identity"}


@pytest.mark.asyncio()
async def test_suite_seed_changes_frames():
    """The suite seed overrides the configured one and changes every draw."""
    base = await _verifier().run_suite(suite=_suite())
    reseeded = await _verifier().run_suite(suite=_suite(seed=8))
    assert reseeded.summary.seed == 8
    assert base.reports[0].lhs != reseeded.reports[0].lhs


def test_suite_settings_overlay_config():
    """Fields set in a suite file replace the configured values."""
    verifier = _verifier()
    suite = _suite(
        lambda_grid=[0.5],
        subset_mode="random:3",
        tolerances=ToleranceOverrides(tol_eq=1e-6),
    )
    merged = verifier._merge(suite)
    assert merged.lambda_grid == [0.5]
    assert merged.subset_mode == "random:3"
    assert merged.tol_eq == 1e-6
    assert merged.tol_ineq == get_config().tol_ineq
    assert merged.seed == 7


@pytest.mark.asyncio()
async def test_suite_rejects_classical_theorem_on_hs_frames():
    """Scalar frame checks cannot be requested for HS-frame suites."""
    suite = _suite().model_copy(update={"theorems": [Theorem.FRAME_COMPLEX_IDENTITY]})
    with pytest.raises(FrameVerifier.UnknownTheoremError):
        await _verifier().run_suite(suite=suite)
