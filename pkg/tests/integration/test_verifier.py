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

"""Integration tests for the verifier service working on real files."""

import numpy as np
import pytest

from hsframes.core.vector_frames import VectorFrame, analysis
from hsframes.models import Theorem
from hsframes.ports.inbound.verifier import FrameVerifierPort
from tests.fixtures.joint import JointFixture
from tests.fixtures.utils import write_json

pytestmark = pytest.mark.asyncio()

HARMONIC_SPEC = {"kind": "harmonic", "n": 3, "N": 5}
GAUSSIAN_SPEC = {"kind": "gaussian_vector", "n": 3, "N": 5, "seed": 4}


async def test_generate_frame(joint_fixture: JointFixture):
    """Generating writes the frame file and returns its bounds."""
    workdir = joint_fixture.workdir
    spec_path = write_json(workdir / "spec.json", {"kind": "harmonic", "n": 2, "N": 3})
    out_path = workdir / "frame.json"

    bounds = await joint_fixture.frame_verifier.generate_frame(
        spec_path=spec_path, out_path=out_path
    )
    assert bounds.lower == pytest.approx(1.0)
    assert bounds.upper == pytest.approx(1.0)

    frame = await joint_fixture.file_dao_factory.get_frame_dao().find(path=out_path)
    assert isinstance(frame, VectorFrame)
    assert (frame.n, frame.count) == (2, 3)


async def test_generation_is_reproducible(joint_fixture: JointFixture):
    """The same recipe gives a byte-identical frame file."""
    workdir = joint_fixture.workdir
    spec_path = write_json(workdir / "spec.json", GAUSSIAN_SPEC)
    first, second = workdir / "first.json", workdir / "second.json"
    for out_path in (first, second):
        await joint_fixture.frame_verifier.generate_frame(
            spec_path=spec_path, out_path=out_path
        )
    assert first.read_bytes() == second.read_bytes()


async def test_harmonic_parseval_identity(joint_fixture: JointFixture):
    """The harmonic frame passes the Parseval identity on every subset."""
    workdir = joint_fixture.workdir
    frame_path = workdir / "frame.json"
    await joint_fixture.frame_verifier.generate_frame(
        spec_path=write_json(workdir / "spec.json", HARMONIC_SPEC), out_path=frame_path
    )
    run = await joint_fixture.frame_verifier.check(
        frame_path=frame_path, dual_path=None, theorem=Theorem.PARSEVAL_IDENTITY
    )
    assert run.summary.passed
    assert run.summary.checks_run == 32 * joint_fixture.config.test_vectors
    assert max(report.residual for report in run.reports) <= 1e-9


async def test_canonical_dual_bound(joint_fixture: JointFixture):
    """At lambda = 1/2 the bound is 3/4 of the total energy sum_J |<f, f_j>|^2."""
    workdir = joint_fixture.workdir
    frame_path = workdir / "frame.json"
    await joint_fixture.frame_verifier.generate_frame(
        spec_path=write_json(workdir / "spec.json", GAUSSIAN_SPEC), out_path=frame_path
    )
    frame = await joint_fixture.file_dao_factory.get_frame_dao().find(path=frame_path)
    run = await joint_fixture.frame_verifier.check(
        frame_path=frame_path, dual_path=None, theorem=Theorem.CANONICAL_DUAL
    )
    assert run.summary.passed
    e0 = np.eye(3)[0]
    energy = float(np.sum(np.abs(analysis(frame, e0)) ** 2))
    half = [r for r in run.reports if r.lambda_ == 0.5 and r.f_index == 0]
    assert len(half) == 32
    for report in half:
        assert report.bound == pytest.approx(0.75 * energy)
        assert report.margin >= -1e-12


async def test_supplied_dual_must_be_dual(joint_fixture: JointFixture):
    """A frame file that is not a dual of the checked frame is rejected."""
    workdir = joint_fixture.workdir
    frame_path, other_path = workdir / "frame.json", workdir / "other.json"
    await joint_fixture.frame_verifier.generate_frame(
        spec_path=write_json(workdir / "spec.json", GAUSSIAN_SPEC), out_path=frame_path
    )
    await joint_fixture.frame_verifier.generate_frame(
        spec_path=write_json(workdir / "other_spec.json", GAUSSIAN_SPEC | {"seed": 5}),
        out_path=other_path,
    )
    with pytest.raises(FrameVerifierPort.InvalidDualError):
        await joint_fixture.frame_verifier.check(
            frame_path=frame_path, dual_path=other_path, theorem=Theorem.ALTERNATE_DUAL
        )


async def test_unreadable_files(joint_fixture: JointFixture):
    """Missing and malformed files raise FrameFileError."""
    workdir = joint_fixture.workdir
    broken = workdir / "broken.json"
    broken.write_text("{not json")
    verifier = joint_fixture.frame_verifier
    with pytest.raises(FrameVerifierPort.FrameFileError):
        await verifier.check(
            frame_path=broken, dual_path=None, theorem=Theorem.LEMMA_PP
        )
    with pytest.raises(FrameVerifierPort.FrameFileError):
        await verifier.generate_frame(
            spec_path=workdir / "missing.json", out_path=workdir / "frame.json"
        )
    with pytest.raises(FrameVerifierPort.FrameFileError):
        await verifier.load_suite(
            path=write_json(workdir / "suite.json", {"gen": {"kind": "harmonic"}})
        )


async def test_suite_from_file(joint_fixture: JointFixture):
    """A suite file runs every listed theorem on fresh frames."""
    suite_path = write_json(
        joint_fixture.workdir / "suite.json",
        {
            "gen": {"kind": "gaussian_hs", "n": 2, "m": 2, "N": 2},
            "trials": 2,
            "theorems": ["weighted_identity", "prop_selfadjoint"],
            "subset_mode": "random:1",
        },
    )
    verifier = joint_fixture.frame_verifier
    suite = await verifier.load_suite(path=suite_path)
    run = await verifier.run_suite(suite=suite)
    assert run.summary.passed
    assert run.summary.trials == 2
    assert set(run.summary.theorems) == {"weighted_identity", "prop_selfadjoint"}
    assert {report.trial for report in run.reports} == {0, 1}
