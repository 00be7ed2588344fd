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

"""Tests for the scalar frame identities and their agreement with the HS path."""

import numpy as np
import pytest

from hsframes.core.classical import (
    frame_alternate_dual,
    frame_canonical_identity,
    frame_canonical_inequality,
    frame_complex_identity,
    frame_parseval_identity,
    frame_parseval_inequality,
)
from hsframes.core.errors import MissingDualError, NotParsevalError
from hsframes.core.generation import gen_test_vectors
from hsframes.core.hs_frames import embed_vector_frame, make_alternate_dual
from hsframes.core.identities import CheckRequest, parseval_identity
from hsframes.core.operators import adjoint
from hsframes.core.vector_frames import SubsetMask, VectorFrame, canonical_dual


def _subsets(size: int) -> list[SubsetMask]:
    return [SubsetMask(size=size, bits=bits) for bits in range(1 << size)]


def _alternate_vector_dual(frame: VectorFrame, scale: float) -> VectorFrame:
    pair = make_alternate_dual(embed_vector_frame(frame), seed=12, scale=scale)
    return VectorFrame(synthesis_matrix=adjoint(pair.dual.stacked))


def test_parseval_checks(harmonic_frame: VectorFrame):
    """Both Parseval statements hold on the harmonic frame."""
    for subset in _subsets(5):
        for f in gen_test_vectors(3, 4, seed=5):
            assert frame_parseval_identity(harmonic_frame, f, subset).passed
            report = frame_parseval_inequality(harmonic_frame, f, subset)
            assert report.passed
            assert report.bound == pytest.approx(0.75 * np.linalg.norm(f) ** 2)


def test_scalar_and_hs_paths_agree(harmonic_frame: VectorFrame):
    """The scalar Parseval identity equals the one of the embedded HS-frame."""
    hs = embed_vector_frame(harmonic_frame)
    f = np.array([0.5, 1j, -1.0])
    for subset in _subsets(5):
        scalar = frame_parseval_identity(harmonic_frame, f, subset)
        operator = parseval_identity(CheckRequest(frame=hs, f=f, subset=subset))
        assert scalar.lhs == pytest.approx(operator.lhs, abs=1e-12)
        assert scalar.rhs == pytest.approx(operator.rhs, abs=1e-12)


def test_parseval_checks_need_parseval_frame(gaussian_frame: VectorFrame):
    """A generic Gaussian frame is not Parseval."""
    with pytest.raises(NotParsevalError):
        frame_parseval_identity(gaussian_frame, np.ones(3), SubsetMask.full(5))


@pytest.mark.parametrize("lambda_", [0.0, 0.5, 0.9, 1.0])
def test_canonical_checks(gaussian_frame: VectorFrame, lambda_: float):
    """The canonical dual identity and inequality hold on every subset."""
    for subset in _subsets(5):
        for f in gen_test_vectors(3, 4, seed=6):
            assert frame_canonical_identity(gaussian_frame, f, subset).passed
            report = frame_canonical_inequality(gaussian_frame, f, subset, lambda_)
            assert report.passed
            assert report.lambda_ == lambda_


@pytest.mark.parametrize("scale", [0.0, 0.5, 2.0])
def test_dual_checks(gaussian_frame: VectorFrame, scale: float):
    """The alternate dual statements hold for canonical and perturbed duals."""
    dual = (
        canonical_dual(gaussian_frame)
        if scale == 0.0
        else _alternate_vector_dual(gaussian_frame, scale)
    )
    for subset in _subsets(5):
        for f in gen_test_vectors(3, 4, seed=7):
            report = frame_alternate_dual(gaussian_frame, dual, f, subset)
            assert report.passed
            assert report.lambda_ == 0.5
            assert frame_complex_identity(gaussian_frame, dual, f, subset).passed


def test_dual_checks_need_dual(gaussian_frame: VectorFrame):
    """Without a dual the dual statements cannot be evaluated."""
    subset = SubsetMask.full(5)
    with pytest.raises(MissingDualError):
        frame_alternate_dual(gaussian_frame, None, np.ones(3), subset)
    with pytest.raises(MissingDualError):
        frame_complex_identity(gaussian_frame, None, np.ones(3), subset)


def test_frame_is_no_dual_of_itself(gaussian_frame: VectorFrame):
    """Using the frame as its own dual breaks the complex identity."""
    f = np.array([1.0, 0.0, 0.0])
    subset = SubsetMask.empty(5)
    report = frame_complex_identity(gaussian_frame, gaussian_frame, f, subset)
    assert not report.passed
