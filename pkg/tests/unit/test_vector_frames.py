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

"""Tests for vector frames and subset masks."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from hsframes.core.errors import DimensionError, InvalidParameterError, SingularityError
from hsframes.core.generation import gen_gaussian_vector, gen_test_vectors
from hsframes.core.operators import inner
from hsframes.core.streams import complex_normal, substream
from hsframes.core.vector_frames import (
    SubsetMask,
    VectorFrame,
    analysis,
    canonical_dual,
    frame_bounds,
    frame_operator,
    is_alternate_dual,
    partial_operator,
    synthesis,
)


def test_subset_mask_bit_order():
    """Index 0 is printed first."""
    subset = SubsetMask.from_indices(4, [0, 2])
    assert str(subset) == "1010"
    assert list(subset) == [0, 2]
    assert len(subset) == 2
    assert 2 in subset
    assert 1 not in subset
    assert str(subset.complement()) == "0101"
    assert_allclose(subset.indicator(), [1.0, 0.0, 1.0, 0.0])


def test_subset_membership_accepts_integer_types():
    """Numpy integers are valid indices; other types are never members."""
    subset = SubsetMask.from_indices(4, [0, 2])
    assert np.int64(2) in subset
    assert np.uint8(0) in subset
    assert np.int32(1) not in subset
    assert np.int64(7) not in subset
    assert 2.0 not in subset
    assert "2" not in subset
    assert [j for j in np.arange(4) if j in subset] == [0, 2]


def test_subset_mask_edges():
    """Empty and full subsets are complements; bad inputs are rejected."""
    assert SubsetMask.empty(3).complement() == SubsetMask.full(3)
    assert SubsetMask.from_bool([False, True]).bits == 0b10
    with pytest.raises(InvalidParameterError):
        SubsetMask(size=2, bits=4)
    with pytest.raises(InvalidParameterError):
        SubsetMask.from_indices(2, [2])
    with pytest.raises(InvalidParameterError):
        SubsetMask.empty(0)


def test_harmonic_frame_is_parseval(harmonic_frame: VectorFrame):
    """The harmonic frame has frame operator I and both bounds equal to one."""
    assert_allclose(frame_operator(harmonic_frame), np.eye(3), atol=1e-12)
    bounds = frame_bounds(harmonic_frame)
    assert bounds.is_parseval(1e-10)


def test_partial_operators_add_up(gaussian_frame: VectorFrame):
    """S_K + S_K^c = S for every split."""
    subset = SubsetMask.from_indices(gaussian_frame.count, [1, 3])
    total = partial_operator(gaussian_frame, subset) + partial_operator(
        gaussian_frame, subset.complement()
    )
    assert_allclose(total, frame_operator(gaussian_frame), atol=1e-12)
    with pytest.raises(DimensionError):
        partial_operator(gaussian_frame, SubsetMask.full(2))


def test_canonical_dual_reconstructs(gaussian_frame: VectorFrame):
    """f = sum_j <f, f~_j> f_j with the canonical dual."""
    dual = canonical_dual(gaussian_frame)
    assert is_alternate_dual(dual, gaussian_frame).is_dual
    f = np.array([1.0, -2j, 0.5 + 0.5j])
    assert_allclose(synthesis(gaussian_frame, analysis(dual, f)), f, atol=1e-12)


def test_frame_is_not_its_own_dual(gaussian_frame: VectorFrame):
    """A non-Parseval frame fails the duality test against itself."""
    check = is_alternate_dual(gaussian_frame, gaussian_frame)
    assert not check.is_dual
    assert check.residual > 1e-3


def test_bessel_family_has_no_dual():
    """A family that does not span has lower bound zero and no canonical dual."""
    family = VectorFrame.from_vectors([[1, 0], [2, 0]])
    bounds = frame_bounds(family)
    assert bounds.lower == pytest.approx(0.0, abs=1e-12)
    assert not bounds.is_frame
    with pytest.raises(SingularityError):
        canonical_dual(family)


def test_vectors_of_unequal_length():
    """All frame vectors must live in the same space."""
    with pytest.raises(DimensionError):
        VectorFrame.from_vectors([[1, 0], [1, 0, 0]])


@pytest.mark.parametrize("seed", range(10))
def test_analysis_and_synthesis_are_adjoint(seed: int):
    """<T f, c> in l2(J) equals <f, T* c> in C^n."""
    frame = gen_gaussian_vector(2 + seed % 4, 6, seed=seed)
    rng = substream(seed, 1)
    f = complex_normal(rng, (frame.n,))
    c = complex_normal(rng, (frame.count,))
    assert inner(analysis(frame, f), c) == pytest.approx(
        inner(f, synthesis(frame, c)), rel=1e-12, abs=1e-12
    )


@pytest.mark.parametrize("seed", range(10))
def test_bounds_contain_rayleigh_quotients(seed: int):
    """A ||f||^2 <= <Sf, f> <= B ||f||^2 for sampled f."""
    frame = gen_gaussian_vector(3, 4 + seed % 4, seed=seed)
    bounds = frame_bounds(frame)
    S = frame_operator(frame)
    for f in gen_test_vectors(3, 25, seed=seed):
        quotient = inner(S @ f, f).real / inner(f, f).real
        assert bounds.lower - 1e-12 <= quotient <= bounds.upper + 1e-12
