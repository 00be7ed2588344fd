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

"""Seeded frames shared by the unit and integration tests."""

import pytest

from hsframes.core.generation import (
    gen_gaussian_hs,
    gen_gaussian_vector,
    gen_harmonic,
)
from hsframes.core.hs_frames import HSFrame
from hsframes.core.vector_frames import VectorFrame


@pytest.fixture()
def harmonic_frame() -> VectorFrame:
    """The harmonic Parseval frame of 5 vectors in C^3."""
    return gen_harmonic(3, 5)


@pytest.fixture()
def gaussian_frame() -> VectorFrame:
    """A redundant Gaussian frame of 5 vectors in C^3."""
    return gen_gaussian_vector(3, 5, seed=11)


@pytest.fixture()
def gaussian_hs_frame() -> HSFrame:
    """A Gaussian HS-frame of 3 maps from C^3 to C_2(C^2)."""
    return gen_gaussian_hs(3, 2, 3, seed=5)
