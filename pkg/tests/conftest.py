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

"""Test-suite-wide fixture declaration."""

from tests.fixtures.frames import (  # noqa: F401
    gaussian_frame,
    gaussian_hs_frame,
    harmonic_frame,
)
from tests.fixtures.joint import JointFixture, joint_fixture  # noqa: F401
