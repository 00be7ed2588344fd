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

"""Port for the frame verification core functionality."""

from abc import ABC, abstractmethod
from pathlib import Path

from hsframes.core.vector_frames import FrameBounds
from hsframes.models import CheckRun, SuiteConfig, SuiteRun, Theorem

__all__ = ["FrameVerifierPort"]


class FrameVerifierPort(ABC):
    """Generates frames and sweeps identity checks over subsets, test vectors and
    lambda values.
    """

    class UnknownTheoremError(RuntimeError):
        """Raised when a theorem cannot be checked on the given kind of frame."""

        def __init__(self, theorem: str, frame_kind: str) -> None:
            """Initialize the error with a message."""
            message = f"Theorem '{theorem}' cannot be checked on a {frame_kind}."
            super().__init__(message)

    class InvalidDualError(RuntimeError):
        """Raised when a supplied dual frame does not satisfy the duality identity."""

        def __init__(self, residual: float, adjoint_residual: float, tolerance: float):
            """Initialize the error with a message."""
            self.residual = residual
            message = (
                "The supplied dual is not a dual frame: duality residuals"
                + f" {residual:.3e} and {adjoint_residual:.3e}"
                + f" (tolerance {tolerance:.3e})."
            )
            super().__init__(message)

    class FrameFileError(RuntimeError):
        """Raised when an input file is missing or cannot be parsed."""

        def __init__(self, path: Path, reason: str) -> None:
            """Initialize the error with a message."""
            self.path = path
            super().__init__(f"Cannot use file '{path}': {reason}")

    @abstractmethod
    async def generate_frame(self, *, spec_path: Path, out_path: Path) -> FrameBounds:
        """Generate the frame described by the GenSpec file and write it to
        `out_path`.

        Returns the bounds of the generated frame.
        """
        ...

    @abstractmethod
    async def check(
        self, *, frame_path: Path, dual_path: Path | None, theorem: Theorem
    ) -> CheckRun:
        """Sweep one theorem over the frame stored in `frame_path`.

        If `dual_path` is given, that frame is validated as a dual and used for the
        dual-dependent theorems instead of the configured duals.

        Raises `FrameFileError` for unreadable inputs, `InvalidDualError` for a
        supplied dual that does not satisfy the duality identity and
        `UnknownTheoremError` for a theorem that does not apply to the frame.
        """
        ...

    @abstractmethod
    async def run_suite(self, *, suite: SuiteConfig) -> SuiteRun:
        """Run the selected theorems over freshly generated frames, one per trial.

        The reports are ordered by trial, theorem, dual, subset, test vector and
        lambda regardless of how many workers ran the trials.
        """
        ...

    @abstractmethod
    async def load_suite(self, *, path: Path) -> SuiteConfig:
        """Load a suite file.

        Raises `FrameFileError` if the file is missing or invalid.
        """
        ...
