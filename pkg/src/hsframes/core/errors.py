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

"""Errors raised by the numerical core."""

__all__ = [
    "DecompositionError",
    "DimensionError",
    "FrameToolkitError",
    "GenerationError",
    "InvalidInputError",
    "InvalidParameterError",
    "MissingDualError",
    "MissingWeightsError",
    "NonHermitianError",
    "NotParsevalError",
    "SingularityError",
]


class FrameToolkitError(RuntimeError):
    """Base class of all errors raised by the numerical core."""


class DimensionError(FrameToolkitError, ValueError):
    """Raised when the shapes of the operands do not fit together."""

    def __init__(self, what: str, expected: object, actual: object) -> None:
        """Initialize the error with a message."""
        self.expected = expected
        self.actual = actual
        message = f"Dimension mismatch for {what}: expected {expected}, got {actual}."
        super().__init__(message)


class InvalidParameterError(FrameToolkitError, ValueError):
    """Raised when a scalar parameter is outside of its admissible range."""

    def __init__(self, name: str, value: object, constraint: str) -> None:
        """Initialize the error with a message."""
        self.name = name
        self.value = value
        message = f"Invalid value {value!r} for parameter '{name}': {constraint}."
        super().__init__(message)


class InvalidInputError(FrameToolkitError, ValueError):
    """Raised when an operand violates the precondition of an operation."""

    def __init__(self, reason: str, residual: float | None = None) -> None:
        """Initialize the error with a message."""
        self.residual = residual
        message = reason
        if residual is not None:
            message += f" (residual {residual:.3e})"
        super().__init__(message)


class NonHermitianError(InvalidInputError):
    """Raised when a matrix is not Hermitian within the hermiticity tolerance."""

    def __init__(self, residual: float, tolerance: float) -> None:
        """Initialize the error with a message."""
        self.tolerance = tolerance
        super().__init__(
            f"Matrix is not Hermitian within tolerance {tolerance:.3e}", residual
        )


class DecompositionError(FrameToolkitError):
    """Raised when an eigen- or singular value decomposition does not converge."""

    def __init__(self, routine: str) -> None:
        """Initialize the error with a message."""
        self.routine = routine
        super().__init__(f"The {routine} decomposition did not converge.")


class SingularityError(FrameToolkitError):
    """Raised when an operator that must be invertible has an eigenvalue at or
    below the positive-definiteness threshold.
    """

    def __init__(self, eigenvalue: float, threshold: float) -> None:
        """Initialize the error with a message."""
        self.eigenvalue = eigenvalue
        self.threshold = threshold
        message = (
            f"Operator is not positive definite: eigenvalue {eigenvalue:.6e}"
            + f" is at or below the threshold {threshold:.6e}."
        )
        super().__init__(message)


class NotParsevalError(FrameToolkitError):
    """Raised when a Parseval frame is required but the frame bounds are not 1."""

    def __init__(self, lower: float, upper: float) -> None:
        """Initialize the error with a message."""
        self.lower = lower
        self.upper = upper
        super().__init__(
            f"Frame is not Parseval: bounds are ({lower:.12g}, {upper:.12g})."
        )


class MissingDualError(FrameToolkitError):
    """Raised when a dual frame is required but was not supplied."""

    def __init__(self, theorem: str) -> None:
        """Initialize the error with a message."""
        super().__init__(f"Check '{theorem}' requires a dual frame.")


class MissingWeightsError(FrameToolkitError):
    """Raised when the weighted identity is requested without weights."""

    def __init__(self) -> None:
        """Initialize the error with a message."""
        super().__init__("The weighted identity requires a weight sequence.")


class GenerationError(FrameToolkitError):
    """Raised when a generator cannot produce a frame with the requested property."""

    def __init__(self, kind: str, attempts: int) -> None:
        """Initialize the error with a message."""
        self.kind = kind
        self.attempts = attempts
        super().__init__(
            f"Could not generate a '{kind}' frame with a positive lower bound"
            + f" after {attempts} attempts."
        )
